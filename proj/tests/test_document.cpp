#include <gtest/gtest.h>

#include "reedy/cli.hpp"
#include "reedy/document.hpp"
#include "reedy/harness.hpp"

using namespace reedy;
using nlohmann::json;

namespace {

std::string where_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e.where;
  }
  return "(parsed)";
}

}  // namespace

TEST(Document, BuiltinsRoundTrip) {
  for (const auto& name : cli::builtin_names()) {
    auto d = cli::builtin(name);
    ASSERT_TRUE(d) << name;
    const std::string bytes = serialize(*d);
    Document back = parse_document(bytes);
    EXPECT_EQ(back.kind(), d->kind());
    EXPECT_EQ(back.name, name);
    EXPECT_EQ(serialize(back), bytes) << name;
    EXPECT_TRUE(validate(back)) << name;
  }
}

TEST(Document, GeneratedRoundTrip) {
  harness::GenConfig cfg;
  for (int i = 0; i < 10; ++i) {
    harness::Rng rng(12, static_cast<std::uint64_t>(i));
    std::vector<Document> docs = {
        {"p", harness::gen_pointed(rng, cfg)},
        {"z", harness::gen_sset(rng, 3, 5)},
        {"x", harness::gen_spectrum(rng, cfg)},
    };
    for (const auto& d : docs) EXPECT_EQ(serialize(parse_document(serialize(d))), serialize(d));
  }
}

// Whitespace and key order do not matter; references are inlined.
TEST(Document, Canonicalizes) {
  const std::string messy = R"({
    "table": [0, 2, 1],
    "name": "swap",
    "defs": {"three": {"kind": "pointed-set", "size": 3}},
    "kind": "pointed-map",
    "cod": "three",
    "dom": "three"
  })";
  Document d = parse_document(messy);
  EXPECT_EQ(d.kind(), Kind::pointed_map);
  const std::string canon = serialize(d);
  EXPECT_EQ(canon.back(), '\n');
  EXPECT_EQ(canon.find(' '), std::string::npos);
  EXPECT_EQ(canon.find("defs"), std::string::npos);
  EXPECT_EQ(serialize(parse_document(canon)), canon);
  EXPECT_EQ(std::get<PointedMap>(d.value)(1), 2u);
}

TEST(Document, LabelsSurvive) {
  Document d{"labelled", PointedSet(3, {"*", "a", "b"})};
  Document back = parse_document(serialize(d));
  ASSERT_TRUE(std::get<PointedSet>(back.value).has_labels());
  EXPECT_EQ(std::get<PointedSet>(back.value).name_of(2), "b");
}

TEST(Document, SyntaxErrorPosition) {
  EXPECT_EQ(where_of("{\n  \"kind\": \"pointed-set\",\n  \"size\": ]\n}"), "line 3, column 11");
  EXPECT_EQ(where_of(""), "line 1, column 1");
}

TEST(Document, SchemaErrorPointers) {
  EXPECT_EQ(where_of(R"({"kind": "pointed-set"})"), "/");
  EXPECT_EQ(where_of(R"({"kind": "nope", "size": 2})"), "/kind");
  EXPECT_EQ(where_of(R"({"kind": "pointed-set", "size": 0})"), "/size");
  EXPECT_EQ(where_of(R"({"kind": "pointed-map", "dom": {"size": 2}, "cod": {"size": 2}, "table": [0, 2]})"),
            "/table");
  EXPECT_EQ(where_of(R"({"kind": "pointed-map", "dom": {"size": 2}, "cod": {"size": 2}, "table": [0, "x"]})"),
            "/table/1");
  EXPECT_EQ(where_of(R"({"kind": "pointed-map", "dom": "a", "cod": {"size": 2}, "table": [0, 1]})"), "/dom");
  EXPECT_EQ(where_of(R"({"kind": "pointed-map", "dom": "a", "cod": "a", "table": [0, 1],
                        "defs": {"a": {"kind": "sset", "levels": [2], "faces": [[]], "degens": []}}})"),
            "/dom");
  EXPECT_EQ(where_of(R"({"kind": "pointed-set", "size": 2, "trunc": {"D": 1}})"), "/trunc/D");
}

TEST(Document, ReferenceCycleRejected) {
  auto w = where_of(R"({"kind": "pointed-map", "dom": "a", "cod": "a", "table": [0],
                        "defs": {"a": {"kind": "pointed-map", "dom": "a", "cod": "a", "table": [0]}}})");
  EXPECT_NE(w, "(parsed)");
}

TEST(Document, DeclaredTruncationChecked) {
  auto d = cli::builtin("sphere");
  json j = to_json(*d);
  j["trunc"]["N"] = 7;
  try {
    from_json(j);
    FAIL() << "accepted a wrong truncation";
  } catch (const DocumentError& e) {
    EXPECT_EQ(e.where, "/trunc/N");
  }
}
