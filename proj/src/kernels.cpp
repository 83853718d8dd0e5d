#include "reedy/kernels.hpp"

#include <algorithm>
#include <atomic>

namespace reedy::kernels {

namespace scalar {

void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out) {
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = table[idx[i]];
}

std::size_t mismatch(std::span<const Index> a, std::span<const Index> b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

Index max(std::span<const Index> a) {
  Index m = 0;
  for (Index v : a) m = v > m ? v : m;
  return m;
}

}  // namespace scalar

bool cpu_has_avx2() {
#if defined(REEDY_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

struct Table {
  GatherFn gather;
  MismatchFn mismatch;
  MaxFn max;
  Isa isa;
};

Table make_table(Isa isa) {
#if defined(REEDY_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return {avx2::gather, avx2::mismatch, avx2::max, Isa::avx2};
#endif
  (void)isa;
  return {scalar::gather, scalar::mismatch, scalar::max, Isa::scalar};
}

std::atomic<const Table*>& current() {
  static const Table scalar_table = make_table(Isa::scalar);
  static const Table simd_table = make_table(Isa::avx2);
  static std::atomic<const Table*> ptr{cpu_has_avx2() ? &simd_table : &scalar_table};
  return ptr;
}

const Table* table_for(Isa isa) {
  static const Table scalar_table = make_table(Isa::scalar);
  static const Table simd_table = make_table(Isa::avx2);
  return isa == Isa::avx2 ? &simd_table : &scalar_table;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed)->isa; }

bool force_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) return false;
  current().store(table_for(isa), std::memory_order_relaxed);
  return true;
}

void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out) {
  current().load(std::memory_order_relaxed)->gather(idx, table, out);
}

std::size_t mismatch(std::span<const Index> a, std::span<const Index> b) {
  return current().load(std::memory_order_relaxed)->mismatch(a, b);
}

Index max(std::span<const Index> a) { return current().load(std::memory_order_relaxed)->max(a); }

}  // namespace reedy::kernels
