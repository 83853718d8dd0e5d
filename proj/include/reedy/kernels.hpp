#pragma once

#include <cstdint>
#include <span>

// Table kernels behind every PointedMap operation. Each kernel has a scalar
// reference and, on x86-64, an AVX2 variant; the dispatcher picks one at
// startup and the two are equivalence-tested.

namespace reedy::kernels {

using Index = std::uint32_t;

enum class Isa { scalar, avx2 };

/// out[i] = table[idx[i]]; all spans of equal length except table.
using GatherFn = void (*)(std::span<const Index> idx, std::span<const Index> table,
                          std::span<Index> out);
/// Index of the first position where a and b differ, or a.size() if none.
using MismatchFn = std::size_t (*)(std::span<const Index> a, std::span<const Index> b);
/// Largest entry, 0 for an empty span.
using MaxFn = Index (*)(std::span<const Index> a);

namespace scalar {
void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out);
std::size_t mismatch(std::span<const Index> a, std::span<const Index> b);
Index max(std::span<const Index> a);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define REEDY_HAVE_AVX2_KERNELS 1
namespace avx2 {
void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out);
std::size_t mismatch(std::span<const Index> a, std::span<const Index> b);
Index max(std::span<const Index> a);
}  // namespace avx2
#endif

bool cpu_has_avx2();

Isa active_isa();

// Tests use this to pin a variant; returns false if the CPU lacks it.
bool force_isa(Isa isa);

void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out);
std::size_t mismatch(std::span<const Index> a, std::span<const Index> b);
Index max(std::span<const Index> a);

inline bool equal(std::span<const Index> a, std::span<const Index> b) {
  return a.size() == b.size() && mismatch(a, b) == a.size();
}

}  // namespace reedy::kernels
