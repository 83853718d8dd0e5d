#include "reedy/kernels.hpp"

#if defined(REEDY_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <algorithm>

namespace reedy::kernels::avx2 {

void gather(std::span<const Index> idx, std::span<const Index> table, std::span<Index> out) {
  const std::size_t n = idx.size();
  const int* base = reinterpret_cast<const int*>(table.data());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx.data() + i));
    __m256i v = _mm256_i32gather_epi32(base, vi, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), v);
  }
  for (; i < n; ++i) out[i] = table[idx[i]];
}

std::size_t mismatch(std::span<const Index> a, std::span<const Index> b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    unsigned eq = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(va, vb))));
    if (eq != 0xffu) return i + static_cast<std::size_t>(__builtin_ctz(~eq & 0xffu));
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return i;
  return n;
}

Index max(std::span<const Index> a) {
  const std::size_t n = a.size();
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 8 <= n; i += 8)
    acc = _mm256_max_epu32(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i)));
  alignas(32) Index lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  Index m = *std::max_element(lanes, lanes + 8);
  for (; i < n; ++i) m = a[i] > m ? a[i] : m;
  return m;
}

}  // namespace reedy::kernels::avx2

#endif
