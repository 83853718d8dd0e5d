#include "reedy/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace reedy {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm transposition(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::out_of_range("transposition index out of range");
  Perm p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose_perm: sizes differ");
  Perm c(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r += static_cast<std::uint64_t>(smaller) * factorial(n - 1 - i);
  }
  return r;
}

Perm perm_unrank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) throw std::out_of_range("perm_unrank: rank too large");
  std::vector<int> pool = identity_perm(n);
  Perm p;
  for (int i = 0; i < n; ++i) {
    std::uint64_t f = factorial(n - 1 - i);
    std::size_t k = static_cast<std::size_t>(rank / f);
    rank %= f;
    p.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return p;
}

std::vector<int> reduced_word(const Perm& p, bool largest) {
  Perm cur = p;
  std::vector<int> rev;
  const int n = static_cast<int>(p.size());
  while (!is_identity(cur)) {
    int d = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (cur[i] > cur[i + 1]) {
        d = i;
        if (!largest) break;
      }
    rev.push_back(d);
    std::swap(cur[d], cur[d + 1]);  // cur . tau_d
  }
  return {rev.rbegin(), rev.rend()};
}

Perm block_sum(const std::vector<Perm>& blocks) {
  Perm out;
  int off = 0;
  for (const auto& b : blocks) {
    for (int v : b) out.push_back(v + off);
    off += static_cast<int>(b.size());
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k <= 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  if (k == 1) return {{n}};
  for (int first = 0; first <= n; ++first)
    for (auto& rest : compositions(n - first, k - 1)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<Shuffle> shuffles(const std::vector<int>& blocks) {
  int n = 0;
  for (int b : blocks) {
    if (b < 0) throw std::invalid_argument("negative block size");
    n += b;
  }
  // owner[v] = block whose image contains v; enumerated as multiset permutations.
  std::vector<int> owner;
  for (std::size_t j = 0; j < blocks.size(); ++j) owner.insert(owner.end(), static_cast<std::size_t>(blocks[j]), static_cast<int>(j));
  std::vector<Shuffle> out;
  do {
    std::vector<int> offset(blocks.size(), 0);
    for (std::size_t j = 1; j < blocks.size(); ++j) offset[j] = offset[j - 1] + blocks[j - 1];
    Perm g(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) g[offset[owner[v]]++] = v;
    out.push_back({blocks, std::move(g)});
  } while (std::next_permutation(owner.begin(), owner.end()));
  std::sort(out.begin(), out.end(), [](const Shuffle& a, const Shuffle& b) { return a.gamma < b.gamma; });
  return out;
}

Normalized normalize(const Perm& sigma, const std::vector<int>& blocks) {
  Normalized out;
  out.gamma.assign(sigma.size(), 0);
  std::size_t off = 0;
  std::vector<std::vector<int>> images;
  for (int b : blocks) {
    std::vector<int> img(sigma.begin() + static_cast<std::ptrdiff_t>(off),
                         sigma.begin() + static_cast<std::ptrdiff_t>(off + b));
    std::vector<int> sorted = img;
    std::sort(sorted.begin(), sorted.end());
    for (int r = 0; r < b; ++r) out.gamma[off + r] = sorted[r];
    Perm alpha(static_cast<std::size_t>(b));
    for (int r = 0; r < b; ++r)
      alpha[r] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), img[r]) - sorted.begin());
    out.alphas.push_back(std::move(alpha));
    off += static_cast<std::size_t>(b);
  }
  if (off != sigma.size()) throw std::invalid_argument("normalize: block sizes do not sum to n");
  return out;
}

std::size_t shuffle_index(const std::vector<Shuffle>& list, const Perm& gamma) {
  auto it = std::lower_bound(list.begin(), list.end(), gamma,
                             [](const Shuffle& s, const Perm& g) { return s.gamma < g; });
  if (it == list.end() || it->gamma != gamma) throw std::invalid_argument("not a shuffle of this type");
  return static_cast<std::size_t>(it - list.begin());
}

}  // namespace reedy
