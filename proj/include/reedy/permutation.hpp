#pragma once

#include <cstdint>
#include <vector>

namespace reedy {

/// A permutation of {0..n-1}, stored as its images: p[i] = p(i).
using Perm = std::vector<int>;

Perm identity_perm(int n);
/// The adjacent transposition tau_i = (i i+1) in Sigma_n.
Perm transposition(int n, int i);
/// a after b: (a . b)(i) = a(b(i)).
Perm compose_perm(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
bool is_permutation(const Perm& p);

/// Lehmer-code rank in lexicographic order of image sequences; 0 = identity.
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

/// A reduced word w with p = tau_{w[0]} . tau_{w[1]} . ... . tau_{w[L-1]}.
/// Built by peeling a descent off the right; `largest` picks the largest
/// descent instead of the smallest, giving a second, usually different, word.
std::vector<int> reduced_word(const Perm& p, bool largest = false);

/// The block sum a (+) b in Sigma_{|a|+|b|}.
Perm block_sum(const std::vector<Perm>& blocks);

/// A multi-shuffle for block sizes (p_1, ..., p_k): increasing on each block
/// of consecutive positions.
struct Shuffle {
  std::vector<int> blocks;
  Perm gamma;
};

/// All shuffles for the given block sizes, ordered lexicographically by gamma.
std::vector<Shuffle> shuffles(const std::vector<int>& blocks);

/// All compositions (p_1..p_k) of n with p_j >= 0, in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);

/// Writes sigma = gamma' . (alpha_1 (+) ... (+) alpha_k) with gamma' a
/// shuffle for `blocks`; returns gamma' and the alphas.
struct Normalized {
  Perm gamma;
  std::vector<Perm> alphas;
};
Normalized normalize(const Perm& sigma, const std::vector<int>& blocks);

/// Shuffles are compared by their image sequences; this gives the index of
/// gamma in shuffles(blocks).
std::size_t shuffle_index(const std::vector<Shuffle>& list, const Perm& gamma);

}  // namespace reedy
