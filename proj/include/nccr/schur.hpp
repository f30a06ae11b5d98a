#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "nccr/weight.hpp"

namespace nccr {

/// Multiset of GL_m highest weights with multiplicities, as produced by a
/// tensor product decomposition.
struct LRDecomposition {
  std::size_t rank = 0;
  std::map<Weight, std::uint64_t> terms;

  std::uint64_t multiplicity(const Weight& w) const;
  std::uint64_t total_multiplicity() const;
  bool contains(const Weight& w) const { return terms.count(w) != 0; }

  friend bool operator==(const LRDecomposition&, const LRDecomposition&) = default;
};

/// Decompose S^a (x) S^b as GL_m representations.
///
/// Weights may have negative entries; those are moved into a determinant
/// twist before the tableau count and moved back afterwards. Weights shorter
/// than m are padded with zeros (only allowed when they are diagrams).
/// Results are memoized; the cache is shared and thread safe.
LRDecomposition lr_decompose(const Weight& a, const Weight& b, std::size_t m);

/// Direct count of LR skew tableaux of shape gamma / outer with content
/// `content`, rows beyond m discarded. No memoization, no argument swapping.
LRDecomposition lr_fillings(const YoungDiagram& outer, const YoungDiagram& content,
                            std::size_t m);

/// Per-row bounds a_i + b_k <= c_i <= a_1 + b_i on every term c of S^a (x) S^b
/// (diagrams with k rows).
struct LRBounds {
  std::vector<int> lower;
  std::vector<int> upper;

  bool admits(const Weight& gamma) const;
};

LRBounds lr_bounds(const YoungDiagram& a, const YoungDiagram& b, std::size_t k);

/// True iff S^a (x) S^b (GL_l) contains some c with c_1 = a_1; closed form
/// b <= (a_1 - a_l, ..., a_1 - a_1) entrywise.
bool max_dual_test(const YoungDiagram& a, const YoungDiagram& b, std::size_t l);

/// (a_1 - a_k, a_1 - a_{k-1}, ..., a_1 - a_1)
YoungDiagram dual_diagram(const YoungDiagram& a);

/// dim S^lambda C^m by the Weyl dimension formula, exact. Throws
/// OverflowError if the value does not fit in 64 bits.
std::uint64_t weyl_dim(const Weight& lambda, std::size_t m);

/// C(n, r), exact; throws OverflowError beyond 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

/// Sym^d(S (x) V*) = sum over |lambda| = d, len(lambda) <= min(k, n) of
/// S^lambda S (x) S^lambda V*. Each lambda is returned with min(k, n) rows.
std::vector<YoungDiagram> cauchy_decompose(int d, int k, int n);

}  // namespace nccr
