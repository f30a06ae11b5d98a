#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nccr/weight.hpp"
#include "nccr/young.hpp"

namespace nccr {

/// The bundle S^beta S* (x) S^gamma Q* (x) O(twist) on Gr(k, n), with
/// k = beta.size() and n - k = gamma.size(). O(i) = S^{(i,...,i)} S* is folded
/// into beta.
struct BundleDescriptor {
  Weight beta;
  Weight gamma;
  int twist = 0;

  /// (beta + twist, gamma) as a length-n integer vector.
  std::vector<int> concatenated() const;
};

/// Cohomology of a homogeneous bundle: zero in every degree, or the single
/// representation S^dominant V* placed in degree `degree`.
struct BWBOutcome {
  std::optional<Weight> dominant;
  int degree = 0;

  bool vanishes() const noexcept { return !dominant.has_value(); }
  static BWBOutcome vanishing() { return {}; }

  friend bool operator==(const BWBOutcome&, const BWBOutcome&) = default;
};

/// The rho-shifted sort on a length-m integer vector with rho = (m-1, ..., 0):
/// vanishes if v + rho has a repeated entry, otherwise the sorted vector minus
/// rho, in degree equal to the number of inversions of v + rho.
BWBOutcome twisted_weyl_sort(std::span<const int> v);

BWBOutcome bwb(const BundleDescriptor& desc);
/// As above, checking that the descriptor lives on Gr(ctx.k(), ctx.n()).
BWBOutcome bwb(const BundleDescriptor& desc, const GrContext& ctx);

struct LineBundleCohomology {
  int degree = 0;
  std::uint64_t dimension = 0;

  friend bool operator==(const LineBundleCohomology&, const LineBundleCohomology&) = default;
};

/// Cohomology of O(d) on P^m, computed through bwb on Gr(1, m+1).
/// nullopt when every cohomology group vanishes.
std::optional<LineBundleCohomology> line_bundle_cohomology(int d, int m);

/// One summand S^gamma S* of S^a S (x) S^b S* (x) O(i) and its cohomology.
struct TiltingTerm {
  Weight gamma;
  std::uint64_t multiplicity = 0;
  BWBOutcome outcome;
};

std::vector<TiltingTerm> tilting_terms(const YoungDiagram& a, const YoungDiagram& b, int i,
                                       const GrContext& ctx);

/// True iff S^a S (x) S^b S* (x) O(i) has no cohomology outside degree 0.
/// a and b must lie in UP_{n,k}, i >= 0.
bool tilting_vanishing(const YoungDiagram& a, const YoungDiagram& b, int i,
                       const GrContext& ctx);

}  // namespace nccr
