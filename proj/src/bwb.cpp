#include "nccr/bwb.hpp"

#include <algorithm>
#include <functional>

#include "nccr/error.hpp"
#include "nccr/schur.hpp"

namespace nccr {

std::vector<int> BundleDescriptor::concatenated() const {
  std::vector<int> alpha;
  alpha.reserve(beta.size() + gamma.size());
  for (int b : beta.entries()) alpha.push_back(b + twist);
  for (int g : gamma.entries()) alpha.push_back(g);
  return alpha;
}

BWBOutcome twisted_weyl_sort(std::span<const int> v) {
  const std::size_t m = v.size();
  std::vector<long long> shifted(m);
  for (std::size_t i = 0; i < m; ++i) {
    shifted[i] = static_cast<long long>(v[i]) + static_cast<long long>(m - 1 - i);
  }
  int inversions = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (shifted[i] == shifted[j]) return BWBOutcome::vanishing();
      if (shifted[i] < shifted[j]) ++inversions;
    }
  }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> dominant(m);
  for (std::size_t i = 0; i < m; ++i) {
    dominant[i] = static_cast<int>(shifted[i] - static_cast<long long>(m - 1 - i));
  }
  return BWBOutcome{Weight(std::move(dominant)), inversions};
}

BWBOutcome bwb(const BundleDescriptor& desc) {
  const std::vector<int> alpha = desc.concatenated();
  return twisted_weyl_sort(alpha);
}

BWBOutcome bwb(const BundleDescriptor& desc, const GrContext& ctx) {
  if (desc.beta.size() != static_cast<std::size_t>(ctx.k()) ||
      desc.gamma.size() != static_cast<std::size_t>(ctx.quotient_rank())) {
    throw InvalidArgument("bundle descriptor needs beta of length k = " +
                          std::to_string(ctx.k()) + " and gamma of length n - k = " +
                          std::to_string(ctx.quotient_rank()));
  }
  return bwb(desc);
}

std::optional<LineBundleCohomology> line_bundle_cohomology(int d, int m) {
  if (m < 1) throw InvalidArgument("projective space dimension must be positive");
  // P^m = Gr(1, m+1); S* = O(1), so O(d) = S^{(d)} S*.
  const BundleDescriptor desc{Weight{d}, Weight::zero(static_cast<std::size_t>(m)), 0};
  const BWBOutcome out = bwb(desc);
  if (out.vanishes()) return std::nullopt;
  return LineBundleCohomology{out.degree, weyl_dim(*out.dominant, static_cast<std::size_t>(m + 1))};
}

std::vector<TiltingTerm> tilting_terms(const YoungDiagram& a, const YoungDiagram& b, int i,
                                       const GrContext& ctx) {
  if (!ctx.is_upper_triangular(a) || !ctx.is_upper_triangular(b)) {
    throw InvalidArgument("tilting check needs diagrams in UP" + ctx.str() + ", got " + a.str() +
                          " and " + b.str());
  }
  if (i < 0) throw InvalidArgument("tilting check needs a non-negative twist");
  const auto k = static_cast<std::size_t>(ctx.k());
  // S^a S = S^{a*} S* (x) O(-a_1)
  const LRDecomposition lr = lr_decompose(dual_diagram(a), b, k);
  const Weight zero_q = Weight::zero(static_cast<std::size_t>(ctx.quotient_rank()));
  std::vector<TiltingTerm> terms;
  for (const auto& [gamma, mult] : lr.terms) {
    const Weight twisted = gamma.shifted(i - a.first());
    terms.push_back({twisted, mult, bwb(BundleDescriptor{twisted, zero_q, 0}, ctx)});
  }
  return terms;
}

bool tilting_vanishing(const YoungDiagram& a, const YoungDiagram& b, int i,
                       const GrContext& ctx) {
  for (const auto& t : tilting_terms(a, b, i, ctx)) {
    if (!t.outcome.vanishes() && t.outcome.degree != 0) return false;
  }
  return true;
}

}  // namespace nccr
