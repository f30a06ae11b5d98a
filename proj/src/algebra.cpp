#include "nccr/algebra.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

#include "nccr/error.hpp"
#include "nccr/parallel.hpp"
#include "nccr/schur.hpp"

namespace nccr {

std::string_view side_name(Side side) { return side == Side::sub ? "sub" : "quot"; }

Side parse_side(std::string_view text) {
  if (text == "sub") return Side::sub;
  if (text == "quot") return Side::quot;
  throw InvalidArgument("side must be 'sub' or 'quot', got '" + std::string(text) + "'");
}

namespace {

using TermMap = std::map<Weight, std::uint64_t>;

// Sum of the multiplicities of target + (m, ..., m) over all m.
std::uint64_t shifted_multiplicity(const TermMap& terms, const Weight& target) {
  std::uint64_t total = 0;
  for (const auto& [gamma, mult] : terms) {
    const int m = gamma[0] - target[0];
    bool match = true;
    for (std::size_t i = 1; i < gamma.size() && match; ++i) match = gamma[i] - target[i] == m;
    if (match) total += mult;
  }
  return total;
}

Weight at_rank(const Weight& w, std::size_t rank) {
  if (w.size() == rank) return w;
  if (w.size() < rank) return w.padded(rank);
  throw InvalidArgument("weight " + w.str() + " has more than " + std::to_string(rank) +
                        " entries");
}

void require_up(const YoungDiagram& d, const GrContext& ctx, std::string_view field) {
  if (!ctx.is_upper_triangular(d)) {
    throw InvalidArgument(std::string(field) + " " + d.str() + " is not in UP" + ctx.str());
  }
}

}  // namespace

std::uint64_t invariant_multiplicity(const std::vector<Weight>& factors, std::size_t rank) {
  if (factors.empty()) return 1;
  TermMap acc{{at_rank(factors.front(), rank), 1}};
  for (std::size_t f = 1; f + 1 < factors.size(); ++f) {
    const Weight w = at_rank(factors[f], rank);
    TermMap next;
    for (const auto& [gamma, mult] : acc) {
      for (const auto& [term, m] : lr_decompose(gamma, w, rank).terms) next[term] += mult * m;
    }
    acc = std::move(next);
  }
  if (factors.size() == 1) {
    return acc.begin()->first.is_rectangular() ? 1 : 0;
  }
  // S^g (x) S^c holds an invariant iff g is dual(c) up to a det twist.
  return shifted_multiplicity(acc, at_rank(factors.back(), rank).dual());
}

std::uint64_t GradedHom::dimension(int degree) const {
  auto it = by_degree.find(degree);
  if (it == by_degree.end()) return 0;
  std::uint64_t total = 0;
  for (const auto& c : it->second) total += c.dimension;
  return total;
}

std::vector<int> GradedHom::degrees() const {
  std::vector<int> out;
  for (const auto& [d, comps] : by_degree) out.push_back(d);
  return out;
}

GradedHom graded_hom(const YoungDiagram& alpha, const YoungDiagram& beta, const GrContext& ctx,
                     int max_degree, Side side) {
  require_up(alpha, ctx, "source");
  require_up(beta, ctx, "target");
  if (max_degree < 0) throw InvalidArgument("max_degree must be >= 0");
  const std::size_t n = static_cast<std::size_t>(ctx.n());

  GradedHom hom;
  hom.side = side;
  hom.max_degree = max_degree;
  std::size_t rank = 0;
  TermMap pre;
  if (side == Side::sub) {
    rank = static_cast<std::size_t>(ctx.k());
    hom.source = alpha;
    hom.target = beta;
    pre = lr_decompose(alpha.dual(), beta, rank).terms;
  } else {
    rank = static_cast<std::size_t>(ctx.quotient_rank());
    hom.source = alpha.transpose(rank);
    hom.target = beta.transpose(rank);
    pre = lr_decompose(hom.source.dual(), hom.target, rank).terms;
  }

  for (int d = 0; d <= max_degree; ++d) {
    std::vector<HomComponent> comps;
    for (const auto& lambda : partitions(d, rank)) {
      // Dual of the third factor: S^lambda S on the sub side, S^lambda Q* on the quot side.
      const Weight partner = side == Side::sub ? Weight(lambda) : lambda.dual();
      const std::uint64_t mult = shifted_multiplicity(pre, partner);
      if (mult == 0) continue;
      const Weight label = lambda.padded(n);
      comps.push_back({label, mult, mult * weyl_dim(label, n)});
    }
    if (!comps.empty()) hom.by_degree.emplace(d, std::move(comps));
  }
  return hom;
}

std::vector<Weight> hom_weight_stream(const YoungDiagram& alpha, const YoungDiagram& beta,
                                      const GrContext& ctx) {
  const auto k = static_cast<std::size_t>(ctx.k());
  std::vector<Weight> out;
  for (const auto& [gamma, mult] : lr_decompose(alpha.dual(), beta, k).terms) {
    out.push_back(gamma.sl_normalized());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t Quiver::dimension(const YoungDiagram& source, const YoungDiagram& target,
                                int degree) const {
  std::uint64_t total = 0;
  for (const auto& a : arrows) {
    if (a.source == source && a.target == target && a.degree == degree) total += a.dimension;
  }
  return total;
}

Quiver build_quiver(const GrContext& ctx, Side side, int max_degree, unsigned jobs) {
  ctx.require_coprime("build_quiver");
  const std::vector<YoungDiagram> up = enumerate_up(ctx);
  const std::size_t count = up.size() * up.size();
  std::vector<GradedHom> homs(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    homs[idx] = graded_hom(up[idx / up.size()], up[idx % up.size()], ctx, max_degree, side);
  });

  Quiver q{ctx, side, max_degree, {}, {}};
  const auto rank = static_cast<std::size_t>(ctx.quotient_rank());
  for (const auto& a : up) q.vertices.push_back(side == Side::sub ? a : a.transpose(rank));
  std::sort(q.vertices.begin(), q.vertices.end());
  for (const auto& hom : homs) {
    for (const auto& [d, comps] : hom.by_degree) {
      for (const auto& c : comps) {
        q.arrows.push_back({hom.source, hom.target, d, c.lambda, c.multiplicity, c.dimension});
      }
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end(), [](const Arrow& x, const Arrow& y) {
    return std::tie(x.source, x.target, x.degree, x.lambda) <
           std::tie(y.source, y.target, y.degree, y.lambda);
  });
  return q;
}

Weight sl_v_class(const Weight& lambda, Side side, int n) {
  const Weight p = lambda.padded(static_cast<std::size_t>(n));
  return side == Side::sub ? p.dual().sl_normalized() : p.sl_normalized();
}

namespace {

std::vector<Weight> classes_at(const GradedHom& hom, int degree, int n) {
  std::vector<Weight> out;
  auto it = hom.by_degree.find(degree);
  if (it == hom.by_degree.end()) return out;
  for (const auto& c : it->second) {
    const Weight cls = sl_v_class(c.lambda, hom.side, n);
    out.insert(out.end(), c.multiplicity, cls);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SideComparisonEntry> compare_pair(const YoungDiagram& a, const YoungDiagram& b,
                                              const GrContext& ctx, int max_degree) {
  const GradedHom sub = graded_hom(a, b, ctx, max_degree, Side::sub);
  const GradedHom quot = graded_hom(a, b, ctx, max_degree, Side::quot);
  const std::vector<int> ds = sub.degrees();
  const std::vector<int> dq = quot.degrees();
  std::vector<SideComparisonEntry> out;
  for (std::size_t level = 0; level < std::max(ds.size(), dq.size()); ++level) {
    SideComparisonEntry e{a, b, static_cast<int>(level), -1, -1, 0, 0, {}, {}, {}};
    std::vector<Weight> cs;
    std::vector<Weight> cq;
    if (level < ds.size()) {
      e.sub_degree = ds[level];
      e.sub_dimension = sub.dimension(ds[level]);
      cs = classes_at(sub, ds[level], ctx.n());
    }
    if (level < dq.size()) {
      e.quot_degree = dq[level];
      e.quot_dimension = quot.dimension(dq[level]);
      cq = classes_at(quot, dq[level], ctx.n());
    }
    std::set_intersection(cs.begin(), cs.end(), cq.begin(), cq.end(),
                          std::back_inserter(e.matched));
    std::set_difference(cs.begin(), cs.end(), cq.begin(), cq.end(),
                        std::back_inserter(e.sub_only));
    std::set_difference(cq.begin(), cq.end(), cs.begin(), cs.end(),
                        std::back_inserter(e.quot_only));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

SideComparison compare_sides(const GrContext& ctx, int max_degree, unsigned jobs) {
  ctx.require_coprime("compare_sides");
  if (max_degree < 0) throw InvalidArgument("max_degree must be >= 0");
  const std::vector<YoungDiagram> up = enumerate_up(ctx);
  const std::size_t count = up.size() * up.size();
  std::vector<std::vector<SideComparisonEntry>> parts(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    parts[idx] = compare_pair(up[idx / up.size()], up[idx % up.size()], ctx, max_degree);
  });
  SideComparison report{ctx, max_degree, {}, {}};
  for (auto& p : parts) {
    for (auto& e : p) {
      if (e.sub_degree >= 0) report.totals[e.sub_degree].first += e.sub_dimension;
      if (e.quot_degree >= 0) report.totals[e.quot_degree].second += e.quot_dimension;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace nccr
