#include "nccr/staircase.hpp"

#include <algorithm>

#include "nccr/bwb.hpp"
#include "nccr/error.hpp"

namespace nccr {

namespace {

YoungDiagram normalized_k_rows(const YoungDiagram& alpha, const GrContext& ctx) {
  if (alpha.size() != static_cast<std::size_t>(ctx.k())) {
    throw InvalidArgument("staircase needs a diagram with k = " + std::to_string(ctx.k()) +
                          " rows, got " + alpha.str());
  }
  return alpha.sl_normalized();
}

std::vector<YoungDiagram> distinct_sorted(std::vector<YoungDiagram> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

std::set<YoungDiagram> StaircaseComplex::term_set() const {
  std::set<YoungDiagram> all;
  for (const auto& t : terms) all.insert(t.begin(), t.end());
  return all;
}

StaircaseComplex staircase_geometric(const YoungDiagram& alpha, const GrContext& ctx) {
  const YoungDiagram a = normalized_k_rows(alpha, ctx);
  const int width = ctx.quotient_rank();
  if (a.width() > width) {
    throw DomainError(alpha.str() + " is wider than n - k = " + std::to_string(width) +
                      "; resolve it by width descent (staircase_bwb)");
  }
  if (ctx.is_upper_triangular(a)) {
    throw DomainError(alpha.str() + " lies in UP" + ctx.str() + ": already projective");
  }
  const std::size_t k = a.size();
  // Strip cells in row r occupy columns a_r + 1 .. end_r.
  std::vector<int> end(k);
  end[0] = width + 1;
  for (std::size_t r = 1; r < k; ++r) end[r] = a[r - 1] + 1;

  StaircaseComplex complex{alpha, {}, {}};
  for (int c = 1; c <= width + 1; ++c) {
    std::vector<int> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r] = std::max(a[r], std::min(c, end[r]));
    YoungDiagram shape(std::move(rows));
    complex.terms.push_back({shape.sl_normalized()});
    complex.shapes.push_back(std::move(shape));
  }
  return complex;
}

std::vector<std::optional<YoungDiagram>> staircase_bwb(const YoungDiagram& alpha,
                                                       const GrContext& ctx) {
  const YoungDiagram a = normalized_k_rows(alpha, ctx);
  std::vector<std::optional<YoungDiagram>> out;
  std::vector<int> v = a.vec();
  for (int i = 1; i <= ctx.n(); ++i) {
    v.back() = a.last() + i;
    const BWBOutcome r = twisted_weyl_sort(v);
    if (r.vanishes()) {
      out.emplace_back(std::nullopt);
    } else {
      out.emplace_back(YoungDiagram(r.dominant->sl_normalized()));
    }
  }
  return out;
}

std::vector<YoungDiagram> staircase_bwb_terms(const YoungDiagram& alpha, const GrContext& ctx) {
  std::vector<YoungDiagram> out;
  for (auto& t : staircase_bwb(alpha, ctx)) {
    if (t) out.push_back(std::move(*t));
  }
  return out;
}

bool verify_dupp_descent(const YoungDiagram& alpha, const GrContext& ctx) {
  ctx.require_coprime("verify_dupp_descent");
  const StaircaseComplex complex = staircase_geometric(alpha, ctx);
  const int d = d_upp(alpha.sl_normalized(), ctx);
  for (const auto& beta : complex.term_set()) {
    if (!ctx.fits_box(beta) || d_upp(beta, ctx) >= d) return false;
  }
  return true;
}

bool verify_width_descent(const YoungDiagram& alpha, const GrContext& ctx) {
  const YoungDiagram a = normalized_k_rows(alpha, ctx);
  if (a.width() <= ctx.quotient_rank()) {
    throw InvalidArgument("width descent needs alpha_1 > n - k, got " + alpha.str());
  }
  for (const auto& beta : staircase_bwb_terms(a, ctx)) {
    if (beta.width() >= a.width()) return false;
  }
  return true;
}

std::vector<YoungDiagram> ResolutionTrace::leaves() const {
  std::vector<YoungDiagram> out;
  for (const auto& [d, node] : nodes) {
    if (node.children.empty()) out.push_back(d);
  }
  return out;
}

namespace {

class Resolver {
 public:
  Resolver(const GrContext& ctx, int depth_limit) : ctx_(ctx), limit_(depth_limit) {}

  int expand(const YoungDiagram& d, int level) {
    if (auto it = trace_.nodes.find(d); it != trace_.nodes.end()) {
      if (it->second.depth < 0) {
        throw DepthLimitExceeded("staircase resolution revisits " + d.str() +
                                 " on its own branch");
      }
      return it->second.depth;
    }
    if (level > limit_) {
      throw DepthLimitExceeded("resolution of " + trace_.root.str() + " exceeds depth limit " +
                               std::to_string(limit_) + " at " + d.str());
    }
    ResolutionNode node{d, ResolutionPhase::projective, {}, 0};
    node.depth = -1;  // in progress
    if (ctx_.is_upper_triangular(d)) {
      node.depth = 0;
      trace_.nodes.emplace(d, std::move(node));
      return 0;
    }
    if (d.width() > ctx_.quotient_rank()) {
      node.phase = ResolutionPhase::width_descent;
      node.children = distinct_sorted(staircase_bwb_terms(d, ctx_));
    } else {
      node.phase = ResolutionPhase::dupp_descent;
      const auto terms = staircase_geometric(d, ctx_).term_set();
      node.children.assign(terms.begin(), terms.end());
    }
    const std::vector<YoungDiagram> children = node.children;
    trace_.nodes.emplace(d, std::move(node));
    int depth = 0;
    for (const auto& c : children) depth = std::max(depth, expand(c, level + 1) + 1);
    trace_.nodes.at(d).depth = depth;
    return depth;
  }

  ResolutionTrace run(const YoungDiagram& root) {
    trace_.root = root;
    trace_.projective_dimension = expand(root, 0);
    return std::move(trace_);
  }

 private:
  const GrContext& ctx_;
  int limit_;
  ResolutionTrace trace_;
};

}  // namespace

ResolutionTrace resolve(const YoungDiagram& alpha, const GrContext& ctx, int depth_limit) {
  ctx.require_coprime("resolve");
  const YoungDiagram a = normalized_k_rows(alpha, ctx);
  return Resolver(ctx, depth_limit).run(a);
}

}  // namespace nccr
