#include "nccr/cm.hpp"

#include <algorithm>

#include "nccr/error.hpp"
#include "nccr/parallel.hpp"
#include "nccr/schur.hpp"

namespace nccr {

bool is_cm_safe(const Weight& gamma, const GrContext& ctx) {
  if (gamma.size() != static_cast<std::size_t>(ctx.k())) {
    throw InvalidArgument("CM check needs a weight of length k = " + std::to_string(ctx.k()) +
                          ", got " + gamma.str());
  }
  return gamma.sl_normalized().max_gap() < ctx.quotient_rank();
}

namespace {

struct PairScan {
  std::uint64_t terms = 0;
  int worst_gap = 0;
  std::vector<CMViolation> violations;
};

PairScan scan_pair(const YoungDiagram& a, const YoungDiagram& b, const GrContext& ctx) {
  PairScan scan;
  const LRDecomposition lr = lr_decompose(dual_diagram(a), b, static_cast<std::size_t>(ctx.k()));
  for (const auto& [gamma, mult] : lr.terms) {
    ++scan.terms;
    scan.worst_gap = std::max(scan.worst_gap, gamma.max_gap());
    if (!is_cm_safe(gamma, ctx)) scan.violations.push_back({a, b, gamma});
  }
  return scan;
}

YoungDiagram normalized_outside_up(const YoungDiagram& beta, const GrContext& ctx) {
  if (!ctx.fits_box(beta)) {
    throw InvalidArgument("maximality witness needs beta in the " + std::to_string(ctx.k()) +
                          " x " + std::to_string(ctx.quotient_rank()) + " box, got " +
                          beta.str());
  }
  YoungDiagram b = beta.sl_normalized();
  if (ctx.is_upper_triangular(b)) {
    throw DomainError("no witness exists: " + beta.str() + " lies in UP" + ctx.str() +
                      " and every such pair is Cohen-Macaulay");
  }
  return b;
}

}  // namespace

CMReport cm_report(const GrContext& ctx, unsigned jobs) {
  const std::vector<YoungDiagram> up = enumerate_up(ctx);
  const std::size_t count = up.size() * up.size();
  std::vector<PairScan> scans(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    scans[idx] = scan_pair(up[idx / up.size()], up[idx % up.size()], ctx);
  });
  CMReport report{ctx, 0, 0, 0, {}};
  report.pairs_checked = count;
  for (auto& s : scans) {
    report.terms_checked += s.terms;
    report.worst_gap = std::max(report.worst_gap, s.worst_gap);
    report.violations.insert(report.violations.end(), s.violations.begin(), s.violations.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

CMReport certify_cm(const GrContext& ctx, unsigned jobs) {
  ctx.require_coprime("certify_cm");
  return cm_report(ctx, jobs);
}

std::vector<MaximalityWitness> all_maximality_witnesses(const YoungDiagram& beta,
                                                        const GrContext& ctx) {
  const YoungDiagram b = normalized_outside_up(beta, ctx);
  const auto k = static_cast<std::size_t>(ctx.k());
  std::vector<MaximalityWitness> out;
  for (const auto& a : enumerate_up(ctx)) {
    const LRDecomposition lr = lr_decompose(dual_diagram(a), b, k);
    for (const auto& [gamma, mult] : lr.terms) {
      for (std::size_t i = 0; i + 1 < k; ++i) {
        const int gap = gamma[i] - gamma[i + 1];
        if (gap >= ctx.quotient_rank()) {
          out.push_back({a, gamma, static_cast<int>(i + 1), gap});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MaximalityWitness maximality_witness(const YoungDiagram& beta, const GrContext& ctx,
                                     WitnessStrategy strategy) {
  const YoungDiagram b = normalized_outside_up(beta, ctx);
  const int k = ctx.k();
  const int width = ctx.quotient_rank();

  if (strategy == WitnessStrategy::brute_force) {
    for (const auto& a : enumerate_up(ctx)) {
      const LRDecomposition lr = lr_decompose(dual_diagram(a), b, static_cast<std::size_t>(k));
      for (auto it = lr.terms.rbegin(); it != lr.terms.rend(); ++it) {
        const Weight& gamma = it->first;
        for (int i = 0; i + 1 < k; ++i) {
          const int gap = gamma[i] - gamma[i + 1];
          if (gap >= width) return {a, gamma, i + 1, gap};
        }
      }
    }
    throw DomainError("brute-force search found no witness for " + beta.str() + " on " +
                      ctx.str());
  }

  // Last row breaking the UP bound; row k never does since b_k = 0.
  int l = 0;
  for (int i = 1; i <= k; ++i) {
    if (static_cast<long long>(k) * b[i - 1] > static_cast<long long>(k - i) * width) l = i;
  }
  const int filled = strategy == WitnessStrategy::constructive_literal ? l : k - l;
  std::vector<int> rows(static_cast<std::size_t>(k), 0);
  for (int i = 1; i <= filled; ++i) rows[i - 1] = (k - i) * width / k;
  const YoungDiagram a(std::move(rows));

  const LRDecomposition lr = lr_decompose(dual_diagram(a), b, static_cast<std::size_t>(k));
  for (auto it = lr.terms.rbegin(); it != lr.terms.rend(); ++it) {
    const Weight& gamma = it->first;
    const int gap = gamma[l - 1] - gamma[l];
    if (gap >= width) return {a, gamma, l, gap};
  }
  throw DomainError("constructive recipe found no term with gap >= n - k at row " +
                    std::to_string(l) + " for " + beta.str() + " on " + ctx.str());
}

}  // namespace nccr
