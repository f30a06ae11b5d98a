#include <doctest.h>

#include <numeric>

#include "nccr/cm.hpp"
#include "nccr/error.hpp"
#include "nccr/schur.hpp"
#include "oracles.hpp"

using namespace nccr;

namespace {

// Largest fundamental coefficient over the oracle LR terms of S^{a*} (x) S^b.
int oracle_worst_gap(const YoungDiagram& a, const YoungDiagram& b, int k) {
  oracle::Vec da(a.vec().rbegin(), a.vec().rend());
  for (auto& x : da) x = -x;
  int worst = 0;
  for (const auto& [g, c] : oracle::lr_weights(da, b.vec(), k)) {
    for (std::size_t i = 0; i + 1 < g.size(); ++i) worst = std::max(worst, g[i] - g[i + 1]);
  }
  return worst;
}

bool oracle_contains(const YoungDiagram& a, const YoungDiagram& b, const Weight& gamma, int k) {
  for (const auto& [g, c] : oracle::lr(dual_diagram(a).vec(), b.vec(), k)) {
    if (g == gamma.vec() && c > 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("CM-safe weights") {
  const GrContext ctx(5, 2);
  CHECK(is_cm_safe(Weight{2, 0}, ctx));
  CHECK_FALSE(is_cm_safe(Weight{3, 0}, ctx));
  CHECK(is_cm_safe(Weight{1, -1}, ctx));
  CHECK_THROWS_AS(is_cm_safe(Weight{1}, ctx), InvalidArgument);
}

TEST_CASE("CM certificate on small Grassmannians") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {7, 3}, {8, 3}}) {
    const GrContext ctx(n, k);
    const CMReport r = certify_cm(ctx);
    CHECK(r.certified());
    CHECK(r.violations.empty());
    CHECK(r.pairs_checked == enumerate_up(ctx).size() * enumerate_up(ctx).size());
    int worst = 0;
    for (const auto& a : enumerate_up(ctx)) {
      for (const auto& b : enumerate_up(ctx)) worst = std::max(worst, oracle_worst_gap(a, b, k));
    }
    CHECK(r.worst_gap == worst);
    CHECK(worst < n - k);
  }
}

TEST_CASE("CM report is independent of the thread count") {
  const GrContext ctx(9, 4);
  const CMReport one = certify_cm(ctx, 1);
  const CMReport four = certify_cm(ctx, 4);
  CHECK(one.terms_checked == four.terms_checked);
  CHECK(one.worst_gap == four.worst_gap);
  CHECK(one.violations == four.violations);
}

TEST_CASE("non-coprime contexts") {
  const GrContext loose(6, 3, Coprimality::allow_noncoprime);
  CHECK_THROWS_AS(certify_cm(loose), NonCoprimeContext);
  const CMReport r = cm_report(loose);
  CHECK(r.pairs_checked > 0);
  CHECK(r.certified() == r.violations.empty());
}

TEST_CASE("maximality witnesses") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 3}, {8, 3}}) {
    const GrContext ctx(n, k);
    for (const auto& b : diagrams_in_box(static_cast<std::size_t>(k), n - k)) {
      if (ctx.is_upper_triangular(b.sl_normalized())) {
        CHECK_THROWS_AS(maximality_witness(b, ctx, WitnessStrategy::brute_force), DomainError);
        continue;
      }
      const auto all = all_maximality_witnesses(b, ctx);
      REQUIRE_FALSE(all.empty());
      for (auto strategy : {WitnessStrategy::brute_force, WitnessStrategy::constructive}) {
        const MaximalityWitness w = maximality_witness(b, ctx, strategy);
        CHECK(ctx.is_upper_triangular(w.alpha));
        CHECK(w.gap >= n - k);
        CHECK(w.gamma[w.gap_row - 1] - w.gamma[w.gap_row] == w.gap);
        CHECK(oracle_contains(w.alpha, b.sl_normalized(), w.gamma, k));
        CHECK(std::find(all.begin(), all.end(), w) != all.end());
      }
    }
  }
}

TEST_CASE("maximality argument checks") {
  const GrContext ctx(5, 2);
  CHECK_THROWS_AS(maximality_witness(YoungDiagram{4, 0}, ctx, WitnessStrategy::constructive),
                  InvalidArgument);
  CHECK_THROWS_WITH_AS(maximality_witness(YoungDiagram{1, 0}, ctx, WitnessStrategy::constructive),
                       doctest::Contains("no witness exists"), DomainError);
  const MaximalityWitness w =
      maximality_witness(YoungDiagram{2, 0}, ctx, WitnessStrategy::constructive);
  CHECK(w.alpha == YoungDiagram{1, 0});
  CHECK(w.gamma == Weight{3, 0});
}

TEST_CASE("filling the first l rows can miss the witness") {
  const GrContext ctx(7, 3);
  const YoungDiagram b{2, 2, 0};
  CHECK_THROWS_AS(maximality_witness(b, ctx, WitnessStrategy::constructive_literal), DomainError);
  const MaximalityWitness w = maximality_witness(b, ctx, WitnessStrategy::constructive);
  CHECK(w.alpha == YoungDiagram{2, 0, 0});
  CHECK(w.gap_row == 2);
}
