#include <doctest.h>

#include "nccr/error.hpp"
#include "nccr/schur.hpp"
#include "oracles.hpp"

using namespace nccr;

namespace {

std::map<oracle::Vec, std::int64_t> as_map(const LRDecomposition& lr) {
  std::map<oracle::Vec, std::int64_t> out;
  for (const auto& [w, m] : lr.terms) out[w.vec()] = static_cast<std::int64_t>(m);
  return out;
}

std::vector<YoungDiagram> small_diagrams(int max_boxes, std::size_t rows) {
  std::vector<YoungDiagram> out;
  for (int d = 0; d <= max_boxes; ++d) {
    for (const auto& p : partitions(d, rows)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("LR of small products") {
  const LRDecomposition lr = lr_decompose(YoungDiagram{1, 0}, YoungDiagram{2, 0}, 2);
  CHECK(lr.terms.size() == 2);
  CHECK(lr.multiplicity(Weight{3, 0}) == 1);
  CHECK(lr.multiplicity(Weight{2, 1}) == 1);
  const LRDecomposition big = lr_decompose(YoungDiagram{2, 1, 0}, YoungDiagram{2, 1, 0}, 3);
  CHECK(big.multiplicity(Weight{3, 2, 1}) == 2);
  CHECK(big.total_multiplicity() == 6);
}

TEST_CASE("LR matches Schur polynomial products") {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto ds = small_diagrams(5, m);
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        CHECK(as_map(lr_decompose(a, b, m)) == oracle::lr(a.vec(), b.vec(), static_cast<int>(m)));
      }
    }
  }
  const auto ds4 = small_diagrams(4, 4);
  for (const auto& a : ds4) {
    for (const auto& b : ds4) {
      CHECK(as_map(lr_decompose(a, b, 4)) == oracle::lr(a.vec(), b.vec(), 4));
    }
  }
}

TEST_CASE("LR with determinant twists matches the shifted oracle") {
  for (const auto& a : diagrams_in_box(3, 3)) {
    for (const auto& b : diagrams_in_box(3, 2)) {
      const Weight da = a.dual();
      CHECK(as_map(lr_decompose(da, b, 3)) == oracle::lr_weights(da.vec(), b.vec(), 3));
      const Weight tb = b.shifted(-4);
      CHECK(as_map(lr_decompose(a, tb, 3)) == oracle::lr_weights(a.vec(), tb.vec(), 3));
    }
  }
}

TEST_CASE("LR tableau counts are symmetric in the two factors") {
  const auto ds = small_diagrams(5, 3);
  for (const auto& a : ds) {
    for (const auto& b : ds) {
      CHECK(lr_fillings(a, b, 3) == lr_fillings(b, a, 3));
    }
  }
}

TEST_CASE("padding and length checks") {
  CHECK(lr_decompose(Weight{1}, Weight{1}, 2) ==
        lr_decompose(YoungDiagram{1, 0}, YoungDiagram{1, 0}, 2));
  CHECK_THROWS_AS(lr_decompose(Weight{1, 1, 1}, Weight{1}, 2), InvalidArgument);
  CHECK_THROWS_AS(lr_decompose(Weight{0, -1}, Weight{1}, 3), InvalidArgument);
}

TEST_CASE("row bounds") {
  const LRBounds b = lr_bounds(YoungDiagram{1, 0}, YoungDiagram{2, 0}, 2);
  CHECK(b.lower == std::vector<int>{1, 0});
  CHECK(b.upper == std::vector<int>{3, 1});
  for (const auto& [g, m] : lr_decompose(YoungDiagram{1, 0}, YoungDiagram{2, 0}, 2).terms) {
    CHECK(b.admits(g));
  }
  CHECK_FALSE(b.admits(Weight{4, 0}));
}

TEST_CASE("row bounds hold for every term, up to six boxes") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto ds = small_diagrams(6, k);
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        const LRBounds bounds = lr_bounds(a, b, k);
        for (const auto& [g, m] : lr_decompose(a, b, k).terms) CHECK(bounds.admits(g));
      }
    }
  }
}

TEST_CASE("first-row test against enumeration") {
  for (std::size_t l = 2; l <= 4; ++l) {
    for (const auto& a : diagrams_in_box(l, 3)) {
      for (const auto& b : diagrams_in_box(l, 3)) {
        bool found = false;
        for (const auto& [g, m] : lr_decompose(a, b, l).terms) found = found || g[0] == a[0];
        CHECK(max_dual_test(a, b, l) == found);
      }
    }
  }
}

TEST_CASE("dual diagram") {
  CHECK(dual_diagram(YoungDiagram{3, 1, 0}) == YoungDiagram{3, 2, 0});
  CHECK(dual_diagram(YoungDiagram{2, 1, 0}) == YoungDiagram{2, 1, 0});
  for (const auto& a : diagrams_in_box(3, 4)) {
    if (a.last() == 0) CHECK(dual_diagram(dual_diagram(a)) == a);
    CHECK(dual_diagram(a) == YoungDiagram(a.dual().sl_normalized()));
  }
}

TEST_CASE("Weyl dimension") {
  CHECK(weyl_dim(Weight{1, 0, 0, 0, 0}, 5) == 5);
  CHECK(weyl_dim(Weight{1, 1, 0, 0, 0}, 5) == 10);
  CHECK(weyl_dim(Weight{1, 1}, 5) == 10);
  CHECK(weyl_dim(Weight{0, 0, -1}, 3) == 3);
  CHECK(weyl_dim(Weight{2, 2, 2}, 3) == 1);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& l : diagrams_in_box(static_cast<std::size_t>(n), 4)) {
      CHECK(weyl_dim(l, static_cast<std::size_t>(n)) == oracle::dim_gl(l.vec(), n));
    }
  }
  CHECK_THROWS_AS(weyl_dim(Weight{1000000, 0, 0, 0, 0, 0, 0, 0}, 8), OverflowError);
}

TEST_CASE("binomial") {
  CHECK(binomial(11, 4) == 330);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(66, 33) == 7219428434016265740ULL);
  CHECK_THROWS_AS(binomial(70, 35), OverflowError);
}

TEST_CASE("Cauchy decomposition dimension identity") {
  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 0; d <= 5; ++d) {
        std::uint64_t total = 0;
        for (const auto& l : cauchy_decompose(d, k, n)) {
          total += oracle::dim_gl(l.vec(), k) * oracle::dim_gl(l.vec(), n);
        }
        CHECK(total == oracle::choose(static_cast<std::uint64_t>(k * n + d - 1),
                                      static_cast<std::uint64_t>(d)));
      }
    }
  }
}
