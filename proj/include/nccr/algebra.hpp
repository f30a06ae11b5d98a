#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "nccr/weight.hpp"
#include "nccr/young.hpp"

namespace nccr {

/// sub: Hom(S, V) with SL(S), vertices alpha in UP_{n,k}, labels S^lambda V*.
/// quot: Hom(V, Q) with SL(Q), vertices alpha^t (n-k rows), labels S^lambda V.
enum class Side { sub, quot };

std::string_view side_name(Side side);
Side parse_side(std::string_view text);

/// Multiplicity of the SL_rank-invariants in the tensor product of the given
/// GL_rank weights, i.e. the total multiplicity of rectangular weights.
std::uint64_t invariant_multiplicity(const std::vector<Weight>& factors, std::size_t rank);

struct HomComponent {
  Weight lambda;  // n entries
  std::uint64_t multiplicity = 0;
  std::uint64_t dimension = 0;  // multiplicity * dim S^lambda C^n

  friend bool operator==(const HomComponent&, const HomComponent&) = default;
};

/// Graded pieces of Hom(P_alpha, P_beta), degree = |lambda|.
struct GradedHom {
  Side side = Side::sub;
  YoungDiagram source;  // vertex labels on the chosen side
  YoungDiagram target;
  int max_degree = 0;
  std::map<int, std::vector<HomComponent>> by_degree;  // only non-zero degrees

  std::uint64_t dimension(int degree) const;
  /// Non-zero degrees in increasing order.
  std::vector<int> degrees() const;
};

/// alpha and beta are elements of UP_{n,k} on either side; on the quot side
/// they are transposed internally.
GradedHom graded_hom(const YoungDiagram& alpha, const YoungDiagram& beta, const GrContext& ctx,
                     int max_degree, Side side = Side::sub);

/// SL-normalized GL_k weights of S^{alpha*} (x) S^beta, via Weight::dual.
std::vector<Weight> hom_weight_stream(const YoungDiagram& alpha, const YoungDiagram& beta,
                                      const GrContext& ctx);

struct Arrow {
  YoungDiagram source;
  YoungDiagram target;
  int degree = 0;
  Weight lambda;
  std::uint64_t multiplicity = 0;
  std::uint64_t dimension = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  GrContext context;
  Side side = Side::sub;
  int max_degree = 0;
  std::vector<YoungDiagram> vertices;
  std::vector<Arrow> arrows;  // ordered by (source, target, degree, lambda)

  /// Sum of arrow dimensions from source to target in the given degree.
  std::uint64_t dimension(const YoungDiagram& source, const YoungDiagram& target,
                          int degree) const;
};

Quiver build_quiver(const GrContext& ctx, Side side, int max_degree, unsigned jobs = 1);

/// One level of a vertex pair: the level-th non-zero degree on each side
/// (level 0 is the identity / lowest piece). Components are matched by their
/// class as SL(V) representations.
struct SideComparisonEntry {
  YoungDiagram source;  // UP_{n,k} labels
  YoungDiagram target;
  int level = 0;
  int sub_degree = -1;  // -1: level not reached within max_degree
  int quot_degree = -1;
  std::uint64_t sub_dimension = 0;
  std::uint64_t quot_dimension = 0;
  std::vector<Weight> matched;  // SL(V) classes present on both sides
  std::vector<Weight> sub_only;
  std::vector<Weight> quot_only;

  bool differs() const noexcept { return !sub_only.empty() || !quot_only.empty(); }
};

struct SideComparison {
  GrContext context;
  int max_degree = 0;
  std::vector<SideComparisonEntry> entries;
  /// degree -> (total sub dimension, total quot dimension) over all pairs
  std::map<int, std::pair<std::uint64_t, std::uint64_t>> totals;
};

/// SL(V) class of S^lambda V* (sub) or S^lambda V (quot), as an n-entry
/// diagram with last entry 0.
Weight sl_v_class(const Weight& lambda, Side side, int n);

SideComparison compare_sides(const GrContext& ctx, int max_degree, unsigned jobs = 1);

}  // namespace nccr
