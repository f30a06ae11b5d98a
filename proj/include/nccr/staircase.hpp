#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "nccr/weight.hpp"
#include "nccr/young.hpp"

namespace nccr {

/// Staircase complex of P_alpha for alpha inside the k x (n-k) box.
///
/// The n-box strip hugging the outer edge of alpha (row 1 extended to column
/// n-k+1) is cut by columns: the term at position c (1-based) is alpha plus
/// every strip box in columns 1..c. `shapes` keeps those diagrams as drawn;
/// `terms` holds them SL-normalized. Multiplicities are not tracked.
struct StaircaseComplex {
  YoungDiagram source;
  std::vector<YoungDiagram> shapes;
  std::vector<std::set<YoungDiagram>> terms;

  std::set<YoungDiagram> term_set() const;
};

/// Throws DomainError for alpha in UP ("already projective") or wider than
/// n - k (those go through staircase_bwb and width descent instead).
StaircaseComplex staircase_geometric(const YoungDiagram& alpha, const GrContext& ctx);

/// Entry i-1 is the SL-normalized BWB output for alpha + (0, ..., 0, i)
/// under the rank-k rho-shifted sort, i = 1..n; nullopt where it vanishes.
/// alpha is SL-normalized first.
std::vector<std::optional<YoungDiagram>> staircase_bwb(const YoungDiagram& alpha,
                                                       const GrContext& ctx);

/// Non-vanishing entries of staircase_bwb, in order of i.
std::vector<YoungDiagram> staircase_bwb_terms(const YoungDiagram& alpha, const GrContext& ctx);

/// Every staircase term beta of an in-box alpha outside UP has
/// d_upp(beta) < d_upp(alpha).
bool verify_dupp_descent(const YoungDiagram& alpha, const GrContext& ctx);

/// Every staircase_bwb term beta of alpha (alpha_1 > n - k) has
/// beta_1 < alpha_1.
bool verify_width_descent(const YoungDiagram& alpha, const GrContext& ctx);

enum class ResolutionPhase { projective, width_descent, dupp_descent };

struct ResolutionNode {
  YoungDiagram diagram;
  ResolutionPhase phase = ResolutionPhase::projective;
  std::vector<YoungDiagram> children;  // distinct, lexicographic
  int depth = 0;
};

/// Iterated staircase resolution of P_alpha, shared sub-resolutions merged
/// (the tree is stored as a DAG keyed on the normalized diagram).
struct ResolutionTrace {
  YoungDiagram root;
  std::map<YoungDiagram, ResolutionNode> nodes;
  int projective_dimension = 0;  // depth of the root

  std::vector<YoungDiagram> leaves() const;
};

/// Throws DepthLimitExceeded if some branch is deeper than depth_limit.
ResolutionTrace resolve(const YoungDiagram& alpha, const GrContext& ctx, int depth_limit);

}  // namespace nccr
