#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "nccr/weight.hpp"
#include "nccr/young.hpp"

namespace nccr {

/// A weight is CM-safe when, after SL-normalization, every fundamental
/// coefficient a_i = gamma_i - gamma_{i+1} is strictly below n - k.
bool is_cm_safe(const Weight& gamma, const GrContext& ctx);

struct CMViolation {
  YoungDiagram alpha;
  YoungDiagram beta;
  Weight gamma;

  friend auto operator<=>(const CMViolation&, const CMViolation&) = default;
  friend bool operator==(const CMViolation&, const CMViolation&) = default;
};

struct CMReport {
  GrContext context;
  std::uint64_t pairs_checked = 0;
  std::uint64_t terms_checked = 0;
  int worst_gap = 0;
  std::vector<CMViolation> violations;  // sorted

  bool certified() const noexcept {
    return violations.empty() && worst_gap < context.quotient_rank();
  }
};

/// Scan every LR term of S^{a*} (x) S^b for a, b in UP_{n,k}. Works on any
/// context; a non-coprime context yields an informative, non-certifying report.
CMReport cm_report(const GrContext& ctx, unsigned jobs = 1);

/// cm_report restricted to coprime contexts (throws NonCoprimeContext).
CMReport certify_cm(const GrContext& ctx, unsigned jobs = 1);

/// A diagram a in UP_{n,k} and a term gamma of S^{a*} (x) S^beta whose
/// fundamental coefficient at row `gap_row` (1-based) is at least n - k.
struct MaximalityWitness {
  YoungDiagram alpha;
  Weight gamma;
  int gap_row = 0;
  int gap = 0;

  friend auto operator<=>(const MaximalityWitness&, const MaximalityWitness&) = default;
  friend bool operator==(const MaximalityWitness&, const MaximalityWitness&) = default;
};

enum class WitnessStrategy { constructive, constructive_literal, brute_force };

/// For beta outside UP_{n,k} (inside the k x (n-k) box, SL-normalized first),
/// find a UP diagram whose dual tensored with beta has a non-CM term.
///
/// constructive: take l = the last row where beta breaks the UP bound and
/// alpha = (m_1, ..., m_{k-l}, 0, ..., 0) with m_i the largest value the UP
/// bound allows; the witness is the lexicographically largest term with a gap
/// of at least n - k at row l.
/// constructive_literal: as constructive, but alpha = (m_1, ..., m_l, 0, ..., 0).
/// Fails for some beta, e.g. (2,2,0) on Gr(3,7).
/// brute_force: the first witness over alpha in UP (lexicographic), gamma
/// descending.
///
/// Throws DomainError if beta lies in UP, or if the constructive recipe
/// produces no term with the required gap.
MaximalityWitness maximality_witness(const YoungDiagram& beta, const GrContext& ctx,
                                     WitnessStrategy strategy);

/// Every (alpha, gamma, row) witness for beta, sorted.
std::vector<MaximalityWitness> all_maximality_witnesses(const YoungDiagram& beta,
                                                        const GrContext& ctx);

}  // namespace nccr
