#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nccr/weight.hpp"

namespace nccr {

enum class Coprimality { require, allow_noncoprime };

/// The Grassmannian data (n, k) = (dim V, dim S), with 1 < k < n - 1.
///
/// Non-coprime contexts can be built with Coprimality::allow_noncoprime for
/// exploration; rotation-orbit and certification operations reject them.
class GrContext {
 public:
  GrContext(int n, int k, Coprimality policy = Coprimality::require);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  /// n - k: the rank of the quotient bundle and the width of the box.
  int quotient_rank() const noexcept { return n_ - k_; }
  /// h = nk - k^2 + 1
  long long h() const noexcept { return static_cast<long long>(n_) * k_ - k_ * k_ + 1; }
  bool coprime() const noexcept { return coprime_; }

  void require_coprime(std::string_view operation) const;

  /// Length k, non-negative, first row at most n - k.
  bool fits_box(const Weight& w) const noexcept;
  /// Length k and k * a_i <= (k - i)(n - k) for every row i (1-based).
  bool is_upper_triangular(const Weight& w) const noexcept;

  std::string str() const;

  friend bool operator==(const GrContext&, const GrContext&) = default;

 private:
  int n_;
  int k_;
  bool coprime_;
};

/// Lattice-path encoding of a diagram in the k x (n-k) box: walking from the
/// bottom-left corner to the top-right, a vertical step is '1' and a
/// horizontal step is '0'.
class BinarySeq {
 public:
  BinarySeq() = default;
  /// Accepts a string of '0'/'1'.
  explicit BinarySeq(std::string bits);

  std::size_t size() const noexcept { return bits_.size(); }
  int ones() const noexcept;
  char operator[](std::size_t i) const { return bits_[i]; }
  const std::string& str() const noexcept { return bits_; }

  friend auto operator<=>(const BinarySeq&, const BinarySeq&) = default;
  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;

 private:
  std::string bits_;
};

/// Strictly upper triangular diagrams of the k x (n-k) box, in
/// lexicographic order.
std::vector<YoungDiagram> enumerate_up(const GrContext& ctx);

BinarySeq to_binary(const YoungDiagram& alpha, const GrContext& ctx);
YoungDiagram from_binary(const BinarySeq& s);
/// Cyclic left rotation by i (reduced mod n): start the path i steps later.
BinarySeq rotate(const BinarySeq& s, long long i);

/// Least i >= 0 such that rotate(to_binary(alpha), i) decodes into UP_{n,k}.
int d_upp(const YoungDiagram& alpha, const GrContext& ctx);
/// Same quantity read off the lattice path: the index of the path vertex
/// lying on the lowest line parallel to the period vector (n-k, k).
int d_upp_geometric(const YoungDiagram& alpha, const GrContext& ctx);

inline YoungDiagram transpose(const YoungDiagram& alpha) { return alpha.transpose(); }

}  // namespace nccr
