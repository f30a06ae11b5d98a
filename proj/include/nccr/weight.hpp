#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nccr {

/// A highest weight of GL_m: a non-increasing vector of integers.
///
/// Entries are indexed from 0 in code; row i of a diagram in the usual
/// 1-based notation is `w[i - 1]`. Weights of different lengths compare
/// lexicographically, which gives every container a stable order.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> entries);
  Weight(std::initializer_list<int> entries);

  static Weight zero(std::size_t m) { return Weight(std::vector<int>(m, 0)); }
  static Weight constant(std::size_t m, int value) {
    return Weight(std::vector<int>(m, value));
  }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  const std::vector<int>& vec() const noexcept { return entries_; }

  // 0 for the empty weight.
  int first() const noexcept { return entries_.empty() ? 0 : entries_.front(); }
  int last() const noexcept { return entries_.empty() ? 0 : entries_.back(); }

  long long total() const noexcept;
  bool is_diagram() const noexcept { return last() >= 0; }
  bool is_rectangular() const noexcept { return first() == last(); }

  Weight shifted(int c) const;
  /// Shift all entries so the last one is 0 (strip det twists).
  Weight sl_normalized() const { return shifted(-last()); }
  /// Append zeros up to length m. Fails if the weight has a negative entry
  /// or is already longer than m.
  Weight padded(std::size_t m) const;
  /// Drop trailing zeros.
  Weight trimmed() const;
  /// Highest weight of the dual representation: (-w_m, ..., -w_1).
  Weight dual() const;
  /// a_i = w_i - w_{i+1}, the coefficients on the fundamental weights.
  std::vector<int> fundamental_coefficients() const;
  /// Largest fundamental coefficient, 0 for weights of length < 2.
  int max_gap() const noexcept;

  /// "[3,1,0]"
  std::string str() const;

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

 protected:
  std::vector<int> entries_;
};

/// A Young diagram: a weight with non-negative entries. The length is kept
/// explicit (trailing zeros are significant).
class YoungDiagram : public Weight {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<int> rows);
  YoungDiagram(std::initializer_list<int> rows);
  explicit YoungDiagram(const Weight& w);

  int width() const noexcept { return first(); }
  int boxes() const noexcept { return static_cast<int>(total()); }

  YoungDiagram padded(std::size_t m) const { return YoungDiagram(Weight::padded(m)); }
  YoungDiagram sl_normalized() const { return YoungDiagram(Weight::sl_normalized()); }
  YoungDiagram trimmed() const { return YoungDiagram(Weight::trimmed()); }

  /// Column lengths; the result has length equal to width().
  YoungDiagram transpose() const;
  /// Column lengths padded (or checked) to the given length.
  YoungDiagram transpose(std::size_t length) const;
};

/// All diagrams with at most `rows` rows (length exactly `rows`) and
/// first row at most `width`, in lexicographic order.
std::vector<YoungDiagram> diagrams_in_box(std::size_t rows, int width);

/// All partitions of d with at most `rows` parts, padded to length `rows`,
/// in lexicographic order.
std::vector<YoungDiagram> partitions(int d, std::size_t rows);

/// Parse "[3,1,0]" (whitespace tolerated). Throws InvalidArgument naming
/// `field` on malformed text or non-monotone entries.
Weight parse_weight(std::string_view text, std::string_view field = "weight");
YoungDiagram parse_diagram(std::string_view text, std::string_view field = "diagram");

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace nccr
