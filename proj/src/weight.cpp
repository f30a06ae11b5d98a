#include "nccr/weight.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <json.hpp>

#include "nccr/error.hpp"

namespace nccr {

namespace {

void check_non_increasing(const std::vector<int>& e) {
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] > e[i - 1]) {
      throw InvalidArgument("weight entries must be non-increasing, got entry " +
                            std::to_string(i + 1) + " = " + std::to_string(e[i]) +
                            " after " + std::to_string(e[i - 1]));
    }
  }
}

void fill_partitions(int remaining, int max_part, std::size_t rows, std::vector<int>& cur,
                     std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    std::vector<int> rowsv = cur;
    rowsv.resize(rows, 0);
    out.emplace_back(std::move(rowsv));
    return;
  }
  if (cur.size() == rows) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    fill_partitions(remaining - part, part, rows, cur, out);
    cur.pop_back();
  }
}

void fill_box(std::size_t rows, int max_row, std::vector<int>& cur,
              std::vector<YoungDiagram>& out) {
  if (cur.size() == rows) {
    out.emplace_back(cur);
    return;
  }
  for (int r = 0; r <= max_row; ++r) {
    cur.push_back(r);
    fill_box(rows, r, cur, out);
    cur.pop_back();
  }
}

}  // namespace

Weight::Weight(std::vector<int> entries) : entries_(std::move(entries)) {
  check_non_increasing(entries_);
}

Weight::Weight(std::initializer_list<int> entries) : Weight(std::vector<int>(entries)) {}

long long Weight::total() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0LL);
}

Weight Weight::shifted(int c) const {
  std::vector<int> e = entries_;
  for (int& x : e) x += c;
  return Weight(std::move(e));
}

Weight Weight::padded(std::size_t m) const {
  if (entries_.size() > m) {
    throw InvalidArgument("weight " + str() + " has more than " + std::to_string(m) +
                          " entries");
  }
  if (entries_.size() < m && last() < 0) {
    throw InvalidArgument("cannot pad weight " + str() +
                          " with zeros: it has negative entries");
  }
  std::vector<int> e = entries_;
  e.resize(m, 0);
  return Weight(std::move(e));
}

Weight Weight::trimmed() const {
  std::vector<int> e = entries_;
  while (!e.empty() && e.back() == 0) e.pop_back();
  return Weight(std::move(e));
}

Weight Weight::dual() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  for (int& x : e) x = -x;
  return Weight(std::move(e));
}

std::vector<int> Weight::fundamental_coefficients() const {
  std::vector<int> a;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    a.push_back(entries_[i] - entries_[i + 1]);
  }
  return a;
}

int Weight::max_gap() const noexcept {
  int g = 0;
  for (std::size_t i = 0; i + 1 < entries_.size(); ++i) {
    g = std::max(g, entries_[i] - entries_[i + 1]);
  }
  return g;
}

std::string Weight::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  s += ']';
  return s;
}

YoungDiagram::YoungDiagram(std::vector<int> rows) : Weight(std::move(rows)) {
  if (!is_diagram()) {
    throw InvalidArgument("Young diagram " + str() + " has a negative row");
  }
}

YoungDiagram::YoungDiagram(std::initializer_list<int> rows)
    : YoungDiagram(std::vector<int>(rows)) {}

YoungDiagram::YoungDiagram(const Weight& w) : YoungDiagram(w.vec()) {}

YoungDiagram YoungDiagram::transpose() const {
  return transpose(static_cast<std::size_t>(width()));
}

YoungDiagram YoungDiagram::transpose(std::size_t length) const {
  if (static_cast<std::size_t>(width()) > length) {
    throw InvalidArgument("transpose of " + str() + " needs " + std::to_string(width()) +
                          " rows, only " + std::to_string(length) + " requested");
  }
  std::vector<int> cols(length, 0);
  for (int row : entries_) {
    for (int c = 0; c < row; ++c) ++cols[c];
  }
  return YoungDiagram(std::move(cols));
}

std::vector<YoungDiagram> diagrams_in_box(std::size_t rows, int width) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  cur.reserve(rows);
  fill_box(rows, width, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<YoungDiagram> partitions(int d, std::size_t rows) {
  std::vector<YoungDiagram> out;
  if (d < 0) return out;
  std::vector<int> cur;
  fill_partitions(d, d, rows, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Weight parse_weight(std::string_view text, std::string_view field) {
  auto fail = [&](const std::string& why) -> InvalidArgument {
    return InvalidArgument(std::string(field) + ": " + why + " in \"" + std::string(text) +
                           "\"");
  };
  const nlohmann::json parsed = nlohmann::json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw fail("not valid JSON");
  if (!parsed.is_array()) throw fail("expected an integer array");
  std::vector<int> entries;
  for (const auto& x : parsed) {
    if (!x.is_number_integer()) throw fail("expected an integer array");
    const auto v = x.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw fail("entry out of range");
    }
    entries.push_back(static_cast<int>(v));
  }
  try {
    return Weight(std::move(entries));
  } catch (const InvalidArgument& e) {
    throw fail(e.what());
  }
}

YoungDiagram parse_diagram(std::string_view text, std::string_view field) {
  Weight w = parse_weight(text, field);
  if (!w.is_diagram()) {
    throw InvalidArgument(std::string(field) + ": diagram rows must be non-negative in \"" +
                          std::string(text) + "\"");
  }
  return YoungDiagram(w);
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = w.size();
  for (int x : w.entries()) {
    h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace nccr
