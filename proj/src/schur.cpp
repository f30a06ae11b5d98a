#include "nccr/schur.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "nccr/error.hpp"

namespace nccr {

std::uint64_t LRDecomposition::multiplicity(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

std::uint64_t LRDecomposition::total_multiplicity() const {
  std::uint64_t s = 0;
  for (const auto& [w, mult] : terms) s += mult;
  return s;
}

namespace {

// Row-by-row enumeration of LR fillings of gamma / outer. In row r the
// filling is determined by counts[j] = number of boxes labelled j (labels
// weakly increase along a row). Constraints, with used[] counting rows < r:
//   lattice:       used[j] + counts[j] <= used[j-1]
//   column-strict: outer[r] + #(labels <= j in row r)
//                      <= outer[r-1] + #(labels <= j-1 in row r-1)
class FillingCounter {
 public:
  FillingCounter(const std::vector<int>& outer, const std::vector<int>& content, std::size_t m)
      : outer_(outer), content_(content), m_(m), used_(content.size(), 0),
        gamma_(m, 0), prev_cum_(content.size() + 1, 0) {
    outer_.resize(m, 0);
    while (!content_.empty() && content_.back() == 0) content_.pop_back();
    used_.assign(content_.size(), 0);
    prev_cum_.assign(content_.size() + 1, 0);
    remaining_ = 0;
    for (int x : content_) remaining_ += x;
  }

  std::map<std::vector<int>, std::uint64_t> run() {
    row(0);
    return std::move(out_);
  }

 private:
  void row(std::size_t r) {
    if (remaining_ == 0) {
      for (std::size_t i = r; i < m_; ++i) gamma_[i] = outer_[i];
      ++out_[gamma_];
      return;
    }
    if (r == m_) return;
    if (r > 0 && gamma_[r - 1] == 0) return;  // nothing can sit below an empty row
    std::vector<int> counts;
    counts.reserve(content_.size());
    label(r, 0, 0, counts);
  }

  void label(std::size_t r, std::size_t j, int cum, std::vector<int>& counts) {
    const std::size_t labels = std::min(r + 1, content_.size());
    if (j == labels) {
      finish_row(r, cum, counts);
      return;
    }
    long long ub = content_[j] - used_[j];
    if (j > 0) ub = std::min<long long>(ub, used_[j - 1] - used_[j]);
    if (r > 0) ub = std::min<long long>(ub, prev_cum_[j] - outer_[r] - cum);
    for (int c = 0; c <= ub; ++c) {
      counts.push_back(c);
      label(r, j + 1, cum + c, counts);
      counts.pop_back();
    }
  }

  void finish_row(std::size_t r, int cum, const std::vector<int>& counts) {
    gamma_[r] = outer_[r] + cum;
    std::vector<int> saved_prev = prev_cum_;
    prev_cum_[0] = outer_[r];
    for (std::size_t j = 0; j < content_.size(); ++j) {
      const int c = j < counts.size() ? counts[j] : 0;
      prev_cum_[j + 1] = prev_cum_[j] + c;
      used_[j] += c;
    }
    remaining_ -= cum;
    row(r + 1);
    remaining_ += cum;
    for (std::size_t j = 0; j < counts.size(); ++j) used_[j] -= counts[j];
    prev_cum_ = std::move(saved_prev);
  }

  std::vector<int> outer_;
  std::vector<int> content_;
  std::size_t m_;
  std::vector<int> used_;
  std::vector<int> gamma_;
  std::vector<int> prev_cum_;
  long long remaining_ = 0;
  std::map<std::vector<int>, std::uint64_t> out_;
};

using CacheKey = std::tuple<std::vector<int>, std::vector<int>, std::size_t>;

struct LRCache {
  std::shared_mutex mutex;
  std::map<CacheKey, LRDecomposition> table;
};

LRCache& lr_cache() {
  static LRCache cache;
  return cache;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("dimension exceeds integer capacity");
  }
  return r;
}

void add_factorization(long long value, int sign, std::map<long long, long long>& exps) {
  for (long long p = 2; p * p <= value; ++p) {
    while (value % p == 0) {
      exps[p] += sign;
      value /= p;
    }
  }
  if (value > 1) exps[value] += sign;
}

}  // namespace

LRDecomposition lr_fillings(const YoungDiagram& outer, const YoungDiagram& content,
                            std::size_t m) {
  if (outer.trimmed().size() > m || content.trimmed().size() > m) {
    throw InvalidArgument("rank mismatch: " + outer.str() + " (x) " + content.str() +
                          " does not fit GL_" + std::to_string(m));
  }
  FillingCounter counter(outer.trimmed().vec(), content.trimmed().vec(), m);
  LRDecomposition result;
  result.rank = m;
  for (auto& [gamma, mult] : counter.run()) {
    result.terms.emplace(Weight(gamma), mult);
  }
  return result;
}

LRDecomposition lr_decompose(const Weight& a, const Weight& b, std::size_t m) {
  if (a.size() > m || b.size() > m) {
    throw InvalidArgument("rank mismatch: " + a.str() + " (x) " + b.str() +
                          " has a factor longer than m = " + std::to_string(m));
  }
  const Weight pa = a.padded(m);
  const Weight pb = b.padded(m);
  const int twist = pa.last() + pb.last();
  YoungDiagram na(pa.sl_normalized());
  YoungDiagram nb(pb.sl_normalized());
  // Fewer boxes as content keeps the filling search small; the product is
  // commutative.
  if (std::make_pair(nb.total(), nb.vec()) > std::make_pair(na.total(), na.vec())) {
    std::swap(na, nb);
  }

  CacheKey key{na.vec(), nb.vec(), m};
  LRDecomposition base;
  auto& cache = lr_cache();
  bool hit = false;
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) {
      base = it->second;
      hit = true;
    }
  }
  if (!hit) {
    base = lr_fillings(na, nb, m);
    std::unique_lock lock(cache.mutex);
    cache.table.emplace(std::move(key), base);
  }
  if (twist == 0) return base;
  LRDecomposition result;
  result.rank = m;
  for (const auto& [gamma, mult] : base.terms) {
    result.terms.emplace(gamma.shifted(twist), mult);
  }
  return result;
}

bool LRBounds::admits(const Weight& gamma) const {
  if (gamma.size() != lower.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    if (gamma[i] < lower[i] || gamma[i] > upper[i]) return false;
  }
  return true;
}

LRBounds lr_bounds(const YoungDiagram& a, const YoungDiagram& b, std::size_t k) {
  const Weight pa = a.padded(k);
  const Weight pb = b.padded(k);
  LRBounds bounds;
  for (std::size_t i = 0; i < k; ++i) {
    bounds.lower.push_back(pa[i] + pb[k - 1]);
    bounds.upper.push_back(pa[0] + pb[i]);
  }
  return bounds;
}

bool max_dual_test(const YoungDiagram& a, const YoungDiagram& b, std::size_t l) {
  const Weight pa = a.padded(l);
  const Weight pb = b.padded(l);
  for (std::size_t i = 0; i < l; ++i) {
    if (pb[i] > pa[0] - pa[l - 1 - i]) return false;
  }
  return true;
}

YoungDiagram dual_diagram(const YoungDiagram& a) {
  std::vector<int> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    rows[i] = a.first() - a[a.size() - 1 - i];
  }
  return YoungDiagram(std::move(rows));
}

std::uint64_t weyl_dim(const Weight& lambda, std::size_t m) {
  if (lambda.size() > m) {
    throw InvalidArgument("weight " + lambda.str() + " is longer than rank " +
                          std::to_string(m));
  }
  const Weight w = lambda.padded(m);
  // prod_{i<j} (w_i - w_j + j - i) / (j - i), accumulated as prime exponents
  // so no intermediate value can overflow.
  std::map<long long, long long> exps;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const long long num = static_cast<long long>(w[i]) - w[j] + static_cast<long long>(j - i);
      add_factorization(num, +1, exps);
      add_factorization(static_cast<long long>(j - i), -1, exps);
    }
  }
  std::uint64_t result = 1;
  for (const auto& [p, e] : exps) {
    if (e < 0) throw Error("Weyl dimension of " + w.str() + " is not an integer");
    for (long long t = 0; t < e; ++t) result = checked_mul(result, static_cast<std::uint64_t>(p));
  }
  return result;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  __extension__ typedef unsigned __int128 wide;
  wide acc = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial coefficient exceeds integer capacity");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::vector<YoungDiagram> cauchy_decompose(int d, int k, int n) {
  if (d < 0) throw InvalidArgument("Cauchy degree must be non-negative");
  return partitions(d, static_cast<std::size_t>(std::min(k, n)));
}

}  // namespace nccr
