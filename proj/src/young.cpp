#include "nccr/young.hpp"

#include <algorithm>
#include <numeric>

#include "nccr/error.hpp"

namespace nccr {

GrContext::GrContext(int n, int k, Coprimality policy) : n_(n), k_(k) {
  if (!(1 < k && k < n - 1)) {
    throw InvalidArgument("Gr(" + std::to_string(k) + "," + std::to_string(n) +
                          "): need 1 < k < n - 1");
  }
  coprime_ = std::gcd(n, k) == 1;
  if (!coprime_ && policy == Coprimality::require) {
    throw NonCoprimeContext("Gr(" + std::to_string(k) + "," + std::to_string(n) +
                            "): n and k are not coprime");
  }
}

void GrContext::require_coprime(std::string_view operation) const {
  if (!coprime_) {
    throw NonCoprimeContext(std::string(operation) + " on " + str() +
                            ": orbit may lack unique upper-triangular element "
                            "(n and k are not coprime)");
  }
}

bool GrContext::fits_box(const Weight& w) const noexcept {
  return w.size() == static_cast<std::size_t>(k_) && w.last() >= 0 &&
         w.first() <= quotient_rank();
}

bool GrContext::is_upper_triangular(const Weight& w) const noexcept {
  if (w.size() != static_cast<std::size_t>(k_) || w.last() < 0) return false;
  const long long width = quotient_rank();
  for (int i = 1; i <= k_; ++i) {
    if (static_cast<long long>(k_) * w[i - 1] > (k_ - i) * width) return false;
  }
  return true;
}

std::string GrContext::str() const {
  return "(n=" + std::to_string(n_) + ",k=" + std::to_string(k_) + ")";
}

BinarySeq::BinarySeq(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw InvalidArgument("binary sequence may only contain '0' and '1': \"" + bits_ + "\"");
    }
  }
}

int BinarySeq::ones() const noexcept {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

namespace {

void fill_up(const GrContext& ctx, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
  const int k = ctx.k();
  const int i = static_cast<int>(cur.size()) + 1;
  if (i > k) {
    out.emplace_back(cur);
    return;
  }
  // k * a_i <= (k - i)(n - k), exact floor division (both sides non-negative).
  const int bound = (k - i) * ctx.quotient_rank() / k;
  const int cap = cur.empty() ? bound : std::min(bound, cur.back());
  for (int a = 0; a <= cap; ++a) {
    cur.push_back(a);
    fill_up(ctx, cur, out);
    cur.pop_back();
  }
}

void check_seq(const BinarySeq& s, const GrContext& ctx) {
  if (s.size() != static_cast<std::size_t>(ctx.n()) || s.ones() != ctx.k()) {
    throw InvalidArgument("binary sequence " + s.str() + " does not have length " +
                          std::to_string(ctx.n()) + " with " + std::to_string(ctx.k()) +
                          " ones");
  }
}

}  // namespace

std::vector<YoungDiagram> enumerate_up(const GrContext& ctx) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  fill_up(ctx, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

BinarySeq to_binary(const YoungDiagram& alpha, const GrContext& ctx) {
  if (alpha.size() != static_cast<std::size_t>(ctx.k())) {
    throw InvalidArgument("diagram " + alpha.str() + " must have exactly k = " +
                          std::to_string(ctx.k()) + " rows");
  }
  if (alpha.width() > ctx.quotient_rank()) {
    throw InvalidArgument("diagram exceeds box: " + alpha.str() + " is wider than n - k = " +
                          std::to_string(ctx.quotient_rank()));
  }
  std::string bits;
  bits.reserve(static_cast<std::size_t>(ctx.n()));
  int x = 0;
  for (std::size_t r = alpha.size(); r-- > 0;) {
    bits.append(static_cast<std::size_t>(alpha[r] - x), '0');
    x = alpha[r];
    bits.push_back('1');
  }
  bits.append(static_cast<std::size_t>(ctx.quotient_rank() - x), '0');
  return BinarySeq(std::move(bits));
}

YoungDiagram from_binary(const BinarySeq& s) {
  std::vector<int> bottom_up;
  int zeros = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '0') {
      ++zeros;
    } else {
      bottom_up.push_back(zeros);
    }
  }
  return YoungDiagram(std::vector<int>(bottom_up.rbegin(), bottom_up.rend()));
}

BinarySeq rotate(const BinarySeq& s, long long i) {
  const auto n = static_cast<long long>(s.size());
  if (n == 0) return s;
  const long long shift = ((i % n) + n) % n;
  std::string out = s.str().substr(static_cast<std::size_t>(shift)) +
                    s.str().substr(0, static_cast<std::size_t>(shift));
  return BinarySeq(std::move(out));
}

int d_upp(const YoungDiagram& alpha, const GrContext& ctx) {
  ctx.require_coprime("d_upp");
  const BinarySeq s = to_binary(alpha, ctx);
  for (int i = 0; i < ctx.n(); ++i) {
    if (ctx.is_upper_triangular(from_binary(rotate(s, i)))) return i;
  }
  // Unreachable for coprime (n, k): every orbit has an upper triangular member.
  throw DomainError("no rotation of " + s.str() + " is upper triangular");
}

int d_upp_geometric(const YoungDiagram& alpha, const GrContext& ctx) {
  ctx.require_coprime("d_upp_geometric");
  const BinarySeq s = to_binary(alpha, ctx);
  check_seq(s, ctx);
  // Height of each vertex above the line through the start with direction
  // (n-k, k), scaled to integers: k*x - (n-k)*y. The lowest line touches the
  // vertex where this is largest; coprimality makes it unique.
  const long long k = ctx.k();
  const long long width = ctx.quotient_rank();
  long long f = 0;
  long long best = 0;
  int best_at = 0;
  for (int j = 1; j < ctx.n(); ++j) {
    f += (s[static_cast<std::size_t>(j - 1)] == '0') ? k : -width;
    if (f > best) {
      best = f;
      best_at = j;
    }
  }
  return best_at;
}

}  // namespace nccr
