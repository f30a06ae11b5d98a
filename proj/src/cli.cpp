#include "nccr/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <ostream>
#include <set>

#include "nccr/error.hpp"
#include "nccr/parallel.hpp"

namespace nccr {

std::vector<GrContext> SweepConfig::validated() const {
  if (contexts.empty()) throw InvalidArgument("no contexts given");
  if (max_degree < 0) throw InvalidArgument("--max-degree must be >= 0");
  if (width_factor < 1) throw InvalidArgument("--width-factor must be >= 1");
  std::vector<GrContext> out;
  for (const auto& [n, k] : contexts) out.emplace_back(n, k);
  return out;
}

bool CertificateBundle::passed() const noexcept {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kMaxListed = 10;

void note_failure(Json& list, Json item) {
  if (list.size() < kMaxListed) list.push_back(std::move(item));
}

}  // namespace

SubCertificate certify_staircase(const GrContext& ctx, int width_factor) {
  ctx.require_coprime("certify_staircase");
  const auto k = static_cast<std::size_t>(ctx.k());
  const int w = ctx.quotient_rank();
  const int bound = ctx.k() * w + 3;
  std::uint64_t dupp_checked = 0;
  std::uint64_t width_checked = 0;
  std::uint64_t resolved = 0;
  int max_depth = 0;
  Json failures = Json::array();
  Json flagged = Json::array();
  std::uint64_t failure_count = 0;

  for (const auto& a : diagrams_in_box(k, w)) {
    if (ctx.is_upper_triangular(a.sl_normalized())) continue;
    ++dupp_checked;
    if (!verify_dupp_descent(a, ctx)) {
      ++failure_count;
      note_failure(failures, Json{{"check", "dupp_descent"}, {"alpha", a}});
    }
    const auto geometric = staircase_geometric(a, ctx).term_set();
    const auto bwb_terms = staircase_bwb_terms(a, ctx);
    if (geometric != std::set<YoungDiagram>(bwb_terms.begin(), bwb_terms.end())) {
      ++failure_count;
      note_failure(failures, Json{{"check", "term_agreement"}, {"alpha", a}});
    }
  }
  for (const auto& a : diagrams_in_box(k, width_factor * w)) {
    if (a.last() != 0) continue;  // equal to its normalization
    if (a.width() > w) {
      ++width_checked;
      if (!verify_width_descent(a, ctx)) {
        ++failure_count;
        note_failure(failures, Json{{"check", "width_descent"}, {"alpha", a}});
      }
    }
    ++resolved;
    try {
      const ResolutionTrace t = resolve(a, ctx, 4 * bound);
      max_depth = std::max(max_depth, t.projective_dimension);
      if (t.projective_dimension > bound) {
        note_failure(flagged, Json{{"alpha", a}, {"depth", t.projective_dimension}});
      }
      for (const auto& leaf : t.leaves()) {
        if (!ctx.is_upper_triangular(leaf)) {
          ++failure_count;
          note_failure(failures, Json{{"check", "resolve_leaf"}, {"alpha", a}, {"leaf", leaf}});
        }
      }
    } catch (const DepthLimitExceeded& e) {
      ++failure_count;
      note_failure(failures, Json{{"check", "resolve"}, {"alpha", a}, {"error", e.what()}});
    }
  }

  SubCertificate cert;
  cert.passed = failure_count == 0;
  cert.detail = Json{{"dupp_checked", dupp_checked},
                     {"width_checked", width_checked},
                     {"resolved", resolved},
                     {"max_depth", max_depth},
                     {"depth_bound", bound},
                     {"depth_bound_breaches", flagged},
                     {"failure_count", failure_count},
                     {"failures", failures}};
  return cert;
}

SubCertificate certify_tilting(const GrContext& ctx, unsigned jobs) {
  const std::vector<YoungDiagram> up = enumerate_up(ctx);
  const int top = ctx.k() * ctx.quotient_rank();
  const std::size_t count = up.size() * up.size();
  std::vector<std::vector<int>> failing(count);
  parallel_for(count, jobs, [&](std::size_t idx) {
    for (int i = 0; i <= top; ++i) {
      if (!tilting_vanishing(up[idx / up.size()], up[idx % up.size()], i, ctx)) {
        failing[idx].push_back(i);
      }
    }
  });
  Json failures = Json::array();
  std::uint64_t failure_count = 0;
  for (std::size_t idx = 0; idx < count; ++idx) {
    for (int i : failing[idx]) {
      ++failure_count;
      note_failure(failures, Json{{"alpha", up[idx / up.size()]},
                                  {"beta", up[idx % up.size()]},
                                  {"i", i}});
    }
  }
  SubCertificate cert;
  cert.passed = failure_count == 0;
  cert.detail = Json{{"bundles_checked", count * static_cast<std::size_t>(top + 1)},
                     {"max_twist", top},
                     {"failure_count", failure_count},
                     {"failures", failures}};
  return cert;
}

SubCertificate certify_quiver(const GrContext& ctx, int max_degree, unsigned jobs) {
  const std::vector<YoungDiagram> up = enumerate_up(ctx);
  const std::size_t n = static_cast<std::size_t>(ctx.n());
  Json failures = Json::array();
  std::uint64_t failure_count = 0;
  auto fail = [&](Json item) {
    ++failure_count;
    note_failure(failures, std::move(item));
  };

  Json sides = Json::object();
  const GrContext dual_ctx(ctx.n(), ctx.quotient_rank());
  for (Side side : {Side::sub, Side::quot}) {
    const Quiver q = build_quiver(ctx, side, max_degree, jobs);
    if (q.vertices.size() != up.size()) {
      fail(Json{{"check", "vertex_count"}, {"side", side_name(side)}});
    }
    if (side == Side::quot) {
      for (const auto& v : q.vertices) {
        if (!dual_ctx.is_upper_triangular(v)) {
          fail(Json{{"check", "quot_vertex_in_up"}, {"vertex", v}});
        }
      }
    }
    std::size_t loops = 0;
    for (const auto& a : q.arrows) {
      if (a.dimension != a.multiplicity * weyl_dim(a.lambda, n)) {
        fail(Json{{"check", "dimension"}, {"arrow", a}});
      }
      if (a.degree != 0) continue;
      if (a.source != a.target || a.dimension != 1) {
        fail(Json{{"check", "degree_zero"}, {"arrow", a}});
      } else {
        ++loops;
      }
    }
    if (loops != q.vertices.size()) {
      fail(Json{{"check", "identity_loops"}, {"side", side_name(side)}});
    }
    sides[std::string(side_name(side))] =
        Json{{"vertices", q.vertices.size()}, {"arrows", q.arrows.size()}};
  }

  std::uint64_t weights_checked = 0;
  for (const auto& a : up) {
    for (const auto& b : up) {
      for (const auto& gamma : hom_weight_stream(a, b, ctx)) {
        ++weights_checked;
        if (!is_cm_safe(gamma, ctx)) {
          fail(Json{{"check", "cm_cross_check"}, {"alpha", a}, {"beta", b}, {"gamma", gamma}});
        }
      }
    }
  }

  SubCertificate cert;
  cert.passed = failure_count == 0;
  cert.detail = Json{{"max_degree", max_degree},
                     {"sides", sides},
                     {"cm_weights_checked", weights_checked},
                     {"failure_count", failure_count},
                     {"failures", failures}};
  return cert;
}

CertificateBundle certify_all(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GrContext> contexts = config.validated();
  CertificateBundle bundle;
  for (const auto& ctx : contexts) {
    ContextCertificate c{ctx, {}, {}, {}, {}};
    const CMReport report = certify_cm(ctx, config.jobs);
    c.cm.passed = report.certified();
    c.cm.detail = report;
    c.staircase = certify_staircase(ctx, config.width_factor);
    c.tilting = certify_tilting(ctx, config.jobs);
    c.quiver = certify_quiver(ctx, config.max_degree, config.jobs);
    bundle.results.push_back(std::move(c));
  }
  bundle.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return bundle;
}

namespace {

Json sub_json(const SubCertificate& s) { return Json{{"passed", s.passed}, {"detail", s.detail}}; }

}  // namespace

void to_json(Json& j, const CertificateBundle& b) {
  j = Json::object();
  j["passed"] = b.passed();
  Json results = Json::array();
  for (const auto& r : b.results) {
    results.push_back(Json{{"context", r.context},
                           {"passed", r.passed()},
                           {"cm", sub_json(r.cm)},
                           {"staircase", sub_json(r.staircase)},
                           {"tilting", sub_json(r.tilting)},
                           {"quiver", sub_json(r.quiver)}});
  }
  j["results"] = std::move(results);
}

namespace {

struct Options {
  int n = 0;
  int k = 0;
  std::string alpha;
  std::string beta;
  std::string gamma;
  std::string a;
  std::string b;
  std::size_t rank = 0;
  int twist = 0;
  int i = -1;
  int max_degree = -1;
  int depth_limit = -1;
  int width_factor = 2;
  std::string side = "sub";
  std::string method = "geometric";
  std::string strategy = "constructive";
  std::string contexts;
  std::string dot_path;
  std::string json_path;
  std::string output;
  bool allow_noncoprime = false;
  unsigned jobs = 1;
  bool omit_meta = false;
};

struct Result {
  Json payload;
  int code = kExitOk;
};

GrContext make_context(const Options& o, Coprimality policy = Coprimality::require) {
  return GrContext(o.n, o.k, policy);
}

YoungDiagram required_diagram(const std::string& text, const char* field) {
  if (text.empty()) throw InvalidArgument(std::string(field) + " is required");
  return parse_diagram(text, field);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw InvalidArgument("failed writing '" + path + "'");
}

Result cmd_enumerate_up(const Options& o) {
  const GrContext ctx = make_context(o, Coprimality::allow_noncoprime);
  const auto up = enumerate_up(ctx);
  Json j = envelope("enumerate-up");
  j["context"] = ctx;
  j["count"] = up.size();
  j["diagrams"] = up;
  return {j};
}

Result cmd_lr(const Options& o) {
  if (o.a.empty() || o.b.empty()) throw InvalidArgument("--a and --b are required");
  const Weight a = parse_weight(o.a, "--a");
  const Weight b = parse_weight(o.b, "--b");
  const std::size_t m = o.rank ? o.rank : std::max(a.size(), b.size());
  Json j = envelope("lr");
  j["a"] = a;
  j["b"] = b;
  j["decomposition"] = lr_decompose(a, b, m);
  return {j};
}

Result cmd_bwb(const Options& o) {
  const GrContext ctx = make_context(o, Coprimality::allow_noncoprime);
  if (o.beta.empty()) throw InvalidArgument("--beta is required");
  const Weight beta = parse_weight(o.beta, "--beta");
  const Weight gamma = o.gamma.empty() ? Weight::zero(static_cast<std::size_t>(ctx.quotient_rank()))
                                       : parse_weight(o.gamma, "--gamma");
  const BundleDescriptor desc{beta, gamma, o.twist};
  const BWBOutcome r = bwb(desc, ctx);
  Json j = envelope("bwb");
  j["context"] = ctx;
  j["beta"] = beta;
  j["gamma"] = gamma;
  j["twist"] = o.twist;
  j["cohomology"] = r;
  if (!r.vanishes()) j["dimension"] = weyl_dim(*r.dominant, static_cast<std::size_t>(ctx.n()));
  return {j};
}

Result cmd_dupp(const Options& o) {
  const GrContext ctx = make_context(o);
  const YoungDiagram alpha = required_diagram(o.alpha, "--alpha");
  const int d = d_upp(alpha, ctx);
  const BinarySeq s = to_binary(alpha, ctx);
  const BinarySeq r = rotate(s, d);
  Json j = envelope("dupp");
  j["context"] = ctx;
  j["alpha"] = alpha;
  j["value"] = d;
  j["value_geometric"] = d_upp_geometric(alpha, ctx);
  j["binary"] = s.str();
  j["rotated"] = r.str();
  j["upper_triangular"] = from_binary(r);
  return {j};
}

Result cmd_staircase(const Options& o) {
  const GrContext ctx = make_context(o, Coprimality::allow_noncoprime);
  const YoungDiagram alpha = required_diagram(o.alpha, "--alpha");
  Json j = envelope("staircase");
  j["context"] = ctx;
  j["method"] = o.method;
  if (o.method == "geometric") {
    j["complex"] = staircase_geometric(alpha, ctx);
  } else if (o.method == "bwb") {
    Json steps = Json::array();
    const auto terms = staircase_bwb(alpha, ctx);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      steps.push_back(Json{{"i", i + 1}, {"term", terms[i] ? Json(*terms[i]) : Json(nullptr)}});
    }
    j["source"] = alpha;
    j["steps"] = std::move(steps);
  } else {
    throw InvalidArgument("--method must be 'geometric' or 'bwb', got '" + o.method + "'");
  }
  return {j};
}

Result cmd_resolve(const Options& o) {
  const GrContext ctx = make_context(o);
  const YoungDiagram alpha = required_diagram(o.alpha, "--alpha");
  const int limit = o.depth_limit >= 0 ? o.depth_limit : ctx.k() * ctx.quotient_rank() + 3;
  Json j = envelope("resolve");
  j["context"] = ctx;
  j["depth_limit"] = limit;
  try {
    j["trace"] = resolve(alpha, ctx, limit);
  } catch (const DepthLimitExceeded& e) {
    j["error"] = e.what();
    return {j, kExitFalsified};
  }
  return {j};
}

Result cmd_cm_certify(const Options& o) {
  const GrContext ctx =
      make_context(o, o.allow_noncoprime ? Coprimality::allow_noncoprime : Coprimality::require);
  const CMReport r = o.allow_noncoprime ? cm_report(ctx, o.jobs) : certify_cm(ctx, o.jobs);
  Json j = envelope("cm-certify");
  j["report"] = r;
  return {j, r.certified() ? kExitOk : kExitFalsified};
}

Result cmd_maximality(const Options& o) {
  const GrContext ctx = make_context(o);
  const YoungDiagram beta = required_diagram(o.beta, "--beta");
  Json j = envelope("maximality");
  j["context"] = ctx;
  j["beta"] = beta;
  j["strategy"] = o.strategy;
  if (o.strategy == "constructive") {
    j["witness"] = maximality_witness(beta, ctx, WitnessStrategy::constructive);
  } else if (o.strategy == "constructive-literal") {
    if (ctx.is_upper_triangular(beta.sl_normalized())) {
      maximality_witness(beta, ctx, WitnessStrategy::brute_force);
    }
    try {
      j["witness"] = maximality_witness(beta, ctx, WitnessStrategy::constructive_literal);
    } catch (const DomainError& e) {
      j["witness"] = nullptr;
      j["failure"] = e.what();
      return {j, kExitFalsified};
    }
  } else if (o.strategy == "brute-force") {
    j["witness"] = maximality_witness(beta, ctx, WitnessStrategy::brute_force);
  } else if (o.strategy == "all") {
    j["witnesses"] = all_maximality_witnesses(beta, ctx);
  } else {
    throw InvalidArgument(
        "--strategy must be constructive, constructive-literal, brute-force or all, got '" +
        o.strategy + "'");
  }
  return {j};
}

Result cmd_quiver(const Options& o) {
  const GrContext ctx = make_context(o);
  if (o.max_degree < 0) throw InvalidArgument("--max-degree is required and must be >= 0");
  const Quiver q = build_quiver(ctx, parse_side(o.side), o.max_degree, o.jobs);
  Json j = envelope("quiver");
  j["quiver"] = q;
  if (!o.dot_path.empty()) write_file(o.dot_path, emit_dot(q));
  if (!o.json_path.empty()) write_file(o.json_path, j.dump(2) + "\n");
  return {j};
}

Result cmd_compare_sides(const Options& o) {
  const GrContext ctx = make_context(o);
  if (o.max_degree < 0) throw InvalidArgument("--max-degree is required and must be >= 0");
  Json j = envelope("compare-sides");
  j["comparison"] = compare_sides(ctx, o.max_degree, o.jobs);
  return {j};
}

Result cmd_tilting_check(const Options& o) {
  const GrContext ctx = make_context(o, Coprimality::allow_noncoprime);
  Json j = envelope("tilting-check");
  j["context"] = ctx;
  const bool single = !o.alpha.empty() || !o.beta.empty() || o.i >= 0;
  if (single) {
    const YoungDiagram alpha = required_diagram(o.alpha, "--alpha");
    const YoungDiagram beta = required_diagram(o.beta, "--beta");
    if (o.i < 0) throw InvalidArgument("--i is required with --alpha/--beta and must be >= 0");
    const bool ok = tilting_vanishing(alpha, beta, o.i, ctx);
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["i"] = o.i;
    j["terms"] = tilting_terms(alpha, beta, o.i, ctx);
    j["vanishing"] = ok;
    return {j, ok ? kExitOk : kExitFalsified};
  }
  const SubCertificate cert = certify_tilting(ctx, o.jobs);
  j["passed"] = cert.passed;
  j["detail"] = cert.detail;
  return {j, cert.passed ? kExitOk : kExitFalsified};
}

std::vector<std::pair<int, int>> parse_contexts(const std::string& text) {
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw InvalidArgument("--contexts: expected JSON like [[5,2],[7,3]], got '" + text + "'");
  }
  std::vector<std::pair<int, int>> out;
  if (!parsed.is_array()) throw InvalidArgument("--contexts must be a JSON array of [n,k] pairs");
  for (const auto& p : parsed) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw InvalidArgument("--contexts entry " + p.dump() + " is not an [n,k] pair");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

Result cmd_certify_all(const Options& o, Json& meta) {
  SweepConfig config;
  if (!o.contexts.empty()) {
    config.contexts = parse_contexts(o.contexts);
  } else {
    config.contexts.emplace_back(o.n, o.k);
  }
  config.max_degree = o.max_degree >= 0 ? o.max_degree : 2;
  config.width_factor = o.width_factor;
  config.jobs = o.jobs;
  config.output = o.output;
  const CertificateBundle bundle = certify_all(config);
  Json j = envelope("certify-all");
  j["bundle"] = bundle;
  meta["certify_seconds"] = bundle.seconds;
  return {j, bundle.passed() ? kExitOk : kExitFalsified};
}

void add_context(CLI::App* sub, Options& o, bool required = true) {
  auto* n = sub->add_option("--n", o.n, "dim V");
  auto* k = sub->add_option("--k", o.k, "dim S");
  if (required) {
    n->required();
    k->required();
  }
}

}  // namespace

int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"nccr-kit: Grassmannian NCCR combinatorics"};
  app.name("nccr-kit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--omit-meta", o.omit_meta, "leave out the timing/version \"meta\" field");
  app.add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto* s_up = app.add_subcommand("enumerate-up", "list UP_{n,k}");
  add_context(s_up, o);

  auto* s_lr = app.add_subcommand("lr", "decompose S^a (x) S^b");
  s_lr->add_option("--a", o.a, "weight, JSON array")->required();
  s_lr->add_option("--b", o.b, "weight, JSON array")->required();
  s_lr->add_option("--rank,--m", o.rank, "GL rank (default: longest input)");

  auto* s_bwb = app.add_subcommand("bwb", "cohomology of S^beta S* (x) S^gamma Q* (x) O(twist)");
  add_context(s_bwb, o);
  s_bwb->add_option("--beta", o.beta, "k entries")->required();
  s_bwb->add_option("--gamma", o.gamma, "n-k entries (default zero)");
  s_bwb->add_option("--twist", o.twist, "O(twist)");

  auto* s_dupp = app.add_subcommand("dupp", "rotations to the upper triangular representative");
  add_context(s_dupp, o);
  s_dupp->add_option("--alpha", o.alpha, "diagram")->required();

  auto* s_stair = app.add_subcommand("staircase", "staircase complex of P_alpha");
  add_context(s_stair, o);
  s_stair->add_option("--alpha", o.alpha, "diagram")->required();
  s_stair->add_option("--method", o.method, "geometric | bwb");

  auto* s_res = app.add_subcommand("resolve", "iterated staircase resolution");
  add_context(s_res, o);
  s_res->add_option("--alpha", o.alpha, "diagram")->required();
  s_res->add_option("--depth-limit", o.depth_limit, "default k(n-k)+3");

  auto* s_cm = app.add_subcommand("cm-certify", "Cohen-Macaulay sweep over UP x UP");
  add_context(s_cm, o);
  s_cm->add_flag("--allow-noncoprime", o.allow_noncoprime, "report only, never certified");

  auto* s_max = app.add_subcommand("maximality", "non-CM witness for beta outside UP");
  add_context(s_max, o);
  s_max->add_option("--beta", o.beta, "diagram in the k x (n-k) box")->required();
  s_max->add_option("--strategy", o.strategy,
                    "constructive | constructive-literal | brute-force | all");

  auto* s_q = app.add_subcommand("quiver", "degree-truncated quiver of the NCCR");
  add_context(s_q, o);
  s_q->add_option("--side", o.side, "sub | quot");
  s_q->add_option("--max-degree", o.max_degree, "truncation degree")->required();
  s_q->add_option("--dot", o.dot_path, "write DOT here");
  s_q->add_option("--json", o.json_path, "write JSON here");

  auto* s_cmp = app.add_subcommand("compare-sides", "sub vs quot quiver components");
  add_context(s_cmp, o);
  s_cmp->add_option("--max-degree", o.max_degree, "truncation degree")->required();

  auto* s_tilt = app.add_subcommand("tilting-check", "higher cohomology vanishing");
  add_context(s_tilt, o);
  s_tilt->add_option("--alpha", o.alpha, "diagram in UP");
  s_tilt->add_option("--beta", o.beta, "diagram in UP");
  s_tilt->add_option("--i", o.i, "twist >= 0");

  auto* s_all = app.add_subcommand("certify-all", "every certificate for the given contexts");
  add_context(s_all, o, false);
  s_all->add_option("--contexts", o.contexts, "JSON list of [n,k] pairs");
  s_all->add_option("--max-degree", o.max_degree, "quiver truncation (default 2)");
  s_all->add_option("--width-factor", o.width_factor, "alpha_1 <= factor * (n-k), default 2");
  s_all->add_option("--output", o.output, "also write the JSON here");

  std::vector<const char*> argv{"nccr-kit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json meta = Json::object();
  Result result;
  try {
    if (s_up->parsed()) {
      result = cmd_enumerate_up(o);
    } else if (s_lr->parsed()) {
      result = cmd_lr(o);
    } else if (s_bwb->parsed()) {
      result = cmd_bwb(o);
    } else if (s_dupp->parsed()) {
      result = cmd_dupp(o);
    } else if (s_stair->parsed()) {
      result = cmd_staircase(o);
    } else if (s_res->parsed()) {
      result = cmd_resolve(o);
    } else if (s_cm->parsed()) {
      result = cmd_cm_certify(o);
    } else if (s_max->parsed()) {
      result = cmd_maximality(o);
    } else if (s_q->parsed()) {
      result = cmd_quiver(o);
    } else if (s_cmp->parsed()) {
      result = cmd_compare_sides(o);
    } else if (s_tilt->parsed()) {
      result = cmd_tilting_check(o);
    } else if (s_all->parsed()) {
      if (o.contexts.empty() && (o.n == 0 || o.k == 0)) {
        throw InvalidArgument("certify-all needs --n and --k, or --contexts");
      }
      result = cmd_certify_all(o, meta);
    }
  } catch (const DepthLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!o.omit_meta) {
    meta["version"] = kVersion;
    meta["elapsed_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.payload["meta"] = std::move(meta);
  }
  const std::string text = result.payload.dump(2) + "\n";
  out << text;
  if (s_all->parsed() && !o.output.empty()) {
    try {
      write_file(o.output, text);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return result.code;
}

}  // namespace nccr
