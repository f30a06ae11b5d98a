#include "nccr/serialize.hpp"

#include <sstream>

#include "nccr/error.hpp"

namespace nccr {

Json envelope(std::string_view command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

void to_json(Json& j, const Weight& w) { j = w.vec(); }
void to_json(Json& j, const YoungDiagram& d) { j = d.vec(); }

void to_json(Json& j, const GrContext& ctx) {
  j = Json{{"n", ctx.n()}, {"k", ctx.k()}, {"coprime", ctx.coprime()}};
}

void to_json(Json& j, const LRDecomposition& lr) {
  j = Json::object();
  j["rank"] = lr.rank;
  Json terms = Json::array();
  for (const auto& [w, m] : lr.terms) terms.push_back(Json{{"weight", w}, {"multiplicity", m}});
  j["terms"] = std::move(terms);
  j["total_multiplicity"] = lr.total_multiplicity();
}

void to_json(Json& j, const BWBOutcome& r) {
  j = Json::object();
  j["vanishes"] = r.vanishes();
  if (!r.vanishes()) {
    j["degree"] = r.degree;
    j["dominant"] = *r.dominant;
  }
}

void to_json(Json& j, const TiltingTerm& t) {
  j = Json{{"gamma", t.gamma}, {"multiplicity", t.multiplicity}, {"cohomology", t.outcome}};
}

void to_json(Json& j, const CMViolation& v) {
  j = Json{{"alpha", v.alpha}, {"beta", v.beta}, {"gamma", v.gamma}};
}

void to_json(Json& j, const CMReport& r) {
  j = Json{{"context", r.context},
           {"certified", r.certified()},
           {"pairs_checked", r.pairs_checked},
           {"terms_checked", r.terms_checked},
           {"worst_gap", r.worst_gap},
           {"bound", r.context.quotient_rank()},
           {"violations", r.violations}};
}

void to_json(Json& j, const MaximalityWitness& w) {
  j = Json{{"alpha", w.alpha}, {"gamma", w.gamma}, {"gap_row", w.gap_row}, {"gap", w.gap}};
}

void to_json(Json& j, const StaircaseComplex& c) {
  j = Json::object();
  j["source"] = c.source;
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    terms.push_back(Json{{"position", i + 1}, {"shape", c.shapes[i]}, {"diagrams", c.terms[i]}});
  }
  j["terms"] = std::move(terms);
}

std::string_view phase_name(ResolutionPhase phase) {
  switch (phase) {
    case ResolutionPhase::projective:
      return "projective";
    case ResolutionPhase::width_descent:
      return "width_descent";
    case ResolutionPhase::dupp_descent:
      return "dupp_descent";
  }
  return "unknown";
}

void to_json(Json& j, const ResolutionTrace& t) {
  j = Json::object();
  j["root"] = t.root;
  j["projective_dimension"] = t.projective_dimension;
  Json nodes = Json::array();
  for (const auto& [d, node] : t.nodes) {
    nodes.push_back(Json{{"diagram", d},
                         {"phase", phase_name(node.phase)},
                         {"depth", node.depth},
                         {"children", node.children}});
  }
  j["nodes"] = std::move(nodes);
  j["leaves"] = t.leaves();
}

void to_json(Json& j, const HomComponent& c) {
  j = Json{{"lambda", c.lambda}, {"multiplicity", c.multiplicity}, {"dimension", c.dimension}};
}

void to_json(Json& j, const GradedHom& h) {
  j = Json::object();
  j["side"] = side_name(h.side);
  j["source"] = h.source;
  j["target"] = h.target;
  j["max_degree"] = h.max_degree;
  Json degrees = Json::array();
  for (const auto& [d, comps] : h.by_degree) {
    degrees.push_back(Json{{"degree", d}, {"dimension", h.dimension(d)}, {"components", comps}});
  }
  j["by_degree"] = std::move(degrees);
}

void to_json(Json& j, const Arrow& a) {
  j = Json{{"source", a.source},         {"target", a.target},
           {"degree", a.degree},         {"lambda", a.lambda},
           {"multiplicity", a.multiplicity}, {"dimension", a.dimension}};
}

void to_json(Json& j, const Quiver& q) {
  j = Json{{"context", q.context},   {"side", side_name(q.side)},
           {"max_degree", q.max_degree}, {"vertices", q.vertices},
           {"arrows", q.arrows}};
}

void to_json(Json& j, const SideComparisonEntry& e) {
  j = Json{{"source", e.source},
           {"target", e.target},
           {"level", e.level},
           {"sub_degree", e.sub_degree},
           {"quot_degree", e.quot_degree},
           {"sub_dimension", e.sub_dimension},
           {"quot_dimension", e.quot_dimension},
           {"differs", e.differs()},
           {"matched", e.matched},
           {"sub_only", e.sub_only},
           {"quot_only", e.quot_only}};
}

void to_json(Json& j, const SideComparison& c) {
  j = Json::object();
  j["context"] = c.context;
  j["max_degree"] = c.max_degree;
  j["entries"] = c.entries;
  Json totals = Json::array();
  for (const auto& [d, dims] : c.totals) {
    totals.push_back(Json{{"degree", d}, {"sub", dims.first}, {"quot", dims.second}});
  }
  j["totals"] = std::move(totals);
}

namespace {

std::vector<int> int_array(const Json& j, std::string_view field) {
  if (!j.is_array()) throw InvalidArgument(std::string(field) + " must be an integer array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) {
      throw InvalidArgument(std::string(field) + " must be an integer array");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("quiver JSON lacks field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Quiver quiver_from_json(const Json& in) {
  const Json& j = in.contains("quiver") ? in.at("quiver") : in;
  const Json& ctx = member(j, "context");
  GrContext context(member(ctx, "n").get<int>(), member(ctx, "k").get<int>(),
                    Coprimality::allow_noncoprime);
  Quiver q{context, parse_side(member(j, "side").get<std::string>()),
           member(j, "max_degree").get<int>(), {}, {}};
  for (const auto& v : member(j, "vertices")) q.vertices.emplace_back(int_array(v, "vertices"));
  for (const auto& a : member(j, "arrows")) {
    q.arrows.push_back({YoungDiagram(int_array(member(a, "source"), "source")),
                        YoungDiagram(int_array(member(a, "target"), "target")),
                        member(a, "degree").get<int>(),
                        Weight(int_array(member(a, "lambda"), "lambda")),
                        member(a, "multiplicity").get<std::uint64_t>(),
                        member(a, "dimension").get<std::uint64_t>()});
  }
  return q;
}

std::string emit_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  out << "  label=\"Gr(" << q.context.k() << "," << q.context.n() << ") " << side_name(q.side)
      << " side, degree <= " << q.max_degree << "\";\n";
  for (const auto& v : q.vertices) out << "  \"" << v.str() << "\";\n";
  for (const auto& a : q.arrows) {
    out << "  \"" << a.source.str() << "\" -> \"" << a.target.str() << "\" [label=\"deg "
        << a.degree << ": " << a.lambda.str() << " (" << a.dimension << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nccr
