#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nccr/algebra.hpp"
#include "nccr/bwb.hpp"
#include "nccr/cm.hpp"
#include "nccr/schur.hpp"
#include "nccr/staircase.hpp"
#include "nccr/weight.hpp"
#include "nccr/young.hpp"

namespace nccr {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "nccr-kit/1";

/// {"schema": "nccr-kit/1", "command": command}
Json envelope(std::string_view command);

void to_json(Json& j, const Weight& w);
void to_json(Json& j, const YoungDiagram& d);
void to_json(Json& j, const GrContext& ctx);
void to_json(Json& j, const LRDecomposition& lr);
void to_json(Json& j, const BWBOutcome& r);
void to_json(Json& j, const TiltingTerm& t);
void to_json(Json& j, const CMViolation& v);
void to_json(Json& j, const CMReport& r);
void to_json(Json& j, const MaximalityWitness& w);
void to_json(Json& j, const StaircaseComplex& c);
void to_json(Json& j, const ResolutionTrace& t);
void to_json(Json& j, const HomComponent& c);
void to_json(Json& j, const GradedHom& h);
void to_json(Json& j, const Arrow& a);
void to_json(Json& j, const Quiver& q);
void to_json(Json& j, const SideComparisonEntry& e);
void to_json(Json& j, const SideComparison& c);

std::string_view phase_name(ResolutionPhase phase);

/// Reads the object written by to_json(Quiver) (with or without envelope).
Quiver quiver_from_json(const Json& j);

/// DOT digraph: one node per vertex (named by its diagram), one edge per
/// arrow labelled "deg d: lambda (dim)".
std::string emit_dot(const Quiver& q);

}  // namespace nccr
