#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nccr/serialize.hpp"

namespace nccr {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes of run_subcommand.
enum ExitCode : int { kExitOk = 0, kExitFalsified = 1, kExitUsage = 2 };

struct SweepConfig {
  std::vector<std::pair<int, int>> contexts;  // (n, k)
  int max_degree = 2;      // quiver truncation
  int width_factor = 2;    // resolve / width descent cover alpha_1 <= width_factor * (n-k)
  unsigned jobs = 1;
  std::string output;      // optional JSON file

  /// Builds every GrContext up front (coprime required); throws on the first
  /// invalid pair.
  std::vector<GrContext> validated() const;
};

struct SubCertificate {
  bool passed = false;
  Json detail;
};

struct ContextCertificate {
  GrContext context;
  SubCertificate cm;
  SubCertificate staircase;
  SubCertificate tilting;
  SubCertificate quiver;

  bool passed() const noexcept {
    return cm.passed && staircase.passed && tilting.passed && quiver.passed;
  }
};

struct CertificateBundle {
  std::string version = kVersion;
  std::vector<ContextCertificate> results;
  double seconds = 0;

  bool passed() const noexcept;
};

SubCertificate certify_staircase(const GrContext& ctx, int width_factor);
SubCertificate certify_tilting(const GrContext& ctx, unsigned jobs);
SubCertificate certify_quiver(const GrContext& ctx, int max_degree, unsigned jobs);

CertificateBundle certify_all(const SweepConfig& config);

/// Timing and version live outside the payload.
void to_json(Json& j, const CertificateBundle& b);

/// args excludes the program name. Writes JSON (or DOT) to out, diagnostics
/// to err. Returns 0 on success/certified, 1 on a falsified certificate,
/// 2 on usage errors.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nccr
