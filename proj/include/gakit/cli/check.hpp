#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gakit/cli/evaluate.hpp"

namespace gakit::cli {

struct IdentityResult {
  std::string name;
  int trials = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Set when a trial threw instead of producing a residual.
  std::string error;
};

struct CheckReport {
  int n = 0;
  Signature signature;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<IdentityResult> results;

  bool passed() const;
  /// One line per identity in a fixed order, then a summary line.
  std::string text() const;
};

/// Names of the identities run by check_identities, in report order.
std::vector<std::string> identity_names();

/// Runs every identity `trials` times on random inputs drawn from a per-identity stream
/// derived from seed; identities involving a metric use cfg.metric and its gauge extensor.
/// Identities run concurrently and are reported in a fixed order, so the report depends only
/// on (cfg, seed, trials). Throws ArgumentError when trials < 1.
CheckReport check_identities(const SessionConfig& cfg, std::uint64_t seed, int trials);

} // namespace gakit::cli
