#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "eigenid/oracle.hpp"
#include "eigenid/projection.hpp"

namespace eigenid {

/// The three verification experiments. Each one rebuilds a squared-
/// magnitude table from spectra alone and compares it against the direct
/// reference; "minors" uses row/column deletion, "identity-basis" the
/// standard-basis projectors, "arbitrary-basis" a supplied orthonormal C.
enum class Experiment { Minors, IdentityBasis, ArbitraryBasis };

const char* experiment_name(Experiment e);

/// Parses "minors", "identity-basis", "arbitrary-basis"; nullopt otherwise.
std::optional<Experiment> parse_experiment(const std::string& name);

struct ExperimentOptions {
  double eps = tol::default_eps;
  DeflationMode mode = DeflationMode::PaperDropSmallest;  // notebook-faithful
  std::uint64_t basis_seed = 1;                   // C for ArbitraryBasis
  std::optional<std::uint64_t> seed;              // recorded in the report
};

/// Runs one experiment on a. A degenerate spectrum (fully or partially
/// flagged result) marks the report failed with reason "degenerate"
/// instead of throwing.
ExperimentReport run_experiment(const HermitianMatrix& a, Experiment which,
                                const ExperimentOptions& opts);

/// Runs the given experiments in order and returns one report each.
std::vector<ExperimentReport> run_experiments(const HermitianMatrix& a,
                                              const std::vector<Experiment>& which,
                                              const ExperimentOptions& opts);

inline bool all_passed(const std::vector<ExperimentReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

}  // namespace eigenid
