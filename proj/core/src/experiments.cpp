#include "eigenid/experiments.hpp"

#include <chrono>

#include "eigenid/identity.hpp"
#include "eigenid/oracle.hpp"

namespace eigenid {

namespace {

SquaredMagnitudes overlap_reference(const HermitianMatrix& a, const OrthonormalBasis& c) {
  SpectralDecomposition decomp = eigendecompose(a);
  ComplexMatrix s = c.columns() * decomp.eigenvectors;
  const Index n = a.size();
  SquaredMagnitudes ref;
  ref.values.resize(n, n);
  ref.valid.resize(n, n);
  ref.valid.setConstant(true);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) ref.values(i, j) = std::norm(s(j, i));
  return ref;
}

}  // namespace

const char* experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Minors: return "minors";
    case Experiment::IdentityBasis: return "identity-basis";
    case Experiment::ArbitraryBasis: return "arbitrary-basis";
  }
  return "unknown";
}

std::optional<Experiment> parse_experiment(const std::string& name) {
  if (name == "minors") return Experiment::Minors;
  if (name == "identity-basis") return Experiment::IdentityBasis;
  if (name == "arbitrary-basis") return Experiment::ArbitraryBasis;
  return std::nullopt;
}

ExperimentReport run_experiment(const HermitianMatrix& a, Experiment which,
                                const ExperimentOptions& opts) {
  ExperimentReport report;
  report.experiment = experiment_name(which);
  report.n = a.size();
  report.seed = opts.seed;
  report.tolerance = opts.eps;

  auto start = std::chrono::steady_clock::now();
  try {
    SquaredMagnitudes rebuilt;
    SquaredMagnitudes reference;
    switch (which) {
      case Experiment::Minors:
        rebuilt = eigenvector_magnitudes(a);
        reference = reference_magnitudes(a);
        break;
      case Experiment::IdentityBasis:
        rebuilt = basis_overlap_magnitudes(a, OrthonormalBasis::identity(a.size()), opts.mode);
        reference = reference_magnitudes(a);
        break;
      case Experiment::ArbitraryBasis: {
        OrthonormalBasis c = random_orthonormal(a.size(), opts.basis_seed);
        rebuilt = basis_overlap_magnitudes(a, c, opts.mode);
        reference = overlap_reference(a, c);
        break;
      }
    }
    report.max_abs_error = max_abs_diff(rebuilt, reference);
    if (rebuilt.all_valid()) {
      report.passed = *report.max_abs_error < opts.eps;
    } else {
      report.passed = false;
      report.reason = "degenerate";
    }
  } catch (const DegeneracyError&) {
    report.passed = false;
    report.reason = "degenerate";
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ExperimentReport> run_experiments(const HermitianMatrix& a,
                                              const std::vector<Experiment>& which,
                                              const ExperimentOptions& opts) {
  std::vector<ExperimentReport> reports;
  reports.reserve(which.size());
  for (Experiment e : which) reports.push_back(run_experiment(a, e, opts));
  return reports;
}

}  // namespace eigenid
