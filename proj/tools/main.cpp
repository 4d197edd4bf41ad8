// Command-line front door: generate instances, run the verification
// experiments, and recover constraint vectors from target stationary
// values.
//
// Exit codes: 0 pass, 1 numeric mismatch, 2 degenerate input,
// 3 infeasible targets, 4 I/O or parse error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eigenid/eigenid.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 70;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_vector(const eigenid::RealVector& v) {
  std::string out = "[";
  for (eigenid::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt(v(i));
  }
  return out + "]";
}

std::string fmt_vector(const eigenid::ComplexVector& v) {
  bool real_only = true;
  for (eigenid::Index i = 0; i < v.size(); ++i)
    if (v(i).imag() != 0.0) real_only = false;
  std::string out = "[";
  for (eigenid::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    if (real_only)
      out += fmt(v(i).real());
    else
      out += fmt(v(i).real()) + (v(i).imag() < 0 ? " - " : " + ") +
             fmt(std::abs(v(i).imag())) + "i";
  }
  return out + "]";
}

eigenid::MatrixFormat parse_format(const std::string& name) {
  if (name == "json") return eigenid::MatrixFormat::Json;
  if (name == "mm") return eigenid::MatrixFormat::MatrixMarket;
  return eigenid::MatrixFormat::Auto;
}

// Comma/whitespace separated reals, or @path to read them from a file.
eigenid::RealVector parse_targets(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw eigenid::IoError("cannot open targets file " + spec.substr(1));
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  for (char& ch : text)
    if (ch == ',') ch = ' ';
  std::istringstream in(text);
  std::vector<double> values;
  double v = 0.0;
  while (in >> v) values.push_back(v);
  if (!in.eof()) throw eigenid::ParseError("targets contain non-numeric data: " + spec);
  if (values.empty()) throw eigenid::ParseError("no targets given");
  return Eigen::Map<const eigenid::RealVector>(values.data(),
                                               static_cast<eigenid::Index>(values.size()));
}

// "+", "-" characters; a single character broadcasts to all n elements.
eigenid::ComplexVector parse_signs(const std::string& pattern, eigenid::Index n) {
  std::string expanded = pattern;
  if (pattern.size() == 1) expanded.assign(static_cast<std::size_t>(n), pattern[0]);
  if (static_cast<eigenid::Index>(expanded.size()) != n)
    throw eigenid::ParseError("sign pattern must have length 1 or " + std::to_string(n) +
                              ", got " + std::to_string(expanded.size()));
  eigenid::ComplexVector signs(n);
  for (eigenid::Index j = 0; j < n; ++j) {
    char ch = expanded[static_cast<std::size_t>(j)];
    if (ch == '+')
      signs(j) = 1.0;
    else if (ch == '-')
      signs(j) = -1.0;
    else
      throw eigenid::ParseError(std::string("sign pattern may only contain + and -, got '") +
                                ch + "'");
  }
  return signs;
}

struct GenerateOptions {
  eigenid::Index n = 0;
  std::uint64_t seed = 0;
  bool complex_entries = false;
  std::string out;
  std::string format = "auto";
};

struct VerifyOptions {
  std::string matrix_path;
  std::vector<std::uint64_t> random;  // n, seed
  bool real_random = false;
  std::string experiment = "all";
  double eps = eigenid::tol::default_eps;
  std::string mode = "paper-drop";
  std::optional<std::uint64_t> basis_seed;
  std::string json_out;
  std::string format = "auto";
  bool symmetrize = false;
};

struct RecoverOptions {
  std::string matrix_path;
  std::string targets;
  std::string signs = "+";
  std::string json_out;
  std::string format = "auto";
  bool symmetrize = false;
};

int run_generate(const GenerateOptions& opt) {
  eigenid::HermitianMatrix a = eigenid::random_hermitian(opt.n, opt.seed, opt.complex_entries);
  eigenid::save_matrix(a, opt.out, parse_format(opt.format));
  std::cout << "wrote " << (opt.complex_entries ? "complex" : "real") << " Hermitian " << opt.n
            << "x" << opt.n << " (seed " << opt.seed << ") to " << opt.out << "\n";
  return kExitPass;
}

int run_verify(const VerifyOptions& opt) {
  if (opt.matrix_path.empty() == opt.random.empty()) {
    std::cerr << "error: give either a matrix file or --random N SEED\n";
    return kExitIo;
  }

  eigenid::ExperimentOptions exp_opts;
  exp_opts.eps = opt.eps;
  exp_opts.mode = (opt.mode == "restriction") ? eigenid::DeflationMode::Restriction
                                              : eigenid::DeflationMode::PaperDropSmallest;

  std::optional<eigenid::HermitianMatrix> a;
  if (!opt.random.empty()) {
    auto n = static_cast<eigenid::Index>(opt.random[0]);
    std::uint64_t seed = opt.random[1];
    a = eigenid::random_hermitian(n, seed, !opt.real_random);
    exp_opts.seed = seed;
    exp_opts.basis_seed = opt.basis_seed.value_or(seed + 1);
  } else {
    a = eigenid::load_matrix(opt.matrix_path, parse_format(opt.format), opt.symmetrize);
    exp_opts.basis_seed = opt.basis_seed.value_or(1);
  }

  std::vector<eigenid::Experiment> which;
  if (opt.experiment == "all") {
    which = {eigenid::Experiment::Minors, eigenid::Experiment::IdentityBasis,
             eigenid::Experiment::ArbitraryBasis};
  } else if (auto e = eigenid::parse_experiment(opt.experiment)) {
    which = {*e};
  } else {
    std::cerr << "error: unknown experiment \"" << opt.experiment << "\"\n";
    return kExitIo;
  }

  std::vector<eigenid::ExperimentReport> reports = eigenid::run_experiments(*a, which, exp_opts);
  bool any_degenerate = false;
  for (const auto& r : reports) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.experiment << " (n=" << r.n;
    if (r.seed) std::cout << ", seed=" << *r.seed;
    std::cout << "): ";
    if (r.max_abs_error)
      std::cout << "max |error| " << fmt(*r.max_abs_error) << " vs eps " << fmt(r.tolerance);
    if (r.reason) {
      std::cout << (r.max_abs_error ? ", " : "") << *r.reason;
      any_degenerate = any_degenerate || *r.reason == "degenerate";
    }
    std::cout << "  [" << fmt(r.wall_time_seconds) << " s]\n";
  }
  if (!opt.json_out.empty()) eigenid::save_reports(reports, opt.json_out);

  if (eigenid::all_passed(reports)) return kExitPass;
  return any_degenerate ? kExitDegenerate : kExitMismatch;
}

int run_recover(const RecoverOptions& opt) {
  eigenid::HermitianMatrix a =
      eigenid::load_matrix(opt.matrix_path, parse_format(opt.format), opt.symmetrize);
  eigenid::RealVector targets = parse_targets(opt.targets);
  for (eigenid::Index k = 1; k < targets.size(); ++k)
    if (targets(k) < targets(k - 1))
      throw eigenid::InfeasibilityError("targets must be ascending", k);

  eigenid::SpectralDecomposition decomp = eigenid::eigendecompose(a);
  eigenid::ComplexVector signs = parse_signs(opt.signs, a.size());
  eigenid::ConstraintRecovery recovery = eigenid::recover_constraint(decomp, targets, signs);

  eigenid::RealVector achieved = eigenid::stationary_values(a, recovery.constraint);
  double residual = (achieved - targets).cwiseAbs().maxCoeff();

  std::cout << "eigenvalues w:  " << fmt_vector(decomp.eigenvalues) << "\n";
  std::cout << "targets x:      " << fmt_vector(recovery.targets) << "\n";
  std::cout << "weights d^2:    " << fmt_vector(recovery.weights) << "\n";
  std::cout << "constraint c:   " << fmt_vector(recovery.constraint.entries()) << "\n";
  std::cout << "residual max |stationary(A, c) - x| = " << fmt(residual) << "\n";
  if (!opt.json_out.empty()) {
    std::ofstream out(opt.json_out);
    if (!out) throw eigenid::IoError("cannot open " + opt.json_out + " for writing");
    out << eigenid::recovery_to_json(recovery, residual);
  }
  return residual < eigenid::tol::recover_residual ? kExitPass : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eigenvector magnitudes from minor/projection eigenvalues, and the inverse\n"
               "constrained-quadratic problem (recovering the constraint from prescribed\n"
               "stationary values). EIGENID_THREADS caps worker parallelism (0 = auto)."};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* generate = app.add_subcommand("generate", "Write a random Hermitian matrix file");
  generate->add_option("-n,--size", gen.n, "matrix dimension")->required();
  generate->add_option("-s,--seed", gen.seed, "random stream seed")->required();
  generate->add_flag("-c,--complex", gen.complex_entries, "complex entries (default real)");
  generate->add_option("-o,--out", gen.out, "output path")->required();
  generate->add_option("--format", gen.format, "json | mm | auto (default: by extension)")
      ->check(CLI::IsMember({"json", "mm", "auto"}));

  VerifyOptions ver;
  CLI::App* verify = app.add_subcommand(
      "verify", "Rebuild squared magnitudes from spectra alone and compare to the reference");
  verify->add_option("matrix", ver.matrix_path, "matrix file (JSON or MatrixMarket)");
  verify->add_option("--random", ver.random, "generate the instance: N SEED (complex)")
      ->expected(2);
  verify->add_flag("--real", ver.real_random, "with --random: real entries instead of complex");
  verify->add_option("-e,--experiment", ver.experiment,
                     "minors | identity-basis | arbitrary-basis | all")
      ->check(CLI::IsMember({"minors", "identity-basis", "arbitrary-basis", "all"}));
  verify->add_option("--eps", ver.eps, "elementwise tolerance (default 1e-10)");
  verify->add_option("--mode", ver.mode,
                     "deflation: paper-drop (drop smallest |eigenvalue|, notebook-faithful) or "
                     "restriction (complement-basis compression)")
      ->check(CLI::IsMember({"paper-drop", "restriction"}));
  verify->add_option("--basis-seed", ver.basis_seed,
                     "seed for the arbitrary-basis C (default: matrix seed + 1, or 1)");
  verify->add_option("-j,--json", ver.json_out, "write the report file here");
  verify->add_option("--format", ver.format, "json | mm | auto")
      ->check(CLI::IsMember({"json", "mm", "auto"}));
  verify->add_flag("--symmetrize", ver.symmetrize,
                   "replace the loaded matrix by (M + M*)/2 instead of rejecting it");

  RecoverOptions rec;
  CLI::App* recover = app.add_subcommand(
      "recover", "Find the unit constraint c whose stationary values match the targets");
  recover->add_option("matrix", rec.matrix_path, "matrix file")->required();
  recover->add_option("-t,--targets", rec.targets,
                      "n-1 ascending reals, comma separated, or @file")
      ->required();
  recover->add_option("--signs", rec.signs,
                      "per-element sign pattern (+/-), single char broadcasts (default +)");
  recover->add_option("-j,--json", rec.json_out, "write the recovery document here");
  recover->add_option("--format", rec.format, "json | mm | auto")
      ->check(CLI::IsMember({"json", "mm", "auto"}));
  recover->add_flag("--symmetrize", rec.symmetrize, "symmetrize the loaded matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }

  try {
    if (app.got_subcommand(generate)) return run_generate(gen);
    if (app.got_subcommand(verify)) return run_verify(ver);
    if (app.got_subcommand(recover)) return run_recover(rec);
    return kExitIo;
  } catch (const eigenid::InfeasibilityError& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const eigenid::DegeneracyError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const eigenid::ConvergenceError& e) {
    std::cerr << "eigensolver failure: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const eigenid::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const eigenid::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const eigenid::HermiticityError& e) {
    std::cerr << "input rejected: " << e.what() << " (use --symmetrize to force)\n";
    return kExitIo;
  } catch (const eigenid::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
