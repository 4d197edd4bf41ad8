#pragma once

#include <string>
#include <vector>

#include "eigenid/golub.hpp"
#include "eigenid/oracle.hpp"
#include "eigenid/types.hpp"

namespace eigenid {

/// On-disk matrix encodings.
///
/// Json (canonical):
///   { "n": 3, "complex": true, "entries": [[[re, im], ...], ...] }
/// with plain numbers instead of [re, im] pairs when "complex" is false.
/// Numbers are written so that loading reproduces the exact double bits.
///
/// MatrixMarket: the standard text interchange format. Reading accepts
/// array and coordinate layouts, real/integer/complex fields, and
/// general/symmetric/hermitian symmetry; writing emits a dense array in
/// general symmetry.
///
/// Auto resolves from the file extension (.mtx / .mm -> MatrixMarket,
/// anything else -> Json).
enum class MatrixFormat { Auto, Json, MatrixMarket };

MatrixFormat resolve_format(const std::string& path, MatrixFormat format);

/// Loads and validates. The result always passes validate_hermitian at the
/// default tolerance; with symmetrize set, the raw entries are replaced by
/// (M + M*)/2 first. Missing file -> IoError; malformed content ->
/// ParseError; hermiticity failure -> HermiticityError.
HermitianMatrix load_matrix(const std::string& path,
                            MatrixFormat format = MatrixFormat::Auto,
                            bool symmetrize = false);

void save_matrix(const HermitianMatrix& a, const std::string& path,
                 MatrixFormat format = MatrixFormat::Auto);

/// String-level codecs behind load/save, exposed for tests and embedding.
std::string matrix_to_json(const HermitianMatrix& a);
HermitianMatrix matrix_from_json(const std::string& text, bool symmetrize = false);
std::string matrix_to_matrix_market(const HermitianMatrix& a);
HermitianMatrix matrix_from_matrix_market(const std::string& text,
                                          bool symmetrize = false);

/// Report file: { "all_passed": bool, "reports": [...] } where each report
/// carries experiment, n, seed, max_abs_error, tolerance, passed, reason,
/// wall_time_seconds (seed / max_abs_error / reason null when absent).
std::string reports_to_json(const std::vector<ExperimentReport>& reports);
std::vector<ExperimentReport> reports_from_json(const std::string& text);
void save_reports(const std::vector<ExperimentReport>& reports, const std::string& path);
std::vector<ExperimentReport> load_reports(const std::string& path);

/// Recovery result document: targets, weights, signs, constraint (as
/// [re, im] pairs), residual, passed.
std::string recovery_to_json(const ConstraintRecovery& recovery, double residual);

}  // namespace eigenid
