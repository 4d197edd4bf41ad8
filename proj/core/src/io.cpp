#include "eigenid/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace eigenid {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path);
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path);
}

bool has_extension(const std::string& path, const char* ext) {
  std::string::size_type dot = path.find_last_of('.');
  if (dot == std::string::npos) return false;
  std::string tail = path.substr(dot + 1);
  for (char& ch : tail) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return tail == ext;
}

// 17 significant digits reproduce the exact double on load.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json report_to_json(const ExperimentReport& r) {
  json j;
  j["experiment"] = r.experiment;
  j["n"] = r.n;
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  j["max_abs_error"] = r.max_abs_error ? json(*r.max_abs_error) : json(nullptr);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["reason"] = r.reason ? json(*r.reason) : json(nullptr);
  j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

ExperimentReport report_from_json(const json& j) {
  ExperimentReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.n = j.at("n").get<Index>();
  if (j.contains("seed") && !j.at("seed").is_null())
    r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("max_abs_error") && !j.at("max_abs_error").is_null())
    r.max_abs_error = j.at("max_abs_error").get<double>();
  r.tolerance = j.at("tolerance").get<double>();
  r.passed = j.at("passed").get<bool>();
  if (j.contains("reason") && !j.at("reason").is_null())
    r.reason = j.at("reason").get<std::string>();
  r.wall_time_seconds = j.value("wall_time_seconds", 0.0);
  return r;
}

}  // namespace

MatrixFormat resolve_format(const std::string& path, MatrixFormat format) {
  if (format != MatrixFormat::Auto) return format;
  if (has_extension(path, "mtx") || has_extension(path, "mm")) return MatrixFormat::MatrixMarket;
  return MatrixFormat::Json;
}

std::string matrix_to_json(const HermitianMatrix& a) {
  const Index n = a.size();
  const bool complex_entries = !a.is_real();
  json entries = json::array();
  for (Index i = 0; i < n; ++i) {
    json row = json::array();
    for (Index j = 0; j < n; ++j) {
      if (complex_entries)
        row.push_back(json::array({a(i, j).real(), a(i, j).imag()}));
      else
        row.push_back(a(i, j).real());
    }
    entries.push_back(std::move(row));
  }
  json doc;
  doc["n"] = n;
  doc["complex"] = complex_entries;
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

HermitianMatrix matrix_from_json(const std::string& text, bool symmetrize) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const auto n = doc.at("n").get<Index>();
    if (n < 1) throw ParseError("matrix size must be positive");
    const bool complex_entries = doc.at("complex").get<bool>();
    const json& entries = doc.at("entries");
    if (!entries.is_array() || static_cast<Index>(entries.size()) != n)
      throw ParseError("\"entries\" must be an array of n rows");
    ComplexMatrix m(n, n);
    for (Index i = 0; i < n; ++i) {
      const json& row = entries.at(static_cast<std::size_t>(i));
      if (!row.is_array() || static_cast<Index>(row.size()) != n)
        throw ParseError("row " + std::to_string(i) + " must have n entries");
      for (Index j = 0; j < n; ++j) {
        const json& cell = row.at(static_cast<std::size_t>(j));
        if (complex_entries) {
          if (!cell.is_array() || cell.size() != 2)
            throw ParseError("complex entries must be [re, im] pairs");
          m(i, j) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
        } else {
          if (!cell.is_number())
            throw ParseError("real entries must be plain numbers");
          m(i, j) = Complex(cell.get<double>(), 0.0);
        }
      }
    }
    return symmetrize ? HermitianMatrix::symmetrized(m) : HermitianMatrix(std::move(m));
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix document malformed: ") + e.what());
  }
}

std::string matrix_to_matrix_market(const HermitianMatrix& a) {
  const Index n = a.size();
  const bool complex_entries = !a.is_real();
  std::ostringstream out;
  out << "%%MatrixMarket matrix array " << (complex_entries ? "complex" : "real")
      << " general\n";
  out << n << " " << n << "\n";
  // Array format is column-major.
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      out << format_double(a(i, j).real());
      if (complex_entries) out << " " << format_double(a(i, j).imag());
      out << "\n";
    }
  }
  return out.str();
}

HermitianMatrix matrix_from_matrix_market(const std::string& text, bool symmetrize) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header) || header.rfind("%%MatrixMarket", 0) != 0)
    throw ParseError("missing %%MatrixMarket header");
  std::istringstream head(header);
  std::string tag, object, layout, field, symmetry;
  head >> tag >> object >> layout >> field >> symmetry;
  for (std::string* s : {&object, &layout, &field, &symmetry})
    for (char& ch : *s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (object != "matrix") throw ParseError("unsupported MatrixMarket object: " + object);
  if (layout != "array" && layout != "coordinate")
    throw ParseError("unsupported MatrixMarket format: " + layout);
  const bool complex_entries = field == "complex";
  if (field != "real" && field != "integer" && !complex_entries)
    throw ParseError("unsupported MatrixMarket field: " + field);
  const bool symmetric = symmetry == "symmetric" || symmetry == "hermitian";
  if (symmetry != "general" && !symmetric)
    throw ParseError("unsupported MatrixMarket symmetry: " + symmetry);

  std::string line;
  auto next_data_line = [&](std::string& out_line) {
    while (std::getline(in, line)) {
      std::string::size_type pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '%') continue;
      out_line = line;
      return true;
    }
    return false;
  };

  if (!next_data_line(line)) throw ParseError("missing MatrixMarket size line");
  std::istringstream size_line(line);
  Index rows = 0, cols = 0;
  long nnz = 0;
  if (!(size_line >> rows >> cols)) throw ParseError("malformed MatrixMarket size line");
  if (layout == "coordinate" && !(size_line >> nnz))
    throw ParseError("coordinate format needs an entry count");
  if (rows != cols) throw ParseError("matrix must be square, got " + std::to_string(rows) +
                                     "x" + std::to_string(cols));
  const Index n = rows;

  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  auto read_value = [&](std::istringstream& s) {
    double re = 0.0, im = 0.0;
    if (!(s >> re)) throw ParseError("malformed MatrixMarket entry");
    if (complex_entries && !(s >> im)) throw ParseError("complex entry missing imaginary part");
    return Complex(re, im);
  };

  if (layout == "array") {
    // Column-major; symmetric/hermitian files store the lower triangle.
    for (Index j = 0; j < n; ++j) {
      for (Index i = symmetric ? j : 0; i < n; ++i) {
        if (!next_data_line(line)) throw ParseError("MatrixMarket file truncated");
        std::istringstream entry(line);
        Complex v = read_value(entry);
        m(i, j) = v;
        if (symmetric && i != j)
          m(j, i) = (symmetry == "hermitian") ? std::conj(v) : v;
      }
    }
  } else {
    for (long e = 0; e < nnz; ++e) {
      if (!next_data_line(line)) throw ParseError("MatrixMarket file truncated");
      std::istringstream entry(line);
      Index i = 0, j = 0;
      if (!(entry >> i >> j)) throw ParseError("malformed coordinate entry");
      if (i < 1 || i > n || j < 1 || j > n)
        throw ParseError("coordinate entry out of range");
      Complex v = read_value(entry);
      m(i - 1, j - 1) = v;
      if (symmetric && i != j)
        m(j - 1, i - 1) = (symmetry == "hermitian") ? std::conj(v) : v;
    }
  }
  return symmetrize ? HermitianMatrix::symmetrized(m) : HermitianMatrix(std::move(m));
}

HermitianMatrix load_matrix(const std::string& path, MatrixFormat format, bool symmetrize) {
  std::string text = read_file(path);
  try {
    if (resolve_format(path, format) == MatrixFormat::MatrixMarket)
      return matrix_from_matrix_market(text, symmetrize);
    return matrix_from_json(text, symmetrize);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const HermiticityError& e) {
    throw HermiticityError(path + ": " + e.what());
  }
}

void save_matrix(const HermitianMatrix& a, const std::string& path, MatrixFormat format) {
  if (resolve_format(path, format) == MatrixFormat::MatrixMarket)
    write_file(path, matrix_to_matrix_market(a));
  else
    write_file(path, matrix_to_json(a));
}

std::string reports_to_json(const std::vector<ExperimentReport>& reports) {
  json list = json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(report_to_json(r));
    all = all && r.passed;
  }
  json doc;
  doc["all_passed"] = all;
  doc["reports"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::vector<ExperimentReport> reports_from_json(const std::string& text) {
  try {
    json doc = json::parse(text);
    std::vector<ExperimentReport> reports;
    for (const auto& j : doc.at("reports")) reports.push_back(report_from_json(j));
    return reports;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report document malformed: ") + e.what());
  }
}

void save_reports(const std::vector<ExperimentReport>& reports, const std::string& path) {
  write_file(path, reports_to_json(reports));
}

std::vector<ExperimentReport> load_reports(const std::string& path) {
  return reports_from_json(read_file(path));
}

std::string recovery_to_json(const ConstraintRecovery& recovery, double residual) {
  json doc;
  doc["targets"] = std::vector<double>(recovery.targets.begin(), recovery.targets.end());
  doc["weights"] = std::vector<double>(recovery.weights.begin(), recovery.weights.end());
  json signs = json::array();
  for (Index j = 0; j < recovery.signs.size(); ++j)
    signs.push_back(json::array({recovery.signs(j).real(), recovery.signs(j).imag()}));
  doc["signs"] = std::move(signs);
  json constraint = json::array();
  for (Index j = 0; j < recovery.constraint.size(); ++j)
    constraint.push_back(
        json::array({recovery.constraint(j).real(), recovery.constraint(j).imag()}));
  doc["constraint"] = std::move(constraint);
  doc["residual"] = residual;
  doc["passed"] = residual < tol::recover_residual;
  return doc.dump(2) + "\n";
}

}  // namespace eigenid
