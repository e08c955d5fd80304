#include "pds/numoracle.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "pds/catalog.hpp"
#include "pds/error.hpp"

namespace pds {

Eigen::MatrixXcd dilation_matrix(const StepFunction& phi, long K, long N) {
  if (K < 1 || N < 1 || K > N) throw InvalidArgument("dilation_matrix: need 1 <= K <= N");
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(N, K);
  if (phi.is_zero()) return A;
  auto a = bw_coefficients(phi, N);
  for (long k = 1; k <= K; ++k)
    for (long n = 1; n * k <= N; ++n) A(n * k - 1, k - 1) = a[static_cast<std::size_t>(n - 1)].a;
  return A;
}

double residual(const StepFunction& phi, long K, long N, bool allow_short) {
  if (!allow_short && N < 4 * K) throw InvalidArgument("residual: N must be at least 4K");
  Eigen::MatrixXcd A = dilation_matrix(phi, K, N);
  Eigen::VectorXcd e1 = Eigen::VectorXcd::Zero(N);
  e1(0) = 1;
  if (A.isZero(0)) return 1.0;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(A);
  if (cod.rank() == 0) throw NumericalError("residual: numerical rank 0 for a nonzero matrix");
  Eigen::VectorXcd x = cod.solve(e1);
  double r = (e1 - A * x).norm();
  if (!std::isfinite(r)) throw NumericalError("residual: non-finite least-squares residual");
  return std::min(1.0, r);
}

ResidualCurve residual_curve(const StepFunction& phi, const std::vector<long>& Ks, long N) {
  ResidualCurve c;
  c.N = N;
  for (long k : Ks) {
    c.K.push_back(k);
    c.residuals.push_back(residual(phi, k, N));
  }
  return c;
}

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_csv(const ResidualCurve& c) {
  std::string out = "K,residual\n";
  for (std::size_t i = 0; i < c.K.size(); ++i) out += std::to_string(c.K[i]) + "," + num(c.residuals[i]) + "\n";
  return out;
}

std::string to_config(const OracleThresholds& t) {
  return "K=" + std::to_string(t.K) + "\nN=" + std::to_string(t.N) + "\ncomplete_ceiling=" + num(t.complete_ceiling) +
         "\nincomplete_floor=" + num(t.incomplete_floor) + "\n";
}

OracleThresholds parse_thresholds(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno, 1);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  OracleThresholds t;
  try {
    t.K = std::stol(kv.at("K"));
    t.N = std::stol(kv.at("N"));
    t.complete_ceiling = std::stod(kv.at("complete_ceiling"));
    t.incomplete_floor = std::stod(kv.at("incomplete_floor"));
  } catch (const std::out_of_range&) {
    throw ParseError("oracle thresholds: missing or out-of-range key");
  } catch (const std::invalid_argument&) {
    throw ParseError("oracle thresholds: malformed number");
  }
  return t;
}

Calibration calibrate(long K, long N) {
  Calibration c;
  c.thresholds.K = K;
  c.thresholds.N = N;
  bool first_c = true, first_i = true;
  for (const auto& e : scan_intervals(6).entries) {
    CalibrationRow row{e.descriptor, *e.expected, residual(e.phi, K, N)};
    if (row.complete) {
      c.thresholds.complete_ceiling = first_c ? row.residual : std::max(c.thresholds.complete_ceiling, row.residual);
      first_c = false;
    } else {
      c.thresholds.incomplete_floor = first_i ? row.residual : std::min(c.thresholds.incomplete_floor, row.residual);
      first_i = false;
    }
    c.rows.push_back(row);
  }
  return c;
}

std::string to_csv(const Calibration& c) {
  std::string out = "descriptor,class,residual\n";
  for (const auto& r : c.rows)
    out += "\"" + r.descriptor + "\"," + (r.complete ? "complete" : "incomplete") + "," + num(r.residual) + "\n";
  return out;
}

OracleClass classify(double r, const OracleThresholds& t) {
  if (r <= t.complete_ceiling) return OracleClass::BelowCeiling;
  if (r >= t.incomplete_floor) return OracleClass::AboveFloor;
  return OracleClass::Between;
}

}  // namespace pds
