#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "pds/stepfn.hpp"

namespace pds {

/// N x K matrix; column k holds the sine coefficients of phi(kx): entry (nk, k) = a_n (1-based).
Eigen::MatrixXcd dilation_matrix(const StepFunction& phi, long K, long N);

/// Least-squares distance from e_1 to the column span of dilation_matrix(phi, K, N).
/// Requires K <= N, and N >= 4K unless allow_short is set. Throws NumericalError when the
/// solve does not produce a finite residual.
double residual(const StepFunction& phi, long K, long N, bool allow_short = false);

struct ResidualCurve {
  std::vector<long> K;
  std::vector<double> residuals;
  long N = 1;
};
ResidualCurve residual_curve(const StepFunction& phi, const std::vector<long>& Ks, long N);
/// "K,residual" header, one row per point, 17 significant digits.
std::string to_csv(const ResidualCurve& c);

struct OracleThresholds {
  long K = 64;
  long N = 512;
  double complete_ceiling = 0;  // largest residual over the complete population
  double incomplete_floor = 0;  // smallest residual over the incomplete population
  bool separated() const { return complete_ceiling < incomplete_floor; }
};
std::string to_config(const OracleThresholds& t);
/// Reads "key=value" lines; throws ParseError on malformed input.
OracleThresholds parse_thresholds(const std::string& text);

struct CalibrationRow {
  std::string descriptor;
  bool complete = false;
  double residual = 0;
};
struct Calibration {
  OracleThresholds thresholds;
  std::vector<CalibrationRow> rows;
};
/// Residuals of the ten complete intervals and the incomplete Farey-6 intervals.
Calibration calibrate(long K = 64, long N = 512);
/// "descriptor,class,residual" header.
std::string to_csv(const Calibration& c);

enum class OracleClass { BelowCeiling, AboveFloor, Between };
OracleClass classify(double residual, const OracleThresholds& t);

}  // namespace pds
