#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "kpgeo/cut_locus.hpp"
#include "kpgeo/geodesics.hpp"

namespace kpgeo {

inline constexpr const char* kToolName = "kpgeo";
inline constexpr const char* kToolVersion = "0.1.0";

/// Tolerances shared across modules, overridable from a config file.
struct Tolerances {
  double eps_boundary = 1e-6;
  double eps_target = 0.05;
  double delta_tie = std::numeric_limits<double>::quiet_NaN();  // 2*dt
  double nullspace_tol = 1e-8;
};

Tolerances tolerances_from_json(const nlohmann::json& j);
nlohmann::json tolerances_to_json(const Tolerances& t);

/// Matrices serialize as row-major nested arrays of [re, im] pairs; bare
/// real numbers are accepted on input.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json algebra_to_json(const AlgebraElement& a);
AlgebraElement algebra_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const GroupElement& g);
GroupElement group_from_json(const nlohmann::json& j);

nlohmann::json curve_to_json(const CurveSamples& c);
CurveSamples curve_from_json(const nlohmann::json& j);

/// CSV columns: t, re_00, im_00, re_01, ... (row-major), then x, y when the
/// curve carries disc projections.
void write_curve_csv(std::ostream& os, const CurveSamples& c);

/// Disc curve CSV rows: t, x, y, vx, vy (one optional header line).
void write_disc_curve_csv(std::ostream& os,
                          const std::vector<DiscCurvePoint>& curve);
std::vector<DiscCurvePoint> read_disc_curve_csv(std::istream& is);

nlohmann::json sweep_report_to_json(const SweepReport& r);
nlohmann::json cut_locus_report_to_json(const CutLocusReport& r);

/// Reproducibility header embedded in every JSON output: tool version,
/// command, full flag set, seed and tolerance values.
nlohmann::json make_meta(const std::string& command,
                         const nlohmann::json& flags, std::uint64_t seed,
                         const Tolerances& tol);

}  // namespace kpgeo
