#include "kpgeo/io.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace kpgeo {

using nlohmann::json;

Tolerances tolerances_from_json(const json& j) {
  Tolerances t;
  t.eps_boundary = j.value("eps_boundary", t.eps_boundary);
  t.eps_target = j.value("eps_target", t.eps_target);
  if (j.contains("delta_tie")) t.delta_tie = j.at("delta_tie").get<double>();
  t.nullspace_tol = j.value("nullspace_tol", t.nullspace_tol);
  return t;
}

json tolerances_to_json(const Tolerances& t) {
  json j{{"eps_boundary", t.eps_boundary},
         {"eps_target", t.eps_target},
         {"nullspace_tol", t.nullspace_tol}};
  if (!std::isnan(t.delta_tie)) j["delta_tie"] = t.delta_tie;
  return j;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Complex entry_from_json(const json& e) {
  if (e.is_number()) return Complex(e.get<double>(), 0.0);
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return Complex(e[0].get<double>(), e[1].get<double>());
  throw ValidationError("matrix entry must be a number or an [re, im] pair");
}

}  // namespace

ComplexMatrix matrix_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty())
    throw ValidationError("matrix JSON must be a non-empty array of rows");
  const Eigen::Index n_rows = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index n_cols = static_cast<Eigen::Index>(rows[0].size());
  ComplexMatrix m(n_rows, n_cols);
  for (Eigen::Index r = 0; r < n_rows; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols)
      throw ValidationError("matrix JSON rows must have equal length");
    for (Eigen::Index c = 0; c < n_cols; ++c)
      m(r, c) = entry_from_json(row[c]);
  }
  return m;
}

json algebra_to_json(const AlgebraElement& a) {
  return json{{"n", a.dim()}, {"matrix", matrix_to_json(a.mat())}};
}

AlgebraElement algebra_from_json(const json& j) {
  return AlgebraElement(matrix_from_json(j));
}

json group_to_json(const GroupElement& g) {
  return json{{"n", g.dim()}, {"matrix", matrix_to_json(g.mat())}};
}

GroupElement group_from_json(const json& j) {
  return GroupElement(matrix_from_json(j));
}

json curve_to_json(const CurveSamples& c) {
  json j{{"n", c.n()}, {"times", c.times}};
  json points = json::array();
  for (const GroupElement& g : c.points) points.push_back(matrix_to_json(g.mat()));
  j["points"] = std::move(points);
  if (!c.disc.empty()) {
    json disc = json::array();
    for (const DiscPoint& p : c.disc) disc.push_back({p.x, p.y});
    j["disc"] = std::move(disc);
  }
  return j;
}

CurveSamples curve_from_json(const json& j) {
  CurveSamples c;
  c.times = j.at("times").get<std::vector<double>>();
  for (const json& p : j.at("points"))
    c.points.push_back(GroupElement(matrix_from_json(p)));
  if (j.contains("disc"))
    for (const json& p : j.at("disc"))
      c.disc.push_back({p[0].get<double>(), p[1].get<double>()});
  return c;
}

void write_curve_csv(std::ostream& os, const CurveSamples& c) {
  const int n = c.n();
  os << "t";
  for (int r = 0; r < n; ++r)
    for (int col = 0; col < n; ++col)
      os << ",re_" << r << col << ",im_" << r << col;
  if (!c.disc.empty()) os << ",x,y";
  os << "\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    os << c.times[i];
    const ComplexMatrix& m = c.points[i].mat();
    for (int r = 0; r < n; ++r)
      for (int col = 0; col < n; ++col)
        os << "," << m(r, col).real() << "," << m(r, col).imag();
    if (!c.disc.empty()) os << "," << c.disc[i].x << "," << c.disc[i].y;
    os << "\n";
  }
}

void write_disc_curve_csv(std::ostream& os,
                          const std::vector<DiscCurvePoint>& curve) {
  os << "t,x,y,vx,vy\n" << std::setprecision(17);
  for (const DiscCurvePoint& p : curve)
    os << p.t << "," << p.p.x << "," << p.p.y << "," << p.v.vx << ","
       << p.v.vy << "\n";
}

std::vector<DiscCurvePoint> read_disc_curve_csv(std::istream& is) {
  std::vector<DiscCurvePoint> curve;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string field;
    std::vector<double> vals;
    bool numeric = true;
    while (std::getline(ss, field, ',')) {
      try {
        std::size_t pos = 0;
        vals.push_back(std::stod(field, &pos));
        if (pos != field.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
      if (!numeric) break;
    }
    if (!numeric) continue;  // header line
    if (vals.size() != 5)
      throw ValidationError("disc curve CSV rows must be t,x,y,vx,vy");
    curve.push_back({vals[0], {vals[1], vals[2]}, {vals[3], vals[4]}});
  }
  return curve;
}

json sweep_report_to_json(const SweepReport& r) {
  json minimizers = json::array();
  for (const SweepMinimizer& m : r.minimizers)
    minimizers.push_back({{"phase_index", m.phase_index},
                          {"a_index", m.a_index},
                          {"phase", m.phase},
                          {"a", m.a},
                          {"time", m.time},
                          {"distance", m.distance}});
  json j{{"status", r.reached ? "reached" : "unreached"},
         {"multiplicity", r.multiplicity()},
         {"minimizers", std::move(minimizers)},
         {"closest_approach", r.closest_approach},
         {"radial_lower_bound", r.radial_lower_bound}};
  if (r.reached) {
    j["best_time"] = r.best_time;
    if (std::isfinite(r.tie_gap)) j["tie_gap"] = r.tie_gap;
  }
  return j;
}

json cut_locus_report_to_json(const CutLocusReport& r) {
  json targets = json::array();
  for (const CutLocusTarget& t : r.targets)
    targets.push_back({{"target_z", {t.z.x, t.z.y}},
                       {"singular", t.singular},
                       {"pass", t.pass},
                       {"sweep", sweep_report_to_json(t.sweep)}});
  return json{{"targets", std::move(targets)}, {"failures", r.failures}};
}

json make_meta(const std::string& command, const json& flags,
               std::uint64_t seed, const Tolerances& tol) {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"command", command},
              {"flags", flags},
              {"seed", seed},
              {"tolerances", tolerances_to_json(tol)}};
}

}  // namespace kpgeo
