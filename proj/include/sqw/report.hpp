#pragma once

// Machine-readable reports shared by the command-line tool and its tests.
// All numbers are written with 12 significant digits.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqw/permworld.hpp"
#include "sqw/relations.hpp"
#include "sqw/s3world.hpp"
#include "sqw/twoqubit.hpp"
#include "sqw/xworld.hpp"

namespace sqw::report {

using json = nlohmann::json;

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// x rounded to 12 significant digits, so that serializers print the short form.
inline double round12(double x) { return std::stod(format_number(x)); }

inline std::string format_t(const s3::TParam& t) {
  return t.is_infinite() ? "inf" : format_number(t.value());
}

inline json t_to_json(const s3::TParam& t) {
  if (t.is_infinite()) return "inf";
  return round12(t.value());
}

inline s3::TParam t_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("t must be a number or \"inf\"");
    return s3::TParam::infinity();
  }
  return s3::TParam(j.get<double>());
}

struct StateReport {
  s3::S3Coeffs coeffs;
  std::array<double, 4> eigenvalues{};  // ascending
  bool pure = false;
  double criterion_R = 0.0;
  std::optional<double> concurrence_closed;  // a = 1 only
  double concurrence_oracle = 0.0;
  double eof = 0.0;

  friend bool operator==(const StateReport&, const StateReport&) = default;
};

/// Full analysis of a single S3-world state. Throws sqw::Error when the state
/// is not a valid density matrix.
inline StateReport make_state_report(const s3::S3Coeffs& c) {
  const double norm_err = s3::normalization_error(c);
  if (!(norm_err <= s3::tolerance::kNormalization)) {
    throw Error(ErrorKind::NormalizationViolated, norm_err,
                "a + b + c + d must equal 1/2 (off by " + std::to_string(norm_err) + ")");
  }
  const DensityMatrix rho = validate_density(s3::assemble_s3(c));

  StateReport r;
  r.coeffs = c;
  r.eigenvalues = herm_eigen(rho.matrix()).values;
  r.criterion_R = s3::mean_values(c).R;
  const auto oracle = concurrence_oracle(rho);
  r.concurrence_oracle = oracle.concurrence;
  r.eof = oracle.eof;
  if (std::abs(c.a - 1.0) <= s3::tolerance::kFamily) {
    r.pure = s3::is_pure(c);
    r.concurrence_closed = s3::concurrence_closed(c);
  } else {
    r.pure = std::abs(purity(rho) - 1.0) <= 1e-9;
  }
  return r;
}

inline void to_json(json& j, const StateReport& r) {
  j = json{
      {"coeffs",
       {{"a", round12(r.coeffs.a)}, {"b", round12(r.coeffs.b)}, {"c", round12(r.coeffs.c)}, {"d", round12(r.coeffs.d)}}},
      {"eigenvalues", json::array()},
      {"pure", r.pure},
      {"criterion_R", round12(r.criterion_R)},
      {"concurrence_closed", r.concurrence_closed ? json(round12(*r.concurrence_closed)) : json(nullptr)},
      {"concurrence_oracle", round12(r.concurrence_oracle)},
      {"eof", round12(r.eof)},
  };
  for (double v : r.eigenvalues) j["eigenvalues"].push_back(round12(v));
}

inline void from_json(const json& j, StateReport& r) {
  const auto& c = j.at("coeffs");
  r.coeffs = s3::S3Coeffs{c.at("a").get<double>(), c.at("b").get<double>(), c.at("c").get<double>(),
                          c.at("d").get<double>()};
  const auto& ev = j.at("eigenvalues");
  if (ev.size() != 4) throw std::invalid_argument("eigenvalues must have 4 entries");
  for (std::size_t i = 0; i < 4; ++i) r.eigenvalues[i] = ev[i].get<double>();
  r.pure = j.at("pure").get<bool>();
  r.criterion_R = j.at("criterion_R").get<double>();
  const auto& cc = j.at("concurrence_closed");
  r.concurrence_closed = cc.is_null() ? std::nullopt : std::optional<double>(cc.get<double>());
  r.concurrence_oracle = j.at("concurrence_oracle").get<double>();
  r.eof = j.at("eof").get<double>();
}

inline std::string to_text(const StateReport& r) {
  std::ostringstream os;
  os << "coeffs: a=" << format_number(r.coeffs.a) << " b=" << format_number(r.coeffs.b)
     << " c=" << format_number(r.coeffs.c) << " d=" << format_number(r.coeffs.d) << "\n";
  os << "eigenvalues:";
  for (double v : r.eigenvalues) os << " " << format_number(v);
  os << "\n";
  os << "pure: " << (r.pure ? "true" : "false") << "\n";
  os << "criterion_R: " << format_number(r.criterion_R) << "\n";
  os << "concurrence_closed: " << (r.concurrence_closed ? format_number(*r.concurrence_closed) : "n/a")
     << "\n";
  os << "concurrence_oracle: " << format_number(r.concurrence_oracle) << "\n";
  os << "eof: " << format_number(r.eof) << "\n";
  return os.str();
}

struct SweepRecord {
  s3::TParam t = s3::TParam(0.0);
  double c_before = 0.0;
  double c_after = 0.0;
  double delta_c = 0.0;

  static SweepRecord from(const s3::GainResult& g) { return {g.t_star, g.c_before, g.c_after, g.delta_c}; }
  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

inline void to_json(json& j, const SweepRecord& r) {
  j = json{{"t", t_to_json(r.t)},
           {"c_before", round12(r.c_before)},
           {"c_after", round12(r.c_after)},
           {"delta_c", round12(r.delta_c)}};
}

inline void from_json(const json& j, SweepRecord& r) {
  r.t = t_from_json(j.at("t"));
  r.c_before = j.at("c_before").get<double>();
  r.c_after = j.at("c_after").get<double>();
  r.delta_c = j.at("delta_c").get<double>();
}

inline constexpr const char* kCsvHeader = "t,c_before,c_after,delta_c";

inline std::string csv_row(const SweepRecord& r) {
  return format_t(r.t) + "," + format_number(r.c_before) + "," + format_number(r.c_after) + "," +
         format_number(r.delta_c);
}

/// Header, one row per record, then a "# max,..." comment line carrying the
/// maximize_gain result in the same column order.
inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& rows, const SweepRecord& max) {
  os << kCsvHeader << "\n";
  for (const auto& r : rows) os << csv_row(r) << "\n";
  os << "# max," << csv_row(max) << "\n";
}

inline json sweep_json(s3::MeasurementAxis axis, const std::vector<SweepRecord>& rows, const SweepRecord& max) {
  json j{{"axis", std::string(s3::to_string(axis))}, {"points", rows.size()}, {"records", json::array()}};
  for (const auto& r : rows) j["records"].push_back(r);
  j["max"] = max;
  return j;
}

inline json relation_report_json(const std::string& world, const RelationReport& r) {
  json j{{"world", world}, {"passed", r.all_passed()}, {"checks", json::array()}};
  for (const auto& c : r.checks()) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"max_abs_error", round12(c.max_abs_error)}});
  }
  return j;
}

inline std::string relation_report_text(const std::string& world, const RelationReport& r) {
  std::ostringstream os;
  for (const auto& c : r.checks()) os << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
  os << world << ": " << (r.checks().size() - r.failures()) << "/" << r.checks().size() << " passed\n";
  return os.str();
}

/// Subgroup facts of S4: the subgroup count, the order-6 subgroups and their
/// type, and the point-4 stabilizer realizing the S3 generators.
inline RelationReport check_s4() {
  RelationReport r;
  const auto subgroups = perm::enumerate_subgroups();
  r.expect("S4 has 30 subgroups (found " + std::to_string(subgroups.size()) + ")", subgroups.size() == 30);

  std::map<std::size_t, std::size_t> by_order;
  for (const auto& h : subgroups) ++by_order[h.order()];
  std::size_t order6_s3 = 0;
  for (const auto& h : subgroups)
    if (h.order() == 6 && perm::classify(h) == perm::SubgroupType::S3) ++order6_s3;
  r.expect("4 subgroups of order 6 (found " + std::to_string(by_order[6]) + ")", by_order[6] == 4);
  r.expect("every order-6 subgroup is S3 (" + std::to_string(order6_s3) + " of " +
               std::to_string(by_order[6]) + ")",
           order6_s3 == by_order[6]);
  r.expect("every subgroup order divides 24",
           std::all_of(subgroups.begin(), subgroups.end(), [](const auto& h) { return 24 % h.order() == 0; }));
  r.expect("every subgroup is closed",
           std::all_of(subgroups.begin(), subgroups.end(), [](const auto& h) { return h.is_closed(); }));

  const auto stab = perm::stabilizer(4);
  const auto& g = s3::generators();
  std::vector<Mat4> expected{g.unit, g.H1, g.H2, g.H3, g.A, g.B};
  bool all_found = stab.order() == expected.size();
  for (const auto& p : stab.elements()) {
    const Mat4 m = perm::perm_matrix(p);
    all_found = all_found && std::any_of(expected.begin(), expected.end(), [&](const Mat4& e) { return e == m; });
  }
  r.expect("stabilizer(4) matrices = {1, H1, H2, H3, A, B}", all_found);
  r.expect("stabilizer(4) is an enumerated S3 subgroup",
           std::find(subgroups.begin(), subgroups.end(), stab) != subgroups.end() &&
               perm::classify(stab) == perm::SubgroupType::S3);
  return r;
}

}  // namespace sqw::report
