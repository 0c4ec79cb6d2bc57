// sqw: command-line front end for the small-quantum-world library.
//
//   sqw check {x|s3|s4} [--format text|json]
//   sqw state   (--b B --c C --d D [--a A] | --t T | --ie) [--format json|text]
//   sqw measure --axis {h1|h2|h3} <state flags> [--format json|text]
//   sqw sweep   --axis {h1|h2|h3} --points N [--out PATH] [--format csv|json]
//
// Exit codes: 0 success, 1 invalid state or failed check, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqw/report.hpp"
#include "sqw/sqw.hpp"

namespace {

using sqw::report::json;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateFlags {
  std::optional<double> a, b, c, d;
  std::optional<std::string> t;
  bool ie = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "coefficient of 1/2 (defaults to 1 in coefficient mode)");
    cmd->add_option("--b", b, "coefficient of H1");
    cmd->add_option("--c", c, "coefficient of H2");
    cmd->add_option("--d", d, "coefficient of H3");
    cmd->add_option("--t", t, "pure state on the t-circle (number or inf)");
    cmd->add_flag("--ie", ie, "the irreducible entangled state");
  }

  sqw::s3::S3Coeffs resolve() const {
    const bool coeff_mode = a || b || c || d;
    const int modes = int(coeff_mode) + int(t.has_value()) + int(ie);
    if (modes != 1) throw UsageError("give exactly one of: --b/--c/--d [--a], --t, --ie");
    if (ie) return sqw::s3::ie_state();
    if (t) return sqw::s3::t_param(parse_t(*t));
    if (!b || !c || !d) throw UsageError("coefficient mode needs --b, --c and --d");
    return sqw::s3::S3Coeffs{a.value_or(1.0), *b, *c, *d};
  }

  static sqw::s3::TParam parse_t(const std::string& s) {
    if (s == "inf" || s == "+inf" || s == "-inf" || s == "infinity" || s == "-infinity") {
      return sqw::s3::TParam::infinity();
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("--t: not a number: " + s);
    }
    if (used != s.size() || !std::isfinite(v)) throw UsageError("--t: not a finite number: " + s);
    return sqw::s3::TParam(v);
  }
};

sqw::s3::MeasurementAxis resolve_axis(const std::string& s) {
  const auto axis = sqw::s3::parse_axis(s);
  if (!axis) throw UsageError("--axis must be h1, h2 or h3");
  return *axis;
}

int run_check(const std::string& world, const std::string& format) {
  sqw::RelationReport r;
  if (world == "x") {
    r = sqw::xworld::check_x_relations();
  } else if (world == "s3") {
    r = sqw::s3::check_s3_relations();
  } else if (world == "s4") {
    r = sqw::report::check_s4();
  } else {
    throw UsageError("world must be x, s3 or s4");
  }
  if (format == "json") {
    std::cout << sqw::report::relation_report_json(world, r).dump(2) << "\n";
  } else {
    std::cout << sqw::report::relation_report_text(world, r);
  }
  return r.all_passed() ? kOk : kInvalid;
}

int run_state(const StateFlags& flags, const std::string& format) {
  const auto report = sqw::report::make_state_report(flags.resolve());
  if (format == "json") {
    std::cout << json(report).dump(2) << "\n";
  } else {
    std::cout << sqw::report::to_text(report);
  }
  return kOk;
}

int run_measure(const StateFlags& flags, const std::string& axis_name, const std::string& format) {
  const auto axis = resolve_axis(axis_name);
  const auto before_coeffs = flags.resolve();
  const auto before = sqw::report::make_state_report(before_coeffs);
  const auto after_coeffs = std::abs(before_coeffs.a - 1.0) <= sqw::s3::tolerance::kFamily
                                ? sqw::s3::measure_update(before_coeffs, axis)
                                : sqw::s3::measure_coeffs(before_coeffs, axis);
  const auto after = sqw::report::make_state_report(after_coeffs);

  std::optional<double> delta_closed;
  if (before.concurrence_closed && after.concurrence_closed) {
    delta_closed = *after.concurrence_closed - *before.concurrence_closed;
  }
  const double delta_oracle = after.concurrence_oracle - before.concurrence_oracle;

  if (format == "json") {
    json j{{"axis", std::string(sqw::s3::to_string(axis))},
           {"before", before},
           {"after", after},
           {"delta_c", delta_closed ? json(sqw::report::round12(*delta_closed)) : json(nullptr)},
           {"delta_c_oracle", sqw::report::round12(delta_oracle)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "axis: " << sqw::s3::to_string(axis) << "\n";
    std::cout << "[before]\n" << sqw::report::to_text(before);
    std::cout << "[after]\n" << sqw::report::to_text(after);
    std::cout << "delta_c: " << (delta_closed ? sqw::report::format_number(*delta_closed) : "n/a") << "\n";
    std::cout << "delta_c_oracle: " << sqw::report::format_number(delta_oracle) << "\n";
  }
  return kOk;
}

int run_sweep(const std::string& axis_name, long long points, const std::string& out, const std::string& format) {
  const auto axis = resolve_axis(axis_name);
  if (points < 2) throw UsageError("--points must be at least 2");

  std::vector<sqw::report::SweepRecord> rows;
  for (const auto& g : sqw::s3::gain_sweep(axis, static_cast<std::size_t>(points))) {
    rows.push_back(sqw::report::SweepRecord::from(g));
  }
  const auto max = sqw::report::SweepRecord::from(sqw::s3::maximize_gain(axis));

  std::ostringstream body;
  if (format == "json") {
    body << sqw::report::sweep_json(axis, rows, max).dump(2) << "\n";
  } else {
    sqw::report::write_sweep_csv(body, rows, max);
  }

  if (out.empty() || out == "-") {
    std::cout << body.str();
    return kOk;
  }
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open output file: " + out);
  file << body.str();
  file.close();
  if (!file) throw UsageError("failed writing output file: " + out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small quantum worlds: X-states and the S3-symmetric two-qubit world"};
  app.require_subcommand(1);

  std::string check_world;
  std::string check_format = "text";
  auto* check = app.add_subcommand("check", "verify the operator algebra or the S4 subgroup facts");
  check->add_option("world", check_world, "x, s3 or s4")->required()->check(CLI::IsMember({"x", "s3", "s4"}));
  check->add_option("--format", check_format)->check(CLI::IsMember({"text", "json"}));

  StateFlags state_flags;
  std::string state_format = "json";
  auto* state = app.add_subcommand("state", "analyze one S3-world state");
  state_flags.attach(state);
  state->add_option("--format", state_format)->check(CLI::IsMember({"json", "text"}));

  StateFlags measure_flags;
  std::string measure_axis;
  std::string measure_format = "json";
  auto* measure = app.add_subcommand("measure", "measure H1, H2 or H3 on a state");
  measure_flags.attach(measure);
  measure->add_option("--axis", measure_axis)->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
  measure->add_option("--format", measure_format)->check(CLI::IsMember({"json", "text"}));

  std::string sweep_axis;
  long long sweep_points = 0;
  std::string sweep_out;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "entanglement gain over the compactified t grid");
  sweep->add_option("--axis", sweep_axis)->required()->check(CLI::IsMember({"h1", "h2", "h3"}));
  sweep->add_option("--points", sweep_points)->required();
  sweep->add_option("--out", sweep_out, "output path (stdout when omitted)");
  sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return run_check(check_world, check_format);
    if (*state) return run_state(state_flags, state_format);
    if (*measure) return run_measure(measure_flags, measure_axis, measure_format);
    if (*sweep) return run_sweep(sweep_axis, sweep_points, sweep_out, sweep_format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const sqw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
