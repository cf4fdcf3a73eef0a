#include "eggcli/app.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <fmt/format.h>

#include "egg/area.hpp"
#include "egg/curve.hpp"
#include "egg/error.hpp"
#include "egg/oracle.hpp"
#include "egg/taylor.hpp"
#include "eggcli/battery.hpp"
#include "eggcli/emit.hpp"

namespace egg::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "svg") return Format::Svg;
  return Format::Text;
}

struct CurveFlags {
  double a = 0.0;
  double b = 0.0;
  double w = 0.0;

  [[nodiscard]] CurveParams params() const { return {a, b, w}; }
};

void add_curve_flags(CLI::App* cmd, CurveFlags& flags) {
  cmd->add_option("--a", flags.a, "semi-axis along x")->required();
  cmd->add_option("--b", flags.b, "semi-axis along y")->required();
  cmd->add_option("--w", flags.w, "distance between the construction circle centres")->required();
}

CLI::Option* add_format(CLI::App* cmd, std::string& format, bool allow_svg = false) {
  std::vector<std::string> names{"text", "csv", "json"};
  if (allow_svg) names.emplace_back("svg");
  return cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember(names))
      ->capture_default_str();
}

// ---- area -----------------------------------------------------------------

struct AreaFlags {
  CurveFlags curve;
  std::string method = "exact";
  unsigned n = 10;
  std::string kind = "first";
  double beta = 1.0;
  std::string format = "text";
};

std::string cmd_area(const AreaFlags& flags) {
  const auto params = flags.curve.params();
  const auto shape = derive(params);
  double total = 0.0;
  double part1 = 0.0;
  double part2 = 0.0;
  if (flags.method == "exact") {
    const auto r = area_exact(params);
    total = r.total;
    part1 = r.part1;
    part2 = r.part2;
  } else {
    if (flags.method == "series") {
      total = area_series(params, 1e-17);
    } else {
      const auto kind = flags.kind == "second" ? ApproxKind::Second : ApproxKind::First;
      total = area_taylor(params, flags.n, kind, flags.beta);
    }
    const double difference = 8.0 / 3.0 * params.a() * params.b() * shape.q * shape.k;
    part1 = 0.5 * (total - difference);
    part2 = 0.5 * (total + difference);
  }
  Json record;
  record["total"] = total;
  record["part1"] = part1;
  record["part2"] = part2;
  record["q"] = shape.q;
  record["k"] = shape.k;
  record["u"] = shape.u;
  record["gamma"] = shape.gamma;
  record["method"] = flags.method;
  return render_record(record, parse_format(flags.format));
}

// ---- bounds ---------------------------------------------------------------

struct BoundsFlags {
  CurveFlags curve;
  std::string format = "text";
};

std::string cmd_bounds(const BoundsFlags& flags) {
  const auto params = flags.curve.params();
  const auto shape = derive(params);
  const auto c = bounds(params);
  Json record;
  record["q"] = shape.q;
  record["k"] = shape.k;
  record["exact"] = c.exact;
  record["lower_coarse"] = c.lower_coarse;
  record["lower_refined"] = c.lower_refined;
  record["upper_refined"] = c.upper_refined;
  record["upper_coarse"] = c.upper_coarse;
  record["delta"] = c.delta;
  record["nabla"] = c.nabla;
  record["nabla_piecewise"] = c.nabla_piecewise;
  record["delta_pi_form"] = c.delta_pi_form;
  record["lower_pi_form"] = c.lower_pi_form;
  record["pi_form_consistent"] = c.pi_form_consistent;
  record["ordered"] = c.ordered();
  return render_record(record, parse_format(flags.format));
}

// ---- sample ---------------------------------------------------------------

struct SampleFlags {
  CurveFlags curve;
  int n = 64;
  bool circles = false;
  std::string format = "text";
};

std::string sample_svg(const CurveParams& params, const std::vector<PlanePoint>& points,
                       bool circles) {
  const auto shape = derive(params);
  const double radius_y = shape.q * params.b();
  const double half = 1.1 * std::max(params.a(), radius_y);
  const double stroke = half / 200.0;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" "
      "viewBox=\"{0} {0} {1} {1}\">\n",
      format_double(-half), format_double(2 * half));
  std::string d;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    d += fmt::format("{}{} {} ", i == 0 ? "M " : "L ", format_double(points[i].x),
                     format_double(0.0 - points[i].y));
  }
  d += "Z";
  out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\"/>\n", d,
                     format_double(stroke));
  if (circles) {
    out += fmt::format(
        "<circle cx=\"0\" cy=\"0\" r=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"{}\"/>\n",
        format_double(params.a()), format_double(stroke));
    out += fmt::format(
        "<circle cx=\"{}\" cy=\"0\" r=\"{}\" fill=\"none\" stroke=\"gray\" stroke-width=\"{}\"/>\n",
        format_double(shape.u), format_double(radius_y), format_double(stroke));
  }
  out += "</svg>\n";
  return out;
}

std::string cmd_sample(const SampleFlags& flags) {
  const auto format = parse_format(flags.format);
  if (flags.circles && (format == Format::Csv || format == Format::Text)) {
    throw UsageError("--circles requires --format svg or json");
  }
  const auto params = flags.curve.params();
  const auto angles = uniform_angles(flags.n);
  const auto points = sample_egg(params, flags.n);
  if (format == Format::Svg) return sample_svg(params, points, flags.circles);

  if (format == Format::Json) {
    const auto shape = derive(params);
    Json doc;
    doc["a"] = params.a();
    doc["b"] = params.b();
    doc["w"] = params.w();
    doc["q"] = shape.q;
    doc["n"] = flags.n;
    Json rows = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      rows.push_back(Json{{"t", angles[i]}, {"x", points[i].x}, {"y", points[i].y}});
    }
    doc["points"] = std::move(rows);
    if (flags.circles) {
      doc["circles"] = Json{{"outer", Json{{"cx", 0.0}, {"cy", 0.0}, {"r", params.a()}}},
                            {"inner", Json{{"cx", shape.u}, {"cy", 0.0}, {"r", shape.q * params.b()}}}};
    }
    return dump_json(doc);
  }

  std::string out = format == Format::Csv ? "t,x,y\n" : fmt::format("{:>24} {:>24} {:>24}\n", "t", "x", "y");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto t = format_double(angles[i]);
    const auto x = format_double(points[i].x);
    const auto y = format_double(points[i].y);
    out += format == Format::Csv ? fmt::format("{},{},{}\n", t, x, y)
                                 : fmt::format("{:>24} {:>24} {:>24}\n", t, x, y);
  }
  return out;
}

// ---- approx-table ---------------------------------------------------------

struct ApproxFlags {
  std::string target;
  unsigned max_degree = 10;
  std::optional<double> beta;
  int grid_size = 9;
  std::string format = "text";
};

struct Rendered {
  std::string text;
  bool ok;
};

std::string coefficient_text(const Coefficient& c) {
  return c.is_exact() ? c.exact->to_string() : format_double(c.numeric);
}

Rendered cmd_approx_table(const ApproxFlags& flags) {
  const auto kind = *parse_series_kind(flags.target);
  const SeriesTarget target{kind};
  const bool endpoint_finite = target.value_at_one().has_value();
  const double requested_beta = flags.beta.value_or(endpoint_finite ? 1.0 : 0.95);
  const unsigned n = flags.max_degree;

  std::vector<TaylorApprox> first;
  std::vector<TaylorApprox> second;
  for (unsigned j = 0; j <= n; ++j) {
    first.push_back(first_taylor(target, j));
    second.push_back(second_taylor(target, j, requested_beta));
  }
  const double beta = second.front().beta();
  std::vector<double> grid;
  for (int i = 1; i <= flags.grid_size; ++i) grid.push_back(beta * i / (flags.grid_size + 1));
  const auto report = verify_chain(target, n, beta, grid);
  const auto format = parse_format(flags.format);

  if (format == Format::Csv) {
    std::string out = "x,f";
    for (const char* prefix : {"T_", "S_"}) {
      for (unsigned j = 0; j <= n; ++j) out += fmt::format(",{}{}", prefix, j);
    }
    for (const char* prefix : {"T_", "S_"}) {
      for (unsigned j = 0; j <= n; ++j) out += fmt::format(",{}{}-f", prefix, j);
    }
    out += '\n';
    for (const auto& p : report.points) {
      out += format_double(p.x) + ',' + format_double(p.f);
      for (const auto* values : {&p.first, &p.second}) {
        for (const double v : *values) out += ',' + format_double(v);
      }
      for (const auto* values : {&p.first, &p.second}) {
        for (const double v : *values) out += ',' + format_double(v - p.f);
      }
      out += '\n';
    }
    return {out, report.ok()};
  }

  if (format == Format::Json) {
    Json doc;
    doc["target"] = std::string(to_string(kind));
    doc["max_degree"] = n;
    doc["beta"] = beta;
    doc["grid_size"] = flags.grid_size;
    doc["chain_ok"] = report.ok();
    Json first_coeffs = Json::array();
    const auto& top = first.back().coefficients();
    for (unsigned p = 0; p < top.size(); ++p) {
      first_coeffs.push_back(Json{{"power", p}, {"exact", top[p].exact->to_string()}, {"value", top[p].numeric}});
    }
    Json second_top = Json::array();
    for (unsigned j = 0; j <= n; ++j) {
      const auto& c = second[j].coefficients().back();
      second_top.push_back(Json{{"degree", j},
                                {"exact", c.is_exact() ? Json(c.exact->to_string()) : Json(nullptr)},
                                {"value", c.numeric}});
    }
    doc["coefficients"] = Json{{"first", std::move(first_coeffs)}, {"second_top", std::move(second_top)}};
    Json rows = Json::array();
    for (const auto& p : report.points) {
      Json first_error = Json::array();
      Json second_error = Json::array();
      for (const double v : p.first) first_error.push_back(v - p.f);
      for (const double v : p.second) second_error.push_back(v - p.f);
      rows.push_back(Json{{"x", p.x},
                          {"f", p.f},
                          {"first", p.first},
                          {"second", p.second},
                          {"first_error", std::move(first_error)},
                          {"second_error", std::move(second_error)}});
    }
    doc["rows"] = std::move(rows);
    Json violations = Json::array();
    for (const auto& v : report.violations) {
      violations.push_back(Json{{"x", v.x}, {"relation", v.relation}, {"excess", v.excess}});
    }
    doc["violations"] = std::move(violations);
    return {dump_json(doc), report.ok()};
  }

  std::string out;
  out += fmt::format("target      {}\n", to_string(kind));
  out += fmt::format("max_degree  {}\n", n);
  out += fmt::format("beta        {}\n", format_double(beta));
  out += fmt::format("chain       {}\n", report.ok() ? "ok" : "VIOLATED");
  out += fmt::format("\nfirst-kind coefficients of T_{}\n", n);
  const auto& top = first.back().coefficients();
  for (unsigned p = 0; p < top.size(); ++p) {
    if (top[p].exact->is_zero()) continue;
    out += fmt::format("  x^{:<3} {:<28} {}\n", p, coefficient_text(top[p]), format_double(top[p].numeric));
  }
  out += "\nsecond-kind top coefficients\n";
  for (unsigned j = 0; j <= n; ++j) {
    const auto& c = second[j].coefficients().back();
    out += fmt::format("  S_{:<3} {:<28} {}\n", j, coefficient_text(c), format_double(c.numeric));
  }
  out += "\nsigned errors T_j - f and S_j - f\n";
  for (const auto& p : report.points) {
    out += fmt::format("x = {}  f = {}\n", format_double(p.x), format_double(p.f));
    for (unsigned j = 0; j <= n; ++j) {
      out += fmt::format("  j={:<3} {:>25} {:>25}\n", j, format_double(p.first[j] - p.f),
                         format_double(p.second[j] - p.f));
    }
  }
  for (const auto& v : report.violations) {
    out += fmt::format("violation: {} at x = {} by {}\n", v.relation, format_double(v.x),
                       format_double(v.excess));
  }
  return {out, report.ok()};
}

// ---- pi-series ------------------------------------------------------------

struct PiFlags {
  std::uint64_t terms = 100;
  std::string format = "text";
};

std::string cmd_pi_series(const PiFlags& flags) {
  using Decimal = boost::multiprecision::cpp_dec_float_50;
  const auto partial = inv_pi_partial(flags.terms);
  const double error =
      static_cast<double>(boost::multiprecision::abs(Decimal(partial.value) - Decimal(kInvPiReference)));
  Json record;
  record["terms"] = flags.terms;
  record["partial_sum"] = partial.value;
  record["reference"] = kInvPiReference;
  record["abs_error"] = error;
  record["last_term"] = partial.last_term;
  return render_record(record, parse_format(flags.format));
}

// ---- verify ---------------------------------------------------------------

struct VerifyFlags {
  std::optional<double> tol;
  std::string format = "text";
};

Rendered cmd_verify(const VerifyFlags& flags) {
  if (flags.tol && !(*flags.tol > 0.0)) throw DomainError("--tol must be positive");
  const auto checks = run_battery({flags.tol});
  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  const auto format = parse_format(flags.format);
  if (format == Format::Json) {
    Json doc;
    doc["passed"] = all;
    doc["tol"] = flags.tol ? Json(*flags.tol) : Json(nullptr);
    Json list = Json::array();
    for (const auto& c : checks) {
      list.push_back(Json{{"name", c.name},
                          {"criterion", c.criterion},
                          {"passed", c.passed},
                          {"worst", c.worst},
                          {"limit", c.limit},
                          {"detail", c.detail}});
    }
    doc["checks"] = std::move(list);
    return {dump_json(doc), all};
  }
  std::string out;
  if (format == Format::Csv) out = "name,criterion,passed,worst,limit,detail\n";
  for (const auto& c : checks) {
    if (format == Format::Csv) {
      out += fmt::format("{},{},{},{},{},{}\n", csv_field(c.name), c.criterion, c.passed ? "true" : "false",
                         format_double(c.worst), format_double(c.limit), csv_field(c.detail));
    } else {
      out += fmt::format("{}  {:<52} worst {:<24} limit {}{}\n", c.passed ? "PASS" : "FAIL", c.name,
                         format_double(c.worst), format_double(c.limit),
                         c.detail.empty() ? "" : "  (" + c.detail + ")");
    }
  }
  if (format == Format::Text) {
    const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
    out += fmt::format("{} checks, {} failed\n", checks.size(), failed);
  }
  return {out, all};
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  CLI::App app{"Areas, bounds and Taylor enclosures for the egg oval of Hugelschaffer curves",
               "eggcalc"};
  app.require_subcommand(1);

  AreaFlags area;
  auto* area_cmd = app.add_subcommand("area", "egg area and its two sub-areas");
  add_curve_flags(area_cmd, area.curve);
  area_cmd->add_option("--method", area.method)
      ->check(CLI::IsMember({"exact", "series", "taylor"}))
      ->capture_default_str();
  area_cmd->add_option("--n", area.n, "Taylor degree")->capture_default_str();
  area_cmd->add_option("--kind", area.kind)->check(CLI::IsMember({"first", "second"}))->capture_default_str();
  area_cmd->add_option("--beta", area.beta, "second-kind endpoint in (0, 1]")->capture_default_str();
  add_format(area_cmd, area.format);

  BoundsFlags bounds_flags;
  auto* bounds_cmd = app.add_subcommand("bounds", "coarse and refined area bounds");
  add_curve_flags(bounds_cmd, bounds_flags.curve);
  add_format(bounds_cmd, bounds_flags.format);

  SampleFlags sample;
  auto* sample_cmd = app.add_subcommand("sample", "points of the egg oval");
  add_curve_flags(sample_cmd, sample.curve);
  sample_cmd->add_option("--n", sample.n, "number of points, first and last coincide")
      ->capture_default_str();
  sample_cmd->add_flag("--circles", sample.circles, "include the two construction circles");
  add_format(sample_cmd, sample.format, true);

  ApproxFlags approx;
  auto* approx_cmd = app.add_subcommand("approx-table", "first and second Taylor approximants");
  approx_cmd->add_option("--target", approx.target)->required()->check(CLI::IsMember({"K", "E", "D", "A"}));
  approx_cmd->add_option("--max-degree", approx.max_degree)->check(CLI::Range(0u, 200u))->capture_default_str();
  approx_cmd->add_option("--beta", approx.beta, "endpoint (default 1 for E and A, 0.95 for K and D)");
  approx_cmd->add_option("--grid-size", approx.grid_size, "grid points in (0, beta)")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  add_format(approx_cmd, approx.format);

  PiFlags pi;
  auto* pi_cmd = app.add_subcommand("pi-series", "partial sums of the 1/pi series");
  pi_cmd->add_option("--terms", pi.terms)->capture_default_str();
  add_format(pi_cmd, pi.format);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
  verify_cmd->add_option("--tol", verify.tol, "replace the tolerance of every tolerance-based check");
  add_format(verify_cmd, verify.format);

  Result result;
  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kExitOk : kExitUsage, out.str(), err.str()};
  }

  try {
    if (*area_cmd) {
      result.out = cmd_area(area);
    } else if (*bounds_cmd) {
      result.out = cmd_bounds(bounds_flags);
    } else if (*sample_cmd) {
      result.out = cmd_sample(sample);
    } else if (*approx_cmd) {
      const auto r = cmd_approx_table(approx);
      result.out = r.text;
      if (!r.ok) result.code = kExitFailure;
    } else if (*pi_cmd) {
      result.out = cmd_pi_series(pi);
    } else if (*verify_cmd) {
      const auto r = cmd_verify(verify);
      result.out = r.text;
      if (!r.ok) result.code = kExitFailure;
    }
  } catch (const UsageError& e) {
    return {kExitUsage, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {kExitFailure, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const oracle::QuadratureError& e) {
    return {kExitFailure, {}, std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {kExitFailure, {}, std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

}  // namespace egg::cli
