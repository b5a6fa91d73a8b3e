#pragma once

// Command-line front end. `run_cli` holds all of the logic so the test suite
// can drive it without spawning processes.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coneiso/coneiso.hpp"
#include "coneiso/io.hpp"

namespace coneiso::cli {

enum ExitCode : int { kOk = 0, kComputationError = 1, kInputError = 2 };

struct Options {
  std::string polygon_path;
  double height = 0.0;
  std::string heights;
  double h_min = 0.0;
  double h_max = 0.0;
  std::size_t h_steps = 0;
  double tol = 1e-10;
  std::string format;
  std::string output;
};

namespace detail {

inline std::vector<double> parse_height_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double h = 0.0;
    try {
      h = std::stod(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::MalformedInput, "not a number in height list: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size()) throw Error(ErrorKind::MalformedInput, "not a number in height list: '" + item + "'");
    if (!(h > 0.0) || !std::isfinite(h)) {
      throw Error(ErrorKind::NonpositiveHeight, "heights must be positive, got '" + item + "'");
    }
    out.push_back(h);
  }
  return out;
}

// Heights from --heights, or from --h-min/--h-max/--h-steps (inclusive, evenly spaced).
inline std::vector<double> requested_heights(const Options& o, std::vector<double> fallback) {
  if (!o.heights.empty()) return parse_height_list(o.heights);
  if (o.h_steps > 0) {
    if (!(o.h_min > 0.0) || !(o.h_max >= o.h_min)) {
      throw Error(ErrorKind::NonpositiveHeight, "need 0 < --h-min <= --h-max");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < o.h_steps; ++i) {
      const double t = o.h_steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(o.h_steps - 1);
      out.push_back(o.h_min + t * (o.h_max - o.h_min));
    }
    return out;
  }
  if (o.height > 0.0) return {o.height};
  return fallback;
}

inline bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::DegenerateInput:
    case ErrorKind::SelfIntersecting:
    case ErrorKind::MalformedInput:
    case ErrorKind::NotATriangle:
    case ErrorKind::NotConvex:
    case ErrorKind::NonpositiveHeight:
    case ErrorKind::NonpositiveArgument:
    case ErrorKind::InvalidGridSpec:
      return true;
    default:
      return false;
  }
}

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

inline std::vector<Check> verify_checks(const Polygon& poly, const std::vector<double>& heights, double tol) {
  std::vector<Check> checks;
  auto add = [&](std::string name, bool ok, const std::string& detail) {
    checks.push_back({std::move(name), ok, detail});
  };
  const double half_perimeter = 0.5 * poly.perimeter();
  for (double h : heights) {
    const std::string tag = "h=" + io::format_number(h) + " ";
    const CenterResult solved = center_at_height(poly, h, tol);
    add(tag + "converged", solved.converged,
        "gradient_norm=" + io::format_number(solved.gradient_norm) +
            " limit=" + io::format_number(tol * half_perimeter));

    const auto grid = oracle::grid_min_boundary(poly, h, oracle::default_grid(poly));
    const double value_err = std::abs(grid.value - solved.boundary_area) / solved.boundary_area;
    add(tag + "oracle_value", value_err <= 1e-6, "relative_error=" + io::format_number(value_err));
    const double point_err = distance(grid.point, solved.center);
    add(tag + "oracle_argmin", point_err <= 10.0 * grid.final_spacing,
        "distance=" + io::format_number(point_err) + " limit=" + io::format_number(10.0 * grid.final_spacing));

    const BoundaryObjective g(poly, h);
    const double step = 1e-6 * poly.diameter();
    const Vec2 fd = oracle::finite_diff_gradient([&](const Vec2& p) { return g.value(p); }, solved.center, step);
    add(tag + "stationary", norm(fd) <= 1e-6 * poly.perimeter(),
        "fd_gradient_norm=" + io::format_number(norm(fd)));

    // Analytic gradient against differences at a point away from the optimum.
    const Vec2 probe = solved.center + Vec2{0.25 * poly.diameter(), 0.1 * poly.diameter()};
    const Vec2 fd_probe = oracle::finite_diff_gradient([&](const Vec2& p) { return g.value(p); }, probe, step);
    const Vec2 an_probe = g.gradient(probe);
    const double grad_err = norm(fd_probe - an_probe) / norm(an_probe);
    add(tag + "gradient", grad_err <= 1e-6, "relative_error=" + io::format_number(grad_err));

    if (poly.size() == 3) {
      const auto inc = triangle_incenter(poly);
      const double off = distance(inc.center, solved.center);
      add(tag + "incenter", off <= 1e-7 * poly.diameter(), "distance=" + io::format_number(off));
    }
  }
  return checks;
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone isoperimetric centers of planar polygons"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("polygon", o.polygon_path, "Polygon JSON file {\"vertices\": [[x,y],...]}")->required();
    sub->add_option("--tol", o.tol, "Solver tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", o.output, "Output file (default: standard output)");
  };
  auto add_heights = [&](CLI::App* sub) {
    sub->add_option("--heights", o.heights, "Comma-separated heights");
    sub->add_option("--h-min", o.h_min, "Smallest height of an evenly spaced range")->check(CLI::PositiveNumber);
    sub->add_option("--h-max", o.h_max, "Largest height of an evenly spaced range")->check(CLI::PositiveNumber);
    sub->add_option("--h-steps", o.h_steps, "Number of heights in the range");
  };

  auto* incenter = app.add_subcommand("incenter", "Incenter and inradius of a triangle");
  auto* chebyshev = app.add_subcommand("chebyshev", "Max-min point and radius of a convex polygon");
  auto* centroid_cmd = app.add_subcommand("centroid", "Area centroid");
  auto* center = app.add_subcommand("center", "Cone isoperimetric center at a fixed height");
  auto* optimal = app.add_subcommand("optimal", "Apex of the isoperimetrically optimal cone");
  auto* sweep = app.add_subcommand("sweep", "Fixed-height centers over a list of heights (CSV)");
  auto* verify = app.add_subcommand("verify", "Cross-check the solver against the brute-force oracle");
  for (auto* sub : {incenter, chebyshev, centroid_cmd, center, optimal, sweep, verify}) add_common(sub);
  center->add_option("--height", o.height, "Apex height")->required()->check(CLI::PositiveNumber);
  add_heights(sweep);
  verify->add_option("--height", o.height, "Apex height")->check(CLI::PositiveNumber);
  add_heights(verify);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("coneiso");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::ostringstream body;
  int status = kOk;
  try {
    const Polygon poly = io::load_polygon(o.polygon_path);
    const bool csv = o.format == "csv";
    auto emit_json = [&](const io::json& j) { body << j.dump(2) << "\n"; };

    if (incenter->parsed() || chebyshev->parsed()) {
      Vec2 c;
      double r = 0.0;
      if (incenter->parsed()) {
        const auto res = triangle_incenter(poly);
        c = res.center;
        r = res.radius;
      } else {
        const auto res = chebyshev_center(poly);
        c = res.center;
        r = res.radius;
      }
      if (csv) {
        body << "center_x,center_y,radius\r\n"
             << io::format_number(c.x) << "," << io::format_number(c.y) << "," << io::format_number(r) << "\r\n";
      } else {
        emit_json(io::json{{"center", io::point_json(c)}, {"radius", io::number(r)}});
      }
    } else if (centroid_cmd->parsed()) {
      const Vec2 c = centroid(poly);
      if (csv) {
        body << "center_x,center_y\r\n" << io::format_number(c.x) << "," << io::format_number(c.y) << "\r\n";
      } else {
        emit_json(io::json{{"center", io::point_json(c)}});
      }
    } else if (center->parsed()) {
      const CenterResult res = center_at_height(poly, o.height, o.tol);
      if (csv) {
        SweepEntry row;
        row.height = o.height;
        row.result = res;
        row.volume = cone_volume(poly, o.height);
        row.ratio = isoperimetric_ratio(poly, Apex(res.center, o.height));
        row.equal_angle_residual = equal_angle_residual(poly, res.center, o.height);
        body << io::sweep_csv({row});
      } else {
        emit_json(io::to_json(res, poly));
      }
      if (!res.converged) {
        err << "error: solver did not reach the gradient tolerance\n";
        status = kComputationError;
      }
    } else if (optimal->parsed()) {
      const OptimalCone res = optimal_cone(poly, o.tol, o.tol);
      if (csv) {
        body << "h,center_x,center_y,ratio\r\n"
             << io::format_number(res.height) << "," << io::format_number(res.center.x) << ","
             << io::format_number(res.center.y) << "," << io::format_number(res.ratio) << "\r\n";
      } else {
        emit_json(io::to_json(res, poly));
      }
      if (!res.converged) {
        err << "error: an inner solve did not reach the gradient tolerance\n";
        status = kComputationError;
      }
    } else if (sweep->parsed()) {
      const auto heights = detail::requested_heights(o, {});
      if (heights.empty()) throw Error(ErrorKind::MalformedInput, "sweep needs --heights or --h-min/--h-max/--h-steps");
      const auto rows = height_sweep(poly, heights, o.tol);
      if (o.format == "json") {
        emit_json(io::sweep_json(rows, poly));
      } else {
        body << io::sweep_csv(rows);
      }
      for (const auto& row : rows) {
        if (!row.result) {
          err << "error: h=" << io::format_number(row.height) << ": " << row.error << "\n";
          status = kComputationError;
        } else if (!row.result->converged) {
          err << "error: h=" << io::format_number(row.height) << ": solver did not converge\n";
          status = kComputationError;
        }
      }
    } else if (verify->parsed()) {
      const auto heights = detail::requested_heights(o, {1.0});
      const auto checks = detail::verify_checks(poly, heights, o.tol);
      if (o.format == "json") {
        io::json arr = io::json::array();
        for (const auto& c : checks) arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        emit_json(arr);
      } else if (csv) {
        body << "check,status,detail\r\n";
        for (const auto& c : checks) body << c.name << "," << (c.passed ? "pass" : "fail") << "," << c.detail << "\r\n";
      } else {
        for (const auto& c : checks) body << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << "\n";
      }
      for (const auto& c : checks) {
        if (!c.passed) status = kComputationError;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::is_input_error(e.kind()) ? kInputError : kComputationError;
  }

  if (o.output.empty()) {
    out << body.str();
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kInputError;
    }
    file << body.str();
  }
  return status;
}

}  // namespace coneiso::cli
