#include "aoi/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "aoi/errors.hpp"

namespace aoi::io {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw DomainError(std::string("instance: missing field '") + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number()) throw DomainError(std::string("instance: field '") + key + "' must be a number");
  return v.get<double>();
}

std::string join(const std::vector<double>& values, char sep = ' ') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += format_number(values[i]);
  }
  return out;
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

DistortionSpec parse_distortion(const json& doc) {
  if (!doc.is_object()) throw DomainError("distortion: expected an object");
  const auto kind = doc.value("kind", std::string("exponential"));
  DistortionSpec spec;
  if (kind == "exponential") {
    spec.kind = DistortionKind::Exponential;
  } else if (kind == "inverse-linear" || kind == "inverse_linear") {
    spec.kind = DistortionKind::InverseLinear;
  } else {
    throw DomainError("distortion: unknown kind '" + kind + "'");
  }
  spec.a = number_field(doc, "a");
  spec.b = number_field(doc, "b");
  spec.d = number_field(doc, "d");
  spec.c_max = number_field(doc, "c_max");
  spec.validate();
  return spec;
}

DistortionSpec distortion_preset(const std::string& name) {
  if (name == "tradeoff") return tradeoff_preset();
  if (name == "unit") return unit_preset();
  throw DomainError("unknown distortion preset '" + name + "'");
}

ProblemInstance parse_instance(const json& doc) {
  if (!doc.is_object()) throw DomainError("instance: expected a JSON object");
  ProblemInstance inst;
  inst.T = number_field(doc, "T");
  const double n = number_field(doc, "N");
  if (n != std::floor(n) || n < 1 || n > 1e6) throw DomainError("instance: N must be a positive integer");
  inst.N = static_cast<int>(n);

  if (!doc.contains("mode") || !doc.at("mode").is_object()) {
    throw DomainError("instance: missing 'mode' object");
  }
  const auto& mode = doc.at("mode");
  const auto type = mode.value("type", std::string());
  if (type == "constant") {
    const bool direct = mode.contains("c");
    const bool budget = mode.contains("beta") || mode.contains("distortion");
    if (direct == budget) {
      throw DomainError("constant mode: give either 'c' or 'beta' with 'distortion'");
    }
    if (direct) {
      inst.mode = ConstantMode{number_field(mode, "c")};
    } else {
      if (!mode.contains("distortion")) throw DomainError("constant mode: 'beta' needs 'distortion'");
      const auto spec = parse_distortion(mode.at("distortion"));
      inst.mode = ConstantMode{min_processing_for(spec, number_field(mode, "beta"))};
    }
  } else if (type == "inverse" || type == "inverse-age") {
    inst.mode = InverseAgeMode{number_field(mode, "alpha")};
  } else if (type == "proportional" || type == "proportional-age") {
    inst.mode = ProportionalAgeMode{number_field(mode, "c"), number_field(mode, "alpha")};
  } else {
    throw DomainError("instance: unknown mode type '" + type + "'");
  }
  inst.validate();
  return inst;
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("instance file '" + path + "': " + e.what());
  }
  return parse_instance(doc);
}

json to_json(const ProblemInstance& instance, const Solution& solution) {
  const auto& sched = solution.schedule;
  json distances = json::object();
  for (const auto& [name, value] : solution.regime.boundary_distances) distances[name] = value;
  return json{{"T", instance.T},
              {"N", instance.N},
              {"mode", std::string(to_string(solution.regime.mode))},
              {"branch", std::string(to_string(solution.regime.branch))},
              {"condition", solution.regime.condition},
              {"boundary_distances", distances},
              {"y", sched.y},
              {"c", sched.c},
              {"s", request_gaps(sched)},
              {"total_age", solution.total_age},
              {"average_age", solution.total_age / instance.T}};
}

void write_solution_table(std::ostream& out, const ProblemInstance& instance,
                          const Solution& solution) {
  const auto& sched = solution.schedule;
  out << "mode       " << to_string(solution.regime.mode) << "\n"
      << "branch     " << to_string(solution.regime.branch) << "  (" << solution.regime.condition
      << ")\n"
      << "y          " << join(sched.y) << "\n"
      << "c          " << join(sched.c) << "\n"
      << "s          " << join(request_gaps(sched)) << "\n"
      << "total_age  " << format_number(solution.total_age) << "\n"
      << "avg_age    " << format_number(solution.total_age / instance.T) << "\n";
}

void write_solution_csv(std::ostream& out, const ProblemInstance& instance,
                        const Solution& solution) {
  const auto& sched = solution.schedule;
  out << "field,index,value\n";
  out << "mode,," << to_string(solution.regime.mode) << "\n";
  out << "branch,," << to_string(solution.regime.branch) << "\n";
  auto vec = [&](const char* name, const std::vector<double>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      out << name << ',' << i + 1 << ',' << format_number(v[i]) << "\n";
    }
  };
  vec("y", sched.y);
  vec("c", sched.c);
  vec("s", request_gaps(sched));
  out << "total_age,," << format_number(solution.total_age) << "\n";
  out << "avg_age,," << format_number(solution.total_age / instance.T) << "\n";
}

void write_solution_jsonl(std::ostream& out, const ProblemInstance& instance,
                          const Solution& solution) {
  out << to_json(instance, solution).dump() << "\n";
}

Schedule schedule_from_json(const json& record) {
  Schedule sched;
  sched.y = record.at("y").get<std::vector<double>>();
  sched.c = record.at("c").get<std::vector<double>>();
  sched.check_shape();
  return sched;
}

void write_trajectory_csv(std::ostream& out, const std::vector<AgeSample>& rows) {
  out << "t,age\n";
  for (const auto& r : rows) out << format_number(r.t) << ',' << format_number(r.age) << "\n";
}

void write_trajectory_svg(std::ostream& out, const AgeTrajectory& traj) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 60, kRight = 20, kTop = 20, kBottom = 50;
  const auto& bp = traj.breakpoints;
  double max_age = 0.0;
  for (const auto& p : bp) max_age = std::max({max_age, p.age_before, p.age_after});
  if (max_age <= 0.0) max_age = 1.0;
  const double horizon = traj.horizon > 0.0 ? traj.horizon : 1.0;
  auto px = [&](double t) { return kLeft + t / horizon * (kWidth - kLeft - kRight); };
  auto py = [&](double a) { return kHeight - kBottom - a / max_age * (kHeight - kTop - kBottom); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "  <g stroke=\"black\" stroke-width=\"1\">\n"
      << "    <line x1=\"" << kLeft << "\" y1=\"" << py(0) << "\" x2=\"" << px(horizon) << "\" y2=\""
      << py(0) << "\"/>\n"
      << "    <line x1=\"" << kLeft << "\" y1=\"" << py(0) << "\" x2=\"" << kLeft << "\" y2=\""
      << py(max_age) << "\"/>\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double t = horizon * k / kTicks;
    const double a = max_age * k / kTicks;
    out << "    <line x1=\"" << px(t) << "\" y1=\"" << py(0) << "\" x2=\"" << px(t) << "\" y2=\""
        << py(0) + 5 << "\"/>\n"
        << "    <line x1=\"" << kLeft - 5 << "\" y1=\"" << py(a) << "\" x2=\"" << kLeft
        << "\" y2=\"" << py(a) << "\"/>\n";
  }
  out << "  </g>\n  <g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int k = 0; k <= kTicks; ++k) {
    const double t = horizon * k / kTicks;
    const double a = max_age * k / kTicks;
    out << "    <text x=\"" << px(t) << "\" y=\"" << py(0) + 18
        << "\" text-anchor=\"middle\">" << format_number(t) << "</text>\n"
        << "    <text x=\"" << kLeft - 8 << "\" y=\"" << py(a) + 4 << "\" text-anchor=\"end\">"
        << format_number(a) << "</text>\n";
  }
  out << "    <text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">t</text>\n"
      << "    <text x=\"15\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\">a(t)</text>\n  </g>\n";

  // One polyline per stretch between receipts.
  out << "  <g fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\">\n";
  std::vector<std::pair<double, double>> points;
  auto flush = [&]() {
    if (points.size() < 2) {
      points.clear();
      return;
    }
    out << "    <polyline points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) out << ' ';
      out << format_number(px(points[i].first)) << ',' << format_number(py(points[i].second));
    }
    out << "\"/>\n";
    points.clear();
  };
  for (std::size_t k = 0; k < bp.size(); ++k) {
    const auto& p = bp[k];
    if (p.kind == BreakpointKind::Receipt && k > 0) {
      points.emplace_back(p.t, p.age_before);
      flush();
    }
    points.emplace_back(p.t, p.age_after);
  }
  if (!bp.empty() && bp.back().t < traj.horizon) {
    points.emplace_back(traj.horizon, bp.back().age_after + (traj.horizon - bp.back().t));
  }
  flush();
  out << "  </g>\n</svg>\n";
}

void write_sweep_csv(std::ostream& out, const std::vector<TradeoffRow>& rows, double T) {
  out << "beta,c_min,total_age,avg_age,regime\n";
  for (const auto& row : rows) {
    out << format_number(row.beta) << ',';
    if (row.c_min) out << format_number(*row.c_min);
    out << ',';
    if (row.solution) {
      out << format_number(row.solution->total_age) << ','
          << format_number(row.solution->total_age / T) << ','
          << to_string(row.solution->regime.branch);
    } else {
      out << ",,infeasible";
    }
    out << "\n";
  }
}

}  // namespace aoi::io
