#pragma once

// File formats: JSON instance input, solution / trajectory / sweep output.
//
// Instance file: a single JSON object
//   {"T": 10, "N": 3,
//    "mode": {"type": "constant" | "inverse" | "proportional",
//             "c": ..., "alpha": ...,
//             "beta": ..., "distortion": {"kind": "exponential" | "inverse-linear",
//                                         "a": ..., "b": ..., "d": ..., "c_max": ...}}}
// For constant mode, beta + distortion may replace c; the floor is then the
// smallest processing time meeting the budget.
//
// Numbers are written with 12 significant digits, '.' as decimal separator.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "aoi/closed_form.hpp"
#include "aoi/distortion.hpp"
#include "aoi/model.hpp"
#include "aoi/trajectory.hpp"
#include "aoi/tradeoff.hpp"

namespace aoi::io {

/// Throws DomainError on malformed or out-of-domain fields, InfeasibleDistortion
/// when a budget cannot be met.
ProblemInstance parse_instance(const nlohmann::json& doc);
ProblemInstance load_instance(const std::string& path);

DistortionSpec parse_distortion(const nlohmann::json& doc);
/// "tradeoff" or "unit".
DistortionSpec distortion_preset(const std::string& name);

std::string format_number(double value);

nlohmann::json to_json(const ProblemInstance& instance, const Solution& solution);

void write_solution_table(std::ostream& out, const ProblemInstance& instance,
                          const Solution& solution);
/// Long format: field,index,value.
void write_solution_csv(std::ostream& out, const ProblemInstance& instance,
                        const Solution& solution);
void write_solution_jsonl(std::ostream& out, const ProblemInstance& instance,
                          const Solution& solution);
/// Reads back one json-lines record into a schedule.
Schedule schedule_from_json(const nlohmann::json& record);

/// Columns t,age; a receipt contributes two rows with the same t.
void write_trajectory_csv(std::ostream& out, const std::vector<AgeSample>& rows);
/// Standalone SVG: axes, tick labels, one polyline per continuous segment.
void write_trajectory_svg(std::ostream& out, const AgeTrajectory& traj);

/// Columns beta,c_min,total_age,avg_age,regime; unattainable rows carry
/// regime "infeasible" and empty numeric fields.
void write_sweep_csv(std::ostream& out, const std::vector<TradeoffRow>& rows, double T);

}  // namespace aoi::io
