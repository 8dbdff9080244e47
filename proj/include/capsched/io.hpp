#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "capsched/abstract_sinr.hpp"
#include "capsched/model.hpp"

namespace capsched::io {

// Canonical text formats. Objects have sorted keys, two-space indentation, and
// every real number is printed with 17 significant digits, so a value survives
// a write/read/write cycle byte for byte. All parse errors raise InputError.

/// {"links": [{"id", "power"?, "rx", "ry", "sx", "sy"}], "params": {"alpha", "beta",
/// "default_power", "noise"}}
std::string write_instance(const Instance &instance);
Instance read_instance(std::string_view text);

/// {"slots": [[id, ...], ...]}
std::string write_schedule(const Schedule &schedule);
Schedule read_schedule(std::string_view text);

/// {"entries": [row-major], "n", "threshold"}
std::string write_gain_matrix(const abstract::GainMatrix &matrix);
abstract::GainMatrix read_gain_matrix(std::string_view text);

/// "n m" header line followed by m lines "u v", 0-indexed.
std::string write_edge_list(const abstract::Graph &graph);
abstract::Graph read_edge_list(std::string_view text);

/// Oracle results: {"mode", "p"?, "size", "slot"} for subset searches and
/// {"mode", "p"?, "slot_count", "slots"} for minimum schedules.
std::string write_oracle_subset(std::string_view mode, std::optional<double> p, const Slot &slot);
std::string write_oracle_schedule(std::optional<double> p, const Schedule &schedule);

/// %.17g, the representation used by every canonical writer.
std::string format_real(double value);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view contents);

} // namespace capsched::io
