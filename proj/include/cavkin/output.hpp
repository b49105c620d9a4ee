#ifndef CAVKIN_OUTPUT_HPP
#define CAVKIN_OUTPUT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cavkin/trajectory.hpp"

namespace cavkin {

// Shortest decimal form that round-trips the double exactly.
std::string format_double(double value);

// One row per sample time, one column per mode; all numbers full precision.
std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<std::string>& mode_labels);

// Summary field with an explicit unit.
nlohmann::json quantity(double value, const std::string& unit);

// FNV-1a 64-bit over the canonical config text, as fixed-width hex.
std::string fnv1a_hex(const std::string& text);

void write_text_file(const std::string& path, const std::string& contents);
void ensure_directory(const std::string& path);

}  // namespace cavkin

#endif
