#include "cavkin/output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>

#include "cavkin/errors.hpp"

namespace cavkin {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<std::string>& mode_labels) {
  std::string out = "time_s";
  for (const auto& label : mode_labels) {
    out += ',';
    out += label;
  }
  out += '\n';
  for (const auto& sample : traj.samples) {
    out += format_double(sample.time);
    for (double n : sample.occupations) {
      out += ',';
      out += format_double(n);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json quantity(double value, const std::string& unit) {
  return nlohmann::json{{"value", value}, {"unit", unit}};
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

void write_text_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw GuardError("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw GuardError("failed writing '" + path + "'");
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec) throw GuardError("cannot create output directory '" + path + "'");
}

}  // namespace cavkin
