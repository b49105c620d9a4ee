#ifndef CAVKIN_ERRORS_HPP
#define CAVKIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cavkin {

// Physics-domain violation (negative frequency, below rest energy, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Resource/stability guard tripped (enumeration size, integrator dt, ...).
// The CLI maps this to exit code 3.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent run configuration. The CLI maps this to exit
// code 2 and reports the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what), field_path_(field_path) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

}  // namespace cavkin

#endif
