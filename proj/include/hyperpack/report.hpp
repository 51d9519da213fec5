#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperpack/decide.hpp"

namespace hyperpack {

// Ordered key/value fields. Keys starting with "time." hold wall-clock
// seconds and are the only fields allowed to differ between runs.
class RunReport {
 public:
  void set(const std::string& key, std::string value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
  template <typename T>
    requires std::is_arithmetic_v<T>
  void set(const std::string& key, T value) {
    set(key, std::to_string(value));
  }
  void set_time(const std::string& stage, double seconds);

  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& fields() const noexcept { return fields_; }

  // key=value lines, LF-terminated
  std::string machine() const;
  // aligned "key : value" lines carrying the same fields
  std::string human() const;
  // the machine rendering without time.* lines
  std::string machine_without_timing() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

RunReport parse_machine(const std::string& text);

// Adds the decision's verdict, route and certificate fields under the
// given prefix (usually empty).
void add_decision(RunReport& report, const Decision& d, const std::string& prefix = "");

std::string join_vertices(const VertexSet& s);

}  // namespace hyperpack
