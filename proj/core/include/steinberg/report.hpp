#pragma once

#include <string>
#include <type_traits>
#include <vector>

namespace steinberg::report {

// One verified fact: an identifier, the stable anchor slug naming what the
// value is tied to, the expected and computed values as strings, and the
// verdict.
struct CheckItem {
  std::string check_id;
  std::string anchor;
  std::string expected;
  std::string actual;
  bool pass = false;
};

inline std::string to_display_string(const std::string& s) { return s; }
inline std::string to_display_string(const char* s) { return s; }
inline std::string to_display_string(bool b) { return b ? "true" : "false"; }
template <typename T, typename = std::enable_if_t<std::is_integral_v<T>>>
std::string to_display_string(T v) {
  return std::to_string(v);
}
template <typename T>
std::string to_display_string(const std::vector<T>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_display_string(v[i]);
  }
  return s + ")";
}

struct VerificationReport {
  std::string suite;
  std::vector<CheckItem> items;
  double wall_ms = 0.0;

  bool overall() const;
  void add(std::string check_id, std::string anchor, std::string expected,
           std::string actual);

  template <typename T, typename U>
  void add_eq(const std::string& check_id, const std::string& anchor, const T& expected,
              const U& actual) {
    add(check_id, anchor, to_display_string(expected), to_display_string(actual));
  }

  // Deterministic serializations: fixed key order; the wall time is omitted
  // unless requested so byte-identical runs stay byte-identical.
  std::string to_json(bool with_time = false, int indent = 2) const;
  std::string to_markdown(bool with_time = false) const;
  static VerificationReport from_json(const std::string& text);
};

}  // namespace steinberg::report
