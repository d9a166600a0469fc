#include "steinberg/report.hpp"

#include <nlohmann/json.hpp>

#include "steinberg/errors.hpp"

namespace steinberg::report {

using nlohmann::json;
using nlohmann::ordered_json;

bool VerificationReport::overall() const {
  for (const CheckItem& item : items)
    if (!item.pass) return false;
  return true;
}

void VerificationReport::add(std::string check_id, std::string anchor, std::string expected,
                             std::string actual) {
  const bool pass = expected == actual;
  items.push_back(
      {std::move(check_id), std::move(anchor), std::move(expected), std::move(actual), pass});
}

std::string VerificationReport::to_json(bool with_time, int indent) const {
  ordered_json j;
  j["suite"] = suite;
  j["overall"] = overall();
  if (with_time) j["wall_ms"] = wall_ms;
  j["items"] = ordered_json::array();
  for (const CheckItem& item : items) {
    ordered_json entry;
    entry["check_id"] = item.check_id;
    entry["anchor"] = item.anchor;
    entry["expected"] = item.expected;
    entry["actual"] = item.actual;
    entry["pass"] = item.pass;
    j["items"].push_back(std::move(entry));
  }
  return j.dump(indent);
}

std::string VerificationReport::to_markdown(bool with_time) const {
  std::string md = "## " + suite + "\n\n";
  md += "| check | anchor | expected | actual | pass |\n";
  md += "|---|---|---|---|---|\n";
  for (const CheckItem& item : items) {
    md += "| " + item.check_id + " | " + item.anchor + " | " + item.expected + " | " +
          item.actual + " | " + (item.pass ? "yes" : "NO") + " |\n";
  }
  md += "\noverall: ";
  md += overall() ? "pass" : "FAIL";
  md += "\n";
  if (with_time) md += "wall_ms: " + std::to_string(wall_ms) + "\n";
  return md;
}

VerificationReport VerificationReport::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
  for (const auto& entry : j.at("items")) {
    CheckItem item;
    item.check_id = entry.at("check_id").get<std::string>();
    item.anchor = entry.at("anchor").get<std::string>();
    item.expected = entry.at("expected").get<std::string>();
    item.actual = entry.at("actual").get<std::string>();
    item.pass = entry.at("pass").get<bool>();
    r.items.push_back(std::move(item));
  }
  return r;
}

}  // namespace steinberg::report
