#include "apu/report.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace apu {

using ordered_json = nlohmann::ordered_json;

bool ExperimentReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::size_t ExperimentReport::failed_checks() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.pass) ++n;
  return n;
}

std::string ExperimentReport::to_json() const {
  ordered_json j;
  j["command"] = command;
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : params) p[k] = v;
  j["params"] = p;
  j["seed"] = seed;
  ordered_json c = ordered_json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  j["counts"] = c;
  ordered_json b = ordered_json::object();
  for (const auto& [k, v] : bounds) b[k] = v;
  j["bounds"] = b;
  ordered_json ch = ordered_json::array();
  for (const auto& x : checks)
    ch.push_back(ordered_json{{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
  j["checks"] = ch;
  j["pass"] = all_pass();
  if (wall_ms) j["wall_ms"] = *wall_ms;
  return j.dump(2) + "\n";
}

namespace {

std::string csv_quote(const std::string& s) {
  bool needs = s.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string ExperimentReport::to_csv() const {
  std::string out = "section,key,value\r\n";
  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    out += csv_quote(a) + "," + csv_quote(b) + "," + csv_quote(c) + "\r\n";
  };
  row("meta", "command", command);
  for (const auto& [k, v] : params) row("param", k, v);
  row("meta", "seed", std::to_string(seed));
  for (const auto& [k, v] : counts) row("count", k, v);
  for (const auto& [k, v] : bounds) row("bound", k, v);
  for (const auto& c : checks) row("check", c.name, c.pass ? "pass" : "FAIL: " + c.detail);
  row("meta", "pass", all_pass() ? "true" : "false");
  if (wall_ms) row("meta", "wall_ms", std::to_string(*wall_ms));
  return out;
}

void ExperimentReport::write_file(const std::string& path, const std::string& format) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  if (format == "json") out << to_json();
  else if (format == "csv") out << to_csv();
  else throw std::invalid_argument("unknown report format: " + format);
  if (!out) throw std::runtime_error("write failed: " + path);
}

ExperimentReport ExperimentReport::from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  ExperimentReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params.emplace_back(k, v.get<std::string>());
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("counts").items()) r.counts.emplace_back(k, v.get<std::string>());
  for (const auto& [k, v] : j.at("bounds").items()) r.bounds.emplace_back(k, v.get<std::string>());
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                        c.at("detail").get<std::string>()});
  if (j.contains("wall_ms")) r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

}  // namespace apu
