#include "entropylab/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace entropylab {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

Real parse_real(const std::string& text, const std::string& key,
                const std::string& origin) {
  const std::string v = trim(text);
  Real out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(origin + ": key '" + key + "': expected a number, got '" +
                      v + "'");
  return out;
}

}  // namespace

ConfigMap ConfigMap::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str(), path);
}

ConfigMap ConfigMap::from_text(const std::string& text,
                               const std::string& origin) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(line_no) +
                        ": empty key");
    map.entries_[key] =
        Entry{value, origin + ":" + std::to_string(line_no), false};
  }
  return map;
}

void ConfigMap::set_override(const std::string& key, const std::string& value) {
  const std::string k = trim(key);
  if (k.empty()) throw ConfigError("--set: empty key");
  entries_[k] = Entry{trim(value), "--set", false};
}

std::optional<std::string> ConfigMap::take(const std::string& key) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  it->second.consumed = true;
  return it->second.value;
}

std::string ConfigMap::get_string(const std::string& key,
                                  const std::string& fallback) {
  auto v = take(key);
  return v ? *v : fallback;
}

Real ConfigMap::get_real(const std::string& key, Real fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  return parse_real(it->second.value, key, it->second.origin);
}

long ConfigMap::get_int(const std::string& key, long fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  const std::string v = trim(it->second.value);
  long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw ConfigError(it->second.origin + ": key '" + key +
                      "': expected an integer, got '" + v + "'");
  return out;
}

bool ConfigMap::get_bool(const std::string& key, bool fallback) {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  it->second.consumed = true;
  std::string v = trim(it->second.value);
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(it->second.origin + ": key '" + key +
                    "': expected a boolean, got '" + v + "'");
}

std::vector<Real> ConfigMap::get_real_grid(const std::string& key,
                                           const std::string& fallback) {
  std::string text = fallback;
  std::string origin = "<default>";
  auto it = entries_.find(key);
  if (it != entries_.end()) {
    it->second.consumed = true;
    text = it->second.value;
    origin = it->second.origin;
  }
  // "a:b:k" expands to k evenly spaced values from a to b inclusive.
  if (std::count(text.begin(), text.end(), ':') == 2) {
    std::istringstream in(text);
    std::string a, b, k;
    std::getline(in, a, ':');
    std::getline(in, b, ':');
    std::getline(in, k, ':');
    const Real lo = parse_real(a, key, origin);
    const Real hi = parse_real(b, key, origin);
    const long count = static_cast<long>(parse_real(k, key, origin));
    if (count < 1)
      throw ConfigError(origin + ": key '" + key + "': grid count must be >= 1");
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      const Real s = count == 1 ? 0.0
                                : static_cast<Real>(i) /
                                      static_cast<Real>(count - 1);
      out.push_back(lo + s * (hi - lo));
    }
    return out;
  }
  std::vector<Real> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    out.push_back(parse_real(item, key, origin));
  }
  if (out.empty())
    throw ConfigError(origin + ": key '" + key + "': empty value list");
  return out;
}

void ConfigMap::require_all_consumed() const {
  std::string unknown;
  for (const auto& [key, entry] : entries_) {
    if (entry.consumed) continue;
    if (!unknown.empty()) unknown += "; ";
    unknown += "'" + key + "' (" + entry.origin + ")";
  }
  if (!unknown.empty())
    throw ConfigError("unknown config keys: " + unknown);
}

std::map<std::string, std::string> ConfigMap::snapshot() const {
  std::map<std::string, std::string> out;
  for (const auto& [key, entry] : entries_) out[key] = entry.value;
  return out;
}

}  // namespace entropylab
