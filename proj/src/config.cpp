#include "nqs/config.hpp"

#include <fstream>
#include <sstream>

namespace nqs {

namespace {

std::string trim(const std::string& s) {
  const std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RunConfig RunConfig::parse(std::istream& is) {
  RunConfig cfg;
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("config line " + std::to_string(line_no) + ": unterminated section");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError("config line " + std::to_string(line_no) + ": empty section name");
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty key or value");
    }
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full) != 0) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key " + full);
    }
    cfg.values_[full] = value;
  }
  return cfg;
}

RunConfig RunConfig::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  return parse(is);
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) != 0; }

std::string RunConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key: " + key);
  return it->second;
}

std::string RunConfig::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

double RunConfig::get_double(const std::string& key) const {
  const std::string raw = get_string(key);
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(raw, &used);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " is not a number: " + raw);
  }
  if (used != raw.size()) throw ConfigError("config key " + key + " is not a number: " + raw);
  return out;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long long RunConfig::get_int(const std::string& key) const {
  const std::string raw = get_string(key);
  std::size_t used = 0;
  long long out = 0;
  try {
    out = std::stoll(raw, &used);
  } catch (const std::exception&) {
    throw ConfigError("config key " + key + " is not an integer: " + raw);
  }
  if (used != raw.size()) throw ConfigError("config key " + key + " is not an integer: " + raw);
  return out;
}

long long RunConfig::get_int(const std::string& key, long long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string raw = get_string(key);
  if (raw == "true") return true;
  if (raw == "false") return false;
  throw ConfigError("config key " + key + " must be true/false: " + raw);
}

std::optional<long long> RunConfig::get_optional_int(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return get_int(key);
}

std::optional<double> RunConfig::get_optional_double(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return get_double(key);
}

std::vector<int> RunConfig::get_int_list(const std::string& key) const {
  const std::string raw = get_string(key);
  std::vector<int> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ConfigError("config key " + key + " has a non-integer entry: " + item);
    }
  }
  if (out.empty()) throw ConfigError("config key " + key + " lists no integers");
  return out;
}

void RunConfig::restrict_keys(const std::set<std::string>& allowed) const {
  for (const auto& [key, value] : values_) {
    (void)value;
    if (allowed.count(key) == 0) {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

}  // namespace nqs
