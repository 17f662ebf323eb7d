#ifndef NQS_CONFIG_HPP
#define NQS_CONFIG_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nqs/common.hpp"

namespace nqs {

// Flat TOML-style run configuration: [section] headers plus key = value
// lines. Values may be quoted strings, bare words, numbers or booleans.
// Keys are addressed as "section.key". Unknown keys are rejected against a
// per-command whitelist before a run starts.
class RunConfig {
 public:
  static RunConfig parse(std::istream& is);
  static RunConfig parse_file(const std::string& path);

  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::optional<long long> get_optional_int(const std::string& key) const;
  std::optional<double> get_optional_double(const std::string& key) const;

  // Comma-separated integer list ("1,2,3").
  std::vector<int> get_int_list(const std::string& key) const;

  // Rejects any key outside the allowed set (ConfigError names the key).
  void restrict_keys(const std::set<std::string>& allowed) const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace nqs

#endif  // NQS_CONFIG_HPP
