#ifndef ENTROPYLAB_CONFIG_HPP
#define ENTROPYLAB_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entropylab/errors.hpp"
#include "entropylab/types.hpp"

// Flat key = value experiment configuration. '#' starts a comment, later
// assignments win (command-line overrides land last). Typed getters mark
// keys consumed; anything left unconsumed is rejected with its line
// number, so typos cannot silently fall back to defaults.
namespace entropylab {

class ConfigMap {
 public:
  ConfigMap() = default;

  static ConfigMap from_file(const std::string& path);
  static ConfigMap from_text(const std::string& text,
                             const std::string& origin = "<text>");

  // --set KEY=VALUE; later wins over the file and earlier overrides.
  void set_override(const std::string& key, const std::string& value);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::string get_string(const std::string& key, const std::string& fallback);
  Real get_real(const std::string& key, Real fallback);
  long get_int(const std::string& key, long fallback);
  bool get_bool(const std::string& key, bool fallback);
  // Comma-separated reals, or "a:b:k" for k evenly spaced values.
  std::vector<Real> get_real_grid(const std::string& key,
                                  const std::string& fallback);

  // Keys that were never consumed are configuration errors.
  void require_all_consumed() const;

  // Resolved key -> value view (consumed or not), for manifest echoes.
  std::map<std::string, std::string> snapshot() const;

 private:
  struct Entry {
    std::string value;
    std::string origin;  // "file:line" or "--set"
    bool consumed = false;
  };
  std::optional<std::string> take(const std::string& key);
  std::map<std::string, Entry> entries_;
};

}  // namespace entropylab

#endif  // ENTROPYLAB_CONFIG_HPP
