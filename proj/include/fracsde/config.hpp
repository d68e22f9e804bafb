#ifndef FRACSDE_CONFIG_HPP
#define FRACSDE_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>

#include "fracsde/errors.hpp"

namespace fracsde {

// Flat dotted-key configuration ("noise.family = fbm").  File values are
// loaded first, CLI overrides after; every read (including defaults) is
// echoed so the manifest records the effective configuration.
class RunConfig {
  public:
    RunConfig() = default;

    void load_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string get_str(const std::string& key, const std::string& def) const;
    double get_double(const std::string& key, double def) const;
    int get_int(const std::string& key, int def) const;
    std::uint64_t get_seed(const std::string& key, std::uint64_t def) const;

    // effective values: explicit settings plus every defaulted lookup
    const std::map<std::string, std::string>& effective() const { return effective_; }
    std::string serialize() const; // "key = value" lines, sorted
    // FNV-1a of the serialized effective configuration
    std::string config_hash() const;

  private:
    std::map<std::string, std::string> kv_;
    mutable std::map<std::string, std::string> effective_;
};

} // namespace fracsde

#endif
