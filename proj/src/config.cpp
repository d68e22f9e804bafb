#include "fracsde/config.hpp"

#include <fstream>
#include <sstream>

namespace fracsde {

namespace {
std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
} // namespace

void RunConfig::load_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot read config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        set(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw config_error("config: empty key");
    kv_[key] = value;
    effective_[key] = value;
}

std::string RunConfig::get_str(const std::string& key, const std::string& def) const {
    const auto it = kv_.find(key);
    const std::string v = (it == kv_.end()) ? def : it->second;
    effective_[key] = v;
    return v;
}

double RunConfig::get_double(const std::string& key, double def) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
        std::ostringstream os;
        os << def;
        effective_[key] = os.str();
        return def;
    }
    try {
        const double v = std::stod(it->second);
        effective_[key] = it->second;
        return v;
    } catch (...) {
        throw config_error("config: '" + key + "' is not a number: " + it->second);
    }
}

int RunConfig::get_int(const std::string& key, int def) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
        effective_[key] = std::to_string(def);
        return def;
    }
    try {
        const int v = std::stoi(it->second);
        effective_[key] = it->second;
        return v;
    } catch (...) {
        throw config_error("config: '" + key + "' is not an integer: " + it->second);
    }
}

std::uint64_t RunConfig::get_seed(const std::string& key, std::uint64_t def) const {
    const auto it = kv_.find(key);
    if (it == kv_.end()) {
        effective_[key] = std::to_string(def);
        return def;
    }
    try {
        const std::uint64_t v = std::stoull(it->second);
        effective_[key] = it->second;
        return v;
    } catch (...) {
        throw config_error("config: '" + key + "' is not a seed: " + it->second);
    }
}

std::string RunConfig::serialize() const {
    std::ostringstream os;
    for (const auto& [k, v] : effective_) os << k << " = " << v << '\n';
    return os.str();
}

std::string RunConfig::config_hash() const {
    const std::string s = serialize();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace fracsde
