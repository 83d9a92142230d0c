#include "viscoflow/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace viscoflow {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

ConfigMap ConfigMap::load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("config: cannot open " + path);
    std::stringstream buf;
    buf << is.rdbuf();
    return parse(buf.str(), path);
}

ConfigMap ConfigMap::parse(const std::string& text, const std::string& origin) {
    ConfigMap cfg;
    cfg.origin_ = origin;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::runtime_error("config: malformed line " + std::to_string(lineno) +
                                     " in " + origin);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw std::runtime_error("config: empty key or value at line " +
                                     std::to_string(lineno) + " in " + origin);
        }
        cfg.kv_[key] = value;
    }
    return cfg;
}

bool ConfigMap::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string ConfigMap::get_string(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) {
        throw std::runtime_error("config: missing required key '" + key + "' in " + origin_);
    }
    return it->second;
}

std::string ConfigMap::get_string(const std::string& key,
                                  const std::string& fallback) const {
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double ConfigMap::get_real(const std::string& key) const {
    const std::string v = get_string(key);
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw std::runtime_error("config: key '" + key + "' is not a number: " + v);
    }
}

double ConfigMap::get_real(const std::string& key, double fallback) const {
    return has(key) ? get_real(key) : fallback;
}

int ConfigMap::get_int(const std::string& key, int fallback) const {
    if (!has(key)) return fallback;
    const double x = get_real(key);
    const int i = static_cast<int>(x);
    if (static_cast<double>(i) != x) {
        throw std::runtime_error("config: key '" + key + "' is not an integer");
    }
    return i;
}

std::vector<double> ConfigMap::get_real_list(const std::string& key) const {
    const std::string v = get_string(key);
    std::vector<double> out;
    std::istringstream ss(v);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw std::runtime_error("config: key '" + key + "' has a non-numeric entry: " + tok);
        }
    }
    if (out.empty()) throw std::runtime_error("config: key '" + key + "' is an empty list");
    return out;
}

void ConfigMap::validate_keys(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : kv_) {
        if (!allowed.count(key)) {
            throw std::runtime_error("config: unknown key '" + key + "' in " + origin_);
        }
    }
}

}  // namespace viscoflow
