#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace viscoflow {

/// Flat key = value configuration with '#' comments. Unknown keys are
/// rejected by validate_keys so typos fail loudly.
class ConfigMap {
  public:
    static ConfigMap load(const std::string& path);
    static ConfigMap parse(const std::string& text, const std::string& origin = "<string>");

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_real(const std::string& key) const;
    double get_real(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    std::vector<double> get_real_list(const std::string& key) const;

    void validate_keys(const std::set<std::string>& allowed) const;
    const std::map<std::string, std::string>& entries() const { return kv_; }
    std::string origin() const { return origin_; }

  private:
    std::map<std::string, std::string> kv_;
    std::string origin_;
};

}  // namespace viscoflow
