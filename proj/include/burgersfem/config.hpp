#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "burgersfem/convergence.hpp"
#include "burgersfem/models.hpp"
#include "burgersfem/stepper.hpp"

namespace burgersfem {

// Plain key=value configuration: one key per line, '#' starts a comment,
// later assignments win. Command-line overrides reuse the same syntax.
class KeyValueConfig {
  public:
    static KeyValueConfig from_file(const std::string& path);
    static KeyValueConfig from_string(const std::string& text);

    void apply_override(const std::string& key_equals_value);

    bool has(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<int> get_int_list(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;

    // Rejects keys outside the allowed set (catches config typos early).
    void check_known_keys(const std::set<std::string>& allowed) const;

  private:
    void assign_line(const std::string& line, const std::string& where);
    std::map<std::string, std::string> values_;
};

// Typed views over a parsed config; every numeric key is validated before a
// run starts (ConfigError on violation).
ProblemSpec problem_from_config(const KeyValueConfig& config);
ThetaConfig theta_from_config(const KeyValueConfig& config);
int mesh_resolution_from_config(const KeyValueConfig& config);
StudyPlan plan_from_config(const KeyValueConfig& config, StudyAxis axis);

}  // namespace burgersfem
