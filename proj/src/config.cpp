#include "burgersfem/config.hpp"

#include <fstream>
#include <sstream>

#include "burgersfem/errors.hpp"

namespace burgersfem {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    double parsed = 0.0;
    try {
        parsed = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    }
    if (consumed != value.size())
        throw ConfigError("key '" + key + "': expected a number, got '" + value + "'");
    return parsed;
}

int parse_int(const std::string& key, const std::string& value) {
    std::size_t consumed = 0;
    long parsed = 0;
    try {
        parsed = std::stol(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    }
    if (consumed != value.size())
        throw ConfigError("key '" + key + "': expected an integer, got '" + value + "'");
    return static_cast<int>(parsed);
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

}  // namespace

void KeyValueConfig::assign_line(const std::string& raw, const std::string& where) {
    std::string line = raw;
    const auto comment = line.find('#');
    if (comment != std::string::npos) line.erase(comment);
    line = trim(line);
    if (line.empty()) return;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw ConfigError(where + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key in '" + line + "'");
    values_[key] = value;
}

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) throw ConfigError("cannot open config file '" + path + "'");
    KeyValueConfig config;
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        config.assign_line(line, path + ":" + std::to_string(lineno));
    }
    return config;
}

KeyValueConfig KeyValueConfig::from_string(const std::string& text) {
    KeyValueConfig config;
    std::stringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        config.assign_line(line, "line " + std::to_string(lineno));
    }
    return config;
}

void KeyValueConfig::apply_override(const std::string& key_equals_value) {
    assign_line(key_equals_value, "override");
}

bool KeyValueConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string KeyValueConfig::require_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing required key '" + key + "'");
    return it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_double(key, it->second);
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_int(key, it->second);
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& value = it->second;
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<int> KeyValueConfig::get_int_list(const std::string& key) const {
    std::vector<int> items;
    for (const std::string& item : split_list(require_string(key)))
        items.push_back(parse_int(key, item));
    return items;
}

std::vector<double> KeyValueConfig::get_double_list(const std::string& key) const {
    std::vector<double> items;
    for (const std::string& item : split_list(require_string(key)))
        items.push_back(parse_double(key, item));
    return items;
}

void KeyValueConfig::check_known_keys(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : values_)
        if (allowed.count(key) == 0) throw ConfigError("unknown config key '" + key + "'");
}

ProblemSpec problem_from_config(const KeyValueConfig& config) {
    ProblemSpec problem;
    const int dimension = config.get_int("dimension", 1);
    if (dimension != 1 && dimension != 2) throw ConfigError("dimension must be 1 or 2");
    problem.dim = dimension == 1 ? Dim::One : Dim::Two;
    problem.params.nu = config.get_double("nu", 0.1);
    problem.params.w_d = config.get_double("w_d", 0.0);
    problem.params.c0 = config.get_double("c0", 0.0);
    problem.params.c1 = config.get_double("c1", 0.0);
    problem.params.c2 = config.get_double("c2", 0.0);
    problem.controlled = config.get_bool("controlled", true);
    problem.initial_condition = InitialCondition::parse(config.get_string("initial_condition", "zero"));
    problem.validate();
    return problem;
}

ThetaConfig theta_from_config(const KeyValueConfig& config) {
    ThetaConfig theta;
    theta.theta = config.get_double("theta", 1.0);
    const int steps = config.get_int("M", 100);
    const double final_time = config.get_double("T", 1.0);
    if (steps < 1) throw ConfigError("M must be at least 1");
    if (!(final_time > 0.0)) throw ConfigError("T must be positive");
    theta.steps = steps;
    theta.k = final_time / steps;
    theta.newton_tol = config.get_double("newton_tol", 1e-12);
    theta.newton_max_iter = config.get_int("newton_max_iter", 25);
    theta.validate();
    return theta;
}

int mesh_resolution_from_config(const KeyValueConfig& config) {
    const int n = config.get_int("n", 30);
    if (n < 1) throw ConfigError("n must be at least 1");
    return n;
}

StudyPlan plan_from_config(const KeyValueConfig& config, StudyAxis axis) {
    StudyPlan plan;
    plan.axis = axis;
    plan.problem = problem_from_config(config);
    plan.resolutions = config.get_int_list("resolutions");
    plan.theta = config.get_double("theta", 1.0);
    plan.final_time = config.get_double("T", 1.0);
    plan.ref_factor = config.get_int("ref_factor", 8);
    plan.fixed_steps = config.get_int("M", 100);
    plan.fixed_elements = config.get_int("n", 30);
    plan.validate();
    return plan;
}

}  // namespace burgersfem
