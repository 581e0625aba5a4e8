#include "fock/config.hpp"
#include "fock/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fock {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

Config Config::parse(std::istream& in, const std::string& name)
{
    Config cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw validation_error(name + ":" + std::to_string(lineno) +
                                   ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw validation_error(name + ":" + std::to_string(lineno) + ": empty key");
        cfg.kv_[key] = value;
    }
    return cfg;
}

Config Config::from_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open config file: " + path);
    return parse(in, path);
}

void Config::set(const std::string& key, const std::string& value) { kv_[key] = value; }

bool Config::has(const std::string& key) const { return kv_.count(key) > 0; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const
{
    auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw validation_error("config key '" + key + "': cannot parse number '" +
                               it->second + "'");
    }
}

int Config::get_int(const std::string& key, int fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const int v = std::stoi(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw validation_error("config key '" + key + "': cannot parse integer '" +
                               it->second + "'");
    }
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& fallback) const
{
    auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const std::string t = trim(field);
        if (t.empty()) continue;
        try {
            out.push_back(std::stod(t));
        } catch (const std::exception&) {
            throw validation_error("config key '" + key + "': cannot parse list entry '" +
                                   t + "'");
        }
    }
    return out;
}

void Config::require_known(const std::vector<std::string>& allowed) const
{
    for (const auto& [key, value] : kv_) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw validation_error("unknown config key: " + key);
    }
}

std::shared_ptr<const WeightModel> weight_from_config(const Config& cfg)
{
    const std::string kind = cfg.get_string("weight.kind", "classical");
    const double alpha = cfg.get_double("weight.alpha", 1.0);
    if (kind == "classical") return classical_weight(alpha);
    if (kind == "perturbed")
        return perturbed_weight(alpha, cfg.get_double("weight.beta", 0.0));
    if (kind == "mollified") {
        const std::string base = cfg.get_string("weight.base", "classical");
        std::shared_ptr<const WeightModel> inner =
            base == "perturbed" ? perturbed_weight(alpha, cfg.get_double("weight.beta", 0.0))
                                : classical_weight(alpha);
        return mollify(std::move(inner), cfg.get_double("weight.mollify_radius", 1.0));
    }
    throw validation_error("weight.kind must be classical, perturbed or mollified");
}

const std::vector<std::string>& weight_config_keys()
{
    static const std::vector<std::string> keys = {
        "weight.kind", "weight.alpha", "weight.beta", "weight.base",
        "weight.mollify_radius",
    };
    return keys;
}

} // namespace fock
