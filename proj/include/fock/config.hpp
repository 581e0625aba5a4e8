#pragma once

#include "fock/weights.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Flat key=value configuration ('#' comments, blank lines ignored). Every
// command validates its keys against an allowlist; unknown keys are rejected
// so typos fail loudly.

namespace fock {

class Config {
public:
    Config() = default;

    /// Parse `key = value` lines; later keys override earlier ones.
    static Config parse(std::istream& in, const std::string& name = "<config>");
    static Config from_file(const std::string& path);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key, int fallback) const;
    /// Comma-separated list of numbers.
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& fallback) const;

    /// Throw fock::validation_error if any key is outside `allowed`.
    void require_known(const std::vector<std::string>& allowed) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

private:
    std::map<std::string, std::string> kv_;
};

/// Build the weight selected by the keys weight.kind (classical, perturbed,
/// mollified), weight.alpha, weight.beta, weight.mollify_radius.
std::shared_ptr<const WeightModel> weight_from_config(const Config& cfg);

/// Config keys understood by weight_from_config.
const std::vector<std::string>& weight_config_keys();

} // namespace fock
