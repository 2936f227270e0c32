#ifndef POLYHARM_JSON_IO_HPP
#define POLYHARM_JSON_IO_HPP

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "polyharm/evolution.hpp"
#include "polyharm/modes.hpp"
#include "polyharm/separable.hpp"

namespace polyharm {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                                const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

inline double require_number(const nlohmann::json& j, const std::string& key,
                             const std::string& where) {
    if (!j.contains(key)) throw ConfigError(where + ": missing key '" + key + "'");
    if (!j[key].is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return j[key].get<double>();
}

inline double number_or(const nlohmann::json& j, const std::string& key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ConfigError(key + ": expected a number");
    return j[key].get<double>();
}

inline Eigen::ArrayXd require_array(const nlohmann::json& j, const std::string& key,
                                    const std::string& where) {
    if (!j.contains(key) || !j[key].is_array())
        throw ConfigError(where + ": missing array '" + key + "'");
    Eigen::ArrayXd out(j[key].size());
    Eigen::Index i = 0;
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw ConfigError(where + "." + key + ": expected numbers");
        out[i++] = v.get<double>();
    }
    return out;
}

} // namespace detail

inline Mode1D<double> mode_from_json(const nlohmann::json& j) {
    detail::reject_unknown_keys(j, {"variant", "omega", "mu", "a", "b"}, "mode");
    if (!j.contains("variant") || !j["variant"].is_string())
        throw ConfigError("mode: missing string key 'variant'");
    const std::string variant = j["variant"].get<std::string>();
    const double a = detail::number_or(j, "a", 0.0);
    const double b = detail::number_or(j, "b", 0.0);
    if (variant == "osc") return Mode1D<double>::oscillatory(detail::require_number(j, "omega", "mode"), a, b);
    if (variant == "hyp") return Mode1D<double>::hyperbolic(detail::require_number(j, "mu", "mode"), a, b);
    if (variant == "affine") return Mode1D<double>::affine(a, b);
    throw ConfigError("mode.variant: expected 'osc', 'hyp', or 'affine'");
}

inline nlohmann::json mode_to_json(const Mode1D<double>& mode) {
    nlohmann::json j;
    switch (mode.kind()) {
        case ModeKind::Oscillatory:
            j["variant"] = "osc";
            j["omega"] = mode.rate();
            break;
        case ModeKind::Hyperbolic:
            j["variant"] = "hyp";
            j["mu"] = mode.rate();
            break;
        default:
            j["variant"] = "affine";
    }
    j["a"] = mode.a();
    j["b"] = mode.b();
    return j;
}

inline typename SeparableSolution<double>::Last last_from_json(const nlohmann::json& j) {
    detail::reject_unknown_keys(j, {"K", "n", "c", "d", "basis", "paper_mode"}, "last");
    const double K = detail::require_number(j, "K", "last");
    const int n = static_cast<int>(detail::require_number(j, "n", "last"));
    const std::string basis = j.contains("basis") ? j["basis"].get<std::string>() : "trig";
    const bool paper_mode = j.contains("paper_mode") && j["paper_mode"].get<bool>();

    Eigen::ArrayXd c = detail::require_array(j, "c", "last");
    Eigen::ArrayXd d = j.contains("d") ? detail::require_array(j, "d", "last")
                                       : Eigen::ArrayXd::Zero(c.size());
    if (basis == "exp")
        return ExpBasisFactor<double>::make(K, n, c, d);
    if (basis != "trig") throw ConfigError("last.basis: expected 'trig' or 'exp'");
    if (K == 0.0) d.resize(0);
    return paper_mode ? LastFactor<double>::paper_basis(K, n, c, d)
                      : LastFactor<double>::make(K, n, c, d);
}

inline nlohmann::json last_to_json(const typename SeparableSolution<double>::Last& last) {
    nlohmann::json j;
    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            j["K"] = f.K();
            j["n"] = f.multiplicity();
            if constexpr (std::is_same_v<T, ExpBasisFactor<double>>) {
                j["basis"] = "exp";
                j["c"] = std::vector<double>(f.decay_coeffs().begin(), f.decay_coeffs().end());
                j["d"] = std::vector<double>(f.growth_coeffs().begin(), f.growth_coeffs().end());
            } else {
                j["basis"] = "trig";
                j["c"] = std::vector<double>(f.c().begin(), f.c().end());
                j["d"] = std::vector<double>(f.d().begin(), f.d().end());
            }
        },
        last);
    return j;
}

inline SeparableSolution<double> solution_from_json(const nlohmann::json& j) {
    detail::reject_unknown_keys(j, {"n", "modes", "last"}, "solution");
    const int n = static_cast<int>(detail::require_number(j, "n", "solution"));
    if (!j.contains("modes") || !j["modes"].is_array() || j["modes"].empty())
        throw ConfigError("solution: missing non-empty array 'modes'");
    if (!j.contains("last")) throw ConfigError("solution: missing key 'last'");
    std::vector<Mode1D<double>> modes;
    for (const auto& mj : j["modes"]) modes.push_back(mode_from_json(mj));
    return assemble<double>(std::move(modes), last_from_json(j["last"]), n);
}

inline nlohmann::json solution_to_json(const SeparableSolution<double>& sol) {
    nlohmann::json j;
    j["n"] = sol.power();
    j["modes"] = nlohmann::json::array();
    for (const auto& mode : sol.modes()) j["modes"].push_back(mode_to_json(mode));
    j["last"] = last_to_json(sol.last());
    return j;
}

inline SpaceTimeSolution spacetime_from_json(const nlohmann::json& j) {
    detail::reject_unknown_keys(j, {"type", "n", "modes", "alpha", "A", "beta", "C", "D"},
                                "spacetime");
    if (!j.contains("type") || !j["type"].is_string())
        throw ConfigError("spacetime: missing string key 'type'");
    const std::string type = j["type"].get<std::string>();
    const int n = static_cast<int>(detail::require_number(j, "n", "spacetime"));
    if (!j.contains("modes") || !j["modes"].is_array() || j["modes"].empty())
        throw ConfigError("spacetime: missing non-empty array 'modes'");
    std::vector<Mode1D<double>> modes;
    for (const auto& mj : j["modes"]) modes.push_back(mode_from_json(mj));

    if (type == "parabolic")
        return make_parabolic(std::move(modes), n, detail::number_or(j, "alpha", 1.0),
                              detail::number_or(j, "A", 1.0));
    if (type == "hyperbolic")
        return make_hyperbolic(std::move(modes), n, detail::number_or(j, "beta", 1.0),
                               detail::number_or(j, "C", 1.0), detail::number_or(j, "D", 0.0));
    throw ConfigError("spacetime.type: expected 'parabolic' or 'hyperbolic'");
}

} // namespace polyharm

#endif
