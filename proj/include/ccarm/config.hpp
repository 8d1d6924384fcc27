#ifndef CCARM_CONFIG_HPP
#define CCARM_CONFIG_HPP

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <string>

#include "ccarm/errors.hpp"
#include "ccarm/geometry.hpp"

namespace ccarm {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline double parse_number(const std::string& key, const std::string& text) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for " + key + ": '" +
                          text + "'");
    }
    if (consumed != text.size())
        throw ConfigError("config: trailing characters after value for " + key);
    return value;
}

}  // namespace detail

/// Parses an arm geometry from `key = value` lines. Recognized keys:
/// L0_m, r_m (required), phi_max_rad (default pi), l_limit_m (default
/// 0.25 * L0). Values are plain decimals in meters/radians. Blank lines and
/// lines starting with '#' are skipped; unknown or repeated keys are errors.
inline ArmGeometry load_geometry(std::istream& in) {
    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = detail::trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: expected 'key = value' on line " +
                              std::to_string(line_no));
        const std::string key = detail::trim(stripped.substr(0, eq));
        const std::string value = detail::trim(stripped.substr(eq + 1));
        if (key != "L0_m" && key != "r_m" && key != "phi_max_rad" &&
            key != "l_limit_m")
            throw ConfigError("config: unknown key '" + key + "' on line " +
                              std::to_string(line_no));
        if (values.count(key))
            throw ConfigError("config: repeated key '" + key + "'");
        values[key] = detail::parse_number(key, value);
    }
    if (!values.count("L0_m")) throw ConfigError("config: missing key L0_m");
    if (!values.count("r_m")) throw ConfigError("config: missing key r_m");
    const double L0 = values["L0_m"];
    const double r = values["r_m"];
    const double phi_max =
        values.count("phi_max_rad") ? values["phi_max_rad"] : kPi;
    const double l_limit =
        values.count("l_limit_m") ? values["l_limit_m"] : 0.25 * L0;
    try {
        return ArmGeometry(L0, r, phi_max, l_limit);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

inline ArmGeometry load_geometry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return load_geometry(in);
}

}  // namespace ccarm

#endif  // CCARM_CONFIG_HPP
