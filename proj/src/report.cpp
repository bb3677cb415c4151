#include "hardylab/report.hpp"

#include <algorithm>
#include <cmath>

namespace hardylab {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::divergent: return "divergent";
    }
    return "unknown";
}

nlohmann::json json_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

nlohmann::json IneqReport::to_json() const {
    nlohmann::json params_json = nlohmann::json::object();
    for (const auto& [key, value] : params) params_json[key] = json_number(value);
    nlohmann::json doc{{"op", op},
                       {"params", params_json},
                       {"lhs", json_number(lhs)},
                       {"rhs", json_number(rhs)},
                       {"margin", json_number(margin)},
                       {"budget", json_number(budget)},
                       {"status", to_string(status)}};
    if (seed) doc["seed"] = *seed;
    return doc;
}

std::string IneqReport::to_json_string() const { return to_json().dump(); }

double rounding_floor(std::initializer_list<double> magnitudes) {
    double scale = 1.0;
    for (double m : magnitudes)
        if (std::isfinite(m)) scale = std::max(scale, std::fabs(m));
    return 1e-12 * scale;
}

}  // namespace hardylab
