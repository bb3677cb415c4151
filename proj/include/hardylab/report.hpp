#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace hardylab {

enum class CheckStatus { pass, fail, divergent };

const char* to_string(CheckStatus s);

// Serialize a double as a JSON number, or as the strings "inf", "-inf",
// "nan" when it is not finite (JSON has no literals for those).
nlohmann::json json_number(double x);

// Outcome of a single inequality (or identity) check.  margin is
// rhs - lhs; budget is the accumulated numerical error allowance
// (quadrature error estimates plus a rounding floor).  For one-sided
// checks status == pass iff margin >= -budget; identity-style checks
// (noted per op) pass iff |margin| stays within a small multiple of
// budget.  Divergent integrals propagate as status == divergent, with
// infinities kept in lhs/rhs.
struct IneqReport {
    std::string op;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double budget = 0.0;
    CheckStatus status = CheckStatus::fail;
    std::optional<std::uint64_t> seed;

    nlohmann::json to_json() const;
    std::string to_json_string() const;  // compact, deterministic
};

// 1e-12 times the largest magnitude supplied (floored at 1).  Used as
// the rounding allowance for closed-form expressions.
double rounding_floor(std::initializer_list<double> magnitudes);

}  // namespace hardylab
