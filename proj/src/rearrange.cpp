#include "hardylab/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hardylab/errors.hpp"
#include "hardylab/report.hpp"

namespace hardylab {

Weight rearrange_nonincreasing(const Weight& w) {
    if (!w.is_step())
        throw precondition_error(
            "rearrangement is defined for step weights only");
    if (w.is_nonincreasing()) return w;

    std::vector<std::pair<double, double>> chunks;  // (value, length)
    chunks.reserve(w.pieces().size());
    for (const PowerPiece& piece : w.pieces())
        chunks.emplace_back(piece.coeff, piece.hi - piece.lo);
    std::stable_sort(chunks.begin(), chunks.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    std::vector<PowerPiece> pieces;
    pieces.reserve(chunks.size());
    double lo = 0.0;
    for (std::size_t i = 0; i < chunks.size(); ++i) {
        double hi = i + 1 == chunks.size() ? 1.0 : lo + chunks[i].second;
        pieces.push_back(PowerPiece{lo, hi, chunks[i].first, 0.0});
        lo = hi;
    }
    return Weight(std::move(pieces));
}

RearrangeReport theoremC_check(const Weight& w, double q, int grid) {
    RearrangeReport report;
    report.q = q;
    report.rearranged = rearrange_nonincreasing(w);
    RhiSearch before = rhi_constant_search(w, q, IntervalFamily::all, grid);
    RhiSearch after =
        rhi_constant_search(report.rearranged, q, IntervalFamily::all, grid);
    report.c_before = before.c;
    report.c_after = after.c;
    report.resolution = before.uncertainty + after.uncertainty;
    report.pass = after.c <= before.c * (1.0 + 1e-6) + report.resolution;
    return report;
}

nlohmann::json RearrangeReport::to_json() const {
    return {{"q", json_number(q)},
            {"family", family_name(family)},
            {"c_before", json_number(c_before)},
            {"c_after", json_number(c_after)},
            {"resolution", json_number(resolution)},
            {"pass", pass},
            {"rearranged", nlohmann::json::parse(weight_to_json(rearranged))}};
}

EndpointFamilyReport theoremD_check(const Weight& w, double q, int grid) {
    if (!w.is_step())
        throw precondition_error(
            "endpoint-family reduction is checked for step weights only");
    if (!w.is_nonincreasing())
        throw precondition_error(
            "endpoint-family reduction needs a non-increasing weight");
    RhiSearch all = rhi_constant_search(w, q, IntervalFamily::all, grid);
    RhiSearch pre = rhi_constant_search(w, q, IntervalFamily::prefix, grid);
    RhiSearch suf = rhi_constant_search(w, q, IntervalFamily::suffix, grid);
    EndpointFamilyReport report;
    report.q = q;
    report.c_all = all.c;
    report.c_prefix = pre.c;
    report.c_suffix = suf.c;
    report.tolerance = all.uncertainty + pre.uncertainty + suf.uncertainty +
                       1e-6 * std::max(1.0, all.c);
    report.pass = std::fabs(all.c - std::max(pre.c, suf.c)) <= report.tolerance;
    return report;
}

nlohmann::json EndpointFamilyReport::to_json() const {
    return {{"q", json_number(q)},
            {"c_all", json_number(c_all)},
            {"c_prefix", json_number(c_prefix)},
            {"c_suffix", json_number(c_suffix)},
            {"tolerance", json_number(tolerance)},
            {"pass", pass}};
}

}  // namespace hardylab
