#pragma once

#include <json.hpp>

#include "cycov/cohomology.hpp"
#include "cycov/cover.hpp"
#include "cycov/hurwitz.hpp"
#include "cycov/oracle.hpp"
#include "cycov/ranks.hpp"

namespace cycov {

using nlohmann::json;

inline json to_json(const CyclicCoverSpec& spec) {
    json branch = json::array();
    for (const auto& b : spec.branch())
        branch.push_back({{"x", b.x.str()}, {"mult", b.mult}, {"moving", b.moving}});
    return json{{"n", spec.n()}, {"branch", branch}};
}

inline CyclicCoverSpec spec_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("branch"))
        throw SpecError("cover spec JSON needs fields 'n' and 'branch'");
    std::vector<BranchPoint> branch;
    for (const auto& b : j.at("branch")) {
        BranchPoint bp;
        bp.x = Coord::parse(b.at("x").get<std::string>());
        bp.mult = b.value("mult", 1);
        bp.moving = b.value("moving", false);
        branch.push_back(bp);
    }
    return CyclicCoverSpec(j.at("n").get<long long>(), std::move(branch));
}

inline json to_json(const LinearSeriesReport& r) {
    return json{{"h0", r.h0}, {"r", r.r}, {"cliff", r.cliff}, {"rigid", r.rigid}};
}

inline json to_json(const RankReport& r) {
    json j{{"g", r.g},
           {"rk_K", r.rk_K},
           {"rk_U_upper", r.rk_U_upper},
           {"rk_U_exact", r.rk_U_exact ? json(*r.rk_U_exact) : json(nullptr)},
           {"strict_inclusion", r.strict_inclusion},
           {"singular_fibers", r.singular_fibers},
           {"base_genus", r.base_genus},
           {"monodromy_finite_claimed", r.monodromy_finite_claimed},
           {"non_isotrivial", r.non_isotrivial},
           {"certified_by_oracle", r.certified_by_oracle}};
    return j;
}

inline json to_json(const CdStandardReport& r) {
    return json{{"n", r.n},          {"g", r.g},   {"q", r.q},
                {"r_D", r.r_d},      {"rk_K_upper", r.rk_K_upper},
                {"rk_U", r.rk_U},    {"rk_K", r.rk_U},  // U = K in the standard case
                {"h0_nP", r.h0_nP},  {"exact", true}};
}

/// Array-of-arrays of "p/q" strings, for external cross-checking.
inline json to_json(const CupMatrix& b) {
    json rows = json::array();
    for (const auto& row : b.entries) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rat_to_string(v));
        rows.push_back(r);
    }
    return rows;
}

inline json to_json(const MonodromyAction& a) {
    return json{{"N", a.n_classes},
                {"image_order", a.image_order},
                {"kernel_index", a.kernel_index},
                {"policy", a.policy}};
}

}  // namespace cycov
