#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opmean/descriptor.hpp"
#include "opmean/functions.hpp"
#include "opmean/preservation.hpp"

namespace opmean {

struct CatalogEntry {
    std::string name;
    RepFunction fn;
};

// The standard family catalog: the trivial members, five-point parameter
// grids for each weighted family, and the named one-parameter families.
// Every entry is a valid normalized operator monotone function.
inline const std::vector<CatalogEntry> &standard_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        auto add = [&](RepFunction f) { v.push_back({format_function(f), std::move(f)}); };
        add(RepFunction::constant_one());
        add(RepFunction::identity());
        add(RepFunction::logarithmic());
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) add(RepFunction::arithmetic(a));
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) add(RepFunction::harmonic(a));
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) add(RepFunction::geometric(a));
        add(RepFunction::power_mean(-0.75, 0.3));
        add(RepFunction::power_mean(-0.5, 0.5));
        add(RepFunction::power_mean(-0.25, 0.7));
        add(RepFunction::power_mean(0.4, 0.35));
        add(RepFunction::power_mean(0.75, 0.6));
        for (double p : {-1.0, -0.4, 0.5, 1.3, 2.0}) add(RepFunction::petz_hasegawa(p));
        for (double a : {-2.0, -1.3, -0.5, 0.6, 1.6}) add(RepFunction::stolarsky(a));
        for (double p : {-1.0, -0.3, 0.6, 1.4, 2.0}) add(RepFunction::power_difference(p));
        return v;
    }();
    return entries;
}

// Candidates for the triviality screens: non-trivial catalog members with
// f(0) = 0 (the screens only speak about those).
inline std::vector<std::pair<std::string, RepFunction>> vanishing_candidates() {
    std::vector<std::pair<std::string, RepFunction>> out;
    for (const CatalogEntry &e : standard_catalog()) {
        if (is_trivial_function(e.fn)) continue;
        if (zero_limit(e.fn).value > 1e-8) continue;
        out.push_back({e.name, e.fn});
    }
    return out;
}

} // namespace opmean
