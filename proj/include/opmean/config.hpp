#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opmean/errors.hpp"
#include "opmean/matrix.hpp"

namespace opmean {

enum class Direction { SubL, SuperR, Equality };

inline const char *to_string(Direction d) {
    switch (d) {
        case Direction::SubL: return "subL";
        case Direction::SuperR: return "superR";
        case Direction::Equality: return "equality";
    }
    return "?";
}

inline Direction direction_from_string(const std::string &s) {
    if (s == "subL" || s == "subl") return Direction::SubL;
    if (s == "superR" || s == "superr") return Direction::SuperR;
    if (s == "equality" || s == "eq") return Direction::Equality;
    throw ParseError("unknown direction '" + s + "' (expected subL, superR, equality)");
}

struct SearchConfig {
    std::vector<int> dims = {2, 3, 4, 6};
    int trials = 200;
    std::uint64_t seed = 1;
    double spectrum_lo = 1e-3;
    double spectrum_hi = 1e3;
    double tol = 1e-9;           // residuals above -tol certify "holds"
    double violation_tol = 1e-6; // residuals below -violation_tol are decisive violations
    Direction direction = Direction::SubL;
    bool structured = true;      // append structured 2x2 probe pairs after random trials

    void validate() const {
        if (trials < 1) throw BadRange("SearchConfig: trials must be >= 1");
        if (dims.empty()) throw BadRange("SearchConfig: dims must be non-empty");
        for (int d : dims)
            if (d < 1) throw BadRange("SearchConfig: dims must all be >= 1");
        if (!(spectrum_lo > 0.0) || !(spectrum_hi >= spectrum_lo))
            throw BadRange("SearchConfig: need 0 < lo <= hi");
    }
};

enum class Verdict { HoldsOnAllTrials, ViolationFound, Inconclusive };

inline const char *to_string(Verdict v) {
    switch (v) {
        case Verdict::HoldsOnAllTrials: return "HoldsOnAllTrials";
        case Verdict::ViolationFound: return "ViolationFound";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct Witness {
    Matrix a;
    Matrix b;
    int dim = 0;
    long trial = -1; // negative trial indices label structured (non-random) pairs
};

struct TrialRecord {
    int dim = 0;
    long trial = 0;
    double residual = 0.0;
    std::string tag; // "random", "structured:...", "monotone", "transformer-eq", ...
};

struct PreservationReport {
    std::string function_label; // descriptor of f (empty for axiom reports)
    std::string mean_label;     // descriptor of sigma
    Verdict verdict = Verdict::HoldsOnAllTrials;
    double worst_residual = 0.0;
    std::optional<Witness> witness;
    long trials_run = 0;
    bool retried_tighter_spectrum = false;
    SearchConfig config_echo;
    std::vector<TrialRecord> trials;
};

} // namespace opmean
