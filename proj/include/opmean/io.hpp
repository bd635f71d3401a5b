#pragma once

/*
 * io.hpp — exchange formats
 *
 * Matrices travel as {"dim": n, "entries": [n*n row-major numbers]}.
 * Reports serialize to json (full nested structure), csv (one row per
 * trial), or text (human summary with pretty-printed witnesses).  All output
 * is deterministic: object keys are ordered and doubles use the shortest
 * round-trip form.
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "opmean/config.hpp"
#include "opmean/descriptor.hpp"
#include "opmean/errors.hpp"
#include "opmean/matrix.hpp"

namespace opmean {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// matrices
// ---------------------------------------------------------------------------

inline json matrix_to_json(const Matrix &m) {
    return json{{"dim", m.dim()}, {"entries", m.entries()}};
}

inline Matrix matrix_from_json(const json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
        throw ParseError("matrix object needs fields 'dim' and 'entries'");
    const int dim = j.at("dim").get<int>();
    const std::vector<double> entries = j.at("entries").get<std::vector<double>>();
    return Matrix(dim, entries);
}

inline Matrix read_matrix_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw ParseError("bad matrix file '" + path + "': " + e.what());
    }
    return matrix_from_json(j);
}

inline void write_matrix_file(const std::string &path, const Matrix &m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write matrix file '" + path + "'");
    out << matrix_to_json(m).dump(2) << "\n";
}

inline std::string format_matrix(const Matrix &m, const char *indent = "    ") {
    std::ostringstream os;
    for (int i = 0; i < m.dim(); ++i) {
        os << indent << (i == 0 ? "[ " : "  ");
        for (int j = 0; j < m.dim(); ++j) os << format_double(m(i, j)) << (j + 1 < m.dim() ? "  " : "");
        os << (i + 1 < m.dim() ? "\n" : " ]\n");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

inline json config_to_json(const SearchConfig &c) {
    return json{{"dims", c.dims},
                {"trials", c.trials},
                {"seed", c.seed},
                {"spectrum", {c.spectrum_lo, c.spectrum_hi}},
                {"tol", c.tol},
                {"violation_tol", c.violation_tol},
                {"direction", to_string(c.direction)},
                {"structured", c.structured}};
}

inline SearchConfig config_from_json(const json &j) {
    SearchConfig c;
    c.dims = j.at("dims").get<std::vector<int>>();
    c.trials = j.at("trials").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.spectrum_lo = j.at("spectrum").at(0).get<double>();
    c.spectrum_hi = j.at("spectrum").at(1).get<double>();
    c.tol = j.at("tol").get<double>();
    c.violation_tol = j.at("violation_tol").get<double>();
    c.direction = direction_from_string(j.at("direction").get<std::string>());
    c.structured = j.at("structured").get<bool>();
    return c;
}

inline json report_to_json(const PreservationReport &r, bool include_trials = true) {
    json j{{"kind", "preservation-report"},
           {"function", r.function_label},
           {"mean", r.mean_label},
           {"verdict", to_string(r.verdict)},
           {"worst_residual", r.worst_residual},
           {"trials_run", r.trials_run},
           {"seed", r.config_echo.seed},
           {"retried_tighter_spectrum", r.retried_tighter_spectrum},
           {"config", config_to_json(r.config_echo)}};
    if (r.witness) {
        j["witness"] = json{{"dim", r.witness->dim},
                            {"trial", r.witness->trial},
                            {"A", matrix_to_json(r.witness->a)},
                            {"B", matrix_to_json(r.witness->b)}};
    } else {
        j["witness"] = nullptr;
    }
    if (include_trials) {
        json arr = json::array();
        for (const TrialRecord &t : r.trials)
            arr.push_back(json{{"dim", t.dim}, {"trial", t.trial}, {"tag", t.tag},
                               {"residual", t.residual}});
        j["trials"] = arr;
    }
    return j;
}

inline PreservationReport report_from_json(const json &j) {
    PreservationReport r;
    r.function_label = j.at("function").get<std::string>();
    r.mean_label = j.at("mean").get<std::string>();
    const std::string v = j.at("verdict").get<std::string>();
    r.verdict = v == "HoldsOnAllTrials" ? Verdict::HoldsOnAllTrials
                : v == "ViolationFound" ? Verdict::ViolationFound
                                        : Verdict::Inconclusive;
    r.worst_residual = j.at("worst_residual").get<double>();
    r.trials_run = j.at("trials_run").get<long>();
    r.retried_tighter_spectrum = j.at("retried_tighter_spectrum").get<bool>();
    r.config_echo = config_from_json(j.at("config"));
    if (!j.at("witness").is_null()) {
        Witness w;
        w.dim = j.at("witness").at("dim").get<int>();
        w.trial = j.at("witness").at("trial").get<long>();
        w.a = matrix_from_json(j.at("witness").at("A"));
        w.b = matrix_from_json(j.at("witness").at("B"));
        r.witness = std::move(w);
    }
    if (j.contains("trials"))
        for (const json &t : j.at("trials"))
            r.trials.push_back({t.at("dim").get<int>(), t.at("trial").get<long>(),
                                t.at("residual").get<double>(), t.at("tag").get<std::string>()});
    return r;
}

inline std::string report_to_csv(const PreservationReport &r) {
    std::ostringstream os;
    os << "function,mean,direction,dim,trial,tag,residual\n";
    for (const TrialRecord &t : r.trials)
        os << r.function_label << "," << r.mean_label << "," << to_string(r.config_echo.direction)
           << "," << t.dim << "," << t.trial << "," << t.tag << "," << format_double(t.residual)
           << "\n";
    return os.str();
}

inline std::string report_to_text(const PreservationReport &r) {
    std::ostringstream os;
    if (!r.function_label.empty()) os << "function  " << r.function_label << "\n";
    os << "mean      " << r.mean_label << "\n";
    os << "direction " << to_string(r.config_echo.direction) << "\n";
    os << "verdict   " << to_string(r.verdict) << "\n";
    os << "worst residual " << format_double(r.worst_residual) << " over " << r.trials_run
       << " trials (seed " << r.config_echo.seed << ")\n";
    if (r.retried_tighter_spectrum) os << "note: borderline band triggered a tighter-spectrum retry\n";
    if (r.witness) {
        os << "witness (dim " << r.witness->dim << ", trial " << r.witness->trial << "):\n";
        os << "  A =\n" << format_matrix(r.witness->a);
        os << "  B =\n" << format_matrix(r.witness->b);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// suite reports
// ---------------------------------------------------------------------------

struct SuiteCheck {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
    double metric = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<SuiteCheck> checks;
    bool all_pass = true;
};

inline json suite_to_json(const SuiteReport &s) {
    json arr = json::array();
    for (const SuiteCheck &c : s.checks)
        arr.push_back(json{{"name", c.name},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"pass", c.pass},
                           {"metric", c.metric},
                           {"note", c.note}});
    return json{{"kind", "suite-report"},
                {"suite", s.suite},
                {"seed", s.seed},
                {"all_pass", s.all_pass},
                {"checks", arr}};
}

inline std::string suite_to_csv(const SuiteReport &s) {
    std::ostringstream os;
    os << "suite,check,expected,observed,metric,pass\n";
    for (const SuiteCheck &c : s.checks)
        os << s.suite << "," << c.name << "," << c.expected << "," << c.observed << ","
           << format_double(c.metric) << "," << (c.pass ? "1" : "0") << "\n";
    return os.str();
}

inline std::string suite_to_text(const SuiteReport &s) {
    std::ostringstream os;
    os << "suite " << s.suite << " (seed " << s.seed << ")\n";
    for (const SuiteCheck &c : s.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": expected " << c.expected
           << ", observed " << c.observed << ", metric " << format_double(c.metric);
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    }
    os << (s.all_pass ? "ALL CHECKS PASS" : "CHECK FAILURES PRESENT") << "\n";
    return os.str();
}

} // namespace opmean
