// opmean — catalog inspection, mean evaluation, preservation checks and
// theorem suites for Kubo-Ando operator means.
//
// Exit codes: 0 = evaluation succeeded / every expectation confirmed,
//             1 = an expectation failed (a hold where a counterexample is
//                 guaranteed, or a violation where the theory says hold),
//             2 = usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "opmean/opmean.hpp"

namespace {

using namespace opmean;

enum class Format { Json, Csv, Text };

struct GlobalOpts {
    std::string out;
    Format format = Format::Json;
    std::uint64_t seed = 1;
    bool seed_given = false;
    double tol = 1e-9;
};

void emit(const GlobalOpts &g, const std::string &content) {
    if (g.out.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(g.out);
        if (!out) throw ParseError("cannot write output file '" + g.out + "'");
        out << content;
        if (!content.empty() && content.back() != '\n') out << "\n";
    }
}

std::uint64_t default_seed() {
    if (const char *env = std::getenv("OPMEAN_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw ParseError("OPMEAN_SEED must be an unsigned integer");
        }
    }
    return 1;
}

SearchConfig build_config(const GlobalOpts &g, const std::vector<int> &dims, int trials,
                          const std::vector<double> &spectrum, const std::string &direction) {
    SearchConfig cfg;
    cfg.dims = dims;
    cfg.trials = trials;
    cfg.seed = g.seed_given ? g.seed : default_seed();
    if (!spectrum.empty()) {
        if (spectrum.size() != 2) throw ParseError("--spectrum needs exactly two values lo,hi");
        cfg.spectrum_lo = spectrum[0];
        cfg.spectrum_hi = spectrum[1];
    }
    cfg.tol = g.tol;
    cfg.direction = direction_from_string(direction);
    cfg.validate();
    return cfg;
}

std::string render_report(const PreservationReport &rep, Format f) {
    switch (f) {
        case Format::Json: return report_to_json(rep).dump(2);
        case Format::Csv: return report_to_csv(rep);
        case Format::Text: return report_to_text(rep);
    }
    return {};
}

std::string render_suite(const SuiteReport &rep, Format f) {
    switch (f) {
        case Format::Json: return suite_to_json(rep).dump(2);
        case Format::Csv: return suite_to_csv(rep);
        case Format::Text: return suite_to_text(rep);
    }
    return {};
}

json describe_function(const RepFunction &f) {
    const auto grid = standard_grid(-10, 10);
    const ZeroLimit zl = zero_limit(f);
    const MonotoneOrderResult mono = is_operator_monotone_order_n(f, 4, 100, 12345);
    json j{{"descriptor", format_function(f)},
           {"value_at_1", f.eval(1.0)},
           {"zero_limit", zl.infinite ? json("inf") : json(zl.value)},
           {"zero_limit_method",
            zl.method == ZeroLimit::Method::ClosedForm ? "closed-form" : "numeric-limit"},
           {"derivative_at_1", derivative_at_one(f)},
           {"symmetric", is_symmetric(f, grid)},
           {"self_adjoint", is_self_adjoint(f, grid)},
           {"transpose", format_function(transpose(f))},
           {"adjoint", format_function(adjoint(f))},
           {"dual", format_function(dual(f))},
           {"transpose_zero_limit", zero_limit(transpose(f)).value},
           {"adjoint_zero_limit", zero_limit(adjoint(f)).value},
           {"operator_monotone_order_4", mono.monotone},
           {"loewner_worst_rel_min_eig", mono.worst_rel_min_eig}};
    return j;
}

int run(int argc, char **argv) {
    CLI::App app{"Kubo-Ando operator means and sigma-preserving function laboratory"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOpts g;
    std::string format_name = "json";
    app.add_option("--out", g.out, "write the report to this path instead of stdout");
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    auto *seed_opt = app.add_option("--seed", g.seed, "seed for every randomized harness");
    app.add_option("--tol", g.tol, "residual tolerance for 'holds' verdicts");

    // catalog-list
    auto *cmd_list = app.add_subcommand("catalog-list", "list the function catalog");

    // catalog-describe
    std::string describe_fn;
    auto *cmd_desc = app.add_subcommand("catalog-describe", "properties of one function");
    cmd_desc->add_option("function", describe_fn, "function descriptor")->required();

    // eval
    std::string eval_fn;
    double eval_t = 1.0;
    auto *cmd_eval = app.add_subcommand("eval", "evaluate a representing function");
    cmd_eval->add_option("function", eval_fn)->required();
    cmd_eval->add_option("t", eval_t, "positive argument")->required();

    // mean
    std::string mean_fn, mat_a, mat_b;
    auto *cmd_mean = app.add_subcommand("mean", "matrix mean of two SPD matrices");
    cmd_mean->add_option("mean-function", mean_fn)->required();
    cmd_mean->add_option("matrix-a", mat_a, "json matrix file")->required();
    cmd_mean->add_option("matrix-b", mat_b, "json matrix file")->required();

    // check / search
    std::string chk_f, chk_sigma, chk_dir = "subL";
    std::vector<int> chk_dims = {2, 3, 4, 6};
    std::vector<double> chk_spectrum;
    int chk_trials = 200;
    auto *cmd_check = app.add_subcommand("check", "randomized preservation check");
    auto *cmd_search = app.add_subcommand("search", "counterexample search (more trials)");
    int search_trials = 500;
    for (auto &&[cmd, trials] : {std::pair{cmd_check, &chk_trials}, std::pair{cmd_search, &search_trials}}) {
        cmd->add_option("function", chk_f)->required();
        cmd->add_option("mean-function", chk_sigma)->required();
        cmd->add_option("--direction", chk_dir, "subL | superR | equality");
        cmd->add_option("--dims", chk_dims, "matrix dimensions");
        cmd->add_option("--trials", *trials, "random trials per dimension");
        cmd->add_option("--spectrum", chk_spectrum, "eigenvalue range lo,hi");
    }

    // verify
    std::string suite_name;
    std::vector<int> ver_dims = {2, 3, 4, 6};
    int ver_trials = 200;
    std::vector<double> ver_spectrum;
    auto *cmd_verify = app.add_subcommand("verify", "run a named theorem suite");
    cmd_verify->add_option("suite", suite_name)->required()->check(CLI::IsMember(suite_names()));
    cmd_verify->add_option("--dims", ver_dims, "matrix dimensions");
    cmd_verify->add_option("--trials", ver_trials, "random trials per dimension");
    cmd_verify->add_option("--spectrum", ver_spectrum, "eigenvalue range lo,hi");

    // axioms
    std::string ax_sigma;
    std::vector<int> ax_dims = {2, 3, 4, 6};
    int ax_trials = 200;
    std::vector<double> ax_spectrum;
    auto *cmd_axioms = app.add_subcommand("axioms", "check the connection axioms for one mean");
    cmd_axioms->add_option("mean-function", ax_sigma)->required();
    cmd_axioms->add_option("--dims", ax_dims, "matrix dimensions");
    cmd_axioms->add_option("--trials", ax_trials, "random trials per dimension");
    cmd_axioms->add_option("--spectrum", ax_spectrum, "eigenvalue range lo,hi");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    g.seed_given = seed_opt->count() > 0;
    g.format = format_name == "json" ? Format::Json
               : format_name == "csv" ? Format::Csv
                                      : Format::Text;

    if (cmd_list->parsed()) {
        if (g.format == Format::Json) {
            json arr = json::array();
            for (const CatalogEntry &e : standard_catalog()) arr.push_back(e.name);
            emit(g, json{{"kind", "catalog"}, {"functions", arr}}.dump(2));
        } else {
            std::string out;
            for (const CatalogEntry &e : standard_catalog()) out += e.name + "\n";
            emit(g, out);
        }
        return 0;
    }

    if (cmd_desc->parsed()) {
        const json j = describe_function(parse_function(describe_fn));
        if (g.format == Format::Json) {
            emit(g, j.dump(2));
        } else {
            std::string out;
            for (const auto &[k, v] : j.items())
                out += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
            emit(g, out);
        }
        return 0;
    }

    if (cmd_eval->parsed()) {
        const RepFunction f = parse_function(eval_fn);
        const double value = f.eval(eval_t);
        if (g.format == Format::Json)
            emit(g, json{{"function", format_function(f)}, {"t", eval_t}, {"value", value}}.dump(2));
        else if (g.format == Format::Csv)
            emit(g, "function,t,value\n" + format_function(f) + "," + format_double(eval_t) + "," +
                        format_double(value) + "\n");
        else
            emit(g, format_double(value));
        return 0;
    }

    if (cmd_mean->parsed()) {
        const Mean m(parse_function(mean_fn));
        const Matrix a = read_matrix_file(mat_a);
        const Matrix b = read_matrix_file(mat_b);
        const Matrix r = mean_matrix_psd(m, a, b);
        if (g.format == Format::Text)
            emit(g, format_matrix(r, ""));
        else
            emit(g, matrix_to_json(r).dump(2));
        return 0;
    }

    if (cmd_check->parsed() || cmd_search->parsed()) {
        const bool searching = cmd_search->parsed();
        const RepFunction f = parse_function(chk_f);
        const RepFunction phi = parse_function(chk_sigma);
        SearchConfig cfg = build_config(g, chk_dims, searching ? search_trials : chk_trials,
                                        chk_spectrum, chk_dir);
        PreservationReport rep = check_preservation(f, Mean(phi), cfg);
        rep.function_label = format_function(f);
        rep.mean_label = format_function(phi);
        emit(g, render_report(rep, g.format));
        return 0;
    }

    if (cmd_verify->parsed()) {
        SearchConfig cfg = build_config(g, ver_dims, ver_trials, ver_spectrum, "subL");
        const SuiteReport rep = run_suite(suite_name, cfg);
        emit(g, render_suite(rep, g.format));
        return rep.all_pass ? 0 : 1;
    }

    if (cmd_axioms->parsed()) {
        const RepFunction phi = parse_function(ax_sigma);
        SearchConfig cfg = build_config(g, ax_dims, ax_trials, ax_spectrum, "subL");
        PreservationReport rep = check_axioms(Mean(phi), cfg);
        rep.mean_label = format_function(phi);
        emit(g, render_report(rep, g.format));
        return rep.verdict == Verdict::HoldsOnAllTrials ? 0 : 1;
    }

    return 2;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
