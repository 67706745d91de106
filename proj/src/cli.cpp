#include "george/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "george/json_io.hpp"
#include "george/statistics.hpp"

namespace george {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitInvalidElement = 4;

struct CommonFlags {
    std::string type;
    int n = 0;
    std::string format = "text";
    std::string out_path;
    long long max_length = -1;
    long long budget = -1;  // plain cost units
    int jobs = 1;
};

void add_descriptor_flags(CLI::App* cmd, CommonFlags& f, bool n_required = true) {
    cmd->add_option("--type", f.type, "family: A, B, D, ~A, ~B, ~C, ~D")->required();
    auto* n_opt = cmd->add_option("-n,--window-size", f.n,
                                  n_required ? "window size n" : "window size n (default: "
                                                                 "the window's entry count)");
    if (n_required) n_opt->required();
}

void add_output_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", f.out_path, "write the report to a file instead of stdout");
}

GroupDescriptor descriptor_from_flags(const CommonFlags& f) {
    auto fam = family_from_name(f.type);
    if (!fam) throw CLI::ValidationError("--type", "unknown family '" + f.type + "'");
    return make_descriptor(*fam, f.n);
}

void emit(const CommonFlags& f, std::ostream& out, const std::string& text) {
    if (f.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(f.out_path);
    if (!file) throw std::runtime_error("cannot open " + f.out_path);
    file << text;
}

std::string json_line(const nlohmann::json& j) { return j.dump() + "\n"; }

int parse_element_or_report(const CommonFlags& f, const std::string& window_text,
                            std::ostream& err, std::optional<Element>& out) {
    Window win = parse_window(window_text);
    CommonFlags sized = f;
    if (sized.n == 0) sized.n = static_cast<int>(win.size());
    GroupDescriptor d = descriptor_from_flags(sized);
    Validation v = validate(d, win);
    if (!v.ok) {
        err << "invalid " << family_name(d.family) << " element " << format_window(win) << "\n";
        for (const auto& reason : v.violations) err << "  " << reason << "\n";
        return kExitInvalidElement;
    }
    out = std::move(v.element);
    return kExitOk;
}

int run_stats(const CommonFlags& f, const std::string& window_text, std::ostream& out,
              std::ostream& err) {
    std::optional<Element> parsed_elem;
    if (int rc = parse_element_or_report(f, window_text, err, parsed_elem)) return rc;
    const Element& w = *parsed_elem;
    nlohmann::json rep = stats_report(w);
    if (f.format == "json") {
        emit(f, out, json_line(rep));
    } else if (f.format == "csv") {
        std::string header, row;
        for (auto it = rep.begin(); it != rep.end(); ++it) {
            header += (header.empty() ? "" : ",") + it.key();
            row += (row.empty() ? "" : ",") +
                   (it.value().is_null() ? std::string() : it.value().dump());
        }
        emit(f, out, header + "\n" + row + "\n");
    } else {
        std::ostringstream text;
        text << "window " << format_window(w.window) << "\n";
        for (auto it = rep.begin(); it != rep.end(); ++it) {
            if (it.value().is_null()) continue;
            if (it.key() == "conjectured" && !it.value().get<bool>()) continue;
            text << it.key() << " "
                 << (it.value().is_string() ? it.value().get<std::string>() : it.value().dump())
                 << "\n";
        }
        emit(f, out, text.str());
    }
    return kExitOk;
}

int run_factor(const CommonFlags& f, const std::string& window_text, std::ostream& out,
               std::ostream& err) {
    std::optional<Element> parsed_elem;
    if (int rc = parse_element_or_report(f, window_text, err, parsed_elem)) return rc;
    const Element& w = *parsed_elem;

    Factorization fact{w.descriptor, {}, 0};
    if (w.descriptor.is_unbranched()) {
        fact = factor_unbranched(w);
    } else {
        SearchOptions opts;
        if (f.budget >= 0) opts.budget2 = 2 * f.budget;
        SearchResult res = min_cost(w, Weight::Cost, opts);
        if (res.status != SearchStatus::Found) {
            err << "oracle budget exhausted (doubled budget " << res.budget2_used
                << "); raise --budget\n";
            return kExitInconclusive;
        }
        fact = std::move(res.witness);
    }
    WitnessReport rep = verify_witness(w, fact);
    // Both routes return true optima: the greedy construction for unbranched
    // families, the exact search elsewhere.
    if (f.format == "json") {
        emit(f, out, json_line(to_json(fact, true)));
    } else {
        std::ostringstream text;
        text << "factors:";
        for (const Transposition& t : fact.factors) text << " " << format_transposition(t);
        text << "\ntotal cost " << format_cost2(fact.total_cost2) << "\n";
        if (rep.formula_cost2) {
            text << "formula cost " << format_cost2(*rep.formula_cost2) << "\n";
        }
        emit(f, out, text.str());
    }
    return kExitOk;
}

int run_oracle(const CommonFlags& f, const std::string& window_text, const std::string& weight,
               bool astar, std::ostream& out, std::ostream& err) {
    std::optional<Element> parsed_elem;
    if (int rc = parse_element_or_report(f, window_text, err, parsed_elem)) return rc;
    const Element& w = *parsed_elem;

    Weight wt = Weight::Cost;
    if (weight == "depth") wt = Weight::Depth;
    if (weight == "unit") wt = Weight::Unit;
    SearchOptions opts;
    opts.astar = astar;
    if (f.budget >= 0) opts.budget2 = 2 * f.budget;
    SearchResult res = min_cost(w, wt, opts);

    if (f.format == "json") {
        emit(f, out, json_line(to_json(res, wt == Weight::Cost)));
    } else {
        std::ostringstream text;
        if (res.status == SearchStatus::Found) {
            text << "optimum " << format_cost2(res.optimum2) << " (" << weight << " weight)\n";
            text << "witness:";
            for (const Transposition& t : res.witness.factors) {
                text << " " << format_transposition(t);
            }
            text << "\n";
        } else {
            text << "budget exhausted (doubled budget " << res.budget2_used << ")\n";
        }
        text << "expanded " << res.expanded_nodes << " nodes\n";
        emit(f, out, text.str());
    }
    return res.status == SearchStatus::Found ? kExitOk : kExitInconclusive;
}

int run_enumerate(const CommonFlags& f, std::ostream& out, std::ostream&) {
    GroupDescriptor d = descriptor_from_flags(f);
    long long bound = f.max_length;
    if (d.is_affine() && bound < 0) bound = 6;
    auto elems = enumerate_elements_with_length(d, bound);
    std::ostringstream text;
    for (const auto& e : elems) {
        if (f.format == "json") {
            text << json_line(to_json(e.element));
        } else {
            text << format_window(e.element.window) << "\n";
        }
    }
    emit(f, out, text.str());
    return kExitOk;
}

int run_verify(const CommonFlags& f, bool astar, std::ostream& out, std::ostream& err) {
    GroupDescriptor d = descriptor_from_flags(f);
    long long bound = f.max_length;
    if (d.is_affine() && bound < 0) bound = 6;
    SweepOptions opts;
    opts.jobs = f.jobs;
    opts.astar = astar;
    opts.keep_rows = f.format != "text";
    SweepReport rep = verify_theorem(d, bound, opts);

    if (f.format == "json") {
        emit(f, out, json_line(to_json(rep)));
    } else if (f.format == "csv") {
        emit(f, out, sweep_csv(rep));
        err << "summary: " << rep.agree << "/" << rep.tested << " agree, max deviation "
            << format_cost2(rep.max_deviation2) << "\n";
    } else {
        std::ostringstream text;
        text << family_name(d.family) << " n=" << d.window_size;
        if (bound >= 0) text << " length<=" << bound;
        text << ": " << rep.agree << "/" << rep.tested
             << " agree, max deviation " << format_cost2(rep.max_deviation2) << ", expanded "
             << rep.total_expanded << " nodes\n";
        for (const SweepRow& row : rep.disagreements) {
            text << "  disagree " << format_window(row.element.window) << " formula "
                 << format_cost2(row.formula2) << " oracle " << format_cost2(row.oracle2) << "\n";
        }
        emit(f, out, text.str());
    }
    return rep.agree == rep.tested ? kExitOk : kExitCounterexample;
}

int conjecture_exit(const ConjectureReport& rep) {
    if (rep.found_counterexample()) return kExitCounterexample;
    if (rep.has_inconclusive()) return kExitInconclusive;
    return kExitOk;
}

void print_conjecture_text(const ConjectureReport& rep, std::ostringstream& text) {
    text << conjecture_name(rep.id) << " " << family_name(rep.descriptor.family)
         << " n=" << rep.descriptor.window_size << " length<=" << rep.length_bound << ": "
         << rep.agree << "/" << rep.tested << " agree, " << rep.counterexamples.size()
         << " counterexamples, " << rep.inconclusive.size() << " inconclusive, max gap "
         << format_cost2(rep.max_gap2) << "\n";
    for (const Counterexample& ce : rep.counterexamples) {
        text << "  counterexample " << format_window(ce.element.window) << ": expected "
             << format_cost2(ce.expected2) << ", observed " << format_cost2(ce.observed2) << " ("
             << ce.note << ")\n";
    }
    if (rep.id == ConjectureId::AffD_equality_class) {
        text << "  equality elements:";
        for (const Element& e : rep.equality_elements) text << " " << format_window(e.window);
        text << "\n  identity (k=0 form) listed separately: seen " << rep.identity_seen << "\n";
    }
}

int run_conjecture(const std::string& which, const CommonFlags& f, std::ostream& out,
                   std::ostream&) {
    long long bound = f.max_length < 0 ? 6 : f.max_length;
    std::vector<ConjectureReport> reports;
    if (which == "affb") {
        reports.push_back(check_affB_formula(f.n, bound, f.jobs));
    } else if (which == "affd") {
        AffDReports both = check_affD_bounds(f.n, bound, f.jobs);
        reports.push_back(std::move(both.bounds));
        reports.push_back(std::move(both.equality));
    } else {
        reports.push_back(check_bounded_gap(descriptor_from_flags(f), bound, f.jobs));
    }

    if (f.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& rep : reports) arr.push_back(to_json(rep));
        emit(f, out, json_line(arr));
    } else {
        std::ostringstream text;
        for (const auto& rep : reports) print_conjecture_text(rep, text);
        emit(f, out, text.str());
    }
    int rc = kExitOk;
    for (const auto& rep : reports) rc = std::max(rc, conjecture_exit(rep));
    return rc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"window-notation Weyl groups: statistics, factorizations, exact search"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string window_text;
    std::string weight = "cost";
    std::string conjecture_kind;
    bool astar = false;

    auto* stats = app.add_subcommand("stats", "per-element statistics report");
    add_descriptor_flags(stats, flags, false);
    add_output_flags(stats, flags);
    stats->add_option("window", window_text, "window, e.g. \"[2,1,3]\"")->required();

    auto* factor = app.add_subcommand(
        "factor", "minimum-cost transposition factorization (greedy where proved, search "
                  "witness for D/~B/~D)");
    add_descriptor_flags(factor, flags, false);
    add_output_flags(factor, flags);
    factor->add_option("--budget", flags.budget, "search budget in cost units");
    factor->add_option("window", window_text)->required();

    auto* oracle = app.add_subcommand("oracle", "exact best-first search over factorizations");
    add_descriptor_flags(oracle, flags, false);
    add_output_flags(oracle, flags);
    oracle->add_option("--weight", weight, "edge weight: cost, depth, unit")
        ->check(CLI::IsMember({"cost", "depth", "unit"}));
    oracle->add_option("--budget", flags.budget, "search budget in cost units");
    oracle->add_flag("--astar", astar, "use the tvd/2 heuristic (cost weight)");
    oracle->add_option("window", window_text)->required();

    auto* enumerate = app.add_subcommand("enumerate", "stream group elements by length");
    add_descriptor_flags(enumerate, flags);
    add_output_flags(enumerate, flags);
    enumerate->add_option("--max-length", flags.max_length,
                          "Coxeter length bound (required meaning for affine; default 6)");

    auto* verify = app.add_subcommand(
        "verify", "sweep a proved cost formula against the oracle; csv columns: "
                  "window,tvd,formula,oracle,agree");
    add_descriptor_flags(verify, flags);
    add_output_flags(verify, flags);
    verify->add_option("--max-length", flags.max_length, "length bound (affine default 6)");
    verify->add_option("--jobs", flags.jobs, "parallel sweep workers");
    verify->add_flag("--astar", astar, "search with the tvd/2 heuristic");

    auto* conjecture =
        app.add_subcommand("conjecture", "run a conjecture sweep: affb, affd, or gap");
    conjecture->add_option("kind", conjecture_kind, "affb | affd | gap")
        ->required()
        ->check(CLI::IsMember({"affb", "affd", "gap"}));
    conjecture->add_option("--type", flags.type, "family (gap sweep only)");
    conjecture->add_option("-n,--window-size", flags.n, "window size n")->required();
    add_output_flags(conjecture, flags);
    conjecture->add_option("--max-length", flags.max_length, "length bound (default 6)");
    conjecture->add_option("--jobs", flags.jobs, "parallel sweep workers");

    std::vector<const char*> argv;
    argv.push_back("george");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (stats->parsed()) return run_stats(flags, window_text, out, err);
        if (factor->parsed()) return run_factor(flags, window_text, out, err);
        if (oracle->parsed()) return run_oracle(flags, window_text, weight, astar, out, err);
        if (enumerate->parsed()) return run_enumerate(flags, out, err);
        if (verify->parsed()) return run_verify(flags, astar, out, err);
        if (conjecture->parsed()) {
            if (conjecture_kind == "gap" && flags.type.empty()) {
                err << "conjecture gap needs --type\n";
                return kExitUsage;
            }
            if ((conjecture_kind == "affb" && !flags.type.empty() && flags.type != "~B") ||
                (conjecture_kind == "affd" && !flags.type.empty() && flags.type != "~D")) {
                err << "conjecture " << conjecture_kind << " fixes the family; drop --type\n";
                return kExitUsage;
            }
            return run_conjecture(conjecture_kind, flags, out, err);
        }
    } catch (const CLI::Error& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace george
