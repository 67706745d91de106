#include "george/json_io.hpp"

#include <stdexcept>

#include "george/statistics.hpp"

namespace george {

using nlohmann::json;

std::string format_cost2(long long cost2) {
    if (cost2 % 2 == 0) return std::to_string(cost2 / 2);
    return std::to_string(cost2) + "/2";
}

json cost2_to_json(long long cost2) {
    if (cost2 % 2 == 0) return json(cost2 / 2);
    return json(format_cost2(cost2));
}

json to_json(const Element& w) {
    return json{{"family", family_name(w.descriptor.family)},
                {"n", w.descriptor.window_size},
                {"window", w.window}};
}

Element element_from_json(const json& j) {
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family " + j.at("family").dump());
    GroupDescriptor d = make_descriptor(*fam, j.at("n").get<int>());
    return require_valid(d, j.at("window").get<Window>());
}

json to_json(const Transposition& t) {
    return json{{"family", family_name(t.descriptor.family)},
                {"n", t.descriptor.window_size},
                {"i", t.i},
                {"j", t.j}};
}

Transposition transposition_from_json(const json& j) {
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam) throw std::invalid_argument("unknown family " + j.at("family").dump());
    GroupDescriptor d = make_descriptor(*fam, j.at("n").get<int>());
    return make_transposition(d, j.at("i").get<long long>(), j.at("j").get<long long>());
}

json to_json(const Factorization& f, bool optimal) {
    json factors = json::array();
    for (const Transposition& t : f.factors) {
        factors.push_back(json{{"i", t.i}, {"j", t.j}});
    }
    return json{{"factors", std::move(factors)},
                {"total_cost", cost2_to_json(f.total_cost2)},
                {"optimal", optimal}};
}

json stats_report(const Element& w) {
    const GroupDescriptor& d = w.descriptor;
    json out{{"tvd", tvd(w)},
             {"length", coxeter_length(w)},
             {"neg", nullptr},
             {"bl_A", nullptr},
             {"bl_B", nullptr},
             {"bl_D", nullptr},
             {"bl_C_aff", nullptr},
             {"bl_B_aff", nullptr},
             {"cost_formula", nullptr},
             {"conjectured", false}};
    if (d.is_signed()) out["neg"] = neg_count(w);
    switch (d.family) {
        case Family::A:
            out["bl_A"] = block_count(w, BlockFlavor::A);
            out["cost_formula"] = cost2_to_json(cost_formula2(w));
            break;
        case Family::B:
        case Family::D:
            out["bl_B"] = block_count(w, BlockFlavor::B);
            if (neg_count(w) % 2 == 0) out["bl_D"] = block_count(w, BlockFlavor::D);
            out["cost_formula"] = cost2_to_json(cost_formula2(w));
            break;
        case Family::AffA:
            out["cost_formula"] = cost2_to_json(cost_formula2(w));
            break;
        case Family::AffB:
        case Family::AffC:
        case Family::AffD: {
            AffineBlockData data = affine_block_data(w);
            out["bl_C_aff"] = data.bl_C;
            out["bl_B_aff"] = data.bl_B;
            if (d.family == Family::AffC) {
                out["cost_formula"] = cost2_to_json(cost_formula2(w));
            } else if (d.family == Family::AffB) {
                out["cost_formula"] = cost2_to_json(conjectured_cost_formula2_affB(w));
                out["conjectured"] = true;
            }
            break;
        }
    }
    return out;
}

json to_json(const SearchResult& r, bool witness_optimal) {
    json out{{"window", r.target.window},
             {"status", r.status == SearchStatus::Found ? "found" : "budget_exhausted"},
             {"expanded_nodes", r.expanded_nodes},
             {"budget", cost2_to_json(r.budget2_used)}};
    if (r.status == SearchStatus::Found) {
        out["optimum"] = cost2_to_json(r.optimum2);
        out["witness"] = to_json(r.witness, witness_optimal);
    }
    return out;
}

json to_json(const SweepReport& r) {
    json out{{"descriptor",
              json{{"family", family_name(r.descriptor.family)}, {"n", r.descriptor.window_size}}},
             {"length_bound", r.length_bound < 0 ? json(nullptr) : json(r.length_bound)},
             {"tested", r.tested},
             {"agree", r.agree},
             {"max_deviation", cost2_to_json(r.max_deviation2)},
             {"total_expanded", r.total_expanded}};
    auto row_json = [](const SweepRow& row) {
        return json{{"window", row.element.window},
                    {"tvd", row.tvd},
                    {"formula", cost2_to_json(row.formula2)},
                    {"oracle", cost2_to_json(row.oracle2)},
                    {"agree", row.agree}};
    };
    json bad = json::array();
    for (const SweepRow& row : r.disagreements) bad.push_back(row_json(row));
    out["disagreements"] = std::move(bad);
    if (!r.rows.empty()) {
        json rows = json::array();
        for (const SweepRow& row : r.rows) rows.push_back(row_json(row));
        out["rows"] = std::move(rows);
    }
    return out;
}

std::string sweep_csv(const SweepReport& r) {
    std::string out = "window,tvd,formula,oracle,agree\n";
    const auto& rows = r.rows.empty() ? r.disagreements : r.rows;
    for (const SweepRow& row : rows) {
        out += "\"" + format_window(row.element.window) + "\"," + std::to_string(row.tvd) + "," +
               format_cost2(row.formula2) + "," + format_cost2(row.oracle2) + "," +
               (row.agree ? "true" : "false") + "\n";
    }
    return out;
}

json to_json(const ConjectureReport& r) {
    json out{{"conjecture", conjecture_name(r.id)},
             {"descriptor",
              json{{"family", family_name(r.descriptor.family)}, {"n", r.descriptor.window_size}}},
             {"length_bound", r.length_bound},
             {"tested", r.tested},
             {"agree", r.agree},
             {"max_gap", cost2_to_json(r.max_gap2)},
             {"inconclusive", r.inconclusive.size()}};
    json ces = json::array();
    for (const Counterexample& ce : r.counterexamples) {
        ces.push_back(json{{"element", to_json(ce.element)},
                           {"expected", cost2_to_json(ce.expected2)},
                           {"observed", cost2_to_json(ce.observed2)},
                           {"witness", to_json(ce.witness, false)},
                           {"note", ce.note}});
    }
    out["counterexamples"] = std::move(ces);
    if (r.id == ConjectureId::AffD_equality_class) {
        json eq = json::array();
        for (const Element& e : r.equality_elements) eq.push_back(e.window);
        out["equality_elements"] = std::move(eq);
        out["identity_listed_separately"] = r.identity_seen;
    }
    return out;
}

}  // namespace george
