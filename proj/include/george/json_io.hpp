#pragma once

#include <json.hpp>

#include "george/conjectures.hpp"
#include "george/factorization.hpp"
#include "george/group.hpp"
#include "george/oracle.hpp"
#include "george/transposition.hpp"

// JSON forms of the public value types.  Keys are emitted sorted and all
// numbers are exact integers; doubled costs print as an integer when even
// and as the string "k/2" otherwise.

namespace george {

nlohmann::json cost2_to_json(long long cost2);
std::string format_cost2(long long cost2);

nlohmann::json to_json(const Element& w);
Element element_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Transposition& t);
Transposition transposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Factorization& f, bool optimal);

nlohmann::json stats_report(const Element& w);

nlohmann::json to_json(const SearchResult& r, bool witness_optimal);

nlohmann::json to_json(const SweepReport& r);
std::string sweep_csv(const SweepReport& r);  // window,tvd,formula,oracle,agree

nlohmann::json to_json(const ConjectureReport& r);

}  // namespace george
