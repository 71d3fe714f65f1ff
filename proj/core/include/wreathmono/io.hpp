#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wreathmono/perm.hpp"
#include "wreathmono/realize.hpp"
#include "wreathmono/reducer.hpp"
#include "wreathmono/tables.hpp"
#include "wreathmono/witness.hpp"
#include "wreathmono/wreath.hpp"

namespace wm {

using nlohmann::json;

std::string library_version();
std::string data_version();

// One-line image form, 1-based.
json perm_to_json(const Perm& p);
Perm perm_from_json(const json& j, std::size_t degree);

// {"ell": L, "t": T, "elements": [{"base": [perm, ...], "top": perm}, ...]}
json tuple_to_json(const std::vector<WreathElement>& tuple);
// Throws InvalidInput on malformed documents.
std::vector<WreathElement> tuple_from_json(const json& doc);
std::vector<WreathElement> read_tuple_file(const std::string& path);

json to_json(const CoverReport& r);
json to_json(const Realization& r);
json to_json(const Table2Report& r);
json to_json(const Table3Report& r);
json to_json(const Witness& w);
json to_json(const WitnessSweep& s);
json to_json(const SmallDegreeEvidence& e);
json to_json(const SearchEvidence& e);
json to_json(const GenusReport& g);

// Elements as (branch, 1-based representative, orbit length, perm); the
// certificate as [[index, exponent], ...] with 0-based element indices.
json to_json(const ReducedMultiset& m);
ReducedMultiset multiset_from_json(const json& doc);

}  // namespace wm
