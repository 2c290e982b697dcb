#pragma once

#include <json.hpp>

#include "toric/automorphisms.hpp"
#include "toric/explorer.hpp"

namespace toric {

using Json = nlohmann::ordered_json;

// cone schema: {"lattice": {"generators": [["p/q", ...], ...]}, "rays": [[...]],
// "boundary": [...]}; rationals accepted as "p/q" strings or numbers, rays
// normalized to primitive on load, lattice defaults to Z^n.
Rat rat_from_json(const Json& j);
Json rat_to_json(const Rat& x);
QVec qvec_from_json(const Json& j);
Json qvec_to_json(const QVec& v);

Lattice lattice_from_json(const Json& j, int expected_dim = -1);
Json lattice_to_json(const Lattice& lat);
Cone cone_from_json(const Json& j);
ToricPair pair_from_json(const Json& j);
Json pair_to_json(const ToricPair& pair);

Json class_group_to_json(const ClassGroupPresentation& cg);
Json record_to_json(const MldRecord& rec);
MldRecord record_from_json(const Json& j);
Json spectrum_to_json(const SpectrumReport& rep);
SpectrumReport spectrum_from_json(const Json& j);
Json index_table_to_json(const std::vector<IndexTableRow>& rows);
Json accumulation_to_json(const AccumulationReport& rep);
Json jordan_to_json(const JordanReport& rep);

// CLI surfaces, shared with tests: each returns the response document
Json run_pair_query(const Json& input);  // value, witness, index, class_group
Json run_quotient(const Json& input);    // quotient pair, boundary, mld, verification
Json run_aut(const Json& input);         // group order, element orders, jordan report

}  // namespace toric
