#pragma once

#include "asphera/borel.hpp"
#include "asphera/specseq.hpp"

#include <json.hpp>

#include <string>

namespace asphera {

using json = nlohmann::json;

// Integers are emitted as JSON numbers when they fit in 53 bits losslessly
// and as decimal strings otherwise; parsers accept both.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json to_json(const AbelianGroup& g);
AbelianGroup abelian_from_json(const json& j);

json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

json to_json(const Subgroup& h);

json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

json to_json(const IntMatrix& m);           // dense rows
json to_json_triplets(const SparseMat& m);  // {rows, cols, entries:[[i,j,v],...]}
json to_json(const ChainComplex& cc);

json to_json(const HomologyBasis& hb);
json to_json(const GModule& m);
GModule gmodule_from_json(const FiniteGroup& g, const json& j);

json to_json(const E2Page& page);
json to_json(const AbutmentReport& report);
json to_json(const ExtensionReport& report);
json to_json(const DiagramReport& report);
json to_json(const BorelResult& result);
json to_json(const H2Classification& cls);

std::string dot_hasse(const Poset& p);
std::string dot_graph(const SimplicialComplex& k); // dim <= 1 only

} // namespace asphera
