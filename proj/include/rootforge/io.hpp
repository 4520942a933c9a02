#pragma once

// JSON, CSV and text-table encodings of the library types.
//
// A FieldElement is the integer tuple (a_num, a_den, b_num, b_den, c_num,
// c_den, d_num, d_den); integers beyond 64 bits are written as decimal
// strings. A multivector is the array of its 8 blade coefficients.

#include <string>

#include "json.hpp"
#include "rootforge/groups.hpp"
#include "rootforge/rootsys.hpp"
#include "rootforge/splitting.hpp"

namespace rootforge {

using Json = nlohmann::ordered_json;

Json to_json(const FieldElement& x);
FieldElement field_from_json(const Json& j);

Json to_json(const Multivector& m);
Multivector multivector_from_json(const Json& j);

/// {ambient, roots, simple_roots}
Json to_json(const RootSystem& rs);
RootSystem root_system_from_json(const Json& j);

/// Full group with words, element orders and conjugacy classes.
Json to_json(const VersorGroup& g, const std::vector<ConjugacyClass>& classes);

/// {label, vertex_count, vertices, edge_count, edge_inner, edges}
Json to_json(const VertexSet& vs, const EdgeSet& es);

/// One root per row, float coordinates of the ambient space.
std::string root_system_csv(const RootSystem& rs);

/// Edge list "i,j" with a header line.
std::string edges_csv(const EdgeSet& es);

/// Order | Number | Element x2 | Generator path, one block per class.
/// Number is the 1-based discovery index.
std::string group_table(const VersorGroup& g, const std::vector<ConjugacyClass>& classes);

}  // namespace rootforge
