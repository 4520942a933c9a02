#pragma once

// Splitting a 4D spinor root system into an invariant subsystem and its
// invariant complement, plus edge sets by the maximal inner product rule.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rootforge/rootsys.hpp"

namespace rootforge {

struct VertexSet {
  std::vector<Multivector> vertices;  // unit spinors, no duplicates
  std::string label;

  std::size_t size() const { return vertices.size(); }
};

struct EdgeSet {
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, lexicographic
  FieldElement edge_inner;

  std::size_t size() const { return edges.size(); }
};

/// (sub.roots, parent.roots \ sub.roots), both in parent order for the
/// complement and sub order for the subsystem. Throws SubsetError when a
/// root of sub is missing from parent.
std::pair<VertexSet, VertexSet> split(const RootSystem& parent, const RootSystem& sub);

/// All pairs whose spinor inner product equals the maximum over distinct
/// pairs. Throws ContractError for fewer than two vertices.
EdgeSet edges(const VertexSet& vs);

/// True iff spin_reflect(r, v) stays in the set for every root r of sub.
bool verify_invariance(const VertexSet& set, const RootSystem& sub);

}  // namespace rootforge
