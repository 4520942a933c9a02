#include "rootforge/splitting.hpp"

#include "rootforge/errors.hpp"

namespace rootforge {

std::pair<VertexSet, VertexSet> split(const RootSystem& parent, const RootSystem& sub) {
  const RootSet in_parent(parent.roots);
  const RootSet in_sub(sub.roots);
  VertexSet inside{{}, "sub"};
  for (const auto& r : sub.roots) {
    if (!in_parent.contains(r)) throw SubsetError("split: root " + to_string(r) + " is not in the parent system");
    inside.vertices.push_back(r);
  }
  VertexSet outside{{}, "complement"};
  for (const auto& r : parent.roots)
    if (!in_sub.contains(r)) outside.vertices.push_back(r);
  return {std::move(inside), std::move(outside)};
}

EdgeSet edges(const VertexSet& vs) {
  const auto& v = vs.vertices;
  if (v.size() < 2) throw ContractError("edges: need at least two vertices");
  const std::size_t n = v.size();
  std::vector<FieldElement> gram(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) gram[i * n + j] = detail::spinor_inner(v[i], v[j]);

  EdgeSet out;
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const FieldElement& g = gram[i * n + j];
      if (!first && g == out.edge_inner) {
        out.edges.emplace_back(i, j);
      } else if (first || g > out.edge_inner) {
        out.edge_inner = g;
        out.edges.assign(1, {i, j});
        first = false;
      }
    }
  }
  return out;
}

bool verify_invariance(const VertexSet& set, const RootSystem& sub) {
  const RootSet members(set.vertices);
  for (const auto& r : sub.roots)
    for (const auto& v : set.vertices)
      if (!members.contains(detail::spin_reflect(r, v))) return false;
  return true;
}

}  // namespace rootforge
