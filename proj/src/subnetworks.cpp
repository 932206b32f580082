#include "homeo/subnetworks.hpp"

#include <algorithm>
#include <map>

#include "homeo/errors.hpp"

namespace homeo {

NodeSet StructuralSubnetwork::augmented() const {
  NodeSet out = simple_core;
  out.insert(linked_appendage.begin(), linked_appendage.end());
  return out;
}

NodeSet StructuralSubnetwork::all_nodes() const {
  NodeSet out = augmented();
  out.insert(rho_prev);
  out.insert(rho_next);
  return out;
}

std::string label(const HomeostasisSubnetwork& k) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        return (std::is_same_v<T, StructuralSubnetwork> ? "L" : "A") + std::to_string(s.index);
      },
      k);
}

NodeSet nodes_of(const HomeostasisSubnetwork& k) {
  if (const auto* s = std::get_if<StructuralSubnetwork>(&k)) return s->all_nodes();
  return std::get<AppendageSubnetwork>(k).nodes;
}

std::vector<StructuralSubnetwork> structural_subnetworks(const IONetwork& net,
                                                         const NodeClassification& cls) {
  const std::size_t segments = cls.segment_count();
  std::vector<StructuralSubnetwork> out(segments);
  for (std::size_t j = 1; j <= segments; ++j) {
    out[j - 1].index = j;
    out[j - 1].rho_prev = cls.super_simple[j - 1];
    out[j - 1].rho_next = cls.super_simple[j];
  }
  for (NodeId s : cls.simple) {
    const int pos = cls.position[s.index()];
    if (pos % 2 == 1) out[static_cast<std::size_t>(pos + 1) / 2 - 1].simple_core.insert(s);
  }

  // A linked appendage node shares a strong component with its core once
  // the super-simple nodes are removed.
  std::vector<bool> allowed(net.size(), true);
  for (NodeId r : cls.super_simple) allowed[r.index()] = false;
  const SccResult scc = strongly_connected_components(net, allowed);
  std::map<int, std::size_t> segment_of_component;
  for (const auto& sub : out) {
    for (NodeId s : sub.simple_core) {
      const int c = scc.component[s.index()];
      auto [it, inserted] = segment_of_component.emplace(c, sub.index);
      if (!inserted && it->second != sub.index)
        throw InvariantViolation("strong component spans two simple subnetworks");
    }
  }
  for (NodeId t : cls.appendage) {
    if (cls.is_super_appendage(t)) continue;
    auto it = segment_of_component.find(scc.component[t.index()]);
    if (it == segment_of_component.end())
      throw InvariantViolation("non-super-appendage node " + net.name(t) +
                               " is not linked to any simple subnetwork");
    out[it->second - 1].linked_appendage.insert(t);
  }
  return out;
}

std::vector<AppendageSubnetwork> appendage_subnetworks(const IONetwork& net,
                                                       const NodeClassification& cls) {
  std::vector<bool> allowed(net.size(), false);
  for (NodeId t : cls.super_appendage) allowed[t.index()] = true;
  const SccResult scc = strongly_connected_components(net, allowed);
  std::vector<AppendageSubnetwork> out(scc.count);
  for (NodeId t : cls.super_appendage) out[scc.component[t.index()]].nodes.insert(t);
  auto smallest = [&net](const AppendageSubnetwork& a) {
    return net.sorted_by_name(a.nodes).front();
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return net.name_less(smallest(a), smallest(b));
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].index = i + 1;
  return out;
}

BlockIndexSets block_index_sets(const IONetwork& net, const HomeostasisSubnetwork& k) {
  const NodeSet all = nodes_of(k);
  if (all.empty()) throw NetworkError("foreign subnetwork: no nodes");
  for (NodeId n : all)
    if (n.index() >= net.size()) throw NetworkError("foreign subnetwork: node out of range");
  BlockIndexSets block;
  if (const auto* s = std::get_if<StructuralSubnetwork>(&k)) {
    if (s->rho_prev == s->rho_next || s->augmented().contains(s->rho_prev) ||
        s->augmented().contains(s->rho_next))
      throw NetworkError("foreign subnetwork: malformed structural subnetwork");
    block.row_nodes = all;
    block.row_nodes.erase(s->rho_prev);
    block.col_nodes = all;
    block.col_nodes.erase(s->rho_next);
  } else {
    block.row_nodes = all;
    block.col_nodes = all;
  }
  return block;
}

std::vector<HomeostasisSubnetwork> Decomposition::subnetworks() const {
  std::vector<HomeostasisSubnetwork> out;
  out.reserve(structural.size() + appendage.size());
  for (const auto& s : structural) out.emplace_back(s);
  for (const auto& a : appendage) out.emplace_back(a);
  return out;
}

Decomposition decompose(const IONetwork& net, std::size_t cap) {
  Decomposition d;
  d.classification = classify_nodes(net, cap);
  d.structural = structural_subnetworks(net, d.classification);
  d.appendage = appendage_subnetworks(net, d.classification);
  return d;
}

}  // namespace homeo
