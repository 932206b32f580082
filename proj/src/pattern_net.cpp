#include "homeo/pattern_net.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "homeo/errors.hpp"

namespace homeo {

int chain_position(PatternNode n) {
  switch (n.kind) {
    case PatternKind::super_simple: return 2 * static_cast<int>(n.index);
    case PatternKind::backbone: return 2 * static_cast<int>(n.index) - 1;
    case PatternKind::appendage: break;
  }
  throw InvariantViolation("appendage components have no chain position");
}

PatternNode chain_node_at(int position) {
  if (position < 0) throw InvariantViolation("negative chain position");
  if (position % 2 == 0)
    return {PatternKind::super_simple, static_cast<std::size_t>(position / 2)};
  return {PatternKind::backbone, static_cast<std::size_t>((position + 1) / 2)};
}

std::vector<PatternNode> PatternNetwork::nodes() const {
  std::vector<PatternNode> out = backbone;
  for (std::size_t i = 1; i <= component_count(); ++i) out.push_back({PatternKind::appendage, i});
  return out;
}

std::vector<PatternNode> PatternNetwork::successors(PatternNode n) const {
  std::vector<PatternNode> out;
  if (n.kind == PatternKind::appendage) {
    out.push_back(vmax_of(n.index));
    for (const auto& [from, to] : appendage_arrows)
      if (from == n.index) out.push_back({PatternKind::appendage, to});
    return out;
  }
  const int pos = chain_position(n);
  if (pos + 1 < static_cast<int>(backbone.size())) out.push_back(chain_node_at(pos + 1));
  for (std::size_t i = 1; i <= component_count(); ++i)
    if (vmin_of(i) == n) out.push_back({PatternKind::appendage, i});
  return out;
}

NodeSet PatternNetwork::contents(PatternNode n) const {
  switch (n.kind) {
    case PatternKind::super_simple:
      return {decomposition.classification.super_simple.at(n.index)};
    case PatternKind::backbone:
      return decomposition.structural.at(n.index - 1).augmented();
    case PatternKind::appendage:
      return decomposition.appendage.at(n.index - 1).nodes;
  }
  return {};
}

HomeostasisSubnetwork PatternNetwork::subnetwork(PatternNode n) const {
  switch (n.kind) {
    case PatternKind::backbone: return decomposition.structural.at(n.index - 1);
    case PatternKind::appendage: return decomposition.appendage.at(n.index - 1);
    case PatternKind::super_simple: break;
  }
  throw NetworkError("super-simple nodes carry no homeostasis subnetwork");
}

std::string PatternNetwork::label(const IONetwork& net, PatternNode n) const {
  switch (n.kind) {
    case PatternKind::super_simple:
      return net.name(decomposition.classification.super_simple.at(n.index));
    case PatternKind::backbone: return "L" + std::to_string(n.index);
    case PatternKind::appendage: return "A" + std::to_string(n.index);
  }
  return "?";
}

AppendageReach appendage_reach(const IONetwork& net, const NodeClassification& cls,
                               const NodeSet& from) {
  if (from.size() == 1 && cls.is_simple(*from.begin())) {
    const int pos = cls.position[from.begin()->index()];
    return {pos, pos};
  }
  for (NodeId n : from)
    if (!cls.is_appendage(n))
      throw InvariantViolation("appendage reach needs a single simple node or appendage nodes");

  // Walks whose interior stays on appendage nodes; any such walk contains
  // an appendage path with the same endpoints.
  auto sweep = [&](Direction dir) {
    std::vector<bool> seen(net.size(), false);
    std::deque<NodeId> queue;
    for (NodeId n : from) {
      seen[n.index()] = true;
      queue.push_back(n);
    }
    std::vector<int> hits;
    while (!queue.empty()) {
      const NodeId u = queue.front();
      queue.pop_front();
      auto next = dir == Direction::forward ? net.successors(u) : net.predecessors(u);
      for (NodeId v : next) {
        if (cls.is_simple(v)) {
          hits.push_back(cls.position[v.index()]);
        } else if (!seen[v.index()]) {
          seen[v.index()] = true;
          queue.push_back(v);
        }
      }
    }
    return hits;
  };

  AppendageReach reach;
  const auto down = sweep(Direction::forward);
  const auto up = sweep(Direction::backward);
  if (!down.empty()) reach.downstream = *std::max_element(down.begin(), down.end());
  if (!up.empty()) reach.upstream = *std::min_element(up.begin(), up.end());
  return reach;
}

PatternNetwork build_pattern_network(const IONetwork& net, Decomposition d) {
  PatternNetwork p;
  p.decomposition = std::move(d);
  const auto& cls = p.decomposition.classification;
  const auto& comps = p.decomposition.appendage;

  const int last = 2 * static_cast<int>(cls.segment_count());
  for (int pos = 0; pos <= last; ++pos) p.backbone.push_back(chain_node_at(pos));

  std::vector<std::size_t> component_of(net.size(), 0);
  for (const auto& c : comps)
    for (NodeId t : c.nodes) component_of[t.index()] = c.index;
  std::set<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& a : net.arrows()) {
    const std::size_t from = component_of[a.tail.index()];
    const std::size_t to = component_of[a.head.index()];
    if (from != 0 && to != 0 && from != to) arrows.emplace(from, to);
  }
  p.appendage_arrows.assign(arrows.begin(), arrows.end());

  for (const auto& c : comps) {
    const AppendageReach reach = appendage_reach(net, cls, c.nodes);
    if (reach.downstream < 0 || reach.upstream < 0)
      throw InvariantViolation("appendage component A" + std::to_string(c.index) +
                               " is not attached to the backbone");
    p.vmax.push_back(chain_node_at(reach.downstream));
    p.vmin.push_back(chain_node_at(reach.upstream));
  }
  return p;
}

PatternNetwork build_pattern_network(const IONetwork& net, std::size_t cap) {
  return build_pattern_network(net, decompose(net, cap));
}

PatternNode pattern_node_of(const PatternNetwork& pnet, NodeId node) {
  const auto& d = pnet.decomposition;
  const auto& cls = d.classification;
  if (node.index() >= cls.position.size()) throw NetworkError("unknown node index");
  if (cls.is_simple(node)) return chain_node_at(cls.position[node.index()]);
  for (const auto& s : d.structural)
    if (s.linked_appendage.contains(node)) return {PatternKind::backbone, s.index};
  for (const auto& a : d.appendage)
    if (a.nodes.contains(node)) return {PatternKind::appendage, a.index};
  throw InvariantViolation("node outside every pattern node");
}

PatternNode pattern_node_of(const HomeostasisSubnetwork& k) {
  if (const auto* s = std::get_if<StructuralSubnetwork>(&k))
    return {PatternKind::backbone, s->index};
  return {PatternKind::appendage, std::get<AppendageSubnetwork>(k).index};
}

std::string pattern_to_dot(const IONetwork& net, const PatternNetwork& pnet) {
  std::ostringstream os;
  auto q = [&](PatternNode n) { return "\"" + pnet.label(net, n) + "\""; };
  os << "digraph P {\n  rankdir=LR;\n";
  os << "  subgraph backbone {\n    rank=same;\n";
  for (const auto& n : pnet.backbone) {
    os << "    " << q(n)
       << (n.kind == PatternKind::super_simple ? " [role=super_simple, shape=circle];\n"
                                               : " [role=backbone, shape=box];\n");
  }
  os << "  }\n";
  if (pnet.component_count() > 0) {
    os << "  subgraph appendage {\n    rank=same;\n";
    for (std::size_t i = 1; i <= pnet.component_count(); ++i)
      os << "    " << q({PatternKind::appendage, i}) << " [role=appendage, shape=diamond];\n";
    os << "  }\n";
  }
  for (std::size_t i = 1; i < pnet.backbone.size(); ++i)
    os << "  " << q(pnet.backbone[i - 1]) << " -> " << q(pnet.backbone[i]) << ";\n";
  for (const auto& [from, to] : pnet.appendage_arrows)
    os << "  " << q({PatternKind::appendage, from}) << " -> " << q({PatternKind::appendage, to})
       << ";\n";
  for (std::size_t i = 1; i <= pnet.component_count(); ++i) {
    const PatternNode a{PatternKind::appendage, i};
    os << "  " << q(a) << " -> " << q(pnet.vmax_of(i)) << " [kind=vmax];\n";
    os << "  " << q(pnet.vmin_of(i)) << " -> " << q(a) << " [kind=vmin];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace homeo
