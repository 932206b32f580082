#include "homeo/induction.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "homeo/errors.hpp"

namespace homeo {

namespace {

// Is `target` reachable from `source` in the pattern network without
// entering any node for which `blocked` holds?
template <typename Blocked>
bool reachable_avoiding(const PatternNetwork& pnet, PatternNode source, PatternNode target,
                        Blocked blocked) {
  std::set<PatternNode> seen{source};
  std::deque<PatternNode> queue{source};
  while (!queue.empty()) {
    const PatternNode u = queue.front();
    queue.pop_front();
    for (const PatternNode& v : pnet.successors(u)) {
      if (v == target) return true;
      if (blocked(v) || !seen.insert(v).second) continue;
      queue.push_back(v);
    }
  }
  return false;
}

bool appendage_induces_appendage(const PatternNetwork& pnet, PatternNode source,
                                 PatternNode target) {
  if (source == target) return false;
  const int low = chain_position(pnet.vmax_of(source.index));
  const int high = chain_position(pnet.vmin_of(target.index));
  if (!reachable_avoiding(pnet, source, target, [](const PatternNode&) { return false; }))
    return false;
  const bool escapes = reachable_avoiding(pnet, source, target, [&](const PatternNode& n) {
    if (n.kind != PatternKind::super_simple) return false;
    const int pos = chain_position(n);
    return low <= pos && pos <= high;
  });
  return !escapes;
}

}  // namespace

bool induces_theorem(const PatternNetwork& pnet, PatternNode source, PatternNode target) {
  if (source.kind == PatternKind::super_simple)
    throw NetworkError("super-simple nodes do not induce homeostasis");

  if (source.kind == PatternKind::backbone) {
    const int from = chain_position(source);
    if (target.kind == PatternKind::appendage)
      return chain_position(pnet.vmin_of(target.index)) > from;
    return chain_position(target) > from;
  }

  const int vmax = chain_position(pnet.vmax_of(source.index));
  switch (target.kind) {
    case PatternKind::super_simple: return chain_position(target) >= vmax;
    case PatternKind::backbone: return chain_position(target) > vmax;
    case PatternKind::appendage: return appendage_induces_appendage(pnet, source, target);
  }
  return false;
}

HomeostasisPattern homeostasis_pattern(const IONetwork& net, const PatternNetwork& pnet,
                                       const HomeostasisSubnetwork& k) {
  const PatternNode source = pattern_node_of(k);
  HomeostasisPattern pattern{k, {net.output()}};
  for (const PatternNode& target : pnet.nodes()) {
    if (!induces_theorem(pnet, source, target)) continue;
    const NodeSet inner = pnet.contents(target);
    pattern.nodes.insert(inner.begin(), inner.end());
  }
  return pattern;
}

std::vector<HomeostasisPattern> all_patterns(const IONetwork& net, const PatternNetwork& pnet) {
  std::vector<HomeostasisPattern> out;
  for (const auto& k : pnet.decomposition.subnetworks())
    out.push_back(homeostasis_pattern(net, pnet, k));
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = a + 1; b < out.size(); ++b)
      if (out[a].nodes == out[b].nodes)
        throw InvariantViolation("subnetworks " + label(out[a].source) + " and " +
                                 label(out[b].source) + " share a homeostasis pattern");
  return out;
}

RepositionedNetwork reposition(const IONetwork& base, NodeId kappa) {
  return {base.with_output(kappa), kappa};
}

RepositionVerdict reposition_verdict(const IONetwork& net, const HomeostasisSubnetwork& k,
                                     NodeId kappa, std::size_t cap) {
  if (kappa.index() >= net.size()) throw NetworkError("unknown node index");
  if (kappa == net.output()) return RepositionVerdict::induced;
  if (kappa == net.input()) return RepositionVerdict::input_target;
  const RepositionedNetwork moved = reposition(net, kappa);
  if (!validate_core(moved.network).is_core) return RepositionVerdict::non_core;

  const BlockIndexSets wanted = block_index_sets(net, k);
  const Decomposition d = decompose(moved.network, cap);
  for (const auto& candidate : d.subnetworks())
    if (block_index_sets(moved.network, candidate) == wanted) return RepositionVerdict::induced;
  return RepositionVerdict::not_induced;
}

bool induces_reposition(const IONetwork& net, const HomeostasisSubnetwork& k, NodeId kappa,
                        std::size_t cap) {
  switch (reposition_verdict(net, k, kappa, cap)) {
    case RepositionVerdict::induced: return true;
    case RepositionVerdict::not_induced: return false;
    case RepositionVerdict::non_core:
      throw NetworkError("repositioned network G(" + net.name(kappa) + ") is not core");
    case RepositionVerdict::input_target:
      throw NetworkError("cannot reposition the output onto the input node");
  }
  return false;
}

const char* to_string(RepositionVerdict v) {
  switch (v) {
    case RepositionVerdict::induced: return "induced";
    case RepositionVerdict::not_induced: return "not-induced";
    case RepositionVerdict::non_core: return "non-core";
    case RepositionVerdict::input_target: return "input-target";
  }
  return "?";
}

}  // namespace homeo
