#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "homeo/subnetworks.hpp"

namespace homeo {

enum class PatternKind { super_simple, backbone, appendage };

/// A node of the homeostasis pattern network.
///   super_simple: index i names rho_i (0-based, rho_0 = input)
///   backbone:     index j names the collapsed structural subnetwork L~j (1-based)
///   appendage:    index i names the appendage component A~i (1-based)
struct PatternNode {
  PatternKind kind = PatternKind::super_simple;
  std::size_t index = 0;
  friend constexpr auto operator<=>(const PatternNode&, const PatternNode&) = default;
};

/// Chain position of a backbone-chain node: rho_i -> 2i, L~j -> 2j-1.
/// Throws InvariantViolation for appendage components.
[[nodiscard]] int chain_position(PatternNode n);
[[nodiscard]] PatternNode chain_node_at(int position);

struct PatternNetwork {
  Decomposition decomposition;
  /// rho_0, L~1, rho_1, ..., L~{q+1}, rho_{q+1}.
  std::vector<PatternNode> backbone;
  /// Arrows A~i -> A~k between distinct components (1-based indices), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> appendage_arrows;
  /// Per component (0-based slot i-1): the backbone node it feeds / is fed by.
  std::vector<PatternNode> vmax;
  std::vector<PatternNode> vmin;

  [[nodiscard]] std::size_t component_count() const { return decomposition.appendage.size(); }
  [[nodiscard]] PatternNode vmax_of(std::size_t component) const { return vmax.at(component - 1); }
  [[nodiscard]] PatternNode vmin_of(std::size_t component) const { return vmin.at(component - 1); }
  /// Every node: backbone chain first, then appendage components.
  [[nodiscard]] std::vector<PatternNode> nodes() const;
  /// Successors in the pattern network (chain, component and vmin/vmax arrows).
  [[nodiscard]] std::vector<PatternNode> successors(PatternNode n) const;
  /// Network nodes collapsed into a pattern node: rho itself, L'_j for a
  /// backbone node (possibly empty), or the component's nodes.
  [[nodiscard]] NodeSet contents(PatternNode n) const;
  /// Homeostasis subnetwork behind a backbone node or appendage component.
  [[nodiscard]] HomeostasisSubnetwork subnetwork(PatternNode n) const;
  [[nodiscard]] std::string label(const IONetwork& net, PatternNode n) const;
};

/// Collapses the decomposition into the pattern network and attaches each
/// appendage component to the backbone through its most downstream
/// appendage-path target (vmax) and most upstream appendage-path source
/// (vmin). Throws InvariantViolation if either collection is empty.
[[nodiscard]] PatternNetwork build_pattern_network(const IONetwork& net, Decomposition d);
[[nodiscard]] PatternNetwork build_pattern_network(const IONetwork& net,
                                                   std::size_t cap = kDefaultPathCap);

/// Pattern node holding a network node. Throws NetworkError for unknown nodes.
[[nodiscard]] PatternNode pattern_node_of(const PatternNetwork& pnet, NodeId node);
/// Pattern node representing a homeostasis subnetwork.
[[nodiscard]] PatternNode pattern_node_of(const HomeostasisSubnetwork& k);

/// Minimal and maximal backbone positions of simple nodes joined to `node`
/// by an appendage path (into / out of `node`). For a simple node both are
/// its own position. Returns -1 when no such path exists.
struct AppendageReach {
  int upstream = -1;    ///< position of sigma^u
  int downstream = -1;  ///< position of sigma^d
};
[[nodiscard]] AppendageReach appendage_reach(const IONetwork& net, const NodeClassification& cls,
                                             const NodeSet& from);

/// Graphviz: backbone left to right, appendage components on a second rank.
[[nodiscard]] std::string pattern_to_dot(const IONetwork& net, const PatternNetwork& pnet);

}  // namespace homeo
