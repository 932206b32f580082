#pragma once

#include <string>
#include <variant>
#include <vector>

#include "homeo/classify.hpp"
#include "homeo/network.hpp"

namespace homeo {

/// Region between consecutive super-simple nodes rho_{j-1} and rho_j.
struct StructuralSubnetwork {
  std::size_t index = 0;  ///< j, 1-based
  NodeId rho_prev;
  NodeId rho_next;
  NodeSet simple_core;       ///< simple nodes strictly between the pair
  NodeSet linked_appendage;  ///< appendage nodes cycling with the core

  /// simple_core and linked_appendage together.
  [[nodiscard]] NodeSet augmented() const;
  /// augmented() plus the bounding pair.
  [[nodiscard]] NodeSet all_nodes() const;
  friend bool operator==(const StructuralSubnetwork&, const StructuralSubnetwork&) = default;
};

/// One strong component of the subgraph on super-appendage nodes.
struct AppendageSubnetwork {
  std::size_t index = 0;  ///< 1-based, components ordered by smallest node name
  NodeSet nodes;
  friend bool operator==(const AppendageSubnetwork&, const AppendageSubnetwork&) = default;
};

using HomeostasisSubnetwork = std::variant<StructuralSubnetwork, AppendageSubnetwork>;

[[nodiscard]] inline bool is_structural(const HomeostasisSubnetwork& k) {
  return std::holds_alternative<StructuralSubnetwork>(k);
}
/// "L<j>" or "A<i>".
[[nodiscard]] std::string label(const HomeostasisSubnetwork& k);
[[nodiscard]] NodeSet nodes_of(const HomeostasisSubnetwork& k);

/// Row and column node sets of a subnetwork's diagonal block in the
/// homeostasis matrix H (J with the input row and output column removed).
struct BlockIndexSets {
  NodeSet row_nodes;
  NodeSet col_nodes;
  friend auto operator<=>(const BlockIndexSets&, const BlockIndexSets&) = default;
};

[[nodiscard]] std::vector<StructuralSubnetwork> structural_subnetworks(
    const IONetwork& net, const NodeClassification& cls);
[[nodiscard]] std::vector<AppendageSubnetwork> appendage_subnetworks(const IONetwork& net,
                                                                     const NodeClassification& cls);

/// Structural rows are all_nodes minus rho_prev and columns all_nodes minus
/// rho_next; appendage blocks are square on their own nodes.
/// Throws NetworkError if `k` references nodes outside `net` or is malformed.
[[nodiscard]] BlockIndexSets block_index_sets(const IONetwork& net,
                                              const HomeostasisSubnetwork& k);

/// Classification plus every homeostasis subnetwork of one network.
struct Decomposition {
  NodeClassification classification;
  std::vector<StructuralSubnetwork> structural;
  std::vector<AppendageSubnetwork> appendage;

  /// Structural subnetworks by j, then appendage subnetworks by index.
  [[nodiscard]] std::vector<HomeostasisSubnetwork> subnetworks() const;
};

/// Classifies and decomposes a core network.
[[nodiscard]] Decomposition decompose(const IONetwork& net, std::size_t cap = kDefaultPathCap);

}  // namespace homeo
