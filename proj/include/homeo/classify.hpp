#pragma once

#include <cstddef>
#include <vector>

#include "homeo/network.hpp"

namespace homeo {

inline constexpr std::size_t kDefaultPathCap = 100000;

/// Partition of the nodes of a core network into simple / appendage nodes
/// and their "super" refinements.
///
/// Simple nodes carry a backbone position: super-simple rho_i sits at 2i,
/// a non-super-simple simple node between rho_{j-1} and rho_j sits at
/// 2j-1. The position is the same on every io-simple path through the
/// node (checked during classification), which makes the order on simple
/// nodes a comparison of integers.
struct NodeClassification {
  NodeSet simple;
  std::vector<NodeId> super_simple;  ///< rho_0 = input, ..., rho_{q+1} = output
  NodeSet appendage;
  NodeSet super_appendage;
  std::vector<Path> io_paths;
  std::vector<int> position;  ///< per node; -1 for appendage nodes

  [[nodiscard]] bool is_simple(NodeId n) const { return simple.contains(n); }
  [[nodiscard]] bool is_appendage(NodeId n) const { return appendage.contains(n); }
  [[nodiscard]] bool is_super_simple(NodeId n) const {
    return is_simple(n) && position[n.index()] % 2 == 0;
  }
  [[nodiscard]] bool is_super_appendage(NodeId n) const { return super_appendage.contains(n); }
  /// Number of structural subnetworks (q + 1).
  [[nodiscard]] std::size_t segment_count() const { return super_simple.size() - 1; }
};

/// Every simple path from `from` to `to`, depth-first with neighbours in
/// name order. `from == to` yields the single one-node path.
/// Throws PathExplosion once more than `cap` paths are found.
[[nodiscard]] std::vector<Path> enumerate_simple_paths(const IONetwork& net, NodeId from, NodeId to,
                                                       std::size_t cap = kDefaultPathCap);

[[nodiscard]] std::vector<Path> enumerate_io_simple_paths(const IONetwork& net,
                                                          std::size_t cap = kDefaultPathCap);

/// Reference classification. Super-appendage nodes are computed literally:
/// for every io-simple path S, the strong component of the node inside the
/// complement of S must contain appendage nodes only.
/// Requires a core network (NetworkError otherwise).
[[nodiscard]] NodeClassification classify_nodes(const IONetwork& net,
                                                std::size_t cap = kDefaultPathCap);

/// Super-appendage nodes via one SCC pass over the network with the
/// super-simple nodes removed: an appendage node is super-appendage iff its
/// component holds no simple node.
[[nodiscard]] NodeSet fast_super_appendage(const IONetwork& net, const NodeClassification& cls);

enum class Preceq {
  strictly_precedes,
  equal_super_simple,
  same_simple_subnetwork,
  strictly_follows,
};

/// Compares two simple nodes. Throws NetworkError if either is appendage.
[[nodiscard]] Preceq preceq(const NodeClassification& cls, NodeId a, NodeId b);

[[nodiscard]] const char* to_string(Preceq p);

}  // namespace homeo
