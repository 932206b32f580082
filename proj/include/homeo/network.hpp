#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homeo {

/// Index of a node in its network's declaration order.
struct NodeId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(NodeId, NodeId) = default;
  [[nodiscard]] constexpr std::size_t index() const noexcept { return value; }
};

using NodeSet = std::set<NodeId>;
using Path = std::vector<NodeId>;

struct Arrow {
  NodeId tail;
  NodeId head;
  friend constexpr auto operator<=>(const Arrow&, const Arrow&) = default;
};

enum class Direction { forward, backward };

/// Directed graph with a distinguished input and output node.
///
/// Immutable after construction. Self-arrows are not stored: every node is
/// treated as depending on itself, so an explicit `x -> x` carries no
/// information and is dropped (see `dropped_self_arrows()`).
/// Successor and predecessor lists are sorted by node name so that every
/// traversal explores neighbours in lexicographic order.
class IONetwork {
 public:
  /// Throws NetworkError on empty/duplicate names, unknown endpoints,
  /// unknown input/output or input == output. Duplicate arrows collapse.
  IONetwork(std::vector<std::string> names, std::string_view input, std::string_view output,
            const std::vector<std::pair<std::string, std::string>>& arrows);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] NodeId input() const noexcept { return input_; }
  [[nodiscard]] NodeId output() const noexcept { return output_; }
  [[nodiscard]] const std::string& name(NodeId id) const { return names_.at(id.index()); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  [[nodiscard]] std::optional<NodeId> find(std::string_view name) const;
  /// Like find() but throws NetworkError("unknown node ...").
  [[nodiscard]] NodeId id(std::string_view name) const;

  [[nodiscard]] std::vector<NodeId> nodes() const;
  [[nodiscard]] std::span<const NodeId> successors(NodeId id) const {
    return succ_.at(id.index());
  }
  [[nodiscard]] std::span<const NodeId> predecessors(NodeId id) const {
    return pred_.at(id.index());
  }
  [[nodiscard]] bool has_arrow(NodeId tail, NodeId head) const;
  /// All arrows ordered by (tail, head) declaration index.
  [[nodiscard]] const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  [[nodiscard]] std::size_t arrow_count() const noexcept { return arrows_.size(); }

  [[nodiscard]] bool dropped_self_arrows() const noexcept { return dropped_self_arrows_; }

  /// Same graph with `new_output` as the output node. Throws NetworkError
  /// if `new_output` is the input node.
  [[nodiscard]] IONetwork with_output(NodeId new_output) const;

  /// Node ids ordered by name (the order used in every report).
  [[nodiscard]] std::vector<NodeId> sorted_by_name(const NodeSet& set) const;
  [[nodiscard]] std::vector<std::string> names_of(const NodeSet& set) const;
  /// Strict "name(a) < name(b)".
  [[nodiscard]] bool name_less(NodeId a, NodeId b) const { return name(a) < name(b); }

  friend bool operator==(const IONetwork& a, const IONetwork& b) {
    return a.names_ == b.names_ && a.input_ == b.input_ && a.output_ == b.output_ &&
           a.arrows_ == b.arrows_;
  }

 private:
  IONetwork() = default;
  void build_adjacency();

  std::vector<std::string> names_;
  NodeId input_;
  NodeId output_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<NodeId>> succ_;
  std::vector<std::vector<NodeId>> pred_;
  bool dropped_self_arrows_ = false;
};

struct CoreReport {
  bool is_core = false;
  NodeSet unreachable_from_input;
  NodeSet cannot_reach_output;
};

/// Parses `{"nodes": [...], "input": "...", "output": "...", "arrows": [[t, h], ...]}`.
[[nodiscard]] IONetwork parse_network(std::string_view json_text);
[[nodiscard]] IONetwork load_network(const std::string& path);
/// Canonical JSON text; parse_network(serialize_network(n)) == n.
[[nodiscard]] std::string serialize_network(const IONetwork& net);

[[nodiscard]] NodeSet reachable(const IONetwork& net, NodeId from, Direction direction);
/// Reachability restricted to nodes for which `allowed` is true (from is
/// always included).
[[nodiscard]] NodeSet reachable_within(const IONetwork& net, NodeId from, Direction direction,
                                       const std::vector<bool>& allowed);

[[nodiscard]] CoreReport validate_core(const IONetwork& net);
/// Throws NetworkError listing the offending nodes unless the network is core.
void require_core(const IONetwork& net);

/// Strongly connected components of the subgraph induced by `allowed`
/// nodes. Returns a component index per node (-1 for excluded nodes) and
/// the component count.
struct SccResult {
  std::vector<int> component;
  int count = 0;
};
[[nodiscard]] SccResult strongly_connected_components(const IONetwork& net,
                                                      const std::vector<bool>& allowed);

/// Graphviz rendering. The input node gets `shape=invhouse`, the output
/// node `shape=house`, every node carries `role` = input|output|internal.
[[nodiscard]] std::string network_to_dot(const IONetwork& net);

}  // namespace homeo
