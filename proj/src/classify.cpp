#include "homeo/classify.hpp"

#include <algorithm>

#include "homeo/errors.hpp"

namespace homeo {

namespace {

class PathEnumerator {
 public:
  PathEnumerator(const IONetwork& net, NodeId target, std::size_t cap)
      : net_(net), target_(target), cap_(cap), on_path_(net.size(), false) {}

  std::vector<Path> run(NodeId from) {
    extend(from);
    return std::move(paths_);
  }

 private:
  void extend(NodeId u) {
    current_.push_back(u);
    on_path_[u.index()] = true;
    if (u == target_) {
      if (paths_.size() == cap_) throw PathExplosion(cap_);
      paths_.push_back(current_);
    } else {
      for (NodeId v : net_.successors(u))
        if (!on_path_[v.index()]) extend(v);
    }
    on_path_[u.index()] = false;
    current_.pop_back();
  }

  const IONetwork& net_;
  NodeId target_;
  std::size_t cap_;
  std::vector<bool> on_path_;
  Path current_;
  std::vector<Path> paths_;
};

}  // namespace

std::vector<Path> enumerate_simple_paths(const IONetwork& net, NodeId from, NodeId to,
                                         std::size_t cap) {
  if (from.index() >= net.size() || to.index() >= net.size())
    throw NetworkError("unknown node index");
  if (cap == 0) throw NetworkError("path cap must be positive");
  return PathEnumerator(net, to, cap).run(from);
}

std::vector<Path> enumerate_io_simple_paths(const IONetwork& net, std::size_t cap) {
  return enumerate_simple_paths(net, net.input(), net.output(), cap);
}

NodeClassification classify_nodes(const IONetwork& net, std::size_t cap) {
  require_core(net);
  NodeClassification cls;
  cls.io_paths = enumerate_io_simple_paths(net, cap);
  if (cls.io_paths.empty()) throw InvariantViolation("core network without an io-simple path");

  std::vector<std::size_t> visits(net.size(), 0);
  for (const auto& path : cls.io_paths)
    for (NodeId n : path) ++visits[n.index()];

  const std::size_t path_count = cls.io_paths.size();
  for (NodeId n : cls.io_paths.front())
    if (visits[n.index()] == path_count) cls.super_simple.push_back(n);
  for (NodeId n : net.nodes()) {
    if (visits[n.index()] > 0)
      cls.simple.insert(n);
    else
      cls.appendage.insert(n);
  }

  // Backbone positions, checked for consistency across every path.
  cls.position.assign(net.size(), -1);
  for (const auto& path : cls.io_paths) {
    int rank = -1;
    for (NodeId n : path) {
      const bool super = visits[n.index()] == path_count;
      if (super) {
        ++rank;
        if (cls.super_simple.at(rank) != n)
          throw InvariantViolation("super-simple order differs between io-simple paths");
      }
      const int pos = super ? 2 * rank : 2 * rank + 1;
      int& slot = cls.position[n.index()];
      if (slot >= 0 && slot != pos)
        throw InvariantViolation("simple node " + net.name(n) +
                                 " lies between different super-simple pairs");
      slot = pos;
    }
  }

  // Literal super-appendage definition: one SCC pass per complementary subnetwork.
  std::vector<bool> candidate(net.size(), false);
  for (NodeId t : cls.appendage) candidate[t.index()] = true;
  for (const auto& path : cls.io_paths) {
    std::vector<bool> allowed(net.size(), true);
    for (NodeId n : path) allowed[n.index()] = false;
    const SccResult scc = strongly_connected_components(net, allowed);
    std::vector<bool> has_simple(scc.count, false);
    for (NodeId n : net.nodes())
      if (allowed[n.index()] && cls.is_simple(n)) has_simple[scc.component[n.index()]] = true;
    for (NodeId t : cls.appendage)
      if (has_simple[scc.component[t.index()]]) candidate[t.index()] = false;
  }
  for (NodeId t : cls.appendage)
    if (candidate[t.index()]) cls.super_appendage.insert(t);
  return cls;
}

NodeSet fast_super_appendage(const IONetwork& net, const NodeClassification& cls) {
  std::vector<bool> allowed(net.size(), true);
  for (NodeId r : cls.super_simple) allowed[r.index()] = false;
  const SccResult scc = strongly_connected_components(net, allowed);
  std::vector<bool> has_simple(scc.count, false);
  for (NodeId n : cls.simple)
    if (allowed[n.index()]) has_simple[scc.component[n.index()]] = true;
  NodeSet out;
  for (NodeId t : cls.appendage)
    if (!has_simple[scc.component[t.index()]]) out.insert(t);
  return out;
}

Preceq preceq(const NodeClassification& cls, NodeId a, NodeId b) {
  if (!cls.is_simple(a) || !cls.is_simple(b))
    throw NetworkError("order is only defined on simple nodes");
  const int pa = cls.position[a.index()];
  const int pb = cls.position[b.index()];
  if (pa < pb) return Preceq::strictly_precedes;
  if (pa > pb) return Preceq::strictly_follows;
  return pa % 2 == 0 ? Preceq::equal_super_simple : Preceq::same_simple_subnetwork;
}

const char* to_string(Preceq p) {
  switch (p) {
    case Preceq::strictly_precedes: return "strictly-precedes";
    case Preceq::equal_super_simple: return "equal-super-simple";
    case Preceq::same_simple_subnetwork: return "same-simple-subnetwork";
    case Preceq::strictly_follows: return "strictly-follows";
  }
  return "?";
}

}  // namespace homeo
