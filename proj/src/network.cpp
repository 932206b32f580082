#include "homeo/network.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "homeo/errors.hpp"

namespace homeo {

IONetwork::IONetwork(std::vector<std::string> names, std::string_view input,
                     std::string_view output,
                     const std::vector<std::pair<std::string, std::string>>& arrows)
    : names_(std::move(names)) {
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw NetworkError("node identifiers must be nonempty");
    if (!seen.insert(n).second) throw NetworkError("duplicate node \"" + n + "\"");
  }
  if (names_.size() > UINT32_MAX) throw NetworkError("too many nodes");
  input_ = id(input);
  output_ = id(output);
  if (input_ == output_) throw NetworkError("input and output must be distinct nodes");

  std::set<Arrow> unique;
  for (const auto& [t, h] : arrows) {
    const NodeId tail = id(t);
    const NodeId head = id(h);
    if (tail == head) {
      dropped_self_arrows_ = true;
      continue;
    }
    unique.insert({tail, head});
  }
  arrows_.assign(unique.begin(), unique.end());
  build_adjacency();
}

void IONetwork::build_adjacency() {
  succ_.assign(size(), {});
  pred_.assign(size(), {});
  for (const auto& a : arrows_) {
    succ_[a.tail.index()].push_back(a.head);
    pred_[a.head.index()].push_back(a.tail);
  }
  auto by_name = [this](NodeId a, NodeId b) { return name_less(a, b); };
  for (auto& s : succ_) std::sort(s.begin(), s.end(), by_name);
  for (auto& p : pred_) std::sort(p.begin(), p.end(), by_name);
}

std::optional<NodeId> IONetwork::find(std::string_view n) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == n) return NodeId{static_cast<std::uint32_t>(i)};
  return std::nullopt;
}

NodeId IONetwork::id(std::string_view n) const {
  if (auto found = find(n)) return *found;
  throw NetworkError("unknown node \"" + std::string(n) + "\"");
}

std::vector<NodeId> IONetwork::nodes() const {
  std::vector<NodeId> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = NodeId{static_cast<std::uint32_t>(i)};
  return out;
}

bool IONetwork::has_arrow(NodeId tail, NodeId head) const {
  return std::binary_search(arrows_.begin(), arrows_.end(), Arrow{tail, head});
}

IONetwork IONetwork::with_output(NodeId new_output) const {
  if (new_output.index() >= size()) throw NetworkError("unknown node index");
  if (new_output == input_) throw NetworkError("input and output must be distinct nodes");
  IONetwork copy = *this;
  copy.output_ = new_output;
  return copy;
}

std::vector<NodeId> IONetwork::sorted_by_name(const NodeSet& set) const {
  std::vector<NodeId> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [this](NodeId a, NodeId b) { return name_less(a, b); });
  return out;
}

std::vector<std::string> IONetwork::names_of(const NodeSet& set) const {
  std::vector<std::string> out;
  for (NodeId id : sorted_by_name(set)) out.push_back(name(id));
  return out;
}

IONetwork parse_network(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw NetworkError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw NetworkError("network document must be a JSON object");
  for (const char* key : {"nodes", "input", "output"})
    if (!doc.contains(key)) throw NetworkError(std::string("missing \"") + key + "\"");
  try {
    auto names = doc.at("nodes").get<std::vector<std::string>>();
    auto input = doc.at("input").get<std::string>();
    auto output = doc.at("output").get<std::string>();
    std::vector<std::pair<std::string, std::string>> arrows;
    if (doc.contains("arrows")) {
      for (const auto& a : doc.at("arrows")) {
        if (!a.is_array() || a.size() != 2)
          throw NetworkError("arrows must be 2-element arrays");
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
      }
    }
    return IONetwork(std::move(names), input, output, arrows);
  } catch (const nlohmann::json::exception& e) {
    throw NetworkError(std::string("schema violation: ") + e.what());
  }
}

IONetwork load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw NetworkError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_network(buf.str());
}

std::string serialize_network(const IONetwork& net) {
  nlohmann::ordered_json doc;
  doc["nodes"] = net.names();
  doc["input"] = net.name(net.input());
  doc["output"] = net.name(net.output());
  auto arrows = nlohmann::ordered_json::array();
  for (const auto& a : net.arrows()) arrows.push_back({net.name(a.tail), net.name(a.head)});
  doc["arrows"] = std::move(arrows);
  return doc.dump();
}

NodeSet reachable_within(const IONetwork& net, NodeId from, Direction direction,
                         const std::vector<bool>& allowed) {
  if (from.index() >= net.size()) throw NetworkError("unknown node index");
  NodeSet seen{from};
  std::deque<NodeId> queue{from};
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    auto next = direction == Direction::forward ? net.successors(u) : net.predecessors(u);
    for (NodeId v : next) {
      if (!allowed.empty() && !allowed[v.index()]) continue;
      if (seen.insert(v).second) queue.push_back(v);
    }
  }
  return seen;
}

NodeSet reachable(const IONetwork& net, NodeId from, Direction direction) {
  return reachable_within(net, from, direction, {});
}

CoreReport validate_core(const IONetwork& net) {
  const NodeSet down = reachable(net, net.input(), Direction::forward);
  const NodeSet up = reachable(net, net.output(), Direction::backward);
  CoreReport report;
  for (NodeId n : net.nodes()) {
    if (!down.contains(n)) report.unreachable_from_input.insert(n);
    if (!up.contains(n)) report.cannot_reach_output.insert(n);
  }
  report.is_core = report.unreachable_from_input.empty() && report.cannot_reach_output.empty();
  return report;
}

void require_core(const IONetwork& net) {
  const CoreReport report = validate_core(net);
  if (report.is_core) return;
  std::string msg = "network is not core:";
  for (const auto& n : net.names_of(report.unreachable_from_input))
    msg += " " + n + " (unreachable from input)";
  for (const auto& n : net.names_of(report.cannot_reach_output))
    msg += " " + n + " (cannot reach output)";
  throw NetworkError(msg);
}

SccResult strongly_connected_components(const IONetwork& net, const std::vector<bool>& allowed) {
  const std::size_t n = net.size();
  SccResult result;
  result.component.assign(n, -1);
  std::vector<int> index(n, -1);
  std::vector<int> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  int counter = 0;

  std::function<void(NodeId)> visit = [&](NodeId v) {
    index[v.index()] = low[v.index()] = counter++;
    stack.push_back(v);
    on_stack[v.index()] = true;
    for (NodeId w : net.successors(v)) {
      if (!allowed[w.index()]) continue;
      if (index[w.index()] < 0) {
        visit(w);
        low[v.index()] = std::min(low[v.index()], low[w.index()]);
      } else if (on_stack[w.index()]) {
        low[v.index()] = std::min(low[v.index()], index[w.index()]);
      }
    }
    if (low[v.index()] == index[v.index()]) {
      NodeId w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w.index()] = false;
        result.component[w.index()] = result.count;
      } while (w != v);
      ++result.count;
    }
  };

  for (NodeId v : net.nodes())
    if (allowed[v.index()] && index[v.index()] < 0) visit(v);
  return result;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string network_to_dot(const IONetwork& net) {
  std::ostringstream os;
  os << "digraph G {\n  rankdir=LR;\n";
  for (NodeId n : net.nodes()) {
    os << "  " << dot_quote(net.name(n));
    if (n == net.input())
      os << " [role=input, shape=invhouse];\n";
    else if (n == net.output())
      os << " [role=output, shape=house];\n";
    else
      os << " [role=internal, shape=ellipse];\n";
  }
  for (const auto& a : net.arrows())
    os << "  " << dot_quote(net.name(a.tail)) << " -> " << dot_quote(net.name(a.head)) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace homeo
