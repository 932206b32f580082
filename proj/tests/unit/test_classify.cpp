#include <doctest.h>

#include <algorithm>

#include "../support/corpus.hpp"
#include "../support/fixtures.hpp"
#include "homeo/classify.hpp"
#include "homeo/errors.hpp"

using namespace homeo;
using namespace homeo::testing;

namespace {

std::vector<std::vector<std::string>> named(const IONetwork& net, const std::vector<Path>& paths) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : paths) {
    std::vector<std::string> names;
    for (NodeId n : p) names.push_back(net.name(n));
    out.push_back(names);
  }
  return out;
}

}  // namespace

TEST_CASE("io simple paths") {
  const IONetwork net = e8();
  using V = std::vector<std::vector<std::string>>;
  CHECK(named(net, enumerate_io_simple_paths(net)) == V{{"iota", "o"}, {"iota", "sigma", "o"}});
  const IONetwork h = haldane();
  CHECK(named(h, enumerate_io_simple_paths(h)) == V{{"iota", "o"}});
  const IONetwork d = diamond();
  CHECK(named(d, enumerate_io_simple_paths(d)) == V{{"iota", "a", "o"}, {"iota", "b", "o"}});
}

TEST_CASE("path cap") {
  // Complete digraph on 8 nodes has 1957 io-simple paths.
  std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g", "h"};
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const auto& t : names)
    for (const auto& h : names)
      if (t != h) arrows.emplace_back(t, h);
  IONetwork net(names, "a", "h", arrows);
  CHECK(enumerate_io_simple_paths(net).size() == 1957);
  CHECK_THROWS_AS((void)enumerate_io_simple_paths(net, 100), PathExplosion);
}

TEST_CASE("classification of E8") {
  const IONetwork net = e8();
  const NodeClassification c = classify_nodes(net);
  CHECK(c.simple == ids(net, {"iota", "sigma", "o"}));
  CHECK(c.super_simple == std::vector<NodeId>{net.id("iota"), net.id("o")});
  CHECK(c.appendage == ids(net, {"tau1", "tau2", "tau3"}));
  CHECK(c.super_appendage == ids(net, {"tau1", "tau2", "tau3"}));
  CHECK(fast_super_appendage(net, c) == c.super_appendage);
  CHECK(c.position[net.id("sigma").index()] == 1);
  CHECK(c.position[net.id("o").index()] == 2);
}

TEST_CASE("a cycle through a super-simple node does not link") {
  const IONetwork net = chain_with_loop();
  const NodeClassification c = classify_nodes(net);
  CHECK(c.super_simple == std::vector<NodeId>{net.id("iota"), net.id("s"), net.id("o")});
  CHECK(c.appendage == ids(net, {"t"}));
  CHECK(c.super_appendage == ids(net, {"t"}));
  CHECK(fast_super_appendage(net, c) == ids(net, {"t"}));
}

TEST_CASE("linked appendage node is not super-appendage") {
  const IONetwork net = linked_loop();
  const NodeClassification c = classify_nodes(net);
  CHECK(c.appendage == ids(net, {"t"}));
  CHECK(c.super_appendage.empty());
  CHECK(fast_super_appendage(net, c).empty());
}

TEST_CASE("haldane classification") {
  const IONetwork net = haldane();
  const NodeClassification c = classify_nodes(net);
  CHECK(c.simple.size() == 2);
  CHECK(c.appendage.empty());
  CHECK(fast_super_appendage(net, c).empty());
}

TEST_CASE("non-core networks are rejected") {
  IONetwork net({"i", "a", "o"}, "i", "o", {{"i", "o"}});
  CHECK_THROWS_AS((void)classify_nodes(net), NetworkError);
}

TEST_CASE("preceq") {
  const IONetwork net = e8();
  const NodeClassification c = classify_nodes(net);
  CHECK(preceq(c, net.id("iota"), net.id("sigma")) == Preceq::strictly_precedes);
  CHECK(preceq(c, net.id("o"), net.id("o")) == Preceq::equal_super_simple);
  CHECK(preceq(c, net.id("o"), net.id("sigma")) == Preceq::strictly_follows);
  CHECK_THROWS_AS((void)preceq(c, net.id("tau1"), net.id("o")), NetworkError);
  const IONetwork d = diamond();
  const NodeClassification cd = classify_nodes(d);
  CHECK(preceq(cd, d.id("a"), d.id("b")) == Preceq::same_simple_subnetwork);
}

TEST_CASE("path membership matches classification on the corpus") {
  for (const IONetwork& net : random_core_corpus({.count = 60, .seed = 99})) {
    const NodeClassification c = classify_nodes(net);
    for (NodeId n : net.nodes()) {
      const auto on = std::count_if(c.io_paths.begin(), c.io_paths.end(), [&](const Path& p) {
        return std::find(p.begin(), p.end(), n) != p.end();
      });
      CHECK((on > 0) == c.is_simple(n));
      CHECK((on == static_cast<long>(c.io_paths.size())) == c.is_super_simple(n));
    }
    CHECK(fast_super_appendage(net, c) == c.super_appendage);
  }
}
