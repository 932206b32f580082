#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/fixtures.hpp"
#include "homeo/pattern_net.hpp"

using namespace homeo;
using namespace homeo::testing;

namespace {

constexpr PatternNode rho(std::size_t i) { return {PatternKind::super_simple, i}; }
constexpr PatternNode lt(std::size_t j) { return {PatternKind::backbone, j}; }
constexpr PatternNode at(std::size_t i) { return {PatternKind::appendage, i}; }

}  // namespace

TEST_CASE("pattern network of E8") {
  const IONetwork net = e8();
  const PatternNetwork p = build_pattern_network(net);
  CHECK(p.backbone == std::vector<PatternNode>{rho(0), lt(1), rho(1)});
  REQUIRE(p.component_count() == 3);
  CHECK(p.contents(at(1)) == ids(net, {"tau1"}));
  CHECK(p.contents(at(2)) == ids(net, {"tau2"}));
  CHECK(p.contents(at(3)) == ids(net, {"tau3"}));
  CHECK(p.appendage_arrows == std::vector<std::pair<std::size_t, std::size_t>>{{3, 2}});
  CHECK(p.vmax_of(1) == rho(0));
  CHECK(p.vmax_of(2) == lt(1));
  CHECK(p.vmax_of(3) == lt(1));
  CHECK(p.vmin_of(1) == lt(1));
  CHECK(p.vmin_of(2) == rho(1));
  CHECK(p.vmin_of(3) == rho(1));
  CHECK(p.label(net, lt(1)) == "L1");
  CHECK(p.label(net, rho(1)) == "o");
  CHECK(p.contents(lt(1)) == ids(net, {"sigma"}));
}

TEST_CASE("pattern networks without appendage components") {
  const PatternNetwork h = build_pattern_network(haldane());
  CHECK(h.backbone == std::vector<PatternNode>{rho(0), lt(1), rho(1)});
  CHECK(h.component_count() == 0);
  const PatternNetwork c = build_pattern_network(chain_with_loop());
  CHECK(c.backbone == std::vector<PatternNode>{rho(0), lt(1), rho(1), lt(2), rho(2)});
  REQUIRE(c.component_count() == 1);
  CHECK(c.vmax_of(1) == rho(1));
  CHECK(c.vmin_of(1) == rho(1));
}

TEST_CASE("pattern_node_of") {
  const IONetwork net = e8();
  const PatternNetwork p = build_pattern_network(net);
  CHECK(pattern_node_of(p, net.id("sigma")) == lt(1));
  CHECK(pattern_node_of(p, net.id("iota")) == rho(0));
  CHECK(pattern_node_of(p, net.id("tau2")) == at(2));
}

TEST_CASE("chain positions") {
  CHECK(chain_position(rho(0)) == 0);
  CHECK(chain_position(lt(1)) == 1);
  CHECK(chain_position(rho(2)) == 4);
  CHECK(chain_node_at(3) == lt(2));
}

TEST_CASE("dot export of the pattern network") {
  const IONetwork net = e8();
  const std::string dot = pattern_to_dot(net, build_pattern_network(net));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("vmax") != std::string::npos);
  CHECK(dot.find("vmin") != std::string::npos);
}

TEST_CASE("vmax and vmin are total on the corpus") {
  for (const IONetwork& net : random_core_corpus({.count = 80, .seed = 3})) {
    const PatternNetwork p = build_pattern_network(net);
    CHECK(p.vmax.size() == p.component_count());
    CHECK(p.vmin.size() == p.component_count());
    for (std::size_t i = 1; i <= p.component_count(); ++i) {
      CHECK(p.vmax_of(i).kind != PatternKind::appendage);
      CHECK(p.vmin_of(i).kind != PatternKind::appendage);
    }
  }
}
