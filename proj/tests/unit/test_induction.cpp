#include <doctest.h>

#include "../support/fixtures.hpp"
#include "homeo/errors.hpp"
#include "homeo/induction.hpp"

using namespace homeo;
using namespace homeo::testing;

namespace {

constexpr PatternNode rho(std::size_t i) { return {PatternKind::super_simple, i}; }
constexpr PatternNode lt(std::size_t j) { return {PatternKind::backbone, j}; }
constexpr PatternNode at(std::size_t i) { return {PatternKind::appendage, i}; }

}  // namespace

TEST_CASE("theorem engine on E8") {
  const IONetwork net = e8();
  const PatternNetwork p = build_pattern_network(net);
  CHECK_FALSE(induces_theorem(p, at(3), at(2)));
  CHECK(induces_theorem(p, at(2), at(3)));
  CHECK_FALSE(induces_theorem(p, lt(1), at(1)));
  CHECK(induces_theorem(p, lt(1), at(2)));
  CHECK(induces_theorem(p, lt(1), rho(1)));
  CHECK_FALSE(induces_theorem(p, lt(1), rho(0)));
  CHECK(induces_theorem(p, at(1), rho(0)));
  CHECK(induces_theorem(p, at(1), lt(1)));
  CHECK_FALSE(induces_theorem(p, at(2), lt(1)));
  CHECK_THROWS_AS((void)induces_theorem(p, rho(0), lt(1)), NetworkError);
}

TEST_CASE("patterns of E8") {
  const IONetwork net = e8();
  const PatternNetwork p = build_pattern_network(net);
  const auto patterns = all_patterns(net, p);
  REQUIRE(patterns.size() == 4);
  CHECK(label(patterns[0].source) == "L1");
  CHECK(patterns[0].nodes == ids(net, {"tau2", "tau3", "o"}));
  CHECK(patterns[1].nodes == ids(net, {"iota", "sigma", "tau2", "tau3", "o"}));
  CHECK(patterns[2].nodes == ids(net, {"tau3", "o"}));
  CHECK(patterns[3].nodes == ids(net, {"o"}));
}

TEST_CASE("patterns of small networks") {
  const IONetwork h = haldane();
  const auto ph = all_patterns(h, build_pattern_network(h));
  REQUIRE(ph.size() == 1);
  CHECK(ph[0].nodes == ids(h, {"o"}));
  const IONetwork d = diamond();
  const auto pd = all_patterns(d, build_pattern_network(d));
  REQUIRE(pd.size() == 1);
  CHECK(pd[0].nodes == ids(d, {"o"}));
}

TEST_CASE("reposition engine on E8") {
  const IONetwork net = e8();
  const Decomposition d = decompose(net);
  const HomeostasisSubnetwork l1 = d.structural[0];
  const HomeostasisSubnetwork tau3 = d.appendage[2];
  CHECK_FALSE(induces_reposition(net, tau3, net.id("tau2")));
  CHECK(induces_reposition(net, l1, net.id("tau2")));
  for (const auto& k : d.subnetworks()) CHECK(induces_reposition(net, k, net.output()));
  CHECK(reposition_verdict(net, l1, net.input()) == RepositionVerdict::input_target);
  CHECK_THROWS_AS((void)induces_reposition(net, l1, net.input()), NetworkError);
}

TEST_CASE("non-core repositioned networks get no verdict") {
  // In G(a) the node b cannot reach the new output a.
  IONetwork net({"iota", "a", "b", "o"}, "iota", "o",
                {{"iota", "a"}, {"a", "b"}, {"b", "o"}});
  const Decomposition d = decompose(net);
  CHECK(reposition_verdict(net, d.subnetworks()[0], net.id("a")) == RepositionVerdict::non_core);
}

TEST_CASE("reposition keeps the arrows") {
  const IONetwork net = e8();
  const RepositionedNetwork r = reposition(net, net.id("sigma"));
  CHECK(r.network.output() == net.id("sigma"));
  CHECK(r.network.arrows() == net.arrows());
}
