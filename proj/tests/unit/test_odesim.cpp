#include <doctest.h>

#include <cmath>

#include "../support/fixtures.hpp"
#include "homeo/errors.hpp"
#include "homeo/odesim.hpp"

using namespace homeo;
using namespace homeo::testing;

namespace {

// x_i' = -x_i + I, x_o' = -x_o + (x_i - 1)^3, so x_o(I) = (I - 1)^3.
class CubicSystem final : public EquilibriumSystem {
 public:
  const IONetwork& network() const override { return net_; }
  Eigen::VectorXd rhs(const Eigen::VectorXd& x, double input) const override {
    Eigen::VectorXd f(2);
    f << -x(0) + input, -x(1) + std::pow(x(0) - 1.0, 3);
    return f;
  }
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, double) const override {
    Eigen::MatrixXd j(2, 2);
    j << -1.0, 0.0, 3.0 * std::pow(x(0) - 1.0, 2), -1.0;
    return j;
  }
  Eigen::VectorXd input_derivative(const Eigen::VectorXd&, double) const override {
    return Eigen::Vector2d(1.0, 0.0);
  }

 private:
  IONetwork net_ = haldane();
};

BlockIndexSets block_of(const IONetwork& net, const char* node) {
  for (const auto& k : decompose(net).subnetworks())
    if (nodes_of(k) == ids(net, {node})) return block_index_sets(net, k);
  FAIL("no such block");
  return {};
}

}  // namespace

TEST_CASE("synthesized equations follow the arrows") {
  const IONetwork net = e8();
  const AdmissibleODE ode = synthesize_ode(net, 7);
  CHECK(ode.arguments(net.id("iota")) == ids(net, {"iota", "tau1"}));
  CHECK(ode.arguments(net.id("sigma")) == ids(net, {"iota", "sigma", "tau2"}));
  CHECK(ode.arguments(net.id("tau1")) == ids(net, {"sigma", "tau1"}));
  CHECK(ode.arguments(net.id("tau2")) == ids(net, {"o", "tau2", "tau3"}));
  CHECK(ode.arguments(net.id("tau3")) == ids(net, {"o", "tau3"}));
  CHECK(ode.arguments(net.id("o")) == ids(net, {"iota", "o", "sigma"}));

  // The Jacobian's sparsity follows the arguments.
  Eigen::VectorXd x = Eigen::VectorXd::LinSpaced(6, -0.3, 0.4);
  const Eigen::MatrixXd j = ode.jacobian(x, 0.2);
  for (NodeId r : net.nodes())
    for (NodeId c : net.nodes())
      CHECK((j(r.index(), c.index()) != 0.0) == ode.arguments(r).contains(c));

  const AdmissibleODE same = synthesize_ode(net, 7);
  for (NodeId n : net.nodes()) {
    CHECK(same.decay(n) == ode.decay(n));
    CHECK(ode.decay(n) >= 1.5);
    CHECK(ode.decay(n) <= 2.5);
    CHECK(ode.self_weight(n) == 0.0);
  }
  for (const auto& a : net.arrows()) {
    CHECK(same.weight(a.tail, a.head) == ode.weight(a.tail, a.head));
    CHECK(std::abs(ode.weight(a.tail, a.head)) >= 0.4);
  }
}

TEST_CASE("haldane branch has a closed form") {
  const IONetwork net = haldane();
  const AdmissibleODE ode = synthesize_ode(net, 1);
  const EquilibriumBranch b = continue_equilibrium(ode, -1.0, 1.0, 21);
  REQUIRE(b.samples.size() == 21);
  CHECK_FALSE(b.truncated);
  const double d = ode.decay(net.input());
  const double dout = ode.decay(net.output());
  const double w = ode.weight(net.input(), net.output());
  for (const auto& s : b.samples) {
    CHECK(std::abs(s.state(0) - s.input / d) <= 1e-12);
    CHECK(std::abs(s.state(1) - w * std::tanh(s.input / d) / dout) <= 1e-12);
    CHECK(s.hyperbolic);
  }
  CHECK(detect_homeostasis(b, ode).empty());
  CHECK(continue_equilibrium(ode, 0.0, 1.0, 0).samples.empty());
}

TEST_CASE("E8 branch satisfies the residual contract") {
  const IONetwork net = e8();
  const AdmissibleODE ode = synthesize_ode(net, 3);
  const EquilibriumBranch b = continue_equilibrium(ode, -2.0, 2.0, 401);
  REQUIRE(b.samples.size() == 401);
  for (const auto& s : b.samples) CHECK(s.residual <= 1e-12);
}

TEST_CASE("Cramer identity along a branch") {
  const IONetwork net = e8();
  const AdmissibleODE ode = synthesize_ode(net, 5);
  const EquilibriumBranch b = continue_equilibrium(ode, -2.0, 2.0, 41);
  for (const auto& s : b.samples) {
    const Eigen::MatrixXd j = ode.jacobian(s.state, s.input);
    const Eigen::VectorXd xp = input_response(ode, s.state, s.input);
    const double detj = j.determinant();
    for (NodeId k : net.nodes()) {
      const double lhs = xp(k.index()) * detj;
      const double rhs = reduced_determinant(j, net.input(), k);
      const double scale = std::max(std::abs(lhs), std::abs(rhs));
      CHECK(std::min(std::abs(lhs - rhs), std::abs(lhs + rhs)) <= 1e-8 * scale + 1e-300);
    }
  }
}

TEST_CASE("finite differences along the branch match the linear solve") {
  const IONetwork net = e8();
  const AdmissibleODE ode = synthesize_ode(net, 5);
  const double h = 1e-4;
  const EquilibriumBranch b = continue_equilibrium(ode, 0.3, 0.3 + 20 * h, 21);
  const auto o = net.output().index();
  for (std::size_t k = 1; k + 1 < b.samples.size(); ++k) {
    const double fd = (b.samples[k + 1].state(o) - b.samples[k - 1].state(o)) / (2 * h);
    const double exact = input_response(ode, b.samples[k].state, b.samples[k].input)(o);
    CHECK(std::abs(fd - exact) <= 1e-6 * std::abs(exact));
  }
}

TEST_CASE("manufactured chair point") {
  const CubicSystem sys;
  const EquilibriumBranch b = continue_equilibrium(sys, 0.0, 2.0, 41);
  const auto events = detect_homeostasis(b, sys);
  REQUIRE(events.size() == 1);
  CHECK(events[0].input == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(events[0].kind == EventKind::chair);
  CHECK(events[0].third_derivative == doctest::Approx(6.0).epsilon(1e-3));
}

TEST_CASE("tuned appendage block gives the predicted pattern") {
  const IONetwork net = e8();
  AdmissibleODE ode = synthesize_ode(net, 4);
  const NodeId tau3 = net.id("tau3");
  const BlockIndexSets block = block_of(net, "tau3");
  const double target = 0.05;
  const double s = tune_block_crossing(ode, block, {tau3, std::nullopt}, 0.0, target, 21,
                                       ode.decay(tau3) * 1.02, ode.decay(tau3) * 1.05);
  CHECK(ode.self_weight(tau3) == s);
  const EquilibriumBranch b = continue_equilibrium(ode, 0.0, 0.5, 101);
  REQUIRE_FALSE(b.truncated);
  const auto events = detect_homeostasis(b, ode);
  REQUIRE(events.size() == 1);
  const HomeostasisEvent& e = events[0];
  CHECK(e.input == doctest::Approx(target).epsilon(1e-8));
  CHECK(e.empirical_pattern == ids(net, {"o"}));
  CHECK(e.vanishing_block == "A3");
  CHECK(e.kind == EventKind::simple);
}

TEST_CASE("tuning an arrow weight moves the structural block") {
  const IONetwork net = e8();
  AdmissibleODE ode = synthesize_ode(net, 4);
  const Decomposition d = decompose(net);
  const BlockIndexSets l1 = block_index_sets(net, d.structural[0]);
  const NodeId iota = net.id("iota");
  const NodeId o = net.id("o");
  const double w = ode.weight(iota, o);
  // det B_L1 = f[sigma,iota] f[o,sigma] - f[sigma,sigma] f[o,iota] is affine in w.
  (void)tune_block_crossing(ode, l1, {o, iota}, 0.0, 0.2, 11, w, -w);
  const EquilibriumBranch b = continue_equilibrium(ode, 0.0, 0.2, 11);
  const auto& last = b.samples.back();
  CHECK(std::abs(block_determinant(ode.jacobian(last.state, last.input), l1)) <= 1e-12);
}
