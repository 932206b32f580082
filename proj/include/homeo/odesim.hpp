#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "homeo/subnetworks.hpp"

namespace homeo {

/// Every numeric threshold of the harness in one place.
struct OdeTolerances {
  double residual = 1e-12;          ///< max-norm of f at accepted equilibria
  double hyperbolic_margin = 1e-8;  ///< |Re lambda| below this is non-hyperbolic
  double root = 1e-10;              ///< |det H| <= root * branch scale at an event
  double pattern_member = 1e-8;     ///< |x'_k| <= this * max|x'| => homeostatic
  double pattern_nonmember = 1e-4;  ///< non-members must stay above this * max|x'|
  double fd_step = 1e-4;            ///< step for x_o'' and x_o''' differences
  double kind_threshold = 1e-6;     ///< relative zero test for x_o'' and x_o'''
  int newton_iterations = 60;
};

/// Parametrised vector field f(X, I) whose state vector follows the
/// network's node declaration order; I enters the input node only.
class EquilibriumSystem {
 public:
  virtual ~EquilibriumSystem() = default;
  [[nodiscard]] virtual const IONetwork& network() const = 0;
  [[nodiscard]] virtual Eigen::VectorXd rhs(const Eigen::VectorXd& x, double input) const = 0;
  [[nodiscard]] virtual Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, double input) const = 0;
  /// df/dI; nonzero in the input component only.
  [[nodiscard]] virtual Eigen::VectorXd input_derivative(const Eigen::VectorXd& x,
                                                         double input) const = 0;
  [[nodiscard]] std::size_t dimension() const { return network().size(); }
};

/// dx_j/dt = -d_j x_j + s_j tanh(x_j) + sum_{l -> j} w_jl tanh(x_l) (+ I if j is the input).
///
/// The self-coupling s_j is zero after synthesis; it is the knob used to
/// drive a diagonal Jacobian entry through zero.
class AdmissibleODE final : public EquilibriumSystem {
 public:
  AdmissibleODE(IONetwork net, std::vector<double> decay, std::vector<double> self_weight,
                std::map<std::pair<NodeId, NodeId>, double> weights);

  [[nodiscard]] const IONetwork& network() const override { return net_; }
  [[nodiscard]] Eigen::VectorXd rhs(const Eigen::VectorXd& x, double input) const override;
  [[nodiscard]] Eigen::MatrixXd jacobian(const Eigen::VectorXd& x, double input) const override;
  [[nodiscard]] Eigen::VectorXd input_derivative(const Eigen::VectorXd& x,
                                                 double input) const override;

  [[nodiscard]] double decay(NodeId n) const { return decay_.at(n.index()); }
  [[nodiscard]] double self_weight(NodeId n) const { return self_.at(n.index()); }
  /// Weight of the arrow tail -> head (row head, column tail).
  [[nodiscard]] double weight(NodeId tail, NodeId head) const;
  void set_self_weight(NodeId n, double s) { self_.at(n.index()) = s; }
  void set_weight(NodeId tail, NodeId head, double w);
  /// Arguments of f_j: the node itself and its in-neighbours, in name order.
  [[nodiscard]] NodeSet arguments(NodeId j) const;

 private:
  IONetwork net_;
  std::vector<double> decay_;
  std::vector<double> self_;
  std::map<std::pair<NodeId, NodeId>, double> weights_;  ///< key (head, tail)
};

/// Seeded parameters: d_j uniform on [1.5, 2.5], |w| uniform on [0.4, 1.2]
/// with random sign, s_j = 0. Requires a core network.
[[nodiscard]] AdmissibleODE synthesize_ode(const IONetwork& net, std::uint64_t seed);

struct BranchSample {
  double input = 0.0;
  Eigen::VectorXd state;
  double residual = 0.0;
  bool hyperbolic = true;
};

struct EquilibriumBranch {
  std::vector<BranchSample> samples;
  bool truncated = false;  ///< continuation stopped early (see `note`)
  std::string note;
};

/// Damped Newton from `guess`. Returns nullopt unless the max-norm residual
/// reaches tol.residual.
[[nodiscard]] std::optional<Eigen::VectorXd> solve_equilibrium(const EquilibriumSystem& sys,
                                                               double input,
                                                               Eigen::VectorXd guess,
                                                               const OdeTolerances& tol = {});

/// Natural-parameter continuation over `steps` evenly spaced inputs from
/// `start` to `end` inclusive, tangent predictor plus Newton corrector.
/// The first equilibrium is found by damped Newton from the origin, or
/// failing that by continuation from the equilibrium at I = 0
/// (NumericError if both fail). A later corrector failure truncates the
/// branch and sets `truncated`. steps == 0 yields an empty branch.
[[nodiscard]] EquilibriumBranch continue_equilibrium(const EquilibriumSystem& sys, double start,
                                                     double end, std::size_t steps,
                                                     const OdeTolerances& tol = {});

/// dX/dI at an equilibrium: solves J x' = -df/dI.
[[nodiscard]] Eigen::VectorXd input_response(const EquilibriumSystem& sys,
                                             const Eigen::VectorXd& x, double input);
/// det of J without the input row and output column.
[[nodiscard]] double homeostasis_determinant(const EquilibriumSystem& sys,
                                             const Eigen::VectorXd& x, double input);
/// det of the block on `block` rows/columns (declaration order).
[[nodiscard]] double block_determinant(const Eigen::MatrixXd& jac, const BlockIndexSets& block);
/// det of J without the input row and the column of `kappa`.
[[nodiscard]] double reduced_determinant(const Eigen::MatrixXd& jac, NodeId input, NodeId kappa);
[[nodiscard]] bool is_hyperbolic(const Eigen::MatrixXd& jac, double margin);

enum class EventKind { simple, chair, degenerate };
[[nodiscard]] const char* to_string(EventKind k);

struct HomeostasisEvent {
  double input = 0.0;
  EventKind kind = EventKind::simple;
  NodeSet empirical_pattern;
  Eigen::VectorXd state;
  Eigen::VectorXd response;      ///< x' at the event
  double second_derivative = 0;  ///< x_o''
  double third_derivative = 0;   ///< x_o'''
  std::string vanishing_block;   ///< label of the block closest to singular
};

/// Brackets sign changes of det H along the branch and bisects them;
/// interior local minima of |det H| that reach zero (even-order roots) are
/// refined by golden-section search. Each root is classified from finite
/// differences of the exact x_o'.
[[nodiscard]] std::vector<HomeostasisEvent> detect_homeostasis(const EquilibriumBranch& branch,
                                                               const EquilibriumSystem& sys,
                                                               const OdeTolerances& tol = {});

/// A tunable scalar of an AdmissibleODE: self weight of `head` when
/// `tail` is empty, else the weight of tail -> head.
struct OdeParameter {
  NodeId head;
  std::optional<NodeId> tail;
};

/// Secant search on one parameter so that det of `block` vanishes at input
/// `target` on the branch continued from `start`. Returns the parameter
/// value (also stored in `ode`). Throws NumericError on failure.
double tune_block_crossing(AdmissibleODE& ode, const BlockIndexSets& block, OdeParameter param,
                           double start, double target, std::size_t steps, double initial,
                           double second, const OdeTolerances& tol = {});

}  // namespace homeo
