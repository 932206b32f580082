#include "homeo/odesim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "homeo/errors.hpp"

namespace homeo {

AdmissibleODE::AdmissibleODE(IONetwork net, std::vector<double> decay,
                             std::vector<double> self_weight,
                             std::map<std::pair<NodeId, NodeId>, double> weights)
    : net_(std::move(net)),
      decay_(std::move(decay)),
      self_(std::move(self_weight)),
      weights_(std::move(weights)) {
  if (decay_.size() != net_.size() || self_.size() != net_.size())
    throw NetworkError("one decay rate and one self weight per node required");
  for (const auto& [key, w] : weights_)
    if (!net_.has_arrow(key.second, key.first))
      throw NetworkError("coupling weight without a matching arrow");
}

double AdmissibleODE::weight(NodeId tail, NodeId head) const {
  auto it = weights_.find({head, tail});
  return it == weights_.end() ? 0.0 : it->second;
}

void AdmissibleODE::set_weight(NodeId tail, NodeId head, double w) {
  if (!net_.has_arrow(tail, head)) throw NetworkError("no such arrow");
  weights_[{head, tail}] = w;
}

NodeSet AdmissibleODE::arguments(NodeId j) const {
  NodeSet args{j};
  for (NodeId l : net_.predecessors(j)) args.insert(l);
  return args;
}

Eigen::VectorXd AdmissibleODE::rhs(const Eigen::VectorXd& x, double input) const {
  Eigen::VectorXd f(x.size());
  for (NodeId j : net_.nodes()) {
    const auto i = static_cast<Eigen::Index>(j.index());
    f(i) = -decay_[j.index()] * x(i) + self_[j.index()] * std::tanh(x(i));
  }
  for (const auto& [key, w] : weights_)
    f(static_cast<Eigen::Index>(key.first.index())) +=
        w * std::tanh(x(static_cast<Eigen::Index>(key.second.index())));
  f(static_cast<Eigen::Index>(net_.input().index())) += input;
  return f;
}

namespace {

double sech2(double v) {
  const double c = std::cosh(v);
  return 1.0 / (c * c);
}

}  // namespace

Eigen::MatrixXd AdmissibleODE::jacobian(const Eigen::VectorXd& x, double) const {
  const auto n = static_cast<Eigen::Index>(net_.size());
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    j(i, i) = -decay_[static_cast<std::size_t>(i)] + self_[static_cast<std::size_t>(i)] * sech2(x(i));
  for (const auto& [key, w] : weights_) {
    const auto row = static_cast<Eigen::Index>(key.first.index());
    const auto col = static_cast<Eigen::Index>(key.second.index());
    j(row, col) += w * sech2(x(col));
  }
  return j;
}

Eigen::VectorXd AdmissibleODE::input_derivative(const Eigen::VectorXd& x, double) const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(x.size());
  d(static_cast<Eigen::Index>(net_.input().index())) = 1.0;
  return d;
}

AdmissibleODE synthesize_ode(const IONetwork& net, std::uint64_t seed) {
  require_core(net);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> decay(1.5, 2.5);
  std::uniform_real_distribution<double> magnitude(0.4, 1.2);
  std::bernoulli_distribution negative(0.5);
  std::vector<double> d(net.size());
  for (auto& v : d) v = decay(rng);
  std::map<std::pair<NodeId, NodeId>, double> w;
  for (const auto& a : net.arrows()) {
    const double m = magnitude(rng);
    w[{a.head, a.tail}] = negative(rng) ? -m : m;
  }
  return AdmissibleODE(net, std::move(d), std::vector<double>(net.size(), 0.0), std::move(w));
}

std::optional<Eigen::VectorXd> solve_equilibrium(const EquilibriumSystem& sys, double input,
                                                 Eigen::VectorXd x, const OdeTolerances& tol) {
  Eigen::VectorXd f = sys.rhs(x, input);
  double res = f.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < tol.newton_iterations; ++it) {
    if (res <= tol.residual * 1e-2) break;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.jacobian(x, input));
    if (lu.determinant() == 0.0 || !std::isfinite(lu.determinant())) return std::nullopt;
    const Eigen::VectorXd step = lu.solve(-f);
    double lambda = 1.0;
    bool improved = false;
    for (int k = 0; k < 30; ++k, lambda *= 0.5) {
      const Eigen::VectorXd trial = x + lambda * step;
      const Eigen::VectorXd ft = sys.rhs(trial, input);
      const double rt = ft.lpNorm<Eigen::Infinity>();
      if (std::isfinite(rt) && rt < res) {
        x = trial;
        f = ft;
        res = rt;
        improved = true;
        break;
      }
    }
    if (!improved) break;  // stagnated at round-off level
  }
  if (!(res <= tol.residual)) return std::nullopt;
  return x;
}

Eigen::VectorXd input_response(const EquilibriumSystem& sys, const Eigen::VectorXd& x,
                               double input) {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.jacobian(x, input));
  return lu.solve(-sys.input_derivative(x, input));
}

bool is_hyperbolic(const Eigen::MatrixXd& jac, double margin) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(jac, false);
  const auto& ev = es.eigenvalues();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i).real()) < margin) return false;
  return true;
}

namespace {

// Fallback start: from the equilibrium at I = 0 (found from the origin) walk
// to `target` with predictor-corrector steps.
std::optional<Eigen::VectorXd> homotopy_start(const EquilibriumSystem& sys, double target,
                                              const OdeTolerances& tol) {
  auto x = solve_equilibrium(sys, 0.0, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(sys.dimension())), tol);
  if (!x) return std::nullopt;
  constexpr int kSteps = 200;
  for (int k = 1; k <= kSteps; ++k) {
    const double prev = target * (k - 1) / kSteps;
    const double next = target * k / kSteps;
    x = solve_equilibrium(sys, next, *x + input_response(sys, *x, prev) * (next - prev), tol);
    if (!x) return std::nullopt;
  }
  return x;
}

}  // namespace

EquilibriumBranch continue_equilibrium(const EquilibriumSystem& sys, double start, double end,
                                       std::size_t steps, const OdeTolerances& tol) {
  EquilibriumBranch branch;
  if (steps == 0) return branch;
  const auto n = static_cast<Eigen::Index>(sys.dimension());

  auto record = [&](double input, const Eigen::VectorXd& x) {
    BranchSample s;
    s.input = input;
    s.state = x;
    s.residual = sys.rhs(x, input).lpNorm<Eigen::Infinity>();
    s.hyperbolic = is_hyperbolic(sys.jacobian(x, input), tol.hyperbolic_margin);
    branch.samples.push_back(std::move(s));
  };

  auto first = solve_equilibrium(sys, start, Eigen::VectorXd::Zero(n), tol);
  if (!first) first = homotopy_start(sys, start, tol);
  if (!first) throw NumericError("Newton diverged at the start of the branch");
  record(start, *first);

  const double h = steps > 1 ? (end - start) / static_cast<double>(steps - 1) : 0.0;
  for (std::size_t k = 1; k < steps; ++k) {
    const double target = start + h * static_cast<double>(k);
    Eigen::VectorXd x = branch.samples.back().state;
    double at = branch.samples.back().input;
    // Tangent predictor and Newton corrector; halve the step on failure.
    bool ok = true;
    for (int sub = 1; at != target;) {
      const double next = sub == 1 ? target : at + (target - at) / sub;
      const Eigen::VectorXd guess = x + input_response(sys, x, at) * (next - at);
      if (auto y = solve_equilibrium(sys, next, guess, tol)) {
        x = *y;
        at = next;
        sub = 1;
      } else if (sub < 64) {
        sub *= 2;
      } else {
        ok = false;
        break;
      }
    }
    if (!ok) {
      branch.truncated = true;
      branch.note = "corrector failed near I=" + std::to_string(target);
      break;
    }
    record(target, x);
    if (!branch.samples.back().hyperbolic && branch.note.empty())
      branch.note = "hyperbolicity lost near I=" + std::to_string(target);
  }
  return branch;
}

namespace {

Eigen::MatrixXd drop(const Eigen::MatrixXd& m, Eigen::Index row, Eigen::Index col) {
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd out(n - 1, n - 1);
  for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
    if (r == row) continue;
    for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

double det(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

}  // namespace

double reduced_determinant(const Eigen::MatrixXd& jac, NodeId input, NodeId kappa) {
  return det(drop(jac, static_cast<Eigen::Index>(input.index()),
                  static_cast<Eigen::Index>(kappa.index())));
}

double homeostasis_determinant(const EquilibriumSystem& sys, const Eigen::VectorXd& x,
                               double input) {
  const auto& net = sys.network();
  return reduced_determinant(sys.jacobian(x, input), net.input(), net.output());
}

double block_determinant(const Eigen::MatrixXd& jac, const BlockIndexSets& block) {
  Eigen::MatrixXd b(static_cast<Eigen::Index>(block.row_nodes.size()),
                    static_cast<Eigen::Index>(block.col_nodes.size()));
  Eigen::Index i = 0;
  for (NodeId r : block.row_nodes) {
    Eigen::Index j = 0;
    for (NodeId c : block.col_nodes)
      b(i, j++) = jac(static_cast<Eigen::Index>(r.index()), static_cast<Eigen::Index>(c.index()));
    ++i;
  }
  return det(b);
}

const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::simple: return "simple";
    case EventKind::chair: return "chair";
    case EventKind::degenerate: return "degenerate";
  }
  return "?";
}

namespace {

struct Point {
  double input;
  Eigen::VectorXd state;
  double h;
};

class EventFinder {
 public:
  EventFinder(const EquilibriumBranch& branch, const EquilibriumSystem& sys,
              const OdeTolerances& tol)
      : branch_(branch), sys_(sys), tol_(tol) {}

  std::vector<HomeostasisEvent> run() {
    const auto& s = branch_.samples;
    std::vector<HomeostasisEvent> events;
    if (s.empty()) return events;
    std::vector<double> h(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      h[k] = homeostasis_determinant(sys_, s[k].state, s[k].input);
      scale_ = std::max(scale_, std::abs(h[k]));
    }
    if (scale_ == 0.0) throw NumericError("det H vanishes identically along the branch");
    prepare_blocks();

    for (std::size_t k = 0; k < s.size(); ++k) {
      const Point p{s[k].input, s[k].state, h[k]};
      if (h[k] == 0.0) {
        events.push_back(classify(p));
      } else if (k + 1 < s.size() && h[k] * h[k + 1] < 0.0) {
        events.push_back(classify(bisect(p, {s[k + 1].input, s[k + 1].state, h[k + 1]})));
      } else if (k > 0 && k + 1 < s.size() && h[k - 1] * h[k] > 0.0 && h[k] * h[k + 1] > 0.0 &&
                 std::abs(h[k]) <= std::abs(h[k - 1]) && std::abs(h[k]) <= std::abs(h[k + 1])) {
        if (auto p2 = touch(k)) events.push_back(classify(*p2));
      }
    }
    return events;
  }

 private:
  Point solve_at(double input, const Point& near) const {
    // Predictor-corrector from `near`, subdividing the step on failure.
    for (int pieces = 1; pieces <= 64; pieces *= 2) {
      Eigen::VectorXd x = near.state;
      double at = near.input;
      bool ok = true;
      for (int k = 1; k <= pieces && ok; ++k) {
        const double next = near.input + (input - near.input) * k / pieces;
        auto y = solve_equilibrium(sys_, next, x + input_response(sys_, x, at) * (next - at), tol_);
        if (y) {
          x = *y;
          at = next;
        } else {
          ok = false;
        }
      }
      if (ok) return {input, x, homeostasis_determinant(sys_, x, input)};
    }
    throw NumericError("corrector failed while refining a homeostasis point");
  }

  bool small(double h) const { return std::abs(h) <= tol_.root * scale_; }

  Point bisect(Point a, Point b) const {
    for (int it = 0; it < 200; ++it) {
      if (small(a.h)) return a;
      if (small(b.h)) return b;
      const double mid = 0.5 * (a.input + b.input);
      if (mid == a.input || mid == b.input) break;
      Point m = solve_at(mid, a);
      if (m.h == 0.0) return m;
      if ((m.h < 0.0) == (a.h < 0.0))
        a = std::move(m);
      else
        b = std::move(m);
    }
    return std::abs(a.h) < std::abs(b.h) ? a : b;
  }

  // Golden-section search for an even-order root between samples k-1 and k+1.
  std::optional<Point> touch(std::size_t k) const {
    const auto& s = branch_.samples;
    const Point centre{s[k].input, s[k].state, 0.0};
    double lo = s[k - 1].input;
    double hi = s[k + 1].input;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    Point c = solve_at(hi - g * (hi - lo), centre);
    Point d = solve_at(lo + g * (hi - lo), centre);
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      if (std::abs(c.h) < std::abs(d.h)) {
        hi = d.input;
        d = c;
        c = solve_at(hi - g * (hi - lo), d);
      } else {
        lo = c.input;
        c = d;
        d = solve_at(lo + g * (hi - lo), c);
      }
    }
    Point best = std::abs(c.h) < std::abs(d.h) ? c : d;
    if (!small(best.h)) return std::nullopt;
    return best;
  }

  void prepare_blocks() {
    const auto& net = sys_.network();
    for (const auto& k : decompose(net).subnetworks()) {
      blocks_.push_back({label(k), block_index_sets(net, k), 0.0});
    }
    for (const auto& s : branch_.samples) {
      const Eigen::MatrixXd j = sys_.jacobian(s.state, s.input);
      for (auto& b : blocks_) b.scale = std::max(b.scale, std::abs(block_determinant(j, b.sets)));
    }
  }

  HomeostasisEvent classify(const Point& p) const {
    const auto& net = sys_.network();
    const auto out = static_cast<Eigen::Index>(net.output().index());
    HomeostasisEvent e;
    e.input = p.input;
    e.state = p.state;
    e.response = input_response(sys_, p.state, p.input);
    const double ref = e.response.lpNorm<Eigen::Infinity>();
    for (NodeId n : net.nodes())
      if (std::abs(e.response(static_cast<Eigen::Index>(n.index()))) <= tol_.pattern_member * ref)
        e.empirical_pattern.insert(n);

    const double step = tol_.fd_step;
    auto slope = [&](double input) {
      const Point q = solve_at(input, p);
      return input_response(sys_, q.state, q.input)(out);
    };
    const double up = slope(p.input + step);
    const double down = slope(p.input - step);
    const double mid = e.response(out);
    e.second_derivative = (up - down) / (2.0 * step);
    e.third_derivative = (up - 2.0 * mid + down) / (step * step);
    const double thr = tol_.kind_threshold * ref;
    if (std::abs(e.second_derivative) > thr)
      e.kind = EventKind::simple;
    else if (std::abs(e.third_derivative) > thr)
      e.kind = EventKind::chair;
    else
      e.kind = EventKind::degenerate;

    const Eigen::MatrixXd j = sys_.jacobian(p.state, p.input);
    double best = INFINITY;
    for (const auto& b : blocks_) {
      const double rel = std::abs(block_determinant(j, b.sets)) / std::max(b.scale, 1e-300);
      if (rel < best) {
        best = rel;
        e.vanishing_block = b.label;
      }
    }
    return e;
  }

  struct Block {
    std::string label;
    BlockIndexSets sets;
    double scale;
  };

  const EquilibriumBranch& branch_;
  const EquilibriumSystem& sys_;
  const OdeTolerances& tol_;
  double scale_ = 0.0;
  std::vector<Block> blocks_;
};

}  // namespace

std::vector<HomeostasisEvent> detect_homeostasis(const EquilibriumBranch& branch,
                                                 const EquilibriumSystem& sys,
                                                 const OdeTolerances& tol) {
  return EventFinder(branch, sys, tol).run();
}

double tune_block_crossing(AdmissibleODE& ode, const BlockIndexSets& block, OdeParameter param,
                           double start, double target, std::size_t steps, double initial,
                           double second, const OdeTolerances& tol) {
  auto set = [&](double v) {
    if (param.tail)
      ode.set_weight(*param.tail, param.head, v);
    else
      ode.set_self_weight(param.head, v);
  };
  auto residual = [&](double v) {
    set(v);
    const EquilibriumBranch b = continue_equilibrium(ode, start, target, steps, tol);
    if (b.truncated) throw NumericError("branch truncated while tuning: " + b.note);
    const auto& last = b.samples.back();
    return block_determinant(ode.jacobian(last.state, last.input), block);
  };

  double p0 = initial;
  double p1 = second;
  double g0 = residual(p0);
  double g1 = residual(p1);
  for (int it = 0; it < 60; ++it) {
    if (g1 == g0) break;
    const double p2 = p1 - g1 * (p1 - p0) / (g1 - g0);
    p0 = p1;
    g0 = g1;
    p1 = p2;
    g1 = residual(p1);
    if (std::abs(g1) <= 1e-14 || std::abs(p1 - p0) <= 1e-15 * std::max(1.0, std::abs(p1))) {
      set(p1);
      return p1;
    }
  }
  throw NumericError("secant search did not converge");
}

}  // namespace homeo
