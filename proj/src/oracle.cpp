#include "homeo/oracle.hpp"

#include <algorithm>
#include <random>

#include "homeo/errors.hpp"

namespace homeo {

std::vector<NodeId> jacobian_order(const IONetwork& net) {
  std::vector<NodeId> order{net.input()};
  for (NodeId n : net.nodes())
    if (n != net.input() && n != net.output()) order.push_back(n);
  order.push_back(net.output());
  return order;
}

Rational RationalJacobian::at(NodeId row, NodeId col) const {
  auto it = entries.find({row, col});
  return it == entries.end() ? Rational(0) : it->second;
}

std::size_t RationalJacobian::rank_of(NodeId n) const {
  auto it = std::find(order.begin(), order.end(), n);
  if (it == order.end()) throw NetworkError("node outside the Jacobian");
  return static_cast<std::size_t>(it - order.begin());
}

RationalMatrix RationalJacobian::dense() const {
  RationalMatrix m(order.size(), order.size());
  for (const auto& [rc, v] : entries) m(rank_of(rc.first), rank_of(rc.second)) = v;
  return m;
}

namespace {

std::vector<NodeId> in_order(const RationalJacobian& jac, const NodeSet& set) {
  std::vector<NodeId> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(),
            [&](NodeId a, NodeId b) { return jac.rank_of(a) < jac.rank_of(b); });
  return out;
}

Rational nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-999, 998);
  auto draw = [&] {
    long v = dist(rng);
    return v >= 0 ? v + 1 : v;  // skip zero
  };
  const long num = draw();
  const long den = draw();
  Rational q(num, den);
  q.canonicalize();
  return q;
}

bool all_blocks_nonsingular(const RationalJacobian& jac, const std::vector<BlockIndexSets>& blocks) {
  return std::all_of(blocks.begin(), blocks.end(),
                     [&](const BlockIndexSets& b) { return jac.block_det(b) != 0; });
}

std::vector<BlockIndexSets> blocks_of(const IONetwork& net) {
  std::vector<BlockIndexSets> blocks;
  for (const auto& k : decompose(net).subnetworks()) blocks.push_back(block_index_sets(net, k));
  return blocks;
}

}  // namespace

RationalMatrix RationalJacobian::submatrix(const NodeSet& rows, const NodeSet& cols) const {
  const auto r = in_order(*this, rows);
  const auto c = in_order(*this, cols);
  RationalMatrix m(r.size(), c.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = at(r[i], c[j]);
  return m;
}

Rational RationalJacobian::block_det(const BlockIndexSets& block) const {
  return det_exact(submatrix(block.row_nodes, block.col_nodes));
}

RationalJacobian sample_jacobian(const IONetwork& net, const std::vector<BlockIndexSets>& blocks,
                                 std::uint64_t seed, int retries) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retries; ++attempt) {
    RationalJacobian jac;
    jac.order = jacobian_order(net);
    for (NodeId row : jac.order) {
      for (NodeId col : jac.order) {
        if (row == col || net.has_arrow(col, row)) jac.entries[{row, col}] = nonzero_rational(rng);
      }
    }
    jac.input_sensitivity = nonzero_rational(rng);
    if (det_exact(jac.dense()) != 0 && all_blocks_nonsingular(jac, blocks)) return jac;
  }
  throw DegenerateSampling("no generic Jacobian after " + std::to_string(retries) + " draws");
}

RationalJacobian sample_jacobian(const IONetwork& net, std::uint64_t seed, int retries) {
  return sample_jacobian(net, blocks_of(net), seed, retries);
}

RationalJacobian force_block_singular(const RationalJacobian& jac, const BlockIndexSets& block_k,
                                      const std::vector<BlockIndexSets>& others) {
  const auto rows = in_order(jac, block_k.row_nodes);
  const auto cols = in_order(jac, block_k.col_nodes);
  if (rows.size() != cols.size()) throw NetworkError("block is not square");
  const RationalMatrix block = jac.submatrix(block_k.row_nodes, block_k.col_nodes);
  const Rational det = det_exact(block);

  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      auto entry = jac.entries.find({rows[i], cols[j]});
      if (entry == jac.entries.end()) continue;
      Rational cofactor = det_exact(block.without(i, j));
      if ((i + j) % 2 == 1) cofactor = -cofactor;
      if (cofactor == 0) continue;

      // det B is affine in the entry with slope equal to its cofactor.
      RationalJacobian forced = jac;
      forced.entries[{rows[i], cols[j]}] = entry->second - det / cofactor;
      if (forced.block_det(block_k) != 0)
        throw InvariantViolation("forced block determinant is not zero");
      bool generic = det_exact(forced.dense()) != 0;
      for (const auto& other : others)
        if (other != block_k && forced.block_det(other) == 0) generic = false;
      if (generic) return forced;
    }
  }
  throw NoAdjustableEntry("no entry of the block can be adjusted to a generic singular sample");
}

NodeSet numeric_pattern_det(const RationalJacobian& jac, const IONetwork& net) {
  const RationalMatrix j = jac.dense();
  if (det_exact(j) == 0) throw NumericError("singular Jacobian");
  const std::size_t input_row = jac.rank_of(net.input());
  NodeSet out;
  for (NodeId kappa : jac.order)
    if (det_exact(j.without(input_row, jac.rank_of(kappa))) == 0) out.insert(kappa);
  return out;
}

NodeSet numeric_pattern_solve(const RationalJacobian& jac, const IONetwork& net) {
  std::vector<Rational> rhs(jac.order.size());
  rhs[jac.rank_of(net.input())] = -jac.input_sensitivity;
  const auto x = solve_exact(jac.dense(), rhs);
  if (!x) throw NumericError("singular Jacobian");
  NodeSet out;
  for (std::size_t i = 0; i < jac.order.size(); ++i)
    if ((*x)[i] == 0) out.insert(jac.order[i]);
  return out;
}

NodeSet numeric_pattern(const RationalJacobian& jac, const IONetwork& net) {
  NodeSet by_det = numeric_pattern_det(jac, net);
  if (by_det != numeric_pattern_solve(jac, net))
    throw InvariantViolation("determinant and linear-solve patterns disagree");
  return by_det;
}

Rational homeostasis_det(const RationalJacobian& jac, const IONetwork& net) {
  return det_exact(jac.dense().without(jac.rank_of(net.input()), jac.rank_of(net.output())));
}

std::uint32_t jacobian_symbol(const IONetwork& net, NodeId row, NodeId col) {
  return static_cast<std::uint32_t>(row.index() * net.size() + col.index());
}

std::string jacobian_symbol_name(const IONetwork& net, std::uint32_t id) {
  const auto n = static_cast<std::uint32_t>(net.size());
  return "f[" + net.name(NodeId{id / n}) + "," + net.name(NodeId{id % n}) + "]";
}

namespace {

SymbolicMatrix symbolic_block(const IONetwork& net, const std::vector<NodeId>& rows,
                              const std::vector<NodeId>& cols) {
  SymbolicMatrix m;
  m.size = rows.size();
  m.entries.assign(rows.size() * cols.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[i] == cols[j] || net.has_arrow(cols[j], rows[i]))
        m.entries[i * cols.size() + j] = jacobian_symbol(net, rows[i], cols[j]);
  return m;
}

}  // namespace

Polynomial block_polynomial(const IONetwork& net, const BlockIndexSets& block) {
  if (block.row_nodes.size() != block.col_nodes.size()) throw NetworkError("block is not square");
  RationalJacobian layout;
  layout.order = jacobian_order(net);
  return symbolic_det(symbolic_block(net, in_order(layout, block.row_nodes),
                                     in_order(layout, block.col_nodes)));
}

SymbolicFactorization symbolic_factorization(const IONetwork& net, std::size_t max_nodes) {
  if (net.size() > max_nodes)
    throw NetworkError("symbolic factorization limited to " + std::to_string(max_nodes) +
                       " nodes");
  RationalJacobian layout;
  layout.order = jacobian_order(net);

  SymbolicFactorization out;
  Polynomial product = Polynomial::constant(1);
  for (const auto& k : decompose(net).subnetworks()) {
    SymbolicFactor f;
    f.subnetwork = label(k);
    f.block = block_index_sets(net, k);
    f.polynomial = block_polynomial(net, f.block);
    product = product * f.polynomial;
    out.factors.push_back(std::move(f));
  }

  std::vector<NodeId> rows(layout.order.begin() + 1, layout.order.end());
  std::vector<NodeId> cols(layout.order.begin(), layout.order.end() - 1);
  out.det_h = symbolic_det(symbolic_block(net, rows, cols));
  if (product == out.det_h)
    out.sign = 1;
  else if (product == -out.det_h)
    out.sign = -1;
  else
    throw InvariantViolation("product of block determinants differs from det H");
  return out;
}

}  // namespace homeo
