#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "homeo/polynomial.hpp"
#include "homeo/rational.hpp"
#include "homeo/subnetworks.hpp"

namespace homeo {

/// Exact Jacobian sample respecting the network's sparsity pattern.
///
/// Entries exist for every arrow l -> j (row j, column l) and for every
/// diagonal position. `order` is the fixed row/column order: input first,
/// output last, the rest in declaration order.
struct RationalJacobian {
  std::vector<NodeId> order;
  std::map<std::pair<NodeId, NodeId>, Rational> entries;
  Rational input_sensitivity;  ///< df_input / dI, nonzero

  [[nodiscard]] Rational at(NodeId row, NodeId col) const;
  [[nodiscard]] std::size_t rank_of(NodeId n) const;
  [[nodiscard]] RationalMatrix dense() const;
  /// Rows and columns are taken in `order`.
  [[nodiscard]] RationalMatrix submatrix(const NodeSet& rows, const NodeSet& cols) const;
  [[nodiscard]] Rational block_det(const BlockIndexSets& block) const;
};

[[nodiscard]] std::vector<NodeId> jacobian_order(const IONetwork& net);

inline constexpr int kSamplingRetries = 64;

/// Seeded sample with numerators and denominators uniform on
/// [-999, 999] \ {0}. Redraws the whole matrix until det J and every block
/// determinant are nonzero; throws DegenerateSampling after `retries`.
[[nodiscard]] RationalJacobian sample_jacobian(const IONetwork& net,
                                               const std::vector<BlockIndexSets>& blocks,
                                               std::uint64_t seed,
                                               int retries = kSamplingRetries);
[[nodiscard]] RationalJacobian sample_jacobian(const IONetwork& net, std::uint64_t seed,
                                               int retries = kSamplingRetries);

/// Adjusts the first stored entry of K's block (in `order`, row-major) whose
/// cofactor is nonzero so that det B_K becomes exactly zero, keeping every
/// other block and det J nonzero. Throws NoAdjustableEntry otherwise.
[[nodiscard]] RationalJacobian force_block_singular(const RationalJacobian& jac,
                                                    const BlockIndexSets& block_k,
                                                    const std::vector<BlockIndexSets>& others);

/// Nodes kappa with det H(kappa) == 0, where H(kappa) is J without the input
/// row and the kappa column. Throws NumericError if det J == 0.
[[nodiscard]] NodeSet numeric_pattern_det(const RationalJacobian& jac, const IONetwork& net);
/// Nodes kappa with x'_kappa == 0 for J x' = -(f_{input,I}, 0, ..., 0).
[[nodiscard]] NodeSet numeric_pattern_solve(const RationalJacobian& jac, const IONetwork& net);
/// Both routes; throws InvariantViolation if they disagree.
[[nodiscard]] NodeSet numeric_pattern(const RationalJacobian& jac, const IONetwork& net);

/// det of J without the input row and output column, in `order`.
[[nodiscard]] Rational homeostasis_det(const RationalJacobian& jac, const IONetwork& net);

struct SymbolicFactor {
  std::string subnetwork;  ///< label, e.g. "L1" or "A2"
  BlockIndexSets block;
  Polynomial polynomial;
};

struct SymbolicFactorization {
  std::vector<SymbolicFactor> factors;
  Polynomial det_h;  ///< direct expansion of det H
  int sign = 1;      ///< product of factors == sign * det_h
};

/// Variable id of the Jacobian symbol f_{row,col}.
[[nodiscard]] std::uint32_t jacobian_symbol(const IONetwork& net, NodeId row, NodeId col);
/// "f[row,col]".
[[nodiscard]] std::string jacobian_symbol_name(const IONetwork& net, std::uint32_t id);

/// det of one block with symbolic entries, rows and columns in
/// jacobian_order(). Throws NetworkError for non-square blocks.
[[nodiscard]] Polynomial block_polynomial(const IONetwork& net, const BlockIndexSets& block);

inline constexpr std::size_t kSymbolicNodeCap = 10;

/// One polynomial per homeostasis block plus the direct expansion of
/// det H. Throws NetworkError above `max_nodes` nodes and
/// InvariantViolation if the product differs from det H beyond a sign.
[[nodiscard]] SymbolicFactorization symbolic_factorization(const IONetwork& net,
                                                           std::size_t max_nodes = kSymbolicNodeCap);

}  // namespace homeo
