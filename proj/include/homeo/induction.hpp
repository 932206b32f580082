#pragma once

#include <vector>

#include "homeo/pattern_net.hpp"

namespace homeo {

/// Nodes forced to be homeostatic when the block of `source` degenerates.
struct HomeostasisPattern {
  HomeostasisSubnetwork source;
  NodeSet nodes;  ///< always contains the output node
};

/// Induction read off the pattern network.
///
/// `source` must be a backbone node or an appendage component; a bare
/// super-simple node throws NetworkError.
///   L~j => chain node      iff the node is strictly downstream of L~j
///   L~j => A~              iff vmin(A~) is strictly downstream of L~j
///   A~  => rho             iff rho is at or downstream of vmax(A~)
///   A~  => L~k             iff L~k is strictly downstream of vmax(A~)
///   A~  => A~'             iff A~' != A~, A~' is reachable from A~, and every
///                          path A~ -> A~' meets a super-simple rho with
///                          vmax(A~) <= rho <= vmin(A~')
[[nodiscard]] bool induces_theorem(const PatternNetwork& pnet, PatternNode source,
                                   PatternNode target);

/// Output node plus the contents of every pattern node induced by `k`.
[[nodiscard]] HomeostasisPattern homeostasis_pattern(const IONetwork& net,
                                                     const PatternNetwork& pnet,
                                                     const HomeostasisSubnetwork& k);

/// One pattern per homeostasis subnetwork, in Decomposition::subnetworks()
/// order. Throws InvariantViolation if two patterns coincide.
[[nodiscard]] std::vector<HomeostasisPattern> all_patterns(const IONetwork& net,
                                                           const PatternNetwork& pnet);

/// The network with its output moved to another node.
struct RepositionedNetwork {
  IONetwork network;
  NodeId new_output;
};

/// Throws NetworkError if `kappa` is the input node.
[[nodiscard]] RepositionedNetwork reposition(const IONetwork& base, NodeId kappa);

enum class RepositionVerdict {
  induced,
  not_induced,
  non_core,      ///< G(kappa) is not core; no verdict
  input_target,  ///< kappa is the input node; G(kappa) would have input == output
};

/// Induction by rebuilding the decomposition of G(kappa): `k` induces
/// `kappa` iff its block (same rows, same columns) is one of the blocks of
/// G(kappa). kappa == output is always induced.
[[nodiscard]] RepositionVerdict reposition_verdict(const IONetwork& net,
                                                   const HomeostasisSubnetwork& k, NodeId kappa,
                                                   std::size_t cap = kDefaultPathCap);

/// Boolean form of reposition_verdict(); throws NetworkError when no
/// verdict exists (non-core G(kappa) or kappa == input).
[[nodiscard]] bool induces_reposition(const IONetwork& net, const HomeostasisSubnetwork& k,
                                      NodeId kappa, std::size_t cap = kDefaultPathCap);

[[nodiscard]] const char* to_string(RepositionVerdict v);

}  // namespace homeo
