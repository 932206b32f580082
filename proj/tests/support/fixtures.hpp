#pragma once

#include <string>
#include <vector>

#include "homeo/network.hpp"

namespace homeo::testing {

/// Six-node network with one structural block {iota,sigma,o} and three
/// appendage components tau1, tau2, tau3.
inline IONetwork e8() {
  return IONetwork({"iota", "sigma", "tau1", "tau2", "tau3", "o"}, "iota", "o",
                   {{"tau1", "iota"},
                    {"iota", "sigma"},
                    {"tau2", "sigma"},
                    {"sigma", "tau1"},
                    {"tau3", "tau2"},
                    {"o", "tau2"},
                    {"o", "tau3"},
                    {"iota", "o"},
                    {"sigma", "o"}});
}

inline IONetwork haldane() { return IONetwork({"iota", "o"}, "iota", "o", {{"iota", "o"}}); }

inline IONetwork diamond() {
  return IONetwork({"iota", "a", "b", "o"}, "iota", "o",
                   {{"iota", "a"}, {"iota", "b"}, {"a", "o"}, {"b", "o"}});
}

/// Chain iota -> s -> o with an appendage t cycling through the
/// super-simple node s.
inline IONetwork chain_with_loop() {
  return IONetwork({"iota", "s", "o", "t"}, "iota", "o",
                   {{"iota", "s"}, {"s", "o"}, {"s", "t"}, {"t", "s"}});
}

/// Diamond iota -> {a, b} -> o with t on a cycle a -> t -> a; a is simple
/// but not super-simple, so t is linked to the core {a, b}.
inline IONetwork linked_loop() {
  return IONetwork({"iota", "a", "b", "o", "t"}, "iota", "o",
                   {{"iota", "a"}, {"iota", "b"}, {"a", "o"}, {"b", "o"}, {"a", "t"}, {"t", "a"}});
}

inline NodeSet ids(const IONetwork& net, const std::vector<std::string>& names) {
  NodeSet out;
  for (const auto& n : names) out.insert(net.id(n));
  return out;
}

}  // namespace homeo::testing
