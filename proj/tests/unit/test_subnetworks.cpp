#include <doctest.h>

#include <map>

#include "../support/corpus.hpp"
#include "../support/fixtures.hpp"
#include "homeo/errors.hpp"
#include "homeo/subnetworks.hpp"

using namespace homeo;
using namespace homeo::testing;

TEST_CASE("structural subnetworks of E8") {
  const IONetwork net = e8();
  const Decomposition d = decompose(net);
  REQUIRE(d.structural.size() == 1);
  const auto& l1 = d.structural[0];
  CHECK(l1.index == 1);
  CHECK(l1.rho_prev == net.id("iota"));
  CHECK(l1.rho_next == net.id("o"));
  CHECK(l1.simple_core == ids(net, {"sigma"}));
  CHECK(l1.linked_appendage.empty());
  REQUIRE(d.appendage.size() == 3);
  CHECK(d.appendage[0].nodes == ids(net, {"tau1"}));
  CHECK(d.appendage[1].nodes == ids(net, {"tau2"}));
  CHECK(d.appendage[2].nodes == ids(net, {"tau3"}));
  CHECK(label(d.subnetworks()[0]) == "L1");
  CHECK(label(d.subnetworks()[3]) == "A3");
}

TEST_CASE("appendage cycling with a super-simple node is its own subnetwork") {
  const IONetwork net = chain_with_loop();
  const Decomposition d = decompose(net);
  REQUIRE(d.structural.size() == 2);
  CHECK(d.structural[0].augmented().empty());
  CHECK(d.structural[1].rho_prev == net.id("s"));
  CHECK(d.structural[1].augmented().empty());
  REQUIRE(d.appendage.size() == 1);
  CHECK(d.appendage[0].nodes == ids(net, {"t"}));
}

TEST_CASE("linked appendage joins its segment") {
  const IONetwork net = linked_loop();
  const Decomposition d = decompose(net);
  REQUIRE(d.structural.size() == 1);
  CHECK(d.structural[0].simple_core == ids(net, {"a", "b"}));
  CHECK(d.structural[0].linked_appendage == ids(net, {"t"}));
  CHECK(d.appendage.empty());
}

TEST_CASE("haldane has an empty core") {
  const IONetwork net = haldane();
  const Decomposition d = decompose(net);
  REQUIRE(d.structural.size() == 1);
  CHECK(d.structural[0].augmented().empty());
  CHECK(d.appendage.empty());
  const BlockIndexSets b = block_index_sets(net, d.structural[0]);
  CHECK(b.row_nodes == ids(net, {"o"}));
  CHECK(b.col_nodes == ids(net, {"iota"}));
}

TEST_CASE("appendage two-cycle is one component") {
  IONetwork net({"iota", "s", "o", "ta", "tb"}, "iota", "o",
                {{"iota", "s"}, {"s", "o"}, {"o", "ta"}, {"ta", "tb"}, {"tb", "ta"}, {"tb", "s"}});
  const Decomposition d = decompose(net);
  REQUIRE(d.appendage.size() == 1);
  CHECK(d.appendage[0].nodes == ids(net, {"ta", "tb"}));
}

TEST_CASE("block index sets of E8") {
  const IONetwork net = e8();
  const Decomposition d = decompose(net);
  const BlockIndexSets l1 = block_index_sets(net, d.structural[0]);
  CHECK(l1.row_nodes == ids(net, {"sigma", "o"}));
  CHECK(l1.col_nodes == ids(net, {"iota", "sigma"}));
  const BlockIndexSets a3 = block_index_sets(net, d.appendage[2]);
  CHECK(a3.row_nodes == ids(net, {"tau3"}));
  CHECK(a3.col_nodes == ids(net, {"tau3"}));
  AppendageSubnetwork foreign{1, {NodeId{42}}};
  CHECK_THROWS_AS((void)block_index_sets(net, foreign), NetworkError);
}

TEST_CASE("partition and block tiling on the corpus") {
  for (const IONetwork& net : random_core_corpus({.count = 80, .seed = 7})) {
    const Decomposition d = decompose(net);
    std::map<NodeId, int> seen;
    for (NodeId r : d.classification.super_simple) ++seen[r];
    for (const auto& l : d.structural)
      for (NodeId n : l.augmented()) ++seen[n];
    for (const auto& a : d.appendage)
      for (NodeId n : a.nodes) ++seen[n];
    CHECK(seen.size() == net.size());
    for (const auto& [n, count] : seen) CHECK(count == 1);

    // Blocks tile H: rows cover all but the input, columns all but the output.
    NodeSet rows, cols;
    std::size_t total_rows = 0, total_cols = 0;
    for (const auto& k : d.subnetworks()) {
      const BlockIndexSets b = block_index_sets(net, k);
      CHECK(b.row_nodes.size() == b.col_nodes.size());
      total_rows += b.row_nodes.size();
      total_cols += b.col_nodes.size();
      rows.insert(b.row_nodes.begin(), b.row_nodes.end());
      cols.insert(b.col_nodes.begin(), b.col_nodes.end());
    }
    CHECK(total_rows == net.size() - 1);
    CHECK(rows.size() == net.size() - 1);
    CHECK_FALSE(rows.contains(net.input()));
    CHECK(total_cols == net.size() - 1);
    CHECK_FALSE(cols.contains(net.output()));
  }
}
