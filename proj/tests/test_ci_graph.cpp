#include <doctest.h>

#include <set>

#include "cig/catalog.hpp"
#include "cig/ci_graph.hpp"
#include "oracles.hpp"

using namespace cig;

namespace {

std::set<std::pair<std::string, std::string>> edge_names(const CIGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [u, v] : g.edges()) out.emplace(g.label(u), g.label(v));
  return out;
}

}  // namespace

TEST_CASE("ci_graph: antichain gives a complete graph, chain gives a path") {
  CIGraph k4 = ci_graph(antichain_poset({"a", "b", "c", "d"}));
  CHECK(k4.edge_count() == 6);

  CIGraph path = ci_graph(chain_poset({"a", "b", "c", "d"}));
  CHECK(path.edge_count() == 3);
  CHECK(path.adjacent(0, 1));
  CHECK(path.adjacent(1, 2));
  CHECK(path.adjacent(2, 3));
  CHECK_FALSE(path.adjacent(0, 2));
  CHECK_FALSE(path.adjacent(0, 3));
}

TEST_CASE("ci_graph: CE_COGRAPH edge set matches the published drawing") {
  CIGraph g = ci_graph(fixture(FixtureId::CeCograph));
  std::set<std::pair<std::string, std::string>> want = {
      {"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "x"},
      {"x", "v4"},  {"v2", "x"},  {"v3", "x"},
  };
  std::set<std::pair<std::string, std::string>> got;
  for (auto [u, v] : g.edges()) {
    std::string a = g.label(u), b = g.label(v);
    got.emplace(a, b);
  }
  CHECK(got.size() == 7);
  for (auto [a, b] : want) {
    CHECK((got.count({a, b}) + got.count({b, a})) == 1);
  }
  CHECK_FALSE(g.adjacent(g.index_of("v1"), g.index_of("v3")));
  CHECK_FALSE(g.adjacent(g.index_of("v1"), g.index_of("v4")));
  CHECK_FALSE(g.adjacent(g.index_of("v2"), g.index_of("v4")));
}

TEST_CASE("induced_subgraph: whole set and the CE_HOUSE witness") {
  CIGraph g = ci_graph(fixture(FixtureId::CeHouse));
  std::vector<int> all;
  for (int v = 0; v < g.size(); ++v) all.push_back(v);
  CHECK(induced_subgraph(g, all).same_labels_and_adjacency(g));

  const Poset& p = fixture(FixtureId::CeHouse);
  std::vector<int> w = {p.index_of("v1"), p.index_of("v2"), p.index_of("v4"),
                        p.index_of("v5"), p.index_of("v7")};
  CIGraph house = induced_subgraph(g, w);
  CHECK(house.edge_count() == 6);
  CHECK(graphs_isomorphic(house, target_graph(TargetGraph::House)));

  std::vector<int> cycle = {p.index_of("v2"), p.index_of("v4"), p.index_of("v5"),
                            p.index_of("v7")};
  CIGraph c4 = induced_subgraph(g, cycle);
  CHECK(c4.edge_count() == 4);
  CHECK(graphs_isomorphic(c4, target_graph(TargetGraph::C4)));

  CHECK_THROWS_AS((void)induced_subgraph(g, std::vector<int>{99}), PosetError);
}

TEST_CASE("find_induced: published claw and P4 occurrences") {
  {
    const Poset& p = fixture(FixtureId::CeClaw);
    auto occs = find_induced(target_graph(TargetGraph::Claw), ci_graph(p));
    REQUIRE(occs.size() == 1);
    std::set<std::string> image;
    for (int v : occs[0].map) image.insert(p.label(v));
    CHECK(image == std::set<std::string>{"v", "v1", "v3", "v5"});
    CHECK(p.label(occs[0].map[0]) == "v");  // center
  }
  {
    const Poset& p = fixture(FixtureId::CeCograph);
    auto occs = find_induced(target_graph(TargetGraph::P4), ci_graph(p));
    REQUIRE(occs.size() == 1);
    std::vector<std::string> path;
    for (int v : occs[0].map) path.push_back(p.label(v));
    CHECK(path == std::vector<std::string>{"v1", "v2", "v3", "v4"});
  }
  {
    CIGraph path4 = ci_graph(chain_poset({"a", "b", "c", "d"}));
    CHECK(find_induced(target_graph(TargetGraph::Claw), path4).empty());
  }
}

TEST_CASE("find_induced agrees with the all-subsets oracle on small graphs") {
  std::vector<TargetGraph> targets = {TargetGraph::Claw, TargetGraph::P4, TargetGraph::C4,
                                      TargetGraph::K3};
  for (const Poset& p : oracle::dedup_by_isomorphism(oracle::all_labeled_posets(4))) {
    CIGraph host = ci_graph(p);
    for (TargetGraph t : targets) {
      auto fast = find_induced(target_graph(t), host);
      auto naive = oracle::all_induced_subsets(target_graph(t), host);
      REQUIRE(fast.size() == naive.size());
      for (std::size_t i = 0; i < fast.size(); ++i) {
        std::vector<int> img = fast[i].sorted_image();
        std::vector<int> nimg = naive[i];
        std::sort(nimg.begin(), nimg.end());
        CHECK(img == nimg);
      }
    }
  }
}

TEST_CASE("find_induced on the larger fixtures agrees with the oracle") {
  for (FixtureId id : {FixtureId::CeClaw, FixtureId::CeHouse}) {
    CIGraph host = ci_graph(fixture(id));
    for (TargetGraph t : {TargetGraph::Claw, TargetGraph::House, TargetGraph::P4}) {
      CHECK(find_induced(target_graph(t), host).size() ==
            oracle::all_induced_subsets(target_graph(t), host).size());
    }
  }
}

TEST_CASE("is_cograph") {
  CHECK(is_cograph(ci_graph(antichain_poset({"a", "b", "c", "d"}))).is_cograph);
  CHECK(is_cograph(target_graph(TargetGraph::C4)).is_cograph);

  const Poset& p = fixture(FixtureId::CeCograph);
  CographCheck check = is_cograph(ci_graph(p));
  CHECK_FALSE(check.is_cograph);
  REQUIRE(check.p4_witness.has_value());
  std::set<std::string> image;
  for (int v : check.p4_witness->map) image.insert(p.label(v));
  CHECK(image == std::set<std::string>{"v1", "v2", "v3", "v4"});
}

TEST_CASE("graphs_isomorphic") {
  CHECK(graphs_isomorphic(target_graph(TargetGraph::Claw),
                          CIGraph({"w", "x", "y", "z"}, std::vector<std::pair<int, int>>{
                                                            {3, 0}, {3, 1}, {3, 2}})));
  CHECK_FALSE(graphs_isomorphic(target_graph(TargetGraph::P4), target_graph(TargetGraph::Claw)));
  CHECK(graphs_isomorphic(ci_graph(chain_poset({"a", "b", "c", "d"})),
                          target_graph(TargetGraph::P4)));
}

TEST_CASE("basic lemma properties hold on every poset with up to 4 elements") {
  for (const Poset& p : oracle::dedup_by_isomorphism(oracle::all_labeled_posets(4))) {
    CIGraph g = ci_graph(p);
    if (p.size() >= 2) CHECK(g.connected());
    CHECK(ci_graph(p.dual()).same_labels_and_adjacency(g));
    int deg1 = 0;
    for (int v = 0; v < g.size(); ++v) {
      if (g.degree(v) == 1) ++deg1;
    }
    CHECK(deg1 <= 2);
  }
}

TEST_CASE("target graph shapes are bit-exact") {
  CHECK(target_graph(TargetGraph::Claw).edge_count() == 3);
  CHECK(target_graph(TargetGraph::P4).edge_count() == 3);
  CHECK(target_graph(TargetGraph::C4).edge_count() == 4);
  CHECK(target_graph(TargetGraph::House).edge_count() == 6);
  CHECK(target_graph(TargetGraph::Domino).edge_count() == 7);
  CHECK(target_graph(TargetGraph::K3).edge_count() == 3);
  CIGraph domino = target_graph(TargetGraph::Domino);
  CHECK(domino.size() == 6);
  CHECK(domino.adjacent(0, 3));
  CHECK(domino.adjacent(1, 4));
  CHECK(domino.adjacent(2, 5));
  CHECK_FALSE(domino.adjacent(0, 2));
  CHECK_FALSE(domino.adjacent(0, 4));
}
