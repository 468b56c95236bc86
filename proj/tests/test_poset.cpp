#include <doctest.h>

#include <set>

#include "cig/catalog.hpp"
#include "cig/poset.hpp"
#include "oracles.hpp"

using namespace cig;

namespace {

Poset from_pairs(std::vector<std::string> labels,
                 std::vector<std::pair<std::string, std::string>> pairs,
                 BuildMode mode = BuildMode::Lenient) {
  return build_poset(std::move(labels), pairs, mode).poset;
}

}  // namespace

TEST_CASE("build_poset: empty relation gives an antichain") {
  Poset p = from_pairs({"a", "b", "c"}, {});
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      CHECK_FALSE(p.less(u, v));
    }
  }
}

TEST_CASE("build_poset: fig. 9 style generators leave x parallel to the middle") {
  Poset p = from_pairs({"v1", "v2", "v3", "v4", "x"},
                       {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "x"}, {"x", "v4"}});
  CHECK(p.relation(p.index_of("x"), p.index_of("v2")) == PairRelation::Incomparable);
  CHECK(p.relation(p.index_of("x"), p.index_of("v3")) == PairRelation::Incomparable);
  CHECK(p.less(p.index_of("v1"), p.index_of("v4")));
}

TEST_CASE("build_poset: error paths") {
  CHECK_THROWS_AS(from_pairs({"a", "b"}, {{"a", "b"}, {"b", "a"}}), PosetError);
  CHECK_THROWS_AS(from_pairs({"a"}, {{"a", "b"}}), PosetError);
  CHECK_THROWS_AS(from_pairs({"a", "a"}, {}), PosetError);
  CHECK_THROWS_AS(from_pairs({"a"}, {{"a", "a"}}), PosetError);
}

TEST_CASE("build_poset: non-cover generators warn, strict mode rejects") {
  auto report = build_poset({"a", "b", "c"},
                            std::vector<std::pair<std::string, std::string>>{
                                {"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(report.warnings.size() == 1);
  CHECK(report.warnings[0].find("a<c") != std::string::npos);
  CHECK_THROWS_AS(from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}},
                             BuildMode::Strict),
                  PosetError);
}

TEST_CASE("cover_relation: transitive reduction of a full chain relation") {
  Poset p = from_pairs({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto pairs = p.cover_pairs();
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair{0, 1});
  CHECK(pairs[1] == std::pair{1, 2});
}

TEST_CASE("cover_relation: CE_CLAW covers avoid the isolated element") {
  const Poset& p = fixture(FixtureId::CeClaw);
  auto pairs = p.cover_pairs();
  CHECK(pairs.size() == 6);
  int v = p.index_of("v");
  for (auto [a, b] : pairs) {
    CHECK(a != v);
    CHECK(b != v);
  }
  CHECK(p.cover_pairs() == from_pairs({"v1", "v2", "v3", "v4", "v5", "x", "v"},
                                      {{"v1", "v2"},
                                       {"v2", "v3"},
                                       {"v3", "v4"},
                                       {"v4", "v5"},
                                       {"v1", "x"},
                                       {"x", "v4"}})
                               .cover_pairs());
}

TEST_CASE("cover_relation: antichain has none") {
  CHECK(antichain_poset({"a", "b", "c"}).cover_pairs().empty());
}

TEST_CASE("relation_of on the CE_COGRAPH poset") {
  const Poset& p = fixture(FixtureId::CeCograph);
  CHECK(p.relation(p.index_of("v1"), p.index_of("v3")) == PairRelation::LongBelow);
  CHECK(p.relation(p.index_of("x"), p.index_of("v2")) == PairRelation::Incomparable);
  CHECK(p.relation(2, 2) == PairRelation::Equal);
  CHECK(p.relation(p.index_of("v2"), p.index_of("v1")) == PairRelation::CoveredBy);
  CHECK_THROWS_AS((void)p.index_of("nope"), PosetError);
}

TEST_CASE("dual: antichain is self-dual, covers transpose") {
  Poset a = antichain_poset({"a", "b"});
  CHECK(a.dual().same_labels_and_order(a));

  const Poset& p = fixture(FixtureId::CeCograph);
  Poset d = p.dual();
  std::set<std::pair<std::string, std::string>> want = {
      {"v2", "v1"}, {"v3", "v2"}, {"v4", "v3"}, {"x", "v1"}, {"v4", "x"}};
  std::set<std::pair<std::string, std::string>> got;
  for (auto [u, v] : d.cover_pairs()) got.emplace(d.label(u), d.label(v));
  CHECK(got == want);
  CHECK(d.dual().same_labels_and_order(p));
}

TEST_CASE("chain_distance: cover steps, not elements") {
  const Poset& p = fixture(FixtureId::Fig1P);
  CHECK(*p.chain_distance(p.index_of("v1"), p.index_of("v4")) == 2);
  CHECK(*p.chain_distance(p.index_of("v1"), p.index_of("v2")) == 1);
  CHECK(*p.chain_distance(p.index_of("v4"), p.index_of("v1")) == 2);
  CHECK_FALSE(p.chain_distance(p.index_of("v"), p.index_of("v2")).has_value());
  CHECK_FALSE(p.chain_distance(1, 1).has_value());
}

TEST_CASE("canonical_key: permutation invariance and separation") {
  Poset chain1 = chain_poset({"a", "b", "c", "d"});
  Poset chain2 = from_pairs({"w", "x", "y", "z"}, {{"z", "x"}, {"x", "w"}, {"w", "y"}});
  CHECK(chain1.canonical_key() == chain2.canonical_key());
  CHECK(chain_poset({"a", "b", "c"}).canonical_key() !=
        antichain_poset({"a", "b", "c"}).canonical_key());
  CHECK_THROWS_AS((void)fixture(FixtureId::CeDomino).canonical_key(), PosetError);
}

TEST_CASE("canonical_key: all 219 labeled posets on 4 elements fall into 16 classes") {
  auto labeled = oracle::all_labeled_posets(4);
  CHECK(labeled.size() == 219);
  std::set<std::string> keys;
  for (const Poset& p : labeled) keys.insert(p.canonical_key());
  CHECK(keys.size() == 16);
  CHECK(oracle::dedup_by_isomorphism(labeled).size() == 16);
}

TEST_CASE("canonical_key equals the dual's key exactly for self-dual posets") {
  for (const Poset& p : oracle::dedup_by_isomorphism(oracle::all_labeled_posets(4))) {
    bool self_dual = oracle::posets_isomorphic(p, p.dual());
    CHECK((p.canonical_key() == p.dual().canonical_key()) == self_dual);
  }
}

TEST_CASE("poset invariants across small posets") {
  for (const Poset& p : oracle::dedup_by_isomorphism(oracle::all_labeled_posets(4))) {
    const int n = p.size();
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        CHECK((p.relation(u, v) == PairRelation::Incomparable) == p.incomparable(u, v));
        CHECK((p.relation(u, v) == PairRelation::Covers) == p.covers(u, v));
        if (p.less(u, v)) {
          CHECK(*p.chain_distance(u, v) >= 1);
          CHECK((*p.chain_distance(u, v) == 1) == p.covers(u, v));
        }
      }
    }
    // Closure of the cover relation reproduces the order.
    std::vector<std::uint64_t> up(n, 0);
    for (auto [a, b] : p.cover_pairs()) up[a] |= std::uint64_t{1} << b;
    for (int k = 0; k < n; ++k) {
      for (int u = 0; u < n; ++u) {
        if (up[u] >> k & 1) up[u] |= up[k];
      }
    }
    for (int u = 0; u < n; ++u) CHECK(up[u] == p.up_set(u));
  }
}
