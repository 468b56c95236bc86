#include "cig/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

#include "cig/enumerator.hpp"

namespace cig {

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Poset make_fixture(std::vector<std::string> labels, const Pairs& covers) {
  auto report = build_poset(std::move(labels), covers, BuildMode::Strict);
  return std::move(report.poset);
}

Poset build_fixture(FixtureId id) {
  switch (id) {
    case FixtureId::Fig1P:
      return make_fixture({"v1", "v2", "v3", "v4", "v"},
                          {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "v"}, {"v", "v4"}});
    case FixtureId::Fig1Chain:
      return make_fixture({"v1", "v2", "v3", "v4"},
                          {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}});
    case FixtureId::CeClaw:
      return make_fixture({"v1", "v2", "v3", "v4", "v5", "x", "v"},
                          {{"v1", "v2"},
                           {"v2", "v3"},
                           {"v3", "v4"},
                           {"v4", "v5"},
                           {"v1", "x"},
                           {"x", "v4"}});
    case FixtureId::CeHouse:
      return make_fixture({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "x"},
                          {{"v1", "v2"},
                           {"v2", "v3"},
                           {"v3", "v4"},
                           {"v1", "v5"},
                           {"v5", "v6"},
                           {"v6", "v7"},
                           {"v1", "x"},
                           {"x", "v7"}});
    case FixtureId::CeDomino:
      return make_fixture(
          {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10", "x"},
          {{"v1", "v2"},
           {"v2", "v3"},
           {"v3", "v4"},
           {"v4", "v5"},
           {"v6", "v7"},
           {"v7", "v8"},
           {"v8", "v9"},
           {"v9", "v10"},
           {"v6", "x"},
           {"x", "v10"}});
    case FixtureId::CeCograph:
      return make_fixture({"v1", "v2", "v3", "v4", "x"},
                          {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v1", "x"}, {"x", "v4"}});
  }
  throw PosetError(PosetError::Kind::BadInput, "unknown fixture");
}

constexpr std::array<FixtureId, 6> kFixtures = {
    FixtureId::Fig1P,    FixtureId::Fig1Chain, FixtureId::CeClaw,
    FixtureId::CeHouse,  FixtureId::CeDomino,  FixtureId::CeCograph,
};

}  // namespace

const Poset& fixture(FixtureId id) {
  static std::mutex mutex;
  static std::map<FixtureId, Poset> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(id);
  if (it == cache.end()) {
    it = cache.emplace(id, build_fixture(id)).first;
  }
  return it->second;
}

const char* to_string(FixtureId id) {
  switch (id) {
    case FixtureId::Fig1P: return "FIG1_P";
    case FixtureId::Fig1Chain: return "FIG1_CHAIN";
    case FixtureId::CeClaw: return "CE_CLAW";
    case FixtureId::CeHouse: return "CE_HOUSE";
    case FixtureId::CeDomino: return "CE_DOMINO";
    case FixtureId::CeCograph: return "CE_COGRAPH";
  }
  return "?";
}

std::optional<FixtureId> fixture_from_name(std::string_view name) {
  for (FixtureId id : kFixtures) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

std::span<const FixtureId> all_fixtures() { return kFixtures; }

std::string PatternFamily::member_name(int index) const {
  return std::string(to_string(target)) + "_" + std::to_string(index + 1);
}

PatternFamily pattern_family(TargetGraph target, int max_size) {
  PatternFamily family;
  family.target = target;
  family.max_size = max_size;
  family.members = minimal_forcing_posets(target_graph(target), max_size);
  return family;
}

namespace {

// Kuhn augmenting-path matching; edges ordered direct-match first so dual
// matches are used only when needed.
struct Matcher {
  std::vector<std::vector<std::pair<int, bool>>> edges;  // t -> (member, as_dual)
  std::vector<int> member_of;                            // t -> member or -1
  std::vector<bool> member_dual;                         // t -> matched as dual
  std::vector<int> owner;                                // member -> t or -1

  bool augment(int t, std::vector<bool>& visited) {
    for (auto [m, as_dual] : edges[t]) {
      if (visited[m]) continue;
      visited[m] = true;
      if (owner[m] < 0 || augment(owner[m], visited)) {
        owner[m] = t;
        member_of[t] = m;
        member_dual[t] = as_dual;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

CrosscheckReport crosscheck_transcription(const PatternFamily& family,
                                          std::span<const Poset> transcribed) {
  CrosscheckReport report;
  std::vector<std::string> member_keys;
  member_keys.reserve(family.members.size());
  for (const Poset& m : family.members) member_keys.push_back(m.canonical_key());

  Matcher matcher;
  matcher.edges.resize(transcribed.size());
  matcher.member_of.assign(transcribed.size(), -1);
  matcher.member_dual.assign(transcribed.size(), false);
  matcher.owner.assign(family.members.size(), -1);
  for (std::size_t t = 0; t < transcribed.size(); ++t) {
    std::string key = transcribed[t].canonical_key();
    std::string dual_key = transcribed[t].dual().canonical_key();
    for (std::size_t m = 0; m < member_keys.size(); ++m) {
      if (member_keys[m] == key) matcher.edges[t].emplace_back(static_cast<int>(m), false);
    }
    for (std::size_t m = 0; m < member_keys.size(); ++m) {
      if (member_keys[m] == dual_key && member_keys[m] != key) {
        matcher.edges[t].emplace_back(static_cast<int>(m), true);
      }
    }
  }
  for (std::size_t t = 0; t < transcribed.size(); ++t) {
    std::vector<bool> visited(family.members.size(), false);
    matcher.augment(static_cast<int>(t), visited);
  }

  for (std::size_t t = 0; t < transcribed.size(); ++t) {
    TranscriptionMatch match;
    match.transcribed_index = static_cast<int>(t);
    if (matcher.member_of[t] >= 0) {
      match.member_index = matcher.member_of[t];
      match.matched_as_dual = matcher.member_dual[t];
    }
    report.matches.push_back(match);
  }
  for (std::size_t m = 0; m < matcher.owner.size(); ++m) {
    if (matcher.owner[m] < 0) report.unmatched_members.push_back(static_cast<int>(m));
  }
  bool all_transcribed_matched = std::all_of(
      report.matches.begin(), report.matches.end(),
      [](const TranscriptionMatch& m) { return m.member_index.has_value(); });
  report.full_match = all_transcribed_matched && report.unmatched_members.empty();
  return report;
}

}  // namespace cig
