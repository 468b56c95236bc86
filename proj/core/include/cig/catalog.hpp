#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cig/ci_graph.hpp"
#include "cig/poset.hpp"

namespace cig {

/// Built-in posets transcribed cover pair by cover pair from published
/// Hasse diagrams. FIG1_P / FIG1_CHAIN are the cover-preserving-but-not-
/// isometric pair; the CE_* posets are the counterexamples to the earlier
/// isometric-subposet characterizations.
enum class FixtureId { Fig1P, Fig1Chain, CeClaw, CeHouse, CeDomino, CeCograph };

const Poset& fixture(FixtureId id);
const char* to_string(FixtureId id);
std::optional<FixtureId> fixture_from_name(std::string_view name);
std::span<const FixtureId> all_fixtures();

/// The generated obstruction family for one target graph: all minimal
/// posets (up to max_size elements) forcing the target in their C-I graph.
/// Members are named "<target>_<index>" in (size, canonical key) order.
struct PatternFamily {
  TargetGraph target;
  int max_size = 0;
  std::vector<Poset> members;

  std::string member_name(int index) const;  // 1-based display name
};

PatternFamily pattern_family(TargetGraph target, int max_size = 7);

struct TranscriptionMatch {
  int transcribed_index = -1;
  std::optional<int> member_index;  // generated member it matched, if any
  bool matched_as_dual = false;     // matched only after dualizing
};

struct CrosscheckReport {
  bool full_match = false;                 // both directions covered
  std::vector<TranscriptionMatch> matches; // one per transcribed poset
  std::vector<int> unmatched_members;      // generated members nobody matched
};

/// Compares a hand-transcribed family against the generated one, up to
/// isomorphism and duality.
CrosscheckReport crosscheck_transcription(const PatternFamily& family,
                                          std::span<const Poset> transcribed);

}  // namespace cig
