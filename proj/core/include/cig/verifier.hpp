#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cig/catalog.hpp"
#include "cig/ci_graph.hpp"
#include "cig/embedding.hpp"
#include "cig/poset.hpp"

namespace cig {

/// The seven basic C-I graph properties, checked by direct definition.
struct BasicPropertiesReport {
  struct Item {
    std::string name;
    bool pass = false;
    std::string detail;  // set on failure
  };
  std::array<Item, 7> items;
  bool all_pass = false;
};

BasicPropertiesReport basic_properties_report(const Poset& p);

/// For a subset W: builds the induced subposet Q, reports whether Q is
/// cover-preserving in P and whether G_Q equals the subgraph of G_P induced
/// by W under the identity map. Cover-preservation must imply equality.
struct SubposetGraphReport {
  std::vector<int> subset;
  bool cover_preserving = false;
  bool graphs_equal = false;
  int subposet_edge_count = 0;
  int induced_edge_count = 0;
};

SubposetGraphReport subposet_graph_lemma_check(const Poset& p, std::span<const int> subset);

enum class Theorem { Claw, House, Domino, Cograph };

const char* to_string(Theorem t);
std::optional<Theorem> theorem_from_name(std::string_view name);
/// The forbidden induced subgraph behind each theorem (cograph -> P4).
TargetGraph theorem_target(Theorem t);

/// One poset checked against one characterization: the graph side runs the
/// induced-subgraph detector on G_P, the poset sides search the generated
/// obstruction family in each embedding mode.
struct VerificationReport {
  Theorem theorem{};
  std::optional<std::string> poset_key;  // canonical key digest, when size permits
  std::string cover_listing;             // replayable description
  int size = 0;

  bool graph_side = false;
  std::optional<Occurrence> graph_witness;
  bool poset_side_isometric = false;
  std::optional<PatternWitness> isometric_witness;
  bool poset_side_cover_preserving = false;
  std::optional<PatternWitness> cover_preserving_witness;

  bool discrepancy_corrected() const { return graph_side != poset_side_cover_preserving; }
  bool discrepancy_original() const { return graph_side != poset_side_isometric; }
};

VerificationReport characterization_report(const Poset& p, Theorem theorem,
                                           const PatternFamily& family);
VerificationReport characterization_report(const Poset& p, Theorem theorem);

/// The five proof cases of the claw characterization, with cases 4 and 5
/// merged: the proof splits them on a chain length its own hypotheses pin
/// to 2, so the raw distance is reported instead.
enum class ClawCase { Case1, Case2, Case3, Case45 };

const char* to_string(ClawCase c);

struct ClawClassification {
  ClawCase case_id{};
  /// chain_distance between the images of the extreme leaves u ≺≺ w.
  int extreme_distance = 0;
  std::array<int, 3> ordered_leaves{};  // u, v, w with u ≺≺ v ≺≺ w
  int center = 0;
};

/// Classifies an induced-claw occurrence (vertex 0 = center) by the
/// center's relations to the chain-ordered leaves. Throws PosetError if
/// the occurrence is not a claw in ci_graph(p).
ClawClassification claw_case_classification(const Poset& p, const Occurrence& claw);

/// Hosts (among all posets with at most n_max elements) where isometric
/// and cover-preserving containment of `pattern` differ. Empty result =
/// the two notions coincide for this pattern at this scale.
struct ModeDifference {
  int host_size = 0;
  std::string host_key;
  std::string host_listing;
  bool isometric = false;
  bool cover_preserving = false;
};

std::vector<ModeDifference> mode_equivalence_check(const Poset& pattern, int n_max);

/// Exhaustive scan of a characterization over every poset with up to n_max
/// elements. Deterministic regardless of `jobs`.
struct DiscrepancyRecord {
  int size = 0;
  std::string key;
  std::string listing;
  bool graph_side = false;
  bool poset_side = false;
};

struct ExhaustiveSummary {
  Theorem theorem{};
  int n_max = 0;
  long long scanned = 0;
  std::vector<DiscrepancyRecord> corrected;  // every corrected-theorem discrepancy
  long long original_count = 0;
  std::optional<DiscrepancyRecord> original_example;
};

ExhaustiveSummary exhaustive_verify(Theorem theorem, int n_max, int jobs = 1);

}  // namespace cig
