#include "cig/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "cig/enumerator.hpp"

namespace cig {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<int> mask_to_subset(std::uint64_t mask) {
  std::vector<int> subset;
  while (mask) {
    subset.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return subset;
}

std::string name_set(const Poset& p, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    if (!first) out += ", ";
    out += p.label(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

BasicPropertiesReport basic_properties_report(const Poset& p) {
  BasicPropertiesReport report;
  const int n = p.size();
  const CIGraph g = ci_graph(p);
  const std::uint64_t all = (n >= 64) ? ~std::uint64_t{0} : (bit(n) - 1);

  auto& items = report.items;
  items[0].name = "(i) connected";
  items[1].name = "(ii) antichains induce complete subgraphs";
  items[2].name = "(iii) independent sets lie on a chain";
  items[3].name = "(iv) at most two vertices of degree 1";
  items[4].name = "(v) dual poset has the identical C-I graph";
  items[5].name = "(vi) every triangle has two incomparable vertices";
  items[6].name = "(vii) non-neighbors of an edge sit long-above or long-below both";
  for (auto& item : items) item.pass = true;

  items[0].pass = g.connected();
  if (!items[0].pass) items[0].detail = "graph is disconnected";

  if (n <= 16) {
    for (std::uint64_t s = 0; s <= all && (items[1].pass || items[2].pass); ++s) {
      auto subset = mask_to_subset(s);
      if (subset.size() < 2) {
        if (s == all) break;
        continue;
      }
      bool antichain = true;
      bool independent = true;
      bool clique = true;
      bool chain = true;
      for (std::size_t i = 0; i < subset.size(); ++i) {
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
          int u = subset[i];
          int v = subset[j];
          if (p.comparable(u, v)) antichain = false;
          else chain = false;
          if (g.adjacent(u, v)) independent = false;
          else clique = false;
        }
      }
      if (antichain && !clique && items[1].pass) {
        items[1].pass = false;
        items[1].detail = "antichain " + name_set(p, s) + " is not a clique";
      }
      if (independent && !chain && items[2].pass) {
        items[2].pass = false;
        items[2].detail = "independent set " + name_set(p, s) + " is not a chain";
      }
      if (s == all) break;
    }
  } else {
    // Pairwise forms, equivalent to the subset scans: a 2-element violation
    // exists whenever any larger one does.
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (p.incomparable(u, v) && !g.adjacent(u, v)) {
          items[1].pass = false;
          items[1].detail = "antichain " + name_set(p, bit(u) | bit(v)) + " is not a clique";
        }
        if (!g.adjacent(u, v) && !p.comparable(u, v)) {
          items[2].pass = false;
          items[2].detail =
              "independent set " + name_set(p, bit(u) | bit(v)) + " is not a chain";
        }
      }
    }
  }

  int degree_one = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 1) ++degree_one;
  }
  items[3].pass = degree_one <= 2;
  if (!items[3].pass) {
    items[3].detail = std::to_string(degree_one) + " vertices of degree 1";
  }

  items[4].pass = ci_graph(p.dual()).same_labels_and_adjacency(g);
  if (!items[4].pass) items[4].detail = "G(P*) differs from G_P";

  for (int a = 0; a < n && items[5].pass; ++a) {
    for (int b = a + 1; b < n && items[5].pass; ++b) {
      for (int c = b + 1; c < n; ++c) {
        if (!(g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c))) continue;
        if (!(p.incomparable(a, b) || p.incomparable(a, c) || p.incomparable(b, c))) {
          items[5].pass = false;
          items[5].detail = "triangle " + name_set(p, bit(a) | bit(b) | bit(c)) +
                            " has less than two incomparable vertices";
          break;
        }
      }
    }
  }

  for (int x = 0; x < n && items[6].pass; ++x) {
    for (int y = 0; y < n && items[6].pass; ++y) {
      if (x == y || !g.adjacent(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (g.adjacent(x, z) || g.adjacent(y, z)) continue;
        bool above = p.relation(x, z) == PairRelation::LongBelow &&
                     p.relation(y, z) == PairRelation::LongBelow;
        bool below = p.relation(z, x) == PairRelation::LongBelow &&
                     p.relation(z, y) == PairRelation::LongBelow;
        if (!above && !below) {
          items[6].pass = false;
          items[6].detail = "vertices " + p.label(x) + "," + p.label(y) + "," + p.label(z);
          break;
        }
      }
    }
  }

  report.all_pass = std::all_of(items.begin(), items.end(),
                                [](const auto& item) { return item.pass; });
  return report;
}

SubposetGraphReport subposet_graph_lemma_check(const Poset& p, std::span<const int> subset) {
  SubposetGraphReport report;
  report.subset.assign(subset.begin(), subset.end());
  std::sort(report.subset.begin(), report.subset.end());

  Poset q = p.induced(report.subset);
  report.cover_preserving = true;
  const int m = static_cast<int>(report.subset.size());
  for (int i = 0; i < m && report.cover_preserving; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      if (q.covers(i, j) != p.covers(report.subset[i], report.subset[j])) {
        report.cover_preserving = false;
        break;
      }
    }
  }

  CIGraph gq = ci_graph(q);
  CIGraph induced = induced_subgraph(ci_graph(p), report.subset);
  report.graphs_equal = gq.same_labels_and_adjacency(induced);
  report.subposet_edge_count = gq.edge_count();
  report.induced_edge_count = induced.edge_count();
  return report;
}

const char* to_string(Theorem t) {
  switch (t) {
    case Theorem::Claw: return "claw";
    case Theorem::House: return "house";
    case Theorem::Domino: return "domino";
    case Theorem::Cograph: return "cograph";
  }
  return "?";
}

std::optional<Theorem> theorem_from_name(std::string_view name) {
  if (name == "claw") return Theorem::Claw;
  if (name == "house") return Theorem::House;
  if (name == "domino") return Theorem::Domino;
  if (name == "cograph") return Theorem::Cograph;
  return std::nullopt;
}

TargetGraph theorem_target(Theorem t) {
  switch (t) {
    case Theorem::Claw: return TargetGraph::Claw;
    case Theorem::House: return TargetGraph::House;
    case Theorem::Domino: return TargetGraph::Domino;
    case Theorem::Cograph: return TargetGraph::P4;
  }
  throw PosetError(PosetError::Kind::BadInput, "unknown theorem");
}

VerificationReport characterization_report(const Poset& p, Theorem theorem,
                                           const PatternFamily& family) {
  VerificationReport report;
  report.theorem = theorem;
  report.size = p.size();
  report.cover_listing = p.cover_listing();
  if (p.size() <= Poset::kDefaultCanonicalBound) {
    report.poset_key = p.canonical_digest();
  }

  const CIGraph g = ci_graph(p);
  if (theorem == Theorem::Cograph) {
    CographCheck check = is_cograph(g);
    report.graph_side = !check.is_cograph;
    report.graph_witness = check.p4_witness;
  } else {
    auto hits = find_induced(target_graph(theorem_target(theorem)), g, 1);
    report.graph_side = !hits.empty();
    if (!hits.empty()) report.graph_witness = hits.front();
  }

  // Members larger than the host can never embed.
  std::vector<Poset> usable;
  for (const Poset& member : family.members) {
    if (member.size() <= p.size()) usable.push_back(member);
  }
  if (auto w = contains_pattern(p, usable, EmbeddingMode::CoverPreserving)) {
    report.poset_side_cover_preserving = true;
    report.cover_preserving_witness = std::move(w);
  }
  if (auto w = contains_pattern(p, usable, EmbeddingMode::Isometric)) {
    report.poset_side_isometric = true;
    report.isometric_witness = std::move(w);
  }
  return report;
}

VerificationReport characterization_report(const Poset& p, Theorem theorem) {
  PatternFamily family = pattern_family(theorem_target(theorem));
  return characterization_report(p, theorem, family);
}

const char* to_string(ClawCase c) {
  switch (c) {
    case ClawCase::Case1: return "case1";
    case ClawCase::Case2: return "case2";
    case ClawCase::Case3: return "case3";
    case ClawCase::Case45: return "case45";
  }
  return "?";
}

ClawClassification claw_case_classification(const Poset& p, const Occurrence& claw) {
  if (claw.map.size() != 4) {
    throw PosetError(PosetError::Kind::BadInput, "occurrence is not a claw");
  }
  const CIGraph g = ci_graph(p);
  const int center = claw.map[0];
  std::array<int, 3> leaves = {claw.map[1], claw.map[2], claw.map[3]};
  for (int leaf : leaves) {
    if (!g.adjacent(center, leaf)) {
      throw PosetError(PosetError::Kind::BadInput, "occurrence is not an induced claw");
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (g.adjacent(leaves[i], leaves[j])) {
        throw PosetError(PosetError::Kind::BadInput, "occurrence is not an induced claw");
      }
    }
  }
  // Pairwise non-adjacent C-I vertices are pairwise comparable, so the
  // leaves sort into a chain u < v < w.
  std::sort(leaves.begin(), leaves.end(), [&](int a, int b) { return p.less(a, b); });
  int u = leaves[0];
  int v = leaves[1];
  int w = leaves[2];
  if (!(p.less(u, v) && p.less(v, w))) {
    throw PosetError(PosetError::Kind::BadInput, "claw leaves do not lie on a chain");
  }

  ClawClassification out;
  out.center = center;
  out.ordered_leaves = {u, v, w};
  out.extreme_distance = *p.chain_distance(u, w);

  bool below_center = p.covers(u, center);   // u ≺ x
  bool above_center = p.covers(center, w);   // x ≺ w
  if (below_center && above_center) out.case_id = ClawCase::Case45;
  else if (below_center) out.case_id = ClawCase::Case2;
  else if (above_center) out.case_id = ClawCase::Case3;
  else out.case_id = ClawCase::Case1;
  return out;
}

std::vector<ModeDifference> mode_equivalence_check(const Poset& pattern, int n_max) {
  if (n_max > 7 || pattern.size() > n_max) {
    throw PosetError(PosetError::Kind::SizeBound, "mode equivalence bound exceeded");
  }
  std::vector<ModeDifference> out;
  std::array<Poset, 1> family{pattern};
  for (int k = pattern.size(); k <= n_max; ++k) {
    for (const Poset& host : enumerate_posets(k)) {
      bool cp = contains_pattern(host, family, EmbeddingMode::CoverPreserving).has_value();
      bool iso = contains_pattern(host, family, EmbeddingMode::Isometric).has_value();
      if (cp != iso) {
        ModeDifference diff;
        diff.host_size = k;
        diff.host_key = host.canonical_digest();
        diff.host_listing = host.cover_listing();
        diff.isometric = iso;
        diff.cover_preserving = cp;
        out.push_back(std::move(diff));
      }
    }
  }
  return out;
}

ExhaustiveSummary exhaustive_verify(Theorem theorem, int n_max, int jobs) {
  if (n_max < 1 || n_max > kEnumerationMax) {
    throw PosetError(PosetError::Kind::SizeBound, "n_max out of range");
  }
  ExhaustiveSummary summary;
  summary.theorem = theorem;
  summary.n_max = n_max;

  PatternFamily family = pattern_family(theorem_target(theorem), std::max(7, n_max));

  std::vector<const Poset*> hosts;
  for (int n = 1; n <= n_max; ++n) {
    for (const Poset& p : enumerate_posets(n)) hosts.push_back(&p);
  }
  summary.scanned = static_cast<long long>(hosts.size());

  struct Row {
    bool corrected = false;
    bool original = false;
    DiscrepancyRecord corrected_record;
    DiscrepancyRecord original_record;
  };
  std::vector<Row> rows(hosts.size());

  auto work = [&](std::size_t index) {
    const Poset& p = *hosts[index];
    VerificationReport report = characterization_report(p, theorem, family);
    Row& row = rows[index];
    row.corrected = report.discrepancy_corrected();
    row.original = report.discrepancy_original();
    if (row.corrected || row.original) {
      DiscrepancyRecord base;
      base.size = p.size();
      base.key = p.canonical_digest();
      base.listing = p.cover_listing();
      base.graph_side = report.graph_side;
      row.corrected_record = base;
      row.corrected_record.poset_side = report.poset_side_cover_preserving;
      row.original_record = base;
      row.original_record.poset_side = report.poset_side_isometric;
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < hosts.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= hosts.size()) return;
          work(i);
        }
      });
    }
    for (auto& worker : workers) worker.join();
  }

  // Merge in enumeration order so output is independent of the job count.
  for (const Row& row : rows) {
    if (row.corrected) summary.corrected.push_back(row.corrected_record);
    if (row.original) {
      ++summary.original_count;
      if (!summary.original_example) summary.original_example = row.original_record;
    }
  }
  return summary;
}

}  // namespace cig
