#pragma once

// Naive reference implementations kept independent of the library's search
// and enumeration paths; used to compute expected values the tests freeze.

#include <cstdint>
#include <vector>

#include "cig/ci_graph.hpp"
#include "cig/embedding.hpp"
#include "cig/poset.hpp"

namespace oracle {

/// Every labeled strict order on n elements (all relation matrices filtered
/// by the order axioms). Feasible for n <= 4.
std::vector<cig::Poset> all_labeled_posets(int n);

/// Dedup by explicit permutation isomorphism testing (no canonical keys).
std::vector<cig::Poset> dedup_by_isomorphism(const std::vector<cig::Poset>& posets);

bool posets_isomorphic(const cig::Poset& a, const cig::Poset& b);

/// All induced occurrences of target in host found by scanning every
/// vertex subset and every bijection; one map per matching subset.
std::vector<std::vector<int>> all_induced_subsets(const cig::CIGraph& target,
                                                  const cig::CIGraph& host);

/// All mode-satisfying injections found by scanning every injective map.
std::vector<std::vector<int>> all_embeddings_brute(const cig::Poset& pattern,
                                                   const cig::Poset& host,
                                                   cig::EmbeddingMode mode);

}  // namespace oracle
