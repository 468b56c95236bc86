#pragma once

#include <vector>

#include "cig/ci_graph.hpp"
#include "cig/poset.hpp"

namespace cig {

inline constexpr int kEnumerationMax = 8;

/// All n-element posets up to isomorphism, in canonical-key order.
/// Generated by orderly extension (a new maximal element over every
/// down-closed subset of each (n-1)-poset) with canonical-key dedup.
/// Results are cached per n and shared; 1 <= n <= 8.
const std::vector<Poset>& enumerate_posets(int n);

/// Every poset whose C-I graph contains `target` as an induced subgraph is
/// forced to contain one of these as a cover-preserving subposet: the list
/// holds all posets with at most `max_size` elements whose C-I graph
/// contains `target` induced while no proper cover-preserving subposet's
/// does. Pairwise non-isomorphic, closed under duality, ordered by
/// (size, canonical key).
std::vector<Poset> minimal_forcing_posets(const CIGraph& target, int max_size);

}  // namespace cig
