#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cig::detail {

// Canonical form of an n x n cell-type matrix under simultaneous row/column
// permutation. Vertices are first partitioned by iterated refinement of
// cell-type signatures; the key is the lexicographically smallest encoding
// over all partition-respecting permutations (branch and bound). Two
// matrices yield equal keys iff some permutation maps one onto the other.
//
// cells[i * n + j] is the type of the ordered pair (i, j); the diagonal is
// ignored. Pure integer computation, so keys are stable across platforms.
std::string canonical_type_matrix(int n, const std::vector<std::uint8_t>& cells);

std::uint64_t fnv1a(const std::string& bytes);
std::string to_hex(std::uint64_t value);

}  // namespace cig::detail
