#pragma once

#include <optional>
#include <span>
#include <vector>

#include "cig/poset.hpp"

namespace cig {

/// The three subposet relations, weakest first. Every isometric embedding
/// is cover-preserving, and every cover-preserving embedding is an
/// order-embedding, so the result sets nest.
enum class EmbeddingMode { Subposet, CoverPreserving, Isometric };

const char* to_string(EmbeddingMode m);
std::optional<EmbeddingMode> embedding_mode_from_name(std::string_view name);

struct Embedding {
  EmbeddingMode mode;
  /// Pattern element i sits at host element map[i].
  std::vector<int> map;
};

/// All injective maps from `pattern` into `host` satisfying the mode's
/// conditions, in lexicographic order of the map vector:
///   Subposet:        u <=_Q v  iff  f(u) <=_P f(v)
///   CoverPreserving: order-embedding and u ≺_Q v iff f(u) ≺_P f(v)
///   Isometric:       order-embedding and for every comparable pair some
///                    shortest saturated host chain between the images lies
///                    wholly inside the image
/// `limit` stops the search early (0 = unlimited).
std::vector<Embedding> find_embeddings(const Poset& pattern, const Poset& host,
                                       EmbeddingMode mode, std::size_t limit = 0);

bool embeds(const Poset& pattern, const Poset& host, EmbeddingMode mode);

struct PatternWitness {
  int member_index;  // position in the family list
  Embedding embedding;
};

/// First family member (in family order) admitting an embedding into the
/// host, with one witness embedding; absent when none embeds.
std::optional<PatternWitness> contains_pattern(const Poset& host,
                                               std::span<const Poset> family,
                                               EmbeddingMode mode);

}  // namespace cig
