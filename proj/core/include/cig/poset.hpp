#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cig {

/// How an ordered pair of distinct elements relates in a poset.
/// `Covers` means u is covered by v (u ≺ v, nothing strictly between);
/// `LongBelow` means u < v but not a cover.
enum class PairRelation {
  Equal,
  Covers,
  CoveredBy,
  LongBelow,
  LongAbove,
  Incomparable,
};

const char* to_string(PairRelation r);

class PosetError : public std::runtime_error {
 public:
  enum class Kind {
    DuplicateLabel,
    UnknownLabel,
    UnknownElement,
    Cycle,
    SizeBound,
    NotCoverPairs,
    BadInput,
  };

  PosetError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A finite strict partial order on labeled elements.
///
/// Elements are dense indices internally; labels are kept only at the
/// boundary. Relation rows are 64-bit masks, which caps the size at 64
/// elements (far beyond anything the enumerator or catalog needs).
/// Instances are immutable after construction and safe to share across
/// threads.
class Poset {
 public:
  static constexpr int kMaxElements = 64;
  static constexpr int kDefaultCanonicalBound = 10;

  Poset() = default;

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int u) const { return labels_[u]; }

  /// Index of a label, or throws PosetError{UnknownElement}.
  int index_of(std::string_view label) const;
  std::optional<int> try_index_of(std::string_view label) const;

  bool less(int u, int v) const { return (up_[u] >> v) & 1u; }
  bool comparable(int u, int v) const { return less(u, v) || less(v, u); }
  bool incomparable(int u, int v) const { return u != v && !comparable(u, v); }
  /// u ≺ v: v covers u.
  bool covers(int u, int v) const { return (cover_up_[u] >> v) & 1u; }

  PairRelation relation(int u, int v) const;

  /// All cover pairs (u, v) with u ≺ v, ordered by (u, v) index.
  std::vector<std::pair<int, int>> cover_pairs() const;

  std::uint64_t up_set(int u) const { return up_[u]; }
  std::uint64_t down_set(int u) const { return down_[u]; }
  std::uint64_t cover_up_set(int u) const { return cover_up_[u]; }
  std::uint64_t cover_down_set(int u) const { return cover_down_[u]; }

  /// Same labels in same order with lt transposed.
  Poset dual() const;

  /// Number of cover steps on a shortest saturated chain between u and v.
  /// Defined for comparable pairs in either direction; absent when u = v
  /// or u ∥ v. A cover pair has distance 1.
  std::optional<int> chain_distance(int u, int v) const;

  /// The subposet induced on `subset` (indices into this poset), with the
  /// subset's labels, in ascending index order.
  Poset induced(std::span<const int> subset) const;

  /// Relabeling-invariant key: equal keys iff order-isomorphic.
  /// Throws PosetError{SizeBound} above `max_n`.
  std::string canonical_key(int max_n = kDefaultCanonicalBound) const;

  /// Short printable digest of canonical_key (FNV-1a hex).
  std::string canonical_digest(int max_n = kDefaultCanonicalBound) const;

  /// "a<b, b<c" (cover pairs with labels); "-" for an antichain.
  std::string cover_listing() const;

  bool same_labels_and_order(const Poset& other) const {
    return labels_ == other.labels_ && up_ == other.up_;
  }

  /// Validated construction from a strict-order matrix given as up-set rows.
  /// Throws PosetError on axiom violations.
  static Poset from_order(std::vector<std::string> labels,
                          std::vector<std::uint64_t> up_rows);

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;          // up_[u] bit v <=> u < v
  std::vector<std::uint64_t> down_;        // transpose of up_
  std::vector<std::uint64_t> cover_up_;    // u ≺ v
  std::vector<std::uint64_t> cover_down_;

  void derive_covers();
};

enum class BuildMode { Lenient, Strict };

struct BuildReport {
  Poset poset;
  /// Input pairs that are not cover pairs after transitive closure.
  std::vector<std::string> warnings;
};

/// Builds a poset from order generators. The pairs need not be covers:
/// the transitive closure is taken, then covers are recomputed. Pairs that
/// end up as non-covers are reported as warnings (Lenient) or rejected
/// (Strict). Throws PosetError on cycles, duplicate or unknown labels.
BuildReport build_poset(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> relations,
                        BuildMode mode = BuildMode::Lenient);

/// Convenience: chain c with labels[0] < labels[1] < ...
Poset chain_poset(std::vector<std::string> labels);
/// Convenience: pairwise-incomparable elements.
Poset antichain_poset(std::vector<std::string> labels);

}  // namespace cig
