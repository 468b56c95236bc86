#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cig/poset.hpp"

namespace cig {

/// Simple undirected graph on labeled vertices, adjacency in 64-bit rows.
/// When built from a poset, {u,v} is an edge iff u ≺ v, v ≺ u, or u ∥ v;
/// the non-edges are exactly the long relations (u ≺≺ v or v ≺≺ u).
class CIGraph {
 public:
  CIGraph() = default;
  CIGraph(std::vector<std::string> labels, std::span<const std::pair<int, int>> edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  int index_of(std::string_view label) const;

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool connected() const;
  bool same_labels_and_adjacency(const CIGraph& other) const {
    return labels_ == other.labels_ && adj_ == other.adj_;
  }

  std::string canonical_key(int max_n = Poset::kDefaultCanonicalBound) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> adj_;
};

CIGraph ci_graph(const Poset& p);

/// Adjacency restricted to `vertices` (ascending index order, labels kept).
CIGraph induced_subgraph(const CIGraph& g, std::span<const int> vertices);

/// An induced-subgraph occurrence: target vertex i sits at host vertex map[i].
struct Occurrence {
  std::vector<int> map;

  std::vector<int> sorted_image() const;
};

/// All induced occurrences of `target` in `host`, one canonical
/// representative per image vertex set, ordered by image set. `limit`
/// stops the search early (0 = unlimited).
std::vector<Occurrence> find_induced(const CIGraph& target, const CIGraph& host,
                                     std::size_t limit = 0);

bool has_induced(const CIGraph& target, const CIGraph& host);

struct CographCheck {
  bool is_cograph;
  std::optional<Occurrence> p4_witness;  // set when is_cograph is false
};

/// True iff the graph has no induced path on four vertices.
CographCheck is_cograph(const CIGraph& g);

/// Edge-preserving bijection test. Throws PosetError{SizeBound} above max_n.
bool graphs_isomorphic(const CIGraph& g, const CIGraph& h,
                       int max_n = Poset::kDefaultCanonicalBound);

/// The five target graphs of the characterization theorems plus the
/// triangle. Vertex conventions (bit-exact):
///   claw:   0 center, 1..3 leaves
///   p4:     path 0-1-2-3
///   c4:     cycle 0-1-2-3
///   house:  cycle 0-1-2-3 plus apex 4 adjacent to 0 and 1
///   domino: paths 0-1-2 and 3-4-5 with rungs 0-3, 1-4, 2-5
///   k3:     triangle 0-1-2
enum class TargetGraph { Claw, House, Domino, P4, C4, K3 };

CIGraph target_graph(TargetGraph t);
const char* to_string(TargetGraph t);
std::optional<TargetGraph> target_graph_from_name(std::string_view name);

}  // namespace cig
