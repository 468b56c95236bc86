#include "cig/ci_graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "canonical.hpp"

namespace cig {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

CIGraph::CIGraph(std::vector<std::string> labels, std::span<const std::pair<int, int>> edges)
    : labels_(std::move(labels)), adj_(labels_.size(), 0) {
  const int n = size();
  if (n > Poset::kMaxElements) {
    throw PosetError(PosetError::Kind::SizeBound, "too many vertices");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw PosetError(PosetError::Kind::BadInput, "bad edge");
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
}

int CIGraph::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw PosetError(PosetError::Kind::UnknownElement,
                   "unknown vertex '" + std::string(label) + "'");
}

int CIGraph::degree(int v) const { return std::popcount(adj_[v]); }

int CIGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < size(); ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> CIGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u) {
    std::uint64_t row = adj_[u] >> (u + 1) << (u + 1);
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

bool CIGraph::connected() const {
  const int n = size();
  if (n <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= adj_[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == n;
}

std::string CIGraph::canonical_key(int max_n) const {
  const int n = size();
  if (n > max_n) {
    throw PosetError(PosetError::Kind::SizeBound, "graph too large for canonical key");
  }
  std::vector<std::uint8_t> cells(n * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) cells[u * n + v] = adjacent(u, v) ? 1 : 2;
    }
  }
  return detail::canonical_type_matrix(n, cells);
}

CIGraph ci_graph(const Poset& p) {
  std::vector<std::pair<int, int>> edges;
  const int n = p.size();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      PairRelation r = p.relation(u, v);
      if (r == PairRelation::Covers || r == PairRelation::CoveredBy ||
          r == PairRelation::Incomparable) {
        edges.emplace_back(u, v);
      }
    }
  }
  return CIGraph(p.labels(), edges);
}

CIGraph induced_subgraph(const CIGraph& g, std::span<const int> vertices) {
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> labels;
  for (int v : sorted) {
    if (v < 0 || v >= g.size()) {
      throw PosetError(PosetError::Kind::UnknownElement, "vertex index out of range");
    }
    labels.push_back(g.label(v));
  }
  std::vector<std::pair<int, int>> edges;
  const int m = static_cast<int>(sorted.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(i, j);
    }
  }
  return CIGraph(std::move(labels), edges);
}

std::vector<int> Occurrence::sorted_image() const {
  std::vector<int> image = map;
  std::sort(image.begin(), image.end());
  return image;
}

namespace {

// Backtracking search for induced occurrences. Target vertices are assigned
// in order of decreasing degree (ties by index); host candidates ascending.
struct InducedSearch {
  const CIGraph& target;
  const CIGraph& host;
  std::size_t limit;
  std::vector<int> order;
  std::vector<int> map;       // target vertex -> host vertex (-1 unset)
  std::uint64_t used = 0;
  std::set<std::vector<int>> images;

  InducedSearch(const CIGraph& t, const CIGraph& h, std::size_t lim)
      : target(t), host(h), limit(lim), map(t.size(), -1) {
    order.resize(t.size());
    for (int i = 0; i < t.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return t.degree(a) > t.degree(b);
    });
  }

  bool done() const { return limit != 0 && images.size() >= limit; }

  void run(std::size_t depth) {
    if (done()) return;
    if (depth == order.size()) {
      std::vector<int> image(map);
      std::sort(image.begin(), image.end());
      images.insert(std::move(image));
      return;
    }
    int t = order[depth];
    for (int h = 0; h < host.size(); ++h) {
      if (used & bit(h)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        int t2 = order[d];
        if (target.adjacent(t, t2) != host.adjacent(h, map[t2])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[t] = h;
      used |= bit(h);
      run(depth + 1);
      used &= ~bit(h);
      map[t] = -1;
      if (done()) return;
    }
  }
};

// Canonical representative for one image set: the lexicographically
// smallest valid map vector.
std::optional<std::vector<int>> smallest_map_on_image(const CIGraph& target,
                                                      const CIGraph& host,
                                                      const std::vector<int>& image) {
  std::vector<int> perm(image);
  std::sort(perm.begin(), perm.end());
  std::optional<std::vector<int>> best;
  do {
    bool ok = true;
    const int k = static_cast<int>(perm.size());
    for (int i = 0; i < k && ok; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (target.adjacent(i, j) != host.adjacent(perm[i], perm[j])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return perm;  // first lexicographic permutation that works
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Occurrence> find_induced(const CIGraph& target, const CIGraph& host,
                                     std::size_t limit) {
  std::vector<Occurrence> out;
  if (target.size() > host.size() || target.size() == 0) return out;
  InducedSearch search(target, host, limit);
  search.run(0);
  for (const auto& image : search.images) {
    auto map = smallest_map_on_image(target, host, image);
    out.push_back(Occurrence{*map});
  }
  return out;
}

bool has_induced(const CIGraph& target, const CIGraph& host) {
  return !find_induced(target, host, 1).empty();
}

CographCheck is_cograph(const CIGraph& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        for (int d = c + 1; d < n; ++d) {
          int verts[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (g.adjacent(verts[i], verts[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
            }
          }
          if (edges != 3) continue;
          bool path = true;
          int ends = 0;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) ++ends;
            else if (deg[i] != 2) path = false;
          }
          if (!path || ends != 2) continue;  // triangle+isolated or star
          // Orient the path from its smaller endpoint.
          int start = -1;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) {
              start = verts[i];
              break;
            }
          }
          std::vector<int> map{start};
          std::uint64_t used = bit(start);
          while (map.size() < 4) {
            for (int i = 0; i < 4; ++i) {
              int v = verts[i];
              if (!(used & bit(v)) && g.adjacent(map.back(), v)) {
                map.push_back(v);
                used |= bit(v);
                break;
              }
            }
          }
          return CographCheck{false, Occurrence{map}};
        }
      }
    }
  }
  return CographCheck{true, std::nullopt};
}

bool graphs_isomorphic(const CIGraph& g, const CIGraph& h, int max_n) {
  if (g.size() != h.size()) return false;
  if (g.size() > max_n) {
    throw PosetError(PosetError::Kind::SizeBound, "graph too large for isomorphism test");
  }
  if (g.edge_count() != h.edge_count()) return false;
  return g.canonical_key(max_n) == h.canonical_key(max_n);
}

CIGraph target_graph(TargetGraph t) {
  auto make = [](std::vector<std::string> labels,
                 std::vector<std::pair<int, int>> edges) {
    return CIGraph(std::move(labels), edges);
  };
  switch (t) {
    case TargetGraph::Claw:
      return make({"c", "l1", "l2", "l3"}, {{0, 1}, {0, 2}, {0, 3}});
    case TargetGraph::P4:
      return make({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
    case TargetGraph::C4:
      return make({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    case TargetGraph::House:
      return make({"a", "b", "c", "d", "e"},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}});
    case TargetGraph::Domino:
      return make({"a", "b", "c", "d", "e", "f"},
                  {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    case TargetGraph::K3:
      return make({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
  }
  throw PosetError(PosetError::Kind::BadInput, "unknown target graph");
}

const char* to_string(TargetGraph t) {
  switch (t) {
    case TargetGraph::Claw: return "claw";
    case TargetGraph::House: return "house";
    case TargetGraph::Domino: return "domino";
    case TargetGraph::P4: return "p4";
    case TargetGraph::C4: return "c4";
    case TargetGraph::K3: return "k3";
  }
  return "?";
}

std::optional<TargetGraph> target_graph_from_name(std::string_view name) {
  if (name == "claw") return TargetGraph::Claw;
  if (name == "house") return TargetGraph::House;
  if (name == "domino") return TargetGraph::Domino;
  if (name == "p4") return TargetGraph::P4;
  if (name == "c4") return TargetGraph::C4;
  if (name == "k3") return TargetGraph::K3;
  return std::nullopt;
}

}  // namespace cig
