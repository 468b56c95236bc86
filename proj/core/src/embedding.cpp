#include "cig/embedding.hpp"

#include <algorithm>
#include <bit>
#include <queue>

namespace cig {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Order-embedding compatibility of one assigned pair.
bool pair_compatible(const Poset& q, const Poset& p, int qu, int qv, int pu, int pv,
                     EmbeddingMode mode) {
  if (mode == EmbeddingMode::CoverPreserving) {
    // Cover pairs must map to cover pairs and long pairs to long pairs,
    // which is exactly equality of the full pair relation.
    return q.relation(qu, qv) == p.relation(pu, pv);
  }
  // Subposet and isometric: comparability with direction must match; the
  // isometric chain condition is global and checked on completed maps.
  if (q.less(qu, qv)) return p.less(pu, pv);
  if (q.less(qv, qu)) return p.less(pv, pu);
  return !p.less(pu, pv) && !p.less(pv, pu);
}

// Shortest cover-chain length from a to b using only host vertices in
// `allowed`; -1 when none exists.
int restricted_distance(const Poset& host, int a, int b, std::uint64_t allowed) {
  std::vector<int> dist(host.size(), -1);
  dist[a] = 0;
  std::queue<int> queue;
  queue.push(a);
  while (!queue.empty()) {
    int z = queue.front();
    queue.pop();
    if (z == b) return dist[z];
    std::uint64_t row = host.cover_up_set(z) & allowed;
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      if (dist[w] < 0) {
        dist[w] = dist[z] + 1;
        queue.push(w);
      }
    }
  }
  return -1;
}

// Some shortest host chain between every comparable image pair must lie
// wholly inside the image.
bool isometric_on_image(const Poset& pattern, const Poset& host,
                        const std::vector<int>& map) {
  std::uint64_t image = 0;
  for (int h : map) image |= bit(h);
  for (int u = 0; u < pattern.size(); ++u) {
    for (int v = 0; v < pattern.size(); ++v) {
      if (u == v || !pattern.less(u, v)) continue;
      int lo = map[u];
      int hi = map[v];
      auto full = host.chain_distance(lo, hi);
      int inside = restricted_distance(host, lo, hi, image);
      if (!full || inside != *full) return false;
    }
  }
  return true;
}

struct EmbeddingSearch {
  const Poset& pattern;
  const Poset& host;
  EmbeddingMode mode;
  std::size_t limit;
  std::vector<int> order;  // pattern elements, most-constrained first
  std::vector<int> map;
  std::uint64_t used = 0;
  std::vector<std::vector<int>> found;

  EmbeddingSearch(const Poset& q, const Poset& p, EmbeddingMode m, std::size_t lim)
      : pattern(q), host(p), mode(m), limit(lim), map(q.size(), -1) {
    order.resize(q.size());
    for (int i = 0; i < q.size(); ++i) order[i] = i;
    auto comparabilities = [&](int u) {
      return std::popcount(q.up_set(u)) + std::popcount(q.down_set(u));
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return comparabilities(a) > comparabilities(b);
    });
  }

  bool done() const { return limit != 0 && found.size() >= limit; }

  void run(std::size_t depth) {
    if (done()) return;
    if (depth == order.size()) {
      if (mode != EmbeddingMode::Isometric || isometric_on_image(pattern, host, map)) {
        found.push_back(map);
      }
      return;
    }
    int qv = order[depth];
    for (int hv = 0; hv < host.size(); ++hv) {
      if (used & bit(hv)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        ok = pair_compatible(pattern, host, order[d], qv, map[order[d]], hv, mode);
      }
      if (!ok) continue;
      map[qv] = hv;
      used |= bit(hv);
      run(depth + 1);
      used &= ~bit(hv);
      map[qv] = -1;
      if (done()) return;
    }
  }
};

}  // namespace

const char* to_string(EmbeddingMode m) {
  switch (m) {
    case EmbeddingMode::Subposet: return "subposet";
    case EmbeddingMode::CoverPreserving: return "cover-preserving";
    case EmbeddingMode::Isometric: return "isometric";
  }
  return "?";
}

std::optional<EmbeddingMode> embedding_mode_from_name(std::string_view name) {
  if (name == "subposet") return EmbeddingMode::Subposet;
  if (name == "cover-preserving") return EmbeddingMode::CoverPreserving;
  if (name == "isometric") return EmbeddingMode::Isometric;
  return std::nullopt;
}

std::vector<Embedding> find_embeddings(const Poset& pattern, const Poset& host,
                                       EmbeddingMode mode, std::size_t limit) {
  std::vector<Embedding> out;
  if (pattern.size() > host.size() || pattern.size() == 0) return out;
  EmbeddingSearch search(pattern, host, mode, limit);
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  for (auto& map : search.found) {
    out.push_back(Embedding{mode, std::move(map)});
  }
  return out;
}

bool embeds(const Poset& pattern, const Poset& host, EmbeddingMode mode) {
  return !find_embeddings(pattern, host, mode, 1).empty();
}

std::optional<PatternWitness> contains_pattern(const Poset& host,
                                               std::span<const Poset> family,
                                               EmbeddingMode mode) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto hits = find_embeddings(family[i], host, mode, 1);
    if (!hits.empty()) {
      return PatternWitness{static_cast<int>(i), std::move(hits.front())};
    }
  }
  return std::nullopt;
}

}  // namespace cig
