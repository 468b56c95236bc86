#include "cig/poset.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <unordered_map>

#include "canonical.hpp"

namespace cig {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

void transitive_closure(std::vector<std::uint64_t>& up) {
  const int n = static_cast<int>(up.size());
  for (int k = 0; k < n; ++k) {
    for (int u = 0; u < n; ++u) {
      if (up[u] & bit(k)) up[u] |= up[k];
    }
  }
}

}  // namespace

const char* to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Equal: return "equal";
    case PairRelation::Covers: return "covers";
    case PairRelation::CoveredBy: return "covered-by";
    case PairRelation::LongBelow: return "long-below";
    case PairRelation::LongAbove: return "long-above";
    case PairRelation::Incomparable: return "incomparable";
  }
  return "?";
}

int Poset::index_of(std::string_view label) const {
  if (auto i = try_index_of(label)) return *i;
  throw PosetError(PosetError::Kind::UnknownElement,
                   "unknown element '" + std::string(label) + "'");
}

std::optional<int> Poset::try_index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

PairRelation Poset::relation(int u, int v) const {
  if (u == v) return PairRelation::Equal;
  if (covers(u, v)) return PairRelation::Covers;
  if (covers(v, u)) return PairRelation::CoveredBy;
  if (less(u, v)) return PairRelation::LongBelow;
  if (less(v, u)) return PairRelation::LongAbove;
  return PairRelation::Incomparable;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < size(); ++u) {
    std::uint64_t row = cover_up_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      pairs.emplace_back(u, v);
    }
  }
  return pairs;
}

Poset Poset::dual() const {
  Poset d;
  d.labels_ = labels_;
  d.up_ = down_;
  d.down_ = up_;
  d.cover_up_ = cover_down_;
  d.cover_down_ = cover_up_;
  return d;
}

std::optional<int> Poset::chain_distance(int u, int v) const {
  if (u < 0 || u >= size() || v < 0 || v >= size()) {
    throw PosetError(PosetError::Kind::UnknownElement, "element index out of range");
  }
  if (u == v || !comparable(u, v)) return std::nullopt;
  int lo = less(u, v) ? u : v;
  int hi = less(u, v) ? v : u;
  // BFS in the cover digraph, following covers upward from lo.
  std::vector<int> dist(size(), -1);
  dist[lo] = 0;
  std::queue<int> queue;
  queue.push(lo);
  while (!queue.empty()) {
    int z = queue.front();
    queue.pop();
    if (z == hi) return dist[z];
    std::uint64_t row = cover_up_[z];
    while (row) {
      int w = std::countr_zero(row);
      row &= row - 1;
      if (dist[w] < 0) {
        dist[w] = dist[z] + 1;
        queue.push(w);
      }
    }
  }
  // Unreachable for a valid strict order: lo < hi always has a saturated chain.
  return std::nullopt;
}

Poset Poset::induced(std::span<const int> subset) const {
  std::vector<int> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> labels;
  labels.reserve(sorted.size());
  for (int u : sorted) {
    if (u < 0 || u >= size()) {
      throw PosetError(PosetError::Kind::UnknownElement, "element index out of range");
    }
    labels.push_back(labels_[u]);
  }
  const int m = static_cast<int>(sorted.size());
  std::vector<std::uint64_t> up(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j && less(sorted[i], sorted[j])) up[i] |= bit(j);
    }
  }
  return from_order(std::move(labels), std::move(up));
}

std::string Poset::canonical_key(int max_n) const {
  const int n = size();
  if (n > max_n) {
    throw PosetError(PosetError::Kind::SizeBound,
                     "poset has " + std::to_string(n) + " elements, canonical bound is " +
                         std::to_string(max_n));
  }
  std::vector<std::uint8_t> cells(n * n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      std::uint8_t t = 5;  // incomparable
      if (covers(u, v)) t = 1;
      else if (less(u, v)) t = 2;
      else if (covers(v, u)) t = 3;
      else if (less(v, u)) t = 4;
      cells[u * n + v] = t;
    }
  }
  return detail::canonical_type_matrix(n, cells);
}

std::string Poset::canonical_digest(int max_n) const {
  return detail::to_hex(detail::fnv1a(canonical_key(max_n)));
}

std::string Poset::cover_listing() const {
  std::string out;
  for (auto [u, v] : cover_pairs()) {
    if (!out.empty()) out += ", ";
    out += labels_[u] + "<" + labels_[v];
  }
  return out.empty() ? "-" : out;
}

void Poset::derive_covers() {
  const int n = size();
  cover_up_.assign(n, 0);
  cover_down_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = up_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if ((up_[u] & down_[v]) == 0) {  // nothing strictly between
        cover_up_[u] |= bit(v);
        cover_down_[v] |= bit(u);
      }
    }
  }
}

Poset Poset::from_order(std::vector<std::string> labels, std::vector<std::uint64_t> up_rows) {
  const int n = static_cast<int>(labels.size());
  if (n > kMaxElements) {
    throw PosetError(PosetError::Kind::SizeBound, "too many elements");
  }
  if (static_cast<int>(up_rows.size()) != n) {
    throw PosetError(PosetError::Kind::BadInput, "relation row count mismatch");
  }
  for (int u = 0; u < n; ++u) {
    if (up_rows[u] & bit(u)) {
      throw PosetError(PosetError::Kind::Cycle, "relation is not irreflexive");
    }
    if (n < 64 && (up_rows[u] >> n) != 0) {
      throw PosetError(PosetError::Kind::BadInput, "relation references unknown element");
    }
  }
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = up_rows[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      if (up_rows[v] & bit(u)) {
        throw PosetError(PosetError::Kind::Cycle, "relation is not antisymmetric");
      }
      if ((up_rows[v] & ~up_rows[u]) != 0) {
        throw PosetError(PosetError::Kind::BadInput, "relation is not transitive");
      }
    }
  }
  Poset p;
  p.labels_ = std::move(labels);
  p.up_ = std::move(up_rows);
  p.down_.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    std::uint64_t row = p.up_[u];
    while (row) {
      int v = std::countr_zero(row);
      row &= row - 1;
      p.down_[v] |= bit(u);
    }
  }
  p.derive_covers();
  return p;
}

BuildReport build_poset(std::vector<std::string> labels,
                        std::span<const std::pair<std::string, std::string>> relations,
                        BuildMode mode) {
  const int n = static_cast<int>(labels.size());
  if (n > Poset::kMaxElements) {
    throw PosetError(PosetError::Kind::SizeBound, "too many elements");
  }
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(labels[i], i).second) {
      throw PosetError(PosetError::Kind::DuplicateLabel,
                       "duplicate label '" + labels[i] + "'");
    }
  }
  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw PosetError(PosetError::Kind::UnknownLabel, "unknown label '" + name + "'");
    }
    return it->second;
  };

  std::vector<std::uint64_t> up(n, 0);
  std::vector<std::pair<int, int>> given;
  given.reserve(relations.size());
  for (const auto& [lo, hi] : relations) {
    int u = lookup(lo);
    int v = lookup(hi);
    if (u == v) {
      throw PosetError(PosetError::Kind::Cycle,
                       "relation '" + lo + "<" + hi + "' is reflexive");
    }
    up[u] |= bit(v);
    given.emplace_back(u, v);
  }
  transitive_closure(up);
  for (int u = 0; u < n; ++u) {
    if (up[u] & bit(u)) {
      throw PosetError(PosetError::Kind::Cycle, "relations contain a cycle");
    }
  }

  BuildReport report{Poset::from_order(std::move(labels), std::move(up)), {}};
  for (auto [u, v] : given) {
    if (!report.poset.covers(u, v)) {
      std::string msg = "generator " + report.poset.label(u) + "<" +
                        report.poset.label(v) + " is not a cover pair after closure";
      if (mode == BuildMode::Strict) {
        throw PosetError(PosetError::Kind::NotCoverPairs, msg);
      }
      report.warnings.push_back(std::move(msg));
    }
  }
  return report;
}

Poset chain_poset(std::vector<std::string> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<std::uint64_t> up(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) up[u] |= bit(v);
  }
  return Poset::from_order(std::move(labels), std::move(up));
}

Poset antichain_poset(std::vector<std::string> labels) {
  std::vector<std::uint64_t> up(labels.size(), 0);
  return Poset::from_order(std::move(labels), std::move(up));
}

}  // namespace cig
