#include "cig/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "cig/embedding.hpp"

namespace cig {

namespace {

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
  return labels;
}

// Extends a parent poset by one new maximal element above a down-closed
// subset. Every n-poset arises this way from the deletion of a maximal
// element, so extending every parent by every down-set is complete.
std::vector<Poset> extend_all(const std::vector<Poset>& parents, int n) {
  std::map<std::string, Poset> seen;
  auto labels = default_labels(n);
  for (const Poset& parent : parents) {
    const int m = parent.size();
    const std::uint64_t all = (m == 64) ? ~std::uint64_t{0} : (bit(m) - 1);
    for (std::uint64_t a = 0;; ++a) {
      bool down_closed = true;
      std::uint64_t rest = a;
      while (rest) {
        int u = std::countr_zero(rest);
        rest &= rest - 1;
        if ((parent.down_set(u) & ~a) != 0) {
          down_closed = false;
          break;
        }
      }
      if (down_closed) {
        std::vector<std::uint64_t> up(n, 0);
        for (int u = 0; u < m; ++u) {
          up[u] = parent.up_set(u);
          if (a & bit(u)) up[u] |= bit(m);
        }
        Poset child = Poset::from_order(labels, std::move(up));
        std::string key = child.canonical_key(n);
        seen.emplace(std::move(key), std::move(child));
      }
      if (a == all) break;
    }
  }
  std::vector<Poset> out;
  out.reserve(seen.size());
  for (auto& [key, poset] : seen) out.push_back(std::move(poset));
  return out;
}

}  // namespace

const std::vector<Poset>& enumerate_posets(int n) {
  if (n < 1 || n > kEnumerationMax) {
    throw PosetError(PosetError::Kind::SizeBound,
                     "enumeration supports 1 <= n <= " + std::to_string(kEnumerationMax));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Poset>> cache;  // cache[k] = posets on k+1 elements
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(cache.size()) < n) {
    int k = static_cast<int>(cache.size()) + 1;
    if (k == 1) {
      cache.push_back({antichain_poset(default_labels(1))});
    } else {
      cache.push_back(extend_all(cache[k - 2], k));
    }
  }
  return cache[n - 1];
}

std::vector<Poset> minimal_forcing_posets(const CIGraph& target, int max_size) {
  const int t = target.size();
  if (t < 1 || t > 7) {
    throw PosetError(PosetError::Kind::SizeBound, "target graph must have 1..7 vertices");
  }
  if (max_size < t || max_size > kEnumerationMax) {
    throw PosetError(PosetError::Kind::SizeBound, "max_size out of range");
  }

  auto forces = [&](const Poset& q) { return has_induced(target, ci_graph(q)); };

  // Minimality: no proper subset whose induced subposet is cover-preserving
  // still forces the target.
  auto minimal = [&](const Poset& q) {
    const int n = q.size();
    const std::uint64_t all = bit(n) - 1;
    for (std::uint64_t w = 0; w < all; ++w) {
      if (std::popcount(w) < t) continue;
      std::vector<int> subset;
      std::uint64_t rest = w;
      while (rest) {
        subset.push_back(std::countr_zero(rest));
        rest &= rest - 1;
      }
      Poset sub = q.induced(subset);
      bool cover_preserving = true;
      for (std::size_t i = 0; i < subset.size() && cover_preserving; ++i) {
        for (std::size_t j = 0; j < subset.size(); ++j) {
          if (i == j) continue;
          if (sub.covers(static_cast<int>(i), static_cast<int>(j)) !=
              q.covers(subset[i], subset[j])) {
            cover_preserving = false;
            break;
          }
        }
      }
      if (cover_preserving && forces(sub)) return false;
    }
    return true;
  };

  std::vector<Poset> out;
  for (int n = t; n <= max_size; ++n) {
    for (const Poset& q : enumerate_posets(n)) {
      if (forces(q) && minimal(q)) out.push_back(q);
    }
  }
  return out;  // enumerate order is (size, canonical key) already
}

}  // namespace cig
