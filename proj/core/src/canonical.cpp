#include "canonical.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace cig::detail {

namespace {

// Refines vertex colors until stable: a vertex's signature is its color
// plus the sorted multiset of (outgoing type, incoming type, color) over
// all other vertices. Isomorphism-invariant by construction.
std::vector<int> refine_colors(int n, const std::vector<std::uint8_t>& cells) {
  std::vector<int> color(n, 0);
  using Sig = std::vector<int>;
  for (;;) {
    std::vector<Sig> sigs(n);
    for (int u = 0; u < n; ++u) {
      Sig s;
      s.push_back(color[u]);
      std::vector<std::array<int, 3>> parts;
      parts.reserve(n - 1);
      for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        parts.push_back({cells[u * n + v], cells[v * n + u], color[v]});
      }
      std::sort(parts.begin(), parts.end());
      for (const auto& p : parts) {
        s.push_back(p[0]);
        s.push_back(p[1]);
        s.push_back(p[2]);
      }
      sigs[u] = std::move(s);
    }
    std::vector<Sig> uniq = sigs;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<int> next(n);
    for (int u = 0; u < n; ++u) {
      next[u] = static_cast<int>(
          std::lower_bound(uniq.begin(), uniq.end(), sigs[u]) - uniq.begin());
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

struct Search {
  int n;
  const std::vector<std::uint8_t>& cells;
  std::vector<int> color;
  std::vector<int> slot_color;  // required color at each position
  std::vector<int> perm;        // position -> original vertex
  std::vector<bool> used;
  std::string prefix;  // growing-square encoding of the assigned block
  std::string best;
  bool have_best = false;

  explicit Search(int n_, const std::vector<std::uint8_t>& cells_)
      : n(n_), cells(cells_), perm(n_, -1), used(n_, false) {
    color = refine_colors(n, cells);
    slot_color = color;
    std::sort(slot_color.begin(), slot_color.end());
  }

  // Cells contributed when position k is assigned: row (k, 0..k) then
  // column (0..k-1, k). A fixed scan order, so lexicographic minimization
  // over it is a valid canonical form.
  void extension(int k, int vertex, std::string& out) const {
    for (int j = 0; j <= k; ++j) {
      out.push_back(j == k ? char(0) : char(cells[vertex * n + perm[j]]));
    }
    for (int i = 0; i < k; ++i) {
      out.push_back(char(cells[perm[i] * n + vertex]));
    }
  }

  void run(int pos, bool tied_with_best) {
    if (pos == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (used[u] || color[u] != slot_color[pos]) continue;
      std::size_t mark = prefix.size();
      perm[pos] = u;
      extension(pos, u, prefix);
      bool tied = tied_with_best;
      bool prune = false;
      if (have_best && tied) {
        int cmp = prefix.compare(mark, prefix.size() - mark, best, mark,
                                 prefix.size() - mark);
        if (cmp > 0) {
          prune = true;
        } else if (cmp < 0) {
          tied = false;
        }
      }
      if (!prune) {
        used[u] = true;
        run(pos + 1, tied);
        used[u] = false;
      }
      prefix.resize(mark);
      perm[pos] = -1;
    }
  }
};

}  // namespace

std::string canonical_type_matrix(int n, const std::vector<std::uint8_t>& cells) {
  std::string key;
  key.push_back(static_cast<char>(n));
  if (n == 0) return key;
  Search search(n, cells);
  search.run(0, true);
  key += search.best;
  return key;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_hex(std::uint64_t value) {
  static const char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace cig::detail
