#pragma once

// Test-only reference computations. Nothing here calls the enumeration,
// ranking or operator code it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

// Catalan numbers by the convolution recurrence C_{k+1} = sum_i C_i C_{k-i}.
inline std::vector<std::uint64_t> catalan_table(int upto) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(upto) + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= upto; ++k) {
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c;
}

inline bool crosses(const std::vector<int>& match) {
  const int size = static_cast<int>(match.size());
  for (int a = 1; a <= size; ++a) {
    for (int b = a + 1; b <= size; ++b) {
      const int c = match[a - 1];
      const int d = match[b - 1];
      if (a < b && b < c && c < d) return true;
    }
  }
  return false;
}

// Every noncrossing perfect matching of 2n points as a 1-based match array,
// built by pairing the lowest free point with every other free point.
inline std::vector<std::vector<int>> noncrossing_matchings(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> match(2 * static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    auto first = std::find(match.begin(), match.end(), 0);
    if (first == match.end()) {
      if (!crosses(match)) out.push_back(match);
      return;
    }
    const int a = static_cast<int>(first - match.begin()) + 1;
    for (int b = a + 1; b <= 2 * n; ++b) {
      if (match[b - 1] != 0) continue;
      match[a - 1] = b;
      match[b - 1] = a;
      self(self);
      match[a - 1] = 0;
      match[b - 1] = 0;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

// The loop-model operator written from its definition on raw match arrays.
inline std::vector<int> h_raw(int i, std::vector<int> m) {
  const int size = static_cast<int>(m.size());
  const int s = i % size + 1;
  const int j = m[i - 1];
  const int k = m[s - 1];
  if (j == s) return m;
  m[i - 1] = s;
  m[s - 1] = i;
  m[j - 1] = k;
  m[k - 1] = j;
  return m;
}

/*
 * FPL states straight from the definition: choose edges of the n x n grid
 * vertex by vertex so every internal vertex has degree 2 and the boundary
 * stubs are occupied exactly at the numbered positions, then pair the
 * numbered stubs that fall in the same connected component.
 *
 * Returns match array -> number of states.
 */
class BruteForceFpl {
 public:
  explicit BruteForceFpl(int n) : n_(n) {}

  std::map<std::vector<int>, std::uint64_t> histogram() {
    counts_.clear();
    down_.assign(static_cast<std::size_t>(n_ * n_), 0);
    right_.assign(static_cast<std::size_t>(n_ * n_), 0);
    search(0);
    return counts_;
  }

  std::uint64_t states() {
    auto h = histogram();
    std::uint64_t total = 0;
    for (auto& [k, v] : h) total += v;
    return total;
  }

 private:
  // Clockwise boundary position t in 0..4n-1 starting at the top-left stub; numbered iff t is even.
  bool top_numbered(int c) const { return c % 2 == 0; }
  bool right_numbered(int r) const { return (n_ + r) % 2 == 0; }
  bool bottom_numbered(int c) const { return (2 * n_ + n_ - 1 - c) % 2 == 0; }
  bool left_numbered(int r) const { return (3 * n_ + n_ - 1 - r) % 2 == 0; }
  int top_label(int c) const { return c / 2 + 1; }
  int right_label(int r) const { return (n_ + r) / 2 + 1; }
  int bottom_label(int c) const { return (3 * n_ - 1 - c) / 2 + 1; }
  int left_label(int r) const { return (4 * n_ - 1 - r) / 2 + 1; }

  int id(int r, int c) const { return r * n_ + c; }

  void search(int v) {
    if (v == n_ * n_) {
      record();
      return;
    }
    const int r = v / n_;
    const int c = v % n_;
    const int up = r == 0 ? top_numbered(c) : down_[id(r - 1, c)];
    const int left = c == 0 ? left_numbered(r) : right_[id(r, c - 1)];
    for (int down = 0; down <= 1; ++down) {
      if (r == n_ - 1 && down != bottom_numbered(c)) continue;
      for (int right = 0; right <= 1; ++right) {
        if (c == n_ - 1 && right != right_numbered(r)) continue;
        if (up + left + down + right != 2) continue;
        down_[id(r, c)] = static_cast<char>(down);
        right_[id(r, c)] = static_cast<char>(right);
        search(v + 1);
      }
    }
    down_[id(r, c)] = 0;
    right_[id(r, c)] = 0;
  }

  int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void record() {
    // Nodes: internal vertices, then one node per boundary label.
    const int labels = 2 * n_;
    std::vector<int> parent(static_cast<std::size_t>(n_ * n_ + labels + 1));
    std::iota(parent.begin(), parent.end(), 0);
    auto unite = [&](int a, int b) { parent[find(parent, a)] = find(parent, b); };
    auto label_node = [&](int label) { return n_ * n_ + label; };
    for (int r = 0; r < n_; ++r) {
      for (int c = 0; c < n_; ++c) {
        if (r + 1 < n_ && down_[id(r, c)]) unite(id(r, c), id(r + 1, c));
        if (c + 1 < n_ && right_[id(r, c)]) unite(id(r, c), id(r, c + 1));
      }
    }
    for (int k = 0; k < n_; ++k) {
      if (top_numbered(k)) unite(label_node(top_label(k)), id(0, k));
      if (bottom_numbered(k)) unite(label_node(bottom_label(k)), id(n_ - 1, k));
      if (left_numbered(k)) unite(label_node(left_label(k)), id(k, 0));
      if (right_numbered(k)) unite(label_node(right_label(k)), id(k, n_ - 1));
    }
    std::vector<int> match(static_cast<std::size_t>(labels), 0);
    for (int a = 1; a <= labels; ++a) {
      for (int b = a + 1; b <= labels; ++b) {
        if (find(parent, label_node(a)) == find(parent, label_node(b))) {
          match[a - 1] = b;
          match[b - 1] = a;
        }
      }
    }
    ++counts_[match];
  }

  int n_;
  std::vector<char> down_;
  std::vector<char> right_;
  std::map<std::vector<int>, std::uint64_t> counts_;
};

}  // namespace oracle
