#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

struct IncompatibleSequence : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IllegalMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Word in the adjacent transpositions, letters 1-based.
using Word = std::vector<int>;

/// Product s_{a_1} ... s_{a_p} in S_n, applied left to right as position swaps.
inline Permutation word_product(std::span<const int> a, std::size_t n) {
  auto w = Permutation::identity(n);
  for (int letter : a) w = w.times_s(static_cast<std::size_t>(letter));
  return w;
}

struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct LadderMove {
  int row;     // i
  int col;     // j
  int target;  // h: the cross lands at (h, j+1)
  friend auto operator<=>(const LadderMove&, const LadderMove&) = default;
};

/// Set of crosses inside the staircase: (i, j) with i + j <= n + 1.
class RCGraph {
 public:
  explicit RCGraph(std::size_t n = 1) : n_(n) {}

  RCGraph(std::size_t n, std::vector<Cell> crosses)
      : n_(n), crosses_(std::move(crosses)) {
    std::sort(crosses_.begin(), crosses_.end());
    if (std::adjacent_find(crosses_.begin(), crosses_.end()) != crosses_.end())
      throw std::invalid_argument("duplicate cross");
    for (auto c : crosses_)
      if (c.row < 1 || c.col < 1 ||
          c.row + c.col > static_cast<int>(n_) + 1)
        throw std::invalid_argument("cross outside the staircase");
  }

  std::size_t n() const noexcept { return n_; }
  std::span<const Cell> crosses() const noexcept { return crosses_; }
  std::size_t size() const noexcept { return crosses_.size(); }
  bool empty() const noexcept { return crosses_.empty(); }

  bool has(int row, int col) const {
    return std::binary_search(crosses_.begin(), crosses_.end(), Cell{row, col});
  }

  friend bool operator==(const RCGraph&, const RCGraph&) = default;
  friend auto operator<=>(const RCGraph&, const RCGraph&) = default;

 private:
  std::size_t n_;
  std::vector<Cell> crosses_;  // sorted by (row, col)
};

/// Conditions: weakly increasing, strict at ascents of a, 1 <= alpha_k <= a_k.
inline bool is_compatible(std::span<const int> a, std::span<const int> alpha) {
  if (a.size() != alpha.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (alpha[k] < 1 || alpha[k] > a[k]) return false;
    if (k + 1 < a.size()) {
      if (alpha[k] > alpha[k + 1]) return false;
      if (a[k] < a[k + 1] && alpha[k] >= alpha[k + 1]) return false;
    }
  }
  return true;
}

inline RCGraph rc_from_pair(std::span<const int> a, std::span<const int> alpha,
                            std::size_t n) {
  if (!is_compatible(a, alpha))
    throw IncompatibleSequence("sequence is not compatible with the word");
  std::vector<Cell> cells;
  for (std::size_t k = 0; k < a.size(); ++k)
    cells.push_back({alpha[k], a[k] - alpha[k] + 1});
  try {
    return RCGraph(n, std::move(cells));
  } catch (const std::invalid_argument& e) {
    throw IncompatibleSequence(e.what());
  }
}

/// Reads rows top to bottom, each row right to left. Cross (i, j) emits
/// letter i + j - 1 with row index i.
inline std::pair<Word, std::vector<int>> rc_word(const RCGraph& d) {
  Word a;
  std::vector<int> alpha;
  auto cs = d.crosses();
  std::size_t k = 0;
  while (k < cs.size()) {
    std::size_t end = k;
    while (end < cs.size() && cs[end].row == cs[k].row) ++end;
    for (std::size_t m = end; m-- > k;) {
      a.push_back(cs[m].row + cs[m].col - 1);
      alpha.push_back(cs[m].row);
    }
    k = end;
  }
  return {std::move(a), std::move(alpha)};
}

/// True iff the reading word is reduced and multiplies to w.
inline bool is_rc_graph_of(const RCGraph& d, const Permutation& w) {
  if (d.size() != w.length()) return false;
  auto [a, alpha] = rc_word(d);
  for (int letter : a)
    if (letter >= static_cast<int>(w.size())) return false;
  return word_product(a, w.size()) == w;
}

inline RCGraph bottom_rc(const Permutation& w) {
  auto d = inversion_code(w);
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (int j = 1; j <= d[i]; ++j) cells.push_back({static_cast<int>(i + 1), j});
  return RCGraph(w.size(), std::move(cells));
}

inline RCGraph transpose(const RCGraph& d) {
  std::vector<Cell> cells;
  for (auto c : d.crosses()) cells.push_back({c.col, c.row});
  return RCGraph(d.n(), std::move(cells));
}

inline RCGraph top_rc(const Permutation& w) {
  return transpose(bottom_rc(inverse(w)));
}

namespace detail {

inline std::optional<int> ladder_target(const RCGraph& d, int i, int j) {
  if (!d.has(i, j) || d.has(i, j + 1)) return std::nullopt;
  int k = i - 1;
  while (k >= 1 && d.has(k, j) && d.has(k, j + 1)) --k;
  if (k < 1 || d.has(k, j) || d.has(k, j + 1)) return std::nullopt;
  return k;
}

}  // namespace detail

/// Every legal ladder move: (i,j) in D, (i,j+1) not in D, rows h+1..i-1 hold
/// crosses at both j and j+1, and row h holds neither.
inline std::vector<LadderMove> ladder_moves(const RCGraph& d) {
  std::vector<LadderMove> moves;
  for (auto c : d.crosses())
    if (auto h = detail::ladder_target(d, c.row, c.col))
      moves.push_back({c.row, c.col, *h});
  return moves;
}

inline RCGraph apply_ladder(const RCGraph& d, LadderMove m) {
  auto h = detail::ladder_target(d, m.row, m.col);
  if (!h || *h != m.target)
    throw IllegalMove("ladder move (" + std::to_string(m.row) + "," +
                      std::to_string(m.col) + "," + std::to_string(m.target) +
                      ") is not legal here");
  std::vector<Cell> cells;
  for (auto c : d.crosses())
    if (!(c.row == m.row && c.col == m.col)) cells.push_back(c);
  cells.push_back({m.target, m.col + 1});
  return RCGraph(d.n(), std::move(cells));
}

inline ExponentVec rc_weight(const RCGraph& d) {
  ExponentVec e(d.n());
  for (auto c : d.crosses()) ++e[c.row - 1];
  return e;
}

/// Breadth-first closure of the bottom RC-graph under ladder moves. Each
/// produced graph is checked to be an RC-graph of w.
inline std::set<RCGraph> all_rc_graphs(const Permutation& w) {
  std::set<RCGraph> seen{bottom_rc(w)};
  std::deque<RCGraph> queue{*seen.begin()};
  while (!queue.empty()) {
    RCGraph d = std::move(queue.front());
    queue.pop_front();
    for (auto m : ladder_moves(d)) {
      RCGraph next = apply_ladder(d, m);
      if (seen.contains(next)) continue;
      if (!is_rc_graph_of(next, w))
        throw std::logic_error("ladder move left the RC-graphs of " +
                               w.to_string());
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

/// ASCII picture: row i has n+1-i cells, '+' for a cross and '.' otherwise.
inline std::string render(const RCGraph& d) {
  std::string out;
  const int n = static_cast<int>(d.n());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n + 1 - i; ++j) out += d.has(i, j) ? '+' : '.';
    out += '\n';
  }
  return out;
}

}  // namespace schubert
