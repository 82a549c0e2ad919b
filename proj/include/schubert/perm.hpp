#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

struct InvalidCode : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Fixed-length vector of nonnegative integers. Used for monomial exponents,
/// inversion codes, compositions and the L/R statistics.
class ExponentVec {
 public:
  ExponentVec() = default;
  explicit ExponentVec(std::size_t n) : e_(n, 0) {}
  ExponentVec(std::initializer_list<int> xs) : e_(xs) { check(); }
  explicit ExponentVec(std::vector<int> xs) : e_(std::move(xs)) { check(); }

  std::size_t size() const noexcept { return e_.size(); }
  bool empty() const noexcept { return e_.empty(); }

  // 0-based storage; entry k holds the exponent of x_{k+1}.
  int operator[](std::size_t k) const { return e_[k]; }
  int& operator[](std::size_t k) { return e_[k]; }

  std::span<const int> entries() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }
  bool is_partition() const {
    return std::is_sorted(e_.begin(), e_.end(), std::greater<>{});
  }

  /// Pads with zeros or drops trailing zeros to reach length n.
  ExponentVec resized(std::size_t n) const {
    for (std::size_t k = n; k < e_.size(); ++k)
      if (e_[k] != 0)
        throw std::invalid_argument("cannot truncate nonzero entry of " +
                                    to_string());
    std::vector<int> out(e_.begin(), e_.begin() + std::min(n, e_.size()));
    out.resize(n, 0);
    return ExponentVec(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < e_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(e_[k]);
    }
    return s + ")";
  }

  friend bool operator==(const ExponentVec&, const ExponentVec&) = default;
  friend auto operator<=>(const ExponentVec&, const ExponentVec&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ExponentVec& v) {
    return os << v.to_string();
  }

 private:
  void check() const {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent entry");
  }

  std::vector<int> e_;
};

/// Parses "2,1,0" or "(2,1,0)".
inline ExponentVec parse_exponents(std::string_view s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    s = s.substr(1, s.size() - 2);
  std::vector<int> out;
  if (s.empty()) return ExponentVec(std::move(out));
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find(',', pos);
    if (next == std::string_view::npos) next = s.size();
    auto tok = s.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty() || tok.size() > 6 ||
        !std::all_of(tok.begin(), tok.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("bad exponent vector '" + std::string(s) + "'");
    out.push_back(std::stoi(std::string(tok)));
    pos = next + 1;
  }
  return ExponentVec(std::move(out));
}

/// Staircase (n-1, n-2, ..., 1, 0).
inline ExponentVec staircase(std::size_t n) {
  ExponentVec v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<int>(n - 1 - k);
  return v;
}

/// Permutation of {1..n} in one-line notation. Values are 1-based.
class Permutation {
 public:
  Permutation() : w_{1} {}
  Permutation(std::initializer_list<int> xs) : w_(xs) { check(); }
  explicit Permutation(std::vector<int> xs) : w_(std::move(xs)) { check(); }

  static Permutation identity(std::size_t n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
  }

  static Permutation longest(std::size_t n) {
    std::vector<int> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<int>(n - k);
    return Permutation(std::move(w));
  }

  /// Accepts "25143" (n <= 9) or "12,3,1,...".
  static Permutation parse(std::string_view s) {
    std::vector<int> w;
    if (s.find(',') == std::string_view::npos) {
      for (char c : s) {
        if (c < '1' || c > '9')
          throw ParseError("bad permutation '" + std::string(s) + "'");
        w.push_back(c - '0');
      }
    } else {
      std::size_t pos = 0;
      while (pos <= s.size()) {
        auto next = s.find(',', pos);
        if (next == std::string_view::npos) next = s.size();
        auto tok = s.substr(pos, next - pos);
        if (tok.empty() ||
            !std::all_of(tok.begin(), tok.end(),
                         [](char c) { return c >= '0' && c <= '9'; }))
          throw ParseError("bad permutation '" + std::string(s) + "'");
        w.push_back(std::stoi(std::string(tok)));
        pos = next + 1;
      }
    }
    try {
      return Permutation(std::move(w));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }

  std::size_t size() const noexcept { return w_.size(); }
  std::span<const int> word() const noexcept { return w_; }
  // Value at 0-based position k.
  int operator[](std::size_t k) const { return w_[k]; }

  bool is_identity() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] != static_cast<int>(k + 1)) return false;
    return true;
  }

  /// w * s_i: swaps the entries at 1-based positions i and i+1.
  Permutation times_s(std::size_t i) const {
    if (i < 1 || i >= w_.size())
      throw std::out_of_range("adjacent transposition index out of range");
    auto w = w_;
    std::swap(w[i - 1], w[i]);
    return Permutation(std::move(w), Unchecked{});
  }

  std::size_t length() const {
    std::size_t inv = 0;
    for (std::size_t a = 0; a < w_.size(); ++a)
      for (std::size_t b = a + 1; b < w_.size(); ++b) inv += w_[b] < w_[a];
    return inv;
  }

  /// Drops trailing fixed points (keeps at least one entry).
  Permutation stripped() const {
    std::size_t m = w_.size();
    while (m > 1 && w_[m - 1] == static_cast<int>(m)) --m;
    return Permutation(std::vector<int>(w_.begin(), w_.begin() + m),
                       Unchecked{});
  }

  /// Appends fixed points up to size n (n >= size()).
  Permutation extended(std::size_t n) const {
    auto w = w_;
    for (std::size_t k = w.size(); k < n; ++k) w.push_back(static_cast<int>(k + 1));
    return Permutation(std::move(w), Unchecked{});
  }

  std::string to_string() const {
    std::string s;
    bool compact = w_.size() <= 9;
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (!compact && k) s += ',';
      s += std::to_string(w_[k]);
    }
    return s;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Permutation& w) {
    return os << w.to_string();
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<int> xs, Unchecked) : w_(std::move(xs)) {}

  void check() const {
    if (w_.empty()) throw std::invalid_argument("empty permutation");
    std::vector<bool> seen(w_.size() + 1, false);
    for (int v : w_) {
      if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
        throw std::invalid_argument("not a permutation of 1..n");
      seen[v] = true;
    }
  }

  std::vector<int> w_;
};

inline ExponentVec inversion_code(const Permutation& w) {
  const auto n = w.size();
  ExponentVec d(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d[i] += w[j] < w[i];
  return d;
}

/// Inverse of the Lehmer code map. Requires v_i <= n - i (1-based i).
inline Permutation code_to_perm(const ExponentVec& v) {
  const auto n = v.size();
  if (n == 0) throw InvalidCode("empty code");
  std::vector<int> avail(n);
  std::iota(avail.begin(), avail.end(), 1);
  std::vector<int> w;
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] > static_cast<int>(n - 1 - i))
      throw InvalidCode("code entry " + std::to_string(i + 1) + " of " +
                        v.to_string() + " exceeds " + std::to_string(n - 1 - i));
    w.push_back(avail[v[i]]);
    avail.erase(avail.begin() + v[i]);
  }
  return Permutation(std::move(w));
}

inline Permutation complement_perm(const Permutation& w) {
  const int n1 = static_cast<int>(w.size()) + 1;
  std::vector<int> c(w.word().begin(), w.word().end());
  for (int& x : c) x = n1 - x;
  return Permutation(std::move(c));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> inv(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    inv[w[i] - 1] = static_cast<int>(i + 1);
  return Permutation(std::move(inv));
}

namespace detail {

inline bool extend_pattern(std::span<const int> w, std::span<const int> p,
                           std::vector<std::size_t>& chosen,
                           std::size_t start) {
  const std::size_t depth = chosen.size();
  if (depth == p.size()) return true;
  const std::size_t need = p.size() - depth;
  for (std::size_t pos = start; pos + need <= w.size(); ++pos) {
    bool ok = true;
    for (std::size_t k = 0; k < depth && ok; ++k)
      ok = (w[chosen[k]] < w[pos]) == (p[k] < p[depth]);
    if (!ok) continue;
    chosen.push_back(pos);
    if (extend_pattern(w, p, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// True iff some subsequence of w is order-isomorphic to p.
inline bool contains(const Permutation& w, const Permutation& p) {
  if (p.size() > w.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(p.size());
  return detail::extend_pattern(w.word(), p.word(), chosen, 0);
}

inline bool avoids(const Permutation& w, const Permutation& p) {
  return !contains(w, p);
}

inline bool avoids_132_and_312(const Permutation& w) {
  return avoids(w, Permutation{1, 3, 2}) && avoids(w, Permutation{3, 1, 2});
}

/// (L(w), R(w)): counts of earlier entries smaller / larger than w_i.
inline std::pair<ExponentVec, ExponentVec> lr_vectors(const Permutation& w) {
  const auto n = w.size();
  ExponentVec l(n), r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (w[j] < w[i])
        ++l[i];
      else
        ++r[i];
    }
  return {l, r};
}

/// Partition transpose: result_i = #{j : v_j >= i}. Length is preserved.
inline ExponentVec conjugate(const ExponentVec& v) {
  ExponentVec t(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (int x : v) t[i] += x >= static_cast<int>(i + 1);
  return t;
}

inline bool is_rearrangement(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("is_rearrangement: length mismatch");
  return std::is_permutation(a.begin(), a.end(), b.begin());
}

/// All permutations of {1..n} in lexicographic order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace schubert
