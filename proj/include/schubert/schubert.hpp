#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/rc.hpp"

namespace schubert {

/// x^{delta_n} = x_1^{n-1} x_2^{n-2} ... x_{n-1}.
inline Polynomial schubert_w0(std::size_t n) {
  if (n < 1) throw std::invalid_argument("schubert_w0: n must be positive");
  return Polynomial::monomial(staircase(n));
}

/// (f - s_i f) / (x_i - x_{i+1}), computed term by term:
///   d_i(x_i^a x_{i+1}^b m) = m * sum_{k=0}^{a-b-1} x_i^{b+k} x_{i+1}^{a-1-k}  (a > b)
/// with the sign flipped and a, b exchanged when a < b, and 0 when a == b.
inline Polynomial divided_difference(const Polynomial& f, std::size_t i) {
  if (i < 1 || i >= f.nvars())
    throw std::out_of_range("divided_difference: index " + std::to_string(i) +
                            " out of range for " + std::to_string(f.nvars()) +
                            " variables");
  const std::size_t p = i - 1, q = i;
  Polynomial::TermMap out;
  for (const auto& [e, c] : f.terms()) {
    const int a = e[p], b = e[q];
    if (a == b) continue;
    const int hi = std::max(a, b), lo = std::min(a, b);
    ExponentVec t = e;
    for (int k = 0; k < hi - lo; ++k) {
      t[p] = lo + k;
      t[q] = hi - 1 - k;
      if (a > b)
        out[t] += c;
      else
        out[t] -= c;
    }
  }
  return Polynomial(f.nvars(), std::move(out));
}

enum class Pivot { smallest_ascent, largest_ascent };

/// Divided-difference recursion from w_0 without memoization.
inline Polynomial schubert_uncached(const Permutation& w,
                                    Pivot pivot = Pivot::smallest_ascent) {
  const auto n = w.size();
  if (w == Permutation::longest(n)) return schubert_w0(n);
  std::size_t pick = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (w[i - 1] < w[i]) {
      pick = i;
      if (pivot == Pivot::smallest_ascent) break;
    }
  return divided_difference(schubert_uncached(w.times_s(pick), pivot), pick);
}

/// Thread-safe memo of Schubert polynomials keyed by the permutation with its
/// trailing fixed points removed. Stored polynomials use as many variables as
/// the stripped permutation has entries.
class SchubertCache {
 public:
  Polynomial get(const Permutation& w) {
    const auto key = w.stripped();
    return lookup_or_compute(key).with_nvars(w.size());
  }

  void put(const Permutation& w, const Polynomial& f) {
    const auto key = w.stripped();
    auto g = f.with_nvars(key.size());
    std::unique_lock lock(mutex_);
    memo_.insert_or_assign(key, std::move(g));
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
  }

 private:
  std::optional<Polynomial> find(const Permutation& key) const {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  Polynomial lookup_or_compute(const Permutation& key) {
    if (auto hit = find(key)) return std::move(*hit);
    const auto m = key.size();
    Polynomial f;
    if (key == Permutation::longest(m)) {
      f = schubert_w0(m);
    } else {
      std::size_t i = 1;
      while (key[i - 1] > key[i]) ++i;
      // key * s_i still does not end in m, so it is its own key.
      f = divided_difference(lookup_or_compute(key.times_s(i)), i);
    }
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(key, std::move(f)).first->second;
  }

  mutable std::shared_mutex mutex_;
  std::map<Permutation, Polynomial> memo_;
};

inline SchubertCache& default_cache() {
  static SchubertCache cache;
  return cache;
}

/// Schubert polynomial of w in w.size() variables (memoized).
inline Polynomial schubert(const Permutation& w) {
  return default_cache().get(w);
}

/// Visits every reduced word of w. A word (a_1..a_p) satisfies
/// w = s_{a_1} ... s_{a_p}; the last letter is always a right descent.
inline void for_each_reduced_word(const Permutation& w,
                                  const std::function<void(const Word&)>& fn) {
  Word suffix;
  suffix.reserve(w.length());
  std::function<void(const Permutation&)> rec = [&](const Permutation& u) {
    if (u.is_identity()) {
      Word a(suffix.rbegin(), suffix.rend());
      fn(a);
      return;
    }
    for (std::size_t i = 1; i < u.size(); ++i)
      if (u[i - 1] > u[i]) {
        suffix.push_back(static_cast<int>(i));
        rec(u.times_s(i));
        suffix.pop_back();
      }
  };
  rec(w);
}

inline std::set<Word> reduced_words(const Permutation& w) {
  std::set<Word> out;
  for_each_reduced_word(w, [&](const Word& a) { out.insert(a); });
  return out;
}

inline void for_each_compatible_sequence(
    const Word& a, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> alpha(a.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == a.size()) {
      fn(alpha);
      return;
    }
    int lo = 1;
    if (k > 0) lo = alpha[k - 1] + (a[k - 1] < a[k] ? 1 : 0);
    for (int v = lo; v <= a[k]; ++v) {
      alpha[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

inline std::set<std::vector<int>> compatible_sequences(const Word& a) {
  std::set<std::vector<int>> out;
  for_each_compatible_sequence(a, [&](const auto& alpha) { out.insert(alpha); });
  return out;
}

/// Sum over reduced words and compatible sequences of x_{alpha_1}...x_{alpha_p}.
inline Polynomial schubert_bjs(const Permutation& w) {
  const auto n = w.size();
  Polynomial::TermMap t;
  for_each_reduced_word(w, [&](const Word& a) {
    for_each_compatible_sequence(a, [&](const std::vector<int>& alpha) {
      ExponentVec e(n);
      for (int r : alpha) ++e[r - 1];
      t[std::move(e)] += 1;
    });
  });
  return Polynomial(n, std::move(t));
}

inline Polynomial schubert_rc(const Permutation& w) {
  Polynomial::TermMap t;
  for (const auto& d : all_rc_graphs(w)) t[rc_weight(d)] += 1;
  return Polynomial(w.size(), std::move(t));
}

// Cache files: one per n, "w<TAB><serialized polynomial>" for every w in S_n
// in lexicographic order. The serialization's header shares the line with w.

inline std::filesystem::path cache_file(const std::filesystem::path& dir,
                                        std::size_t n) {
  return dir / ("schubert-n" + std::to_string(n) + ".txt");
}

inline void write_cache(std::ostream& os, std::size_t n, SchubertCache& cache) {
  for (const auto& w : all_permutations(n)) {
    os << w.to_string() << '\t';
    write_polynomial(os, cache.get(w));
  }
}

inline void save_cache(const std::filesystem::path& dir, std::size_t n,
                       SchubertCache& cache = default_cache()) {
  std::filesystem::create_directories(dir);
  auto path = cache_file(dir, n);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + tmp.string());
    write_cache(os, n, cache);
  }
  std::filesystem::rename(tmp, path);
}

/// Loads a cache file into the memo; returns false if the file is absent.
inline bool load_cache(const std::filesystem::path& dir, std::size_t n,
                       SchubertCache& cache = default_cache()) {
  std::ifstream is(cache_file(dir, n), std::ios::binary);
  if (!is) return false;
  std::string line;
  std::size_t count = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("bad cache line '" + line + "'");
    auto w = Permutation::parse(line.substr(0, tab));
    // Re-feed the header so read_polynomial sees the usual layout.
    std::string rest = line.substr(tab + 1) + '\n';
    std::string body;
    {
      std::istringstream hs(rest);
      std::string a, b;
      hs >> a >> b;
      std::size_t terms = std::stoul(b.substr(b.find('=') + 1));
      for (std::size_t k = 0; k < terms; ++k) {
        std::string tl;
        if (!std::getline(is, tl)) throw ParseError("truncated cache file");
        body += tl + '\n';
      }
    }
    std::istringstream ps(rest + body);
    cache.put(w, read_polynomial(ps));
    ++count;
  }
  if (count != factorial(n))
    throw ParseError("cache file for n=" + std::to_string(n) + " is incomplete");
  return true;
}

}  // namespace schubert
