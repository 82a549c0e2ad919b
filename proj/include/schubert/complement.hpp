#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/rc.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

struct NotAPolynomial : std::domain_error {
  using std::domain_error::domain_error;
};

/// x^mu * f(x^{-1}): each exponent alpha becomes mu - alpha.
inline Polynomial complement(const Polynomial& f, const ExponentVec& mu) {
  const auto n = std::max(f.nvars(), mu.size());
  const auto g = f.with_nvars(n);
  const auto m = mu.resized(n);
  Polynomial::TermMap t;
  for (const auto& [a, c] : g.terms()) {
    std::vector<int> e(n);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = m[k] - a[k];
      if (e[k] < 0)
        throw NotAPolynomial("x^" + m.to_string() + " * f(1/x) has x" +
                             std::to_string(k + 1) + "^" +
                             std::to_string(e[k]));
    }
    t.emplace(ExponentVec(std::move(e)), c);
  }
  return Polynomial(n, std::move(t));
}

/// The permutation whose Schubert polynomial would have to equal
/// x^{delta_n} S_w(x^{-1}): complement of d^{-1}(conjugate(d(w^{-1}))).
inline Permutation w_star(const Permutation& w) {
  return complement_perm(code_to_perm(conjugate(inversion_code(inverse(w)))));
}

namespace detail {

/// Smallest m with e_i <= m - i for every 1-based i.
inline std::size_t minimal_size_for_code(const ExponentVec& e) {
  std::size_t m = 1;
  for (std::size_t k = 0; k < e.size(); ++k)
    if (e[k] > 0) m = std::max(m, static_cast<std::size_t>(e[k]) + k + 1);
  return m;
}

/// Enumerates ladder-move closure of w and stops as soon as the RC-graphs
/// found so far already exceed f coefficientwise. A true result proves
/// S_w != f since every RC-graph contributes +1 to its weight.
inline bool rc_graphs_exceed(const Permutation& w, const Polynomial& f) {
  std::map<ExponentVec, Integer> used;
  auto over = [&](const RCGraph& d) {
    auto e = rc_weight(d);
    if (e.size() != f.nvars()) e = e.resized(f.nvars());
    return ++used[e] > f.coefficient(e);
  };
  std::set<RCGraph> seen{bottom_rc(w)};
  if (over(*seen.begin())) return true;
  std::deque<RCGraph> queue{*seen.begin()};
  while (!queue.empty()) {
    RCGraph d = std::move(queue.front());
    queue.pop_front();
    for (auto mv : ladder_moves(d)) {
      RCGraph next = apply_ladder(d, mv);
      if (seen.contains(next)) continue;
      if (!is_rc_graph_of(next, w))
        throw std::logic_error("ladder move left the RC-graphs of " +
                               w.to_string());
      if (over(next)) return true;
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return false;
}

}  // namespace detail

/// Returns the permutation (in S_m for the least possible m) whose Schubert
/// polynomial is f, or nullopt. The only candidate is read off the leading
/// exponent, since a Schubert polynomial leads with x^{d(w)}.
inline std::optional<Permutation> is_schubert(const Polynomial& f) {
  const auto e = leading_exponent(f);
  const auto m = detail::minimal_size_for_code(e);
  if (f.nvars() > m) {
    for (const auto& [a, c] : f.terms())
      for (std::size_t k = m; k < a.size(); ++k)
        if (a[k] != 0) return std::nullopt;
  }
  const auto w = code_to_perm(e.resized(m));
  const auto fm = f.with_nvars(std::max(m, f.nvars()));
  if (detail::rc_graphs_exceed(w.extended(fm.nvars()), fm)) return std::nullopt;
  if (schubert(w).with_nvars(fm.nvars()) != fm) return std::nullopt;
  return w;
}

struct ComplementResult {
  Polynomial polynomial;
  std::optional<Permutation> recognized;
};

/// x^{delta_n} S_w(x^{-1}) and the Schubert index it equals, if any. The
/// recognized permutation is reported in S_n.
inline ComplementResult complement_delta(const Permutation& w) {
  const auto n = w.size();
  auto f = complement(schubert(w), staircase(n));
  auto r = is_schubert(f);
  if (r) r = r->extended(n);
  return {std::move(f), std::move(r)};
}

/// mu >= 0 with f = x^mu g(x^{-1}), if it exists. The candidate is fixed by
/// the extremal terms: lead(f) = mu - smallest(g).
inline std::optional<ExponentVec> quotient_shift(const Polynomial& f,
                                                 const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial();
  if (f.size() != g.size()) return std::nullopt;
  const auto n = std::max(f.nvars(), g.nvars());
  std::optional<Polynomial> fpad, gpad;
  const Polynomial& fn = f.nvars() == n ? f : fpad.emplace(f.with_nvars(n));
  const Polynomial& gn = g.nvars() == n ? g : gpad.emplace(g.with_nvars(n));
  const auto lead = fn.terms().begin()->first;
  const auto low = gn.terms().rbegin()->first;
  ExponentVec mu(n);
  for (std::size_t k = 0; k < n; ++k) mu[k] = lead[k] + low[k];
  // x^mu g(1/x) reverses the order of g's terms.
  auto ft = fn.terms().begin();
  for (auto gt = gn.terms().rbegin(); gt != gn.terms().rend(); ++gt, ++ft) {
    if (ft->second != gt->second) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
      if (ft->first[k] != mu[k] - gt->first[k]) return std::nullopt;
  }
  return mu;
}

/// Two alphabets x_1..x_n, y_1..y_n stored as 2n variables (x first).
/// Each c x^alpha becomes c x^alpha y^{delta_n - alpha}.
inline Polynomial padded_schubert(const Permutation& w) {
  const auto n = w.size();
  const auto delta = staircase(n);
  const auto s = schubert(w);
  Polynomial::TermMap t;
  for (const auto& [a, c] : s.terms()) {
    ExponentVec e(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = a[k];
      e[n + k] = delta[k] - a[k];
    }
    t.emplace(std::move(e), c);
  }
  return Polynomial(2 * n, std::move(t));
}

/// Sets x_1 = ... = x_n = 1 in a polynomial over (x, y) and returns it as a
/// polynomial in the y variables, renamed to x.
inline Polynomial specialize_x_to_one(const Polynomial& p) {
  if (p.nvars() % 2 != 0)
    throw std::invalid_argument("expected an even number of variables");
  const auto n = p.nvars() / 2;
  Polynomial::TermMap t;
  for (const auto& [a, c] : p.terms()) {
    ExponentVec e(n);
    for (std::size_t k = 0; k < n; ++k) e[k] = a[n + k];
    t[std::move(e)] += c;
  }
  return Polynomial(n, std::move(t));
}

/// x^mu (x1^2 + x1 x2 + x1 x3 + x2^2 + x2 x3).
inline Polynomial f_1432(const ExponentVec& mu) {
  const auto n = std::max<std::size_t>(mu.size(), 3);
  Polynomial::TermMap t;
  const int base[5][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}};
  const auto m = mu.resized(n);
  for (const auto& b : base) {
    ExponentVec e = m;
    for (std::size_t k = 0; k < 3; ++k) e[k] += b[k];
    t.emplace(std::move(e), 1);
  }
  return Polynomial(n, std::move(t));
}

}  // namespace schubert
