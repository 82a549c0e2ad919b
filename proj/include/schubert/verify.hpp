#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/complement.hpp"
#include "schubert/parallel.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/rank.hpp"
#include "schubert/schubert.hpp"

namespace schubert {

inline constexpr std::size_t kMaxCounterexamples = 10;

struct VerificationReport {
  std::string claim;
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> counterexamples;
  double seconds = 0.0;
  // Claim-specific count, e.g. how many complements were recognized.
  std::optional<std::uint64_t> successes;

  bool ok() const { return failed == 0; }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["claim"] = r.claim;
  j["n"] = r.n;
  j["total"] = r.total;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["counterexamples"] = r.counterexamples;
  j["seconds"] = r.seconds;
  return j;
}

inline std::string to_json_string(const VerificationReport& r) {
  return to_json(r).dump(2) + "\n";
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.claim = j.at("claim").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.total = j.at("total").get<std::uint64_t>();
  r.passed = j.at("passed").get<std::uint64_t>();
  r.failed = j.at("failed").get<std::uint64_t>();
  r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
  r.seconds = j.at("seconds").get<double>();
  return r;
}

inline std::string csv_header() {
  return "claim,n,total,passed,failed,counterexamples,seconds\n";
}

/// One CSV row; counterexamples are joined with ';' inside a quoted field.
inline std::string to_csv_row(const VerificationReport& r) {
  std::string ce;
  for (std::size_t k = 0; k < r.counterexamples.size(); ++k) {
    if (k) ce += ';';
    for (char c : r.counterexamples[k]) {
      if (c == '"') ce += '"';
      ce += c;
    }
  }
  std::ostringstream os;
  os << r.claim << ',' << r.n << ',' << r.total << ',' << r.passed << ','
     << r.failed << ",\"" << ce << "\"," << r.seconds << '\n';
  return os.str();
}

struct SweepOptions {
  unsigned jobs = 1;
  // Pair sweeps write resumable progress here when set.
  std::optional<std::filesystem::path> checkpoint_dir;
  // Required for the n = 7 pair sweeps.
  bool long_run = false;
};

/// Partial result of a slice of a sweep. Merging is order-dependent only in
/// which counterexamples survive the cap, so callers merge in index order.
struct Tally {
  std::uint64_t total = 0;
  std::uint64_t passed = 0;
  std::uint64_t hits = 0;
  std::vector<std::string> examples;

  void record(bool ok, const std::function<std::string()>& describe) {
    ++total;
    if (ok)
      ++passed;
    else if (examples.size() < kMaxCounterexamples)
      examples.push_back(describe());
  }

  void merge(const Tally& o) {
    total += o.total;
    passed += o.passed;
    hits += o.hits;
    for (const auto& e : o.examples)
      if (examples.size() < kMaxCounterexamples) examples.push_back(e);
  }
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline VerificationReport finish(std::string claim, std::size_t n,
                                 const Tally& t, Clock::time_point start,
                                 bool with_hits = false) {
  VerificationReport r;
  r.claim = std::move(claim);
  r.n = n;
  r.total = t.total;
  r.passed = t.passed;
  r.failed = t.total - t.passed;
  r.counterexamples = t.examples;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (with_hits) r.successes = t.hits;
  return r;
}

template <class Body>
Tally sweep(std::size_t count, unsigned jobs, Body&& body) {
  auto parts = parallel_map(count, jobs, [&](std::size_t i) {
    Tally t;
    body(i, t);
    return t;
  });
  Tally all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

/// Fills the memo for all of S_n sequentially so workers only read it.
inline std::vector<Polynomial> schubert_table(std::size_t n) {
  std::vector<Polynomial> table;
  for (const auto& w : all_permutations(n)) table.push_back(schubert(w));
  return table;
}

inline std::filesystem::path checkpoint_file(const std::filesystem::path& dir,
                                             const std::string& claim,
                                             std::size_t n) {
  return dir / ("checkpoint-" + claim + "-n" + std::to_string(n) + ".json");
}

/// Outer-index sweep processed in batches. With a checkpoint directory the
/// merged tally and the next outer index are saved after every batch of
/// roughly `pairs_per_checkpoint` inner checks, and picked up again on restart.
template <class Body>
Tally batched_sweep(const std::string& claim, std::size_t n,
                    std::size_t outer, std::size_t inner,
                    const SweepOptions& opt, Body&& body,
                    std::size_t pairs_per_checkpoint = 100000) {
  Tally all;
  std::size_t next = 0;
  std::optional<std::filesystem::path> ck;
  if (opt.checkpoint_dir) {
    ck = checkpoint_file(*opt.checkpoint_dir, claim, n);
    std::ifstream is(*ck);
    if (is) {
      auto j = nlohmann::json::parse(is);
      if (j.at("claim") == claim && j.at("n") == n) {
        next = j.at("next").get<std::size_t>();
        all.total = j.at("total").get<std::uint64_t>();
        all.passed = j.at("passed").get<std::uint64_t>();
        all.examples = j.at("counterexamples").get<std::vector<std::string>>();
      }
    }
  }
  const std::size_t batch =
      std::max<std::size_t>(1, pairs_per_checkpoint / std::max<std::size_t>(inner, 1));
  while (next < outer) {
    const std::size_t end = std::min(outer, next + batch);
    const std::size_t base = next;
    all.merge(sweep(end - base, opt.jobs,
                    [&](std::size_t i, Tally& t) { body(base + i, t); }));
    next = end;
    if (ck) {
      std::filesystem::create_directories(ck->parent_path());
      nlohmann::ordered_json j;
      j["claim"] = claim;
      j["n"] = n;
      j["next"] = next;
      j["total"] = all.total;
      j["passed"] = all.passed;
      j["counterexamples"] = all.examples;
      auto tmp = *ck;
      tmp += ".tmp";
      std::ofstream(tmp) << j.dump() << '\n';
      std::filesystem::rename(tmp, *ck);
    }
  }
  return all;
}

}  // namespace detail

/// x^{delta_n} S_w(1/x) is Schubert iff w avoids 132 and 312, and then it is
/// S_{w^c}. `successes` counts recognized complements.
inline VerificationReport verify_theorem_main(std::size_t n,
                                              const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 7, "theorem1 needs 1 <= n <= 7");
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  detail::schubert_table(n);
  auto t = detail::sweep(perms.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& w = perms[i];
    const auto r = complement_delta(w);
    const bool avoid = avoids_132_and_312(w);
    const bool ok = r.recognized.has_value() == avoid &&
                    (!r.recognized || *r.recognized == complement_perm(w));
    if (r.recognized) ++t.hits;
    t.record(ok, [&] {
      return w.to_string() + " avoids=" + (avoid ? "yes" : "no") +
             " recognized=" + (r.recognized ? r.recognized->to_string() : "none");
    });
  });
  return detail::finish("theorem1", n, t, start, true);
}

/// Leading exponent d(w) and smallest exponent conjugate(d(w^{-1})).
inline VerificationReport verify_extremal_monomials(std::size_t n,
                                                    const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 6, "extremal needs 1 <= n <= 6");
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  const auto table = detail::schubert_table(n);
  auto t = detail::sweep(perms.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& w = perms[i];
    const auto lead = leading_exponent(table[i]);
    const auto low = smallest_exponent(table[i]);
    const auto want_low = conjugate(inversion_code(inverse(w)));
    t.record(lead == inversion_code(w) && low == want_low, [&] {
      return w.to_string() + " lead=" + lead.to_string() + " low=" + low.to_string();
    });
  });
  return detail::finish("extremal", n, t, start);
}

/// w avoids 132 iff d(w) is a partition, and then d(w^{-1}) = conjugate(d(w)).
inline VerificationReport verify_code_lemma(std::size_t n,
                                            const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 7, "code_lemma needs 1 <= n <= 7");
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  const Permutation p132{1, 3, 2};
  auto t = detail::sweep(perms.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& w = perms[i];
    const auto d = inversion_code(w);
    const bool avoid = avoids(w, p132);
    bool ok = avoid == d.is_partition();
    if (ok && avoid) ok = inversion_code(inverse(w)) == conjugate(d);
    t.record(ok, [&] { return w.to_string() + " code=" + d.to_string(); });
  });
  return detail::finish("code_lemma", n, t, start);
}

/// For 312-avoiding w and 132-avoiding u with L and R statistics equal as
/// multisets, w = u. Checked over all such pairs.
inline VerificationReport verify_rearrangement_prop(std::size_t n,
                                                    const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 7, "rearrangement needs 1 <= n <= 7");
  const auto start = detail::Clock::now();
  struct Entry {
    Permutation w;
    ExponentVec l, r;
  };
  std::vector<Entry> left, right;
  for (const auto& w : all_permutations(n)) {
    if (avoids(w, Permutation{3, 1, 2})) left.push_back({w, {}, {}});
    if (avoids(w, Permutation{1, 3, 2})) right.push_back({w, {}, {}});
  }
  // Sorted statistics: rearrangement becomes equality.
  auto sorted_lr = [](Entry& e) {
    auto [l, r] = lr_vectors(e.w);
    std::vector<int> lv(l.begin(), l.end()), rv(r.begin(), r.end());
    std::sort(lv.begin(), lv.end());
    std::sort(rv.begin(), rv.end());
    e.l = ExponentVec(std::move(lv));
    e.r = ExponentVec(std::move(rv));
  };
  for (auto& e : left) sorted_lr(e);
  for (auto& e : right) sorted_lr(e);
  auto t = detail::sweep(left.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& a = left[i];
    for (const auto& b : right) {
      const bool hyp = a.l == b.l && a.r == b.r;
      t.record(!hyp || a.w == b.w,
               [&] { return "w=" + a.w.to_string() + " u=" + b.w.to_string(); });
    }
  });
  return detail::finish("rearrangement", n, t, start);
}

/// w** = w iff w avoids 132 and 312.
inline VerificationReport verify_involution(std::size_t n,
                                            const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 7, "involution needs 1 <= n <= 7");
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  auto t = detail::sweep(perms.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& w = perms[i];
    const auto ws = w_star(w);
    const bool fixed = w_star(ws) == w;
    if (fixed) ++t.hits;
    t.record(fixed == avoids_132_and_312(w), [&] {
      return w.to_string() + " w*=" + ws.to_string();
    });
  });
  return detail::finish("involution", n, t, start, true);
}

namespace detail {

inline void require_pair_bounds(const std::string& claim, std::size_t n,
                                std::size_t lo, const SweepOptions& opt) {
  require(n >= lo && n <= 7,
          claim + " needs " + std::to_string(lo) + " <= n <= 7");
  require(n < 7 || opt.long_run, claim + " at n = 7 requires the long-run flag");
}

}  // namespace detail

/// Whenever S_{w'}(x) = x^mu S_w(1/x) for w, w' in S_n, mu is a partition.
inline VerificationReport verify_conjecture_partition(std::size_t n,
                                                      const SweepOptions& opt = {}) {
  detail::require_pair_bounds("conj1", n, 1, opt);
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  const auto table = detail::schubert_table(n);
  const auto count = perms.size();
  auto t = detail::batched_sweep("conj1", n, count, count, opt,
                                 [&](std::size_t i, Tally& t) {
    for (std::size_t k = 0; k < count; ++k) {
      auto mu = quotient_shift(table[k], table[i]);
      t.record(!mu || mu->is_partition(), [&] {
        return "w=" + perms[i].to_string() + " w'=" + perms[k].to_string() +
               " mu=" + mu->to_string();
      });
    }
  });
  return detail::finish("conj1", n, t, start);
}

/// No w containing 1432 has x^mu S_w(1/x) = S_{w'} for any w' in S_n.
inline VerificationReport verify_conjecture_1432(std::size_t n,
                                                 const SweepOptions& opt = {}) {
  detail::require_pair_bounds("conj2", n, 1, opt);
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  const auto table = detail::schubert_table(n);
  std::vector<std::size_t> containing;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (contains(perms[i], Permutation{1, 4, 3, 2})) containing.push_back(i);
  const auto count = perms.size();
  auto t = detail::batched_sweep("conj2", n, containing.size(), count, opt,
                                 [&](std::size_t j, Tally& t) {
    const auto i = containing[j];
    for (std::size_t k = 0; k < count; ++k) {
      auto mu = quotient_shift(table[k], table[i]);
      t.record(!mu, [&] {
        return "w=" + perms[i].to_string() + " w'=" + perms[k].to_string() +
               " mu=" + mu->to_string();
      });
    }
  });
  return detail::finish("conj2", n, t, start);
}

/// f_1432(mu) is never a Schubert polynomial, for mu in {0..bound}^5. The
/// report's n field holds the bound.
inline VerificationReport verify_1432_theorem(std::size_t bound,
                                              const SweepOptions& opt = {}) {
  detail::require(bound <= 6, "thm1432 needs bound <= 6");
  const auto start = detail::Clock::now();
  constexpr std::size_t len = 5;
  std::size_t count = 1;
  for (std::size_t k = 0; k < len; ++k) count *= bound + 1;
  auto t = detail::sweep(count, opt.jobs, [&](std::size_t idx, Tally& t) {
    ExponentVec mu(len);
    for (std::size_t k = len; k-- > 0;) {
      mu[k] = static_cast<int>(idx % (bound + 1));
      idx /= bound + 1;
    }
    auto r = is_schubert(f_1432(mu));
    t.record(!r, [&] { return "mu=" + mu.to_string() + " w=" + r->to_string(); });
  });
  return detail::finish("thm1432", bound, t, start);
}

/// Coefficient matrix of {x^{delta_n} S_w(1/x) : w in S_n} over the monomial
/// basis {x^alpha : alpha_i <= n - i}. Rows follow S_n in lexicographic order.
inline IntMatrix complement_basis_matrix(std::size_t n) {
  const auto perms = all_permutations(n);
  std::map<ExponentVec, std::size_t> column;
  for (const auto& w : perms) column.emplace(inversion_code(w), 0);
  std::size_t c = 0;
  for (auto& [e, idx] : column) idx = c++;
  IntMatrix m(perms.size(), std::vector<Integer>(column.size(), 0));
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const auto f = complement(schubert(perms[r]), staircase(n));
    for (const auto& [e, coef] : f.terms()) m[r][column.at(e)] = coef;
  }
  return m;
}

/// The complements of S_n's Schubert polynomials span V_n: rank n!.
inline VerificationReport verify_basis(std::size_t n, const SweepOptions& = {}) {
  detail::require(n >= 1 && n <= 5, "basis needs 1 <= n <= 5");
  const auto start = detail::Clock::now();
  const auto m = complement_basis_matrix(n);
  const auto rank = exact_rank(m);
  Tally t;
  const bool square = m.size() == factorial(n) && m[0].size() == factorial(n);
  t.record(square && rank == factorial(n), [&] {
    return "rank=" + std::to_string(rank) + " expected=" + std::to_string(factorial(n));
  });
  return detail::finish("basis", n, t, start);
}

/// Divided differences, reduced-word sums and RC-graph sums agree.
inline VerificationReport verify_methods_agree(std::size_t n,
                                               const SweepOptions& opt = {}) {
  detail::require(n >= 1 && n <= 6, "methods needs 1 <= n <= 6");
  const auto start = detail::Clock::now();
  const auto perms = all_permutations(n);
  const auto table = detail::schubert_table(n);
  auto t = detail::sweep(perms.size(), opt.jobs, [&](std::size_t i, Tally& t) {
    const auto& w = perms[i];
    const bool ok = schubert_bjs(w) == table[i] && schubert_rc(w) == table[i];
    t.record(ok, [&] { return w.to_string(); });
  });
  return detail::finish("methods", n, t, start);
}

using ClaimFn = std::function<VerificationReport(std::size_t, const SweepOptions&)>;

/// Registered claim ids, in a fixed order.
inline const std::vector<std::pair<std::string, ClaimFn>>& claims() {
  static const std::vector<std::pair<std::string, ClaimFn>> table = {
      {"theorem1", verify_theorem_main},
      {"extremal", verify_extremal_monomials},
      {"code_lemma", verify_code_lemma},
      {"rearrangement", verify_rearrangement_prop},
      {"involution", verify_involution},
      {"conj1", verify_conjecture_partition},
      {"conj2", verify_conjecture_1432},
      {"thm1432", verify_1432_theorem},
      {"basis", verify_basis},
      {"methods", verify_methods_agree},
  };
  return table;
}

inline const ClaimFn* find_claim(const std::string& id) {
  for (const auto& [name, fn] : claims())
    if (name == id) return &fn;
  return nullptr;
}

}  // namespace schubert
