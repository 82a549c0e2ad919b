// Command-line driver: compute, complement, rc, verify, cache.
//
// Exit codes: 0 ok, 2 usage, 3 disagreement or failed claim, 4 domain error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "schubert.hpp"

namespace {

using namespace schubert;

constexpr int kOk = 0;
constexpr int kUsage = 2;
constexpr int kDisagree = 3;
constexpr int kDomain = 4;

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SCHUBERT_CACHE"); env && *env) return env;
  return ".schubert-cache";
}

std::string render_poly(const Polynomial& f, const std::string& format) {
  return format == "serial" ? serialize(f) : to_text(f) + "\n";
}

int cmd_compute(const std::string& perm, const std::string& method,
                const std::string& format, bool count) {
  const auto w = Permutation::parse(perm);
  Polynomial f;
  if (method == "dd") {
    f = schubert::schubert(w);
  } else if (method == "bjs") {
    f = schubert_bjs(w);
  } else if (method == "rc") {
    f = schubert_rc(w);
  } else {
    f = schubert::schubert(w);
    const auto bjs = schubert_bjs(w);
    const auto rc = schubert_rc(w);
    if (bjs != f || rc != f) {
      std::cout << "dd:  " << render_poly(f, format) << "bjs: "
                << render_poly(bjs, format) << "rc:  " << render_poly(rc, format)
                << "DISAGREE\n";
      return kDisagree;
    }
  }
  std::cout << render_poly(f, format);
  if (count) std::cout << "count=" << eval_all_ones(f) << '\n';
  if (method == "all") std::cout << "AGREE\n";
  return kOk;
}

int cmd_complement(const std::string& perm, const std::string& mu_text,
                   const std::string& format) {
  const auto w = Permutation::parse(perm);
  const auto mu = parse_exponents(mu_text);
  Polynomial f;
  try {
    f = complement(schubert::schubert(w), mu);
  } catch (const NotAPolynomial& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  }
  std::cout << render_poly(f, format);
  auto r = is_schubert(f);
  if (r) {
    if (r->size() < f.nvars()) r = r->extended(f.nvars());
    std::cout << "SCHUBERT w'=" << *r << '\n';
  } else {
    std::cout << "NOT-SCHUBERT\n";
  }
  return kOk;
}

int cmd_rc(const std::string& perm, bool top, bool all) {
  const auto w = Permutation::parse(perm);
  if (all) {
    auto graphs = all_rc_graphs(w);
    std::vector<RCGraph> sorted(graphs.begin(), graphs.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return revlex_compare(rc_weight(a), rc_weight(b)) > 0;
    });
    std::cout << "graphs=" << sorted.size() << '\n';
    for (const auto& d : sorted)
      std::cout << '\n' << "weight=" << rc_weight(d) << '\n' << render(d);
    return kOk;
  }
  std::cout << render(top ? top_rc(w) : bottom_rc(w));
  return kOk;
}

bool uses_schubert_table(const std::string& claim) {
  return claim == "theorem1" || claim == "extremal" || claim == "conj1" ||
         claim == "conj2" || claim == "methods" || claim == "basis";
}

int cmd_verify(const std::string& claim, std::size_t n, unsigned jobs,
               const std::string& out, const std::string& format,
               bool long_run, const std::filesystem::path& cache_dir) {
  const auto* fn = find_claim(claim);
  if (!fn) {
    std::cerr << "error: unknown claim '" << claim << "'; known:";
    for (const auto& [id, f] : claims()) std::cerr << ' ' << id;
    std::cerr << '\n';
    return kUsage;
  }
  SweepOptions opt;
  opt.jobs = jobs == 0 ? default_jobs() : jobs;
  opt.long_run = long_run;
  if (long_run) opt.checkpoint_dir = cache_dir;

  const bool cached = uses_schubert_table(claim) && n <= 7;
  bool loaded = false;
  if (cached) {
    try {
      loaded = load_cache(cache_dir, n);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring cache: " << e.what() << '\n';
    }
  }

  VerificationReport report;
  try {
    report = (*fn)(n, opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cached && !loaded) {
    try {
      save_cache(cache_dir, n);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write cache: " << e.what() << '\n';
    }
  }

  const std::string body =
      format == "csv" ? csv_header() + to_csv_row(report) : to_json_string(report);
  if (out.empty()) {
    std::cout << body;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write " << out << '\n';
      return kUsage;
    }
    os << body;
    std::cout << report.claim << " n=" << report.n << ": " << report.passed << '/'
              << report.total << " passed";
    if (report.successes) std::cout << ", " << *report.successes << " successes";
    std::cout << '\n';
  }
  return report.ok() ? kOk : kDisagree;
}

int cmd_cache(std::size_t n, const std::filesystem::path& dir) {
  if (n < 1 || n > 8) {
    std::cerr << "error: cache needs 1 <= n <= 8\n";
    return kUsage;
  }
  save_cache(dir, n);
  std::cout << cache_file(dir, n).string() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials, their complements and exhaustive checks"};
  app.require_subcommand(1);
  std::string cache_flag;
  app.add_option("--cache-dir", cache_flag,
                 "Cache directory (default $SCHUBERT_CACHE or ./.schubert-cache)");

  std::string perm, method = "dd", format = "text", mu;
  bool count = false;
  auto* compute = app.add_subcommand("compute", "Print the Schubert polynomial of a permutation");
  compute->add_option("perm", perm, "Permutation, e.g. 1432")->required();
  compute->add_option("--method", method)->check(CLI::IsMember({"dd", "bjs", "rc", "all"}));
  compute->add_option("--format", format)->check(CLI::IsMember({"text", "serial"}));
  compute->add_flag("--count", count, "Also print the number of RC-graphs");

  auto* comp = app.add_subcommand("complement", "Print x^mu S_w(1/x) and whether it is Schubert");
  comp->add_option("perm", perm)->required();
  comp->add_option("--mu", mu, "Comma-separated exponents")->required();
  comp->add_option("--format", format)->check(CLI::IsMember({"text", "serial"}));

  bool bottom = false, top = false, all = false;
  auto* rc = app.add_subcommand("rc", "Draw RC-graphs");
  rc->add_option("perm", perm)->required();
  auto* gb = rc->add_flag("--bottom", bottom);
  auto* gt = rc->add_flag("--top", top);
  auto* ga = rc->add_flag("--all", all);
  gb->excludes(gt, ga);
  gt->excludes(ga);

  std::string claim, out, vformat = "json";
  std::size_t n = 0;
  unsigned jobs = 0;
  bool long_run = false;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive check and write a report");
  verify->add_option("claim", claim, "Claim id")->required();
  verify->add_option("--n", n, "Size (bound for thm1432)")->required();
  verify->add_option("--jobs", jobs, "Worker threads (default: logical cores)");
  verify->add_option("--out", out, "Write the report here instead of stdout");
  verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--long-run", long_run, "Allow n = 7 pair sweeps (checkpointed)");

  std::size_t cache_n = 0;
  auto* cache = app.add_subcommand("cache", "Precompute and store all Schubert polynomials of S_n");
  cache->add_option("--n", cache_n)->required();
  cache->add_option("--cache-dir", cache_flag);
  verify->add_option("--cache-dir", cache_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto cache_dir = resolve_cache_dir(cache_flag);
  try {
    if (*compute) return cmd_compute(perm, method, format, count);
    if (*comp) return cmd_complement(perm, mu, format);
    if (*rc) return cmd_rc(perm, top, all);
    if (*verify) return cmd_verify(claim, n, jobs, out, vformat, long_run, cache_dir);
    if (*cache) return cmd_cache(cache_n, cache_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
