#pragma once

// Subcommand implementations. Each returns the exact text the CLI prints, so tests can
// compare outputs byte for byte without spawning processes.

#include "output.hpp"

#include "hultman/hultman.hpp"

#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hultman::cli {

// ---------------------------------------------------------------------------
// table

inline std::vector<TableRow> table_rows(bool is_signed, int n_max) {
  if (n_max < 0) throw std::invalid_argument("table: --n must be nonnegative");
  std::vector<TableRow> rows;
  for (int n = (n_max == 0 ? 0 : 1); n <= n_max; ++n) {
    const auto row = is_signed ? signed_hultman_row(n) : std::vector<ExactInt>{};
    for (int k = 1; k <= n + 1; ++k) rows.push_back({n, k, is_signed ? row[k] : hultman_bona_flynn(n, k)});
  }
  return rows;
}

inline std::string cmd_table(bool is_signed, int n_max, Format format, bool dense = false) {
  auto rows = table_rows(is_signed, n_max);
  if (!dense) std::erase_if(rows, [](const TableRow& r) { return r.count == 0; });
  return render_rows(rows, format);
}

// ---------------------------------------------------------------------------
// census

inline DistributionTable census_table(bool is_signed, int n, std::string_view statistic, const CensusOptions& opt) {
  if (statistic == "cycles") return is_signed ? signed_hultman_census(n, opt) : hultman_census(n, opt);
  if (statistic == "odd") return is_signed ? signed_odd_census(n, opt) : odd_hultman_census(n, opt);
  throw std::invalid_argument("unknown statistic \"" + std::string(statistic) + "\" (expected cycles or odd)");
}

inline std::string cmd_census(bool is_signed, int n, std::string_view statistic, const CensusOptions& opt,
                              Format format, bool dense = false) {
  const auto t = census_table(is_signed, n, statistic, opt);
  return render_distribution(t, format, dense ? n + 1 : -1);
}

// ---------------------------------------------------------------------------
// moments

inline std::string decimal_hint(const ExactRational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", to_double(q));
  return buf;
}

inline std::string cmd_moments(bool is_signed, int n_max, Format format) {
  if (n_max < 1) throw std::invalid_argument("moments: --n must be at least 1");
  std::vector<std::pair<int, MomentPair>> rows;
  for (int n = 1; n <= n_max; ++n) rows.emplace_back(n, is_signed ? signed_moments(n) : unsigned_moments(n));
  if (format == Format::csv) {
    std::string out = "n,mean,variance,mean_approx,variance_approx\n";
    for (const auto& [n, m] : rows) {
      out += std::to_string(n) + "," + to_fraction_string(m.mean) + "," + to_fraction_string(m.variance) + "," +
             decimal_hint(m.mean) + "," + decimal_hint(m.variance) + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["signed"] = is_signed;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [n, m] : rows) {
    j["rows"].push_back({{"n", n},
                         {"mean", to_fraction_string(m.mean)},
                         {"variance", to_fraction_string(m.variance)},
                         {"mean_approx", decimal_hint(m.mean)},
                         {"variance_approx", decimal_hint(m.variance)}});
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// dist / compare

inline std::string cmd_dist(std::string_view metric, int n, const CensusOptions& opt, Format format) {
  return render_distribution(distance_distribution(n, metric, opt), format);
}

inline std::string cmd_compare(std::string_view metric, int n, const CensusOptions& opt, Format format) {
  const auto result = compare_with_hultman(n, metric, distance_distribution(n, metric, opt));
  if (format == Format::csv) {
    std::string out = "k,distance_count,shifted_hultman,offset,gap\n";
    for (const auto& r : result.rows) {
      out += std::to_string(r.k) + "," + r.distance_count.str() + "," + r.shifted_hultman.str() + "," +
             std::to_string(result.offset) + "," + ExactInt(r.distance_count - r.shifted_hultman).str() + "\n";
    }
    return out;
  }
  nlohmann::ordered_json j;
  j["metric"] = result.metric;
  j["n"] = result.n;
  j["offset"] = result.offset;
  j["total_variation"] = to_fraction_string(result.total_variation);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    j["rows"].push_back({{"k", r.k},
                         {"distance_count", r.distance_count.str()},
                         {"shifted_hultman", r.shifted_hultman.str()},
                         {"gap", ExactInt(r.distance_count - r.shifted_hultman).str()}});
  }
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verify

struct CheckResult {
  std::string name;
  std::string anchor;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  std::string str() const {
    std::string out;
    for (const auto& c : checks) {
      out += std::string(c.passed ? "PASS" : "FAIL") + "  " + c.name + "  [" + c.anchor + "]";
      if (!c.detail.empty()) out += "  " + c.detail;
      out += "\n";
    }
    std::size_t ok = 0;
    for (const auto& c : checks) ok += c.passed;
    out += suite + ": " + std::to_string(ok) + "/" + std::to_string(checks.size()) + " checks passed\n";
    return out;
  }
};

namespace detail {

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void check(std::string name, std::string anchor, const std::function<std::string()>& body) {
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    report_.checks.push_back({std::move(name), std::move(anchor), failure.empty(), failure});
  }

 private:
  VerifyReport& report_;
};

inline std::string mismatch(const std::string& what, const ExactInt& got, const ExactInt& want) {
  return what + ": got " + got.str() + ", expected " + want.str();
}

inline void verify_table1(Recorder& rec) {
  rec.check("signed formula reproduces all 77 published values", "published signed Hultman table", [] {
    for (int n = 1; n <= 11; ++n) {
      const auto row = signed_hultman_row(n);
      for (const auto& e : golden::kSignedHultmanTable) {
        if (e.n != n) continue;
        if (row[e.k] != ExactInt(std::string(e.count)))
          return mismatch("S+-(" + std::to_string(n) + "," + std::to_string(e.k) + ")", row[e.k],
                          ExactInt(std::string(e.count)));
      }
    }
    return std::string();
  });
}

inline void verify_formulas(Recorder& rec, int max_n, unsigned jobs) {
  rec.check("new formula equals Stirling closed form, n <= 40", "unsigned Hultman formulas", [] {
    for (int n = 0; n <= 40; ++n) {
      const auto row = hultman_new_formula_row(n);
      for (int k = 1; k <= n + 1; ++k)
        if (row[k] != hultman_bona_flynn(n, k)) return mismatch("S_H(" + std::to_string(n) + "," + std::to_string(k) + ")", row[k], hultman_bona_flynn(n, k));
    }
    return std::string();
  });
  rec.check("unsigned census equals closed form, n <= " + std::to_string(std::min(max_n, 10)), "unsigned Hultman definition", [&] {
    for (int n = 0; n <= std::min(max_n, 10); ++n) {
      const auto t = hultman_census(n, {jobs, true});
      for (int k = 0; k <= n + 2; ++k)
        if (t.count(k) != hultman_bona_flynn(n, k)) return mismatch("census n=" + std::to_string(n) + " k=" + std::to_string(k), t.count(k), hultman_bona_flynn(n, k));
    }
    return std::string();
  });
  const int signed_top = std::min(max_n, 8);
  rec.check("signed census equals partition formula, n <= " + std::to_string(signed_top), "signed Hultman formula", [&] {
    for (int n = 0; n <= signed_top; ++n) {
      const auto t = signed_hultman_census(n, {jobs, true});
      const auto row = signed_hultman_row(n);
      for (int k = 0; k <= n + 1; ++k)
        if (t.count(k) != row[k]) return mismatch("signed census n=" + std::to_string(n) + " k=" + std::to_string(k), t.count(k), row[k]);
    }
    return std::string();
  });
  rec.check("factorization counts equal Hultman numbers, n <= " + std::to_string(std::min(max_n, 6)), "cycle factorization corollary", [&] {
    for (int n = 0; n <= std::min(max_n, 6); ++n)
      for (int k = 1; k <= n + 1; ++k)
        if (count_factorizations(n, k) != hultman_bona_flynn(n, k)) return mismatch("factorizations", count_factorizations(n, k), hultman_bona_flynn(n, k));
    return std::string();
  });
  rec.check("special cases k = n+1, n, n-1 agree with the general formula, n <= 30", "signed special cases", [] {
    for (int n = 1; n <= 30; ++n) {
      const auto row = signed_hultman_row(n);
      for (int k : {n + 1, n, n - 1})
        if (row[k] != signed_hultman_special(n, k)) return mismatch("special", row[k], signed_hultman_special(n, k));
    }
    return std::string();
  });
  rec.check("row totals n! and 2^n n!, n <= 25", "group orders", [] {
    for (int n = 0; n <= 25; ++n) {
      ExactInt u = 0, s = 0;
      const auto row = signed_hultman_row(n);
      for (int k = 1; k <= n + 1; ++k) {
        u += hultman_bona_flynn(n, k);
        s += row[k];
      }
      if (u != factorial(n)) return mismatch("unsigned total", u, factorial(n));
      if (s != group_order_exact(n, true)) return mismatch("signed total", s, group_order_exact(n, true));
    }
    return std::string();
  });
}

inline void verify_lemmas(Recorder& rec, int max_n, unsigned jobs) {
  const int top = std::min(max_n, 6);
  rec.check("recover(BG(pi)) = pi for every signed pi, n <= " + std::to_string(top), "complement hamiltonicity lemma", [&] {
    for (int n = 0; n <= top; ++n)
      for (const auto& pi : enumerate_signed(n, true)) {
        const auto bg = breakpoint_graph(pi);
        if (!is_valid_breakpoint_graph(bg.config)) return "complement not hamiltonian for " + pi.str();
        if (recover_permutation(bg.config) != pi) return "round trip failed for " + pi.str();
      }
    return std::string();
  });
  rec.check("matching census slice j=1 equals signed row; valid count 2^n n!, n <= " + std::to_string(top), "matching renaming lemma", [&] {
    for (int n = 0; n <= top; ++n) {
      const auto census = matching_census(n, {jobs, true});
      const auto slice = matching_census_slice(n, census);
      const auto row = signed_hultman_row(n);
      for (int k = 0; k <= n + 1; ++k)
        if (slice.count(k) != row[k]) return mismatch("slice n=" + std::to_string(n), slice.count(k), row[k]);
      if (slice.total() != group_order_exact(n, true)) return mismatch("valid configurations", slice.total(), group_order_exact(n, true));
    }
    return std::string();
  });
  rec.check("renaming map preserves union cycle counts, n <= " + std::to_string(std::min(top, 4)), "matching renaming lemma", [&] {
    for (int n = 0; n <= std::min(top, 4); ++n) {
      const auto mu = renaming_map(n);
      if (conjugate_matching(grey_matching(n), mu) != identity_matching(n + 1)) return std::string("mu does not map grey to identity matching");
      const auto all = enumerate_matchings(n + 1, true);
      for (const auto& a : all)
        for (const auto& b : all)
          if (union_cycle_count(a, b) != union_cycle_count(conjugate_matching(a, mu), conjugate_matching(b, mu)))
            return std::string("cycle count changed under relabeling");
    }
    return std::string();
  });
  rec.check("generating functions match closed forms and derivative values, n <= 15", "generating-function lemmas", [] {
    for (int n = 0; n <= 15; ++n) {
      const auto f = unsigned_gf(n);
      const auto g = signed_gf(n);
      for (int k = 0; k <= n + 1; ++k)
        if (f.coefficient(k) != hultman_bona_flynn(n, k)) return mismatch("unsigned gf", f.coefficient(k), hultman_bona_flynn(n, k));
      if (g.evaluate(ExactInt(1)) != group_order_exact(n, true)) return mismatch("G(1)", g.evaluate(ExactInt(1)), group_order_exact(n, true));
      const auto d = unsigned_gf_derivatives(n);
      const ExactRational one(1);
      const auto rf = to_rational(f);
      if (rf.evaluate(one) != d.value || rf.derivative().evaluate(one) != d.first ||
          rf.derivative().derivative().evaluate(one) != d.second)
        return "derivative closed forms disagree at n=" + std::to_string(n);
    }
    return std::string();
  });
}

inline void verify_bounds(Recorder& rec, int max_n, unsigned jobs) {
  const int utop = std::min(max_n, 7);
  const int stop = std::min(max_n, 5);
  rec.check("bid and dcj distributions are shifted Hultman rows", "block-interchange and DCJ formulas", [&] {
    for (int n = 0; n <= std::min(max_n, 7); ++n) {
      const CensusOptions opt{jobs, true};
      const auto b = distance_distribution(n, "bid", opt);
      const auto d = distance_distribution(n, "dcj", opt);
      const auto srow = signed_hultman_row(n);
      for (int k = 0; k <= n + 1; ++k) {
        if (b.count(k) != hultman_bona_flynn(n, n + 1 - 2 * k)) return mismatch("bid", b.count(k), hultman_bona_flynn(n, n + 1 - 2 * k));
        const ExactInt want = (k <= n) ? srow[n + 1 - k] : ExactInt(0);
        if (d.count(k) != want) return mismatch("dcj", d.count(k), want);
      }
    }
    return std::string();
  });
  auto dominated = [&](std::string_view bound, std::string_view generators, int top) {
    rec.check(std::string(bound) + " <= " + std::string(generators) + " distance, n <= " + std::to_string(top),
              "rearrangement lower bounds", [&, bound, generators, top] {
                const auto m = *parse_formula_metric(bound);
                const auto g = *GeneratorSet::parse(generators);
                for (int n = 1; n <= top; ++n) {
                  const auto bfs = bfs_distances(n, g, jobs, true);
                  const auto levels = bfs.level_sizes();
                  ExactInt sum = 0;
                  for (auto l : levels) sum += l;
                  if (sum != group_order_exact(n, g.is_signed())) return mismatch("BFS levels", sum, group_order_exact(n, g.is_signed()));
                  std::string bad;
                  PermutationRange(n, g.is_signed(), 0, group_order(n, g.is_signed())).for_each_raw([&](std::span<const int> p) {
                    if (!bad.empty()) return;
                    if (formula_metric_value(m, p, cycle_stats(p)) > bfs.at(p))
                      bad = "bound exceeds distance at " + SignedPermutation::from_trusted({p.begin(), p.end()}).str();
                  });
                  if (!bad.empty()) return bad;
                }
                return std::string();
              });
  };
  dominated("bid", "transposition", utop);
  dominated("td_lower", "transposition", utop);
  dominated("ptd_lower", "prefix_transposition", utop);
  dominated("srd_lower", "signed_reversal", stop);
  dominated("psrd_lower", "prefix_signed_reversal", stop);
  rec.check("sum |r_n(a,b)| <= 2(1-2^-n)/(n+2), n <= 30", "signed mean error terms", [] {
    for (int n = 1; n <= 30; ++n)
      if (r_abs_sum(n) > r_abs_sum_bound(n)) return "bound violated at n=" + std::to_string(n);
    return std::string();
  });
}

inline void verify_moments(Recorder& rec, int max_n, unsigned jobs) {
  const int top = std::min(max_n, 8);
  rec.check("closed-form moments equal census moments, n <= " + std::to_string(top), "mean and variance theorems", [&] {
    for (int n = 1; n <= top; ++n) {
      const CensusOptions opt{jobs, true};
      if (unsigned_moments(n) != moments_from_table(hultman_census(n, opt), factorial(n)))
        return "unsigned moments differ at n=" + std::to_string(n);
      if (signed_moments(n) != moments_from_table(signed_hultman_census(n, opt), group_order_exact(n, true)))
        return "signed moments differ at n=" + std::to_string(n);
    }
    return std::string();
  });
  rec.check("closed-form moments equal generating-function moments, n <= 20", "mean and variance theorems", [] {
    for (int n = 1; n <= 20; ++n) {
      if (unsigned_moments(n) != moments_from_gf(unsigned_gf(n))) return "unsigned differs at n=" + std::to_string(n);
      if (signed_moments(n) != moments_from_gf(signed_gf(n))) return "signed differs at n=" + std::to_string(n);
    }
    return std::string();
  });
  rec.check("alternating reciprocal binomial identity, n <= 50", "Sury identity", [] {
    for (int n = 0; n <= 50; ++n) {
      const auto s = sury_identity_check(n);
      if (s.lhs != s.rhs) return "sides differ at n=" + std::to_string(n);
    }
    return std::string();
  });
}

}  // namespace detail

inline const std::vector<std::string_view>& verify_suites() {
  static const std::vector<std::string_view> names = {"table1", "formulas", "lemmas", "bounds", "moments"};
  return names;
}

inline VerifyReport cmd_verify(std::string_view suite, int max_n, unsigned jobs = 1) {
  VerifyReport report{std::string(suite), {}};
  detail::Recorder rec(report);
  if (suite == "table1") detail::verify_table1(rec);
  else if (suite == "formulas") detail::verify_formulas(rec, max_n, jobs);
  else if (suite == "lemmas") detail::verify_lemmas(rec, max_n, jobs);
  else if (suite == "bounds") detail::verify_bounds(rec, max_n, jobs);
  else if (suite == "moments") detail::verify_moments(rec, max_n, jobs);
  else throw std::invalid_argument("unknown suite \"" + std::string(suite) + "\"");
  return report;
}

}  // namespace hultman::cli
