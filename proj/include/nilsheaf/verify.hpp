#pragma once

// Exhaustive sweeps comparing the closed-form invariants with the KS
// enumeration and the matrix oracle.

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nilsheaf/centraliser.hpp"
#include "nilsheaf/ks.hpp"
#include "nilsheaf/partition.hpp"

namespace nilsheaf {

struct Failure {
  std::string suite;
  int epsilon = 0;
  std::string partition;
  std::string expected;
  std::string actual;
};

struct SuiteResult {
  std::string suite;
  long passed = 0;
  long failed = 0;
  std::vector<Failure> failures;
  bool ok() const { return failed == 0; }
};

struct VerifyOptions {
  int max_n = 10;
  unsigned threads = 0;  // 0: hardware concurrency
  // Deliberately corrupts s(lambda) by one in the formula suite; used to
  // check that the sweep reports counterexamples.
  bool inject_s_fault = false;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> s{"formula", "gamma", "derived", "zmax", "sheets", "roundtrip", "shell"};
  return s;
}

namespace detail {

inline std::vector<PairedPartition> sweep_domain(int min_n, int max_n) {
  std::vector<PairedPartition> out;
  for (int eps : {1, -1})
    for (int N = min_n; N <= max_n; ++N)
      for (auto& p : enumerate(N, FormType{eps})) out.push_back(std::move(p));
  return out;
}

// Evaluates f on every input across worker threads, keeping input order.
template <class T, class F>
auto parallel_map(const std::vector<T>& in, F f, unsigned threads) -> std::vector<decltype(f(in.front()))> {
  using R = decltype(f(in.front()));
  std::vector<R> out(in.size());
  if (in.empty()) return out;
  unsigned hw = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  hw = std::min<unsigned>(hw, static_cast<unsigned>(in.size()));
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < hw; ++w)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k; (k = next.fetch_add(1)) < in.size();) out[k] = f(in[k]);
    }));
  for (auto& w : workers) w.get();
  return out;
}

inline void record(SuiteResult& r, const PairedPartition& p, bool ok, const std::string& expected,
                   const std::string& actual) {
  if (ok) {
    ++r.passed;
    return;
  }
  ++r.failed;
  r.failures.push_back({r.suite, p.epsilon(), p.str(), expected, actual});
}

inline std::string str(int x) { return std::to_string(x); }
inline std::string str(bool x) { return x ? "true" : "false"; }

}  // namespace detail

// Per-partition oracle results, computed once and reused by the oracle suites.
struct OracleSweep {
  std::vector<PairedPartition> domain;
  std::vector<OracleReport> reports;
  std::vector<long> bracket_mismatches;  // -1 when not evaluated
};

inline OracleSweep oracle_sweep(int max_n, int bracket_max_n, unsigned threads) {
  OracleSweep s;
  s.domain = detail::sweep_domain(2, max_n);
  struct Out {
    OracleReport r;
    long mism;
  };
  auto outs = detail::parallel_map(
      s.domain,
      [bracket_max_n](const PairedPartition& p) {
        Out o{run_oracle(p), -1};
        if (p.N() <= bracket_max_n) o.mism = zeta_bracket_mismatches(build_model(p));
        return o;
      },
      threads);
  for (auto& o : outs) {
    s.reports.push_back(o.r);
    s.bracket_mismatches.push_back(o.mism);
  }
  return s;
}

inline SuiteResult suite_formula(const OracleSweep& s, bool inject_s_fault) {
  SuiteResult r{"formula", 0, 0, {}};
  for (std::size_t k = 0; k < s.domain.size(); ++k) {
    const auto& p = s.domain[k];
    const auto& o = s.reports[k];
    int c = c_invariant(p) + (inject_s_fault ? 1 : 0);
    detail::record(r, p, o.abelianisation_dim == c, "c=" + detail::str(c), "ab=" + detail::str(o.abelianisation_dim));
    int count = centraliser_dimension(p).total;
    detail::record(r, p, o.centraliser_dim == count && o.zeta_basis_ok, "dim=" + detail::str(count) + ",zeta=true",
                   "dim=" + detail::str(o.centraliser_dim) + ",zeta=" + detail::str(o.zeta_basis_ok));
  }
  return r;
}

inline SuiteResult suite_gamma(const OracleSweep& s) {
  SuiteResult r{"gamma", 0, 0, {}};
  for (std::size_t k = 0; k < s.domain.size(); ++k) {
    const auto& p = s.domain[k];
    int cg = c_gamma_invariant(p);
    detail::record(r, p, s.reports[k].gamma_fixed_dim == cg, "c_gamma=" + detail::str(cg),
                   "fixed=" + detail::str(s.reports[k].gamma_fixed_dim));
  }
  return r;
}

// Structured decomposition of the derived algebra, the product formula on
// zeta elements, and perfectness exactly for rigid partitions.
inline SuiteResult suite_derived(const OracleSweep& s) {
  SuiteResult r{"derived", 0, 0, {}};
  for (std::size_t k = 0; k < s.domain.size(); ++k) {
    const auto& p = s.domain[k];
    const auto& o = s.reports[k];
    detail::record(r, p, o.decomposition_ok, "decomposition=true", "decomposition=" + detail::str(o.decomposition_ok));
    bool perfect = o.derived_dim == o.centraliser_dim;
    detail::record(r, p, perfect == is_rigid(p), "perfect=" + detail::str(is_rigid(p)), "perfect=" + detail::str(perfect));
    if (s.bracket_mismatches[k] >= 0)
      detail::record(r, p, s.bracket_mismatches[k] == 0, "bracket_mismatches=0",
                     "bracket_mismatches=" + std::to_string(s.bracket_mismatches[k]));
  }
  return r;
}

inline SuiteResult suite_zmax(int max_n) {
  SuiteResult r{"zmax", 0, 0, {}};
  SheetCache cache;
  for (const auto& p : detail::sweep_domain(0, max_n)) {
    int best = 0;
    for (const auto& c : sheet_classes(p, cache)) best = std::max(best, c.rank);
    int z = z_invariant(p);
    detail::record(r, p, best == z, "z=" + detail::str(z), "max_length=" + detail::str(best));
    bool ns = is_non_singular(p);
    int c = c_invariant(p);
    detail::record(r, p, z <= c && ((z == c) == ns), "z<=c,(z==c)==" + detail::str(ns),
                   "z=" + detail::str(z) + ",c=" + detail::str(c));
  }
  return r;
}

inline SuiteResult suite_sheets(int max_n) {
  SuiteResult r{"sheets", 0, 0, {}};
  SheetCache cache;
  for (const auto& p : detail::sweep_domain(0, max_n)) {
    auto cls = sheet_classes(p, cache);
    bool single = cls.size() == 1;
    detail::record(r, p, single == is_non_singular(p), "single_sheet=" + detail::str(is_non_singular(p)),
                   "sheets=" + std::to_string(cls.size()));
  }
  return r;
}

// Reduction followed by induction is the identity. The one refused target is
// the torus so_2, reached only from (1,1) in the orthogonal case.
inline SuiteResult suite_roundtrip(int max_n) {
  SuiteResult r{"roundtrip", 0, 0, {}};
  SheetCache cache;
  for (const auto& p : detail::sweep_domain(0, max_n)) {
    for (int i = 1; i <= p.n(); ++i) {
      if (!applicable_case(p, i)) continue;
      PairedPartition mu = apply_case(p, i);
      bool degenerate_expected = p.form().is_orthogonal() && p.N() == 2;
      std::string got;
      bool ok;
      try {
        PairedPartition back = induce_step(mu, i);
        got = back.str();
        ok = !degenerate_expected && back == p;
      } catch (const Error& e) {
        got = to_string(e.code());
        ok = degenerate_expected && e.code() == ErrorCode::DegenerateTarget;
      }
      detail::record(r, p, ok, degenerate_expected ? "DegenerateTarget" : p.str(), "i=" + std::to_string(i) + ":" + got);
    }
    for (const auto& c : sheet_classes(p, cache)) {
      std::string got;
      bool ok;
      try {
        PairedPartition back = induce_from_sheet(c, p.form());
        got = back.str();
        ok = back == p;
      } catch (const Error& e) {
        got = to_string(e.code());
        ok = p.form().is_orthogonal() && p.N() == 2 && e.code() == ErrorCode::DegenerateTarget;
      }
      std::string blocks;
      for (int b : c.gl_blocks) blocks += (blocks.empty() ? "" : ",") + std::to_string(b);
      detail::record(r, p, ok, p.str(), "{" + blocks + "}:" + got);
    }
  }
  return r;
}

inline SuiteResult suite_shell(int max_n) {
  SuiteResult r{"shell", 0, 0, {}};
  for (const auto& p : detail::sweep_domain(0, max_n)) {
    auto sh = shell(p);
    if (!(sh.shell == p)) continue;
    int sum = 0;
    for (const auto& pr : profiles(p)) sum += z_invariant(pr.mu);
    int z = z_invariant(p);
    detail::record(r, p, sum == z, "z=" + detail::str(z), "profile_sum=" + detail::str(sum));
  }
  return r;
}

// Runs the named suites ("all" expands to every suite). Oracle suites share
// one sweep. Unknown names are rejected by the caller.
inline std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, const VerifyOptions& opt) {
  std::vector<std::string> want;
  for (const auto& n : names) {
    if (n == "all") want.insert(want.end(), suite_names().begin(), suite_names().end());
    else want.push_back(n);
  }
  bool need_oracle = false;
  for (const auto& n : want) need_oracle |= (n == "formula" || n == "gamma" || n == "derived");
  OracleSweep sweep;
  if (need_oracle) sweep = oracle_sweep(opt.max_n, std::min(opt.max_n, 8), opt.threads);
  std::vector<SuiteResult> out;
  for (const auto& n : want) {
    if (n == "formula") out.push_back(suite_formula(sweep, opt.inject_s_fault));
    else if (n == "gamma") out.push_back(suite_gamma(sweep));
    else if (n == "derived") out.push_back(suite_derived(sweep));
    else if (n == "zmax") out.push_back(suite_zmax(opt.max_n));
    else if (n == "sheets") out.push_back(suite_sheets(opt.max_n));
    else if (n == "roundtrip") out.push_back(suite_roundtrip(opt.max_n));
    else if (n == "shell") out.push_back(suite_shell(opt.max_n));
  }
  return out;
}

}  // namespace nilsheaf
