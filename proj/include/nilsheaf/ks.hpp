#pragma once

// Kempken-Spaltenstein reduction, sheet classes, shells, profiles and the
// inverse column-addition induction on partitions.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "nilsheaf/partition.hpp"

namespace nilsheaf {

enum class CaseKind { Case1, Case2 };

struct KSCase {
  CaseKind kind = CaseKind::Case1;
  int index = 0;
  bool operator==(const KSCase&) const = default;
};

struct AdmissibleSequence {
  std::vector<int> indices;
  bool maximal = false;
  bool operator==(const AdmissibleSequence&) const = default;
};

struct SheetClass {
  std::vector<int> gl_blocks;  // sorted ascending
  PairedPartition residual;
  int rank = 0;
  bool operator==(const SheetClass&) const = default;
};

struct Profile {
  int j = 0;
  int k = 0;
  PairedPartition mu;
};

struct ShellResult {
  PairedPartition shell;
  std::vector<int> sequence;
};

inline bool case1_applies(const PairedPartition& p, int i) { return p.at(i) >= p.at(i + 1) + 2; }

inline bool case2_applies(const PairedPartition& p, int i) {
  return in_delta(p, i) && p.at(i) == p.at(i + 1);
}

inline std::vector<KSCase> applicable_cases(const PairedPartition& p, int i) {
  if (i < 1 || i > p.n()) throw Error(ErrorCode::IndexOutOfRange, i, "index outside 1..n");
  std::vector<KSCase> out;
  if (case1_applies(p, i)) out.push_back({CaseKind::Case1, i});
  if (case2_applies(p, i)) out.push_back({CaseKind::Case2, i});
  return out;
}

inline std::optional<KSCase> applicable_case(const PairedPartition& p, int i) {
  if (i < 1 || i > p.n()) return std::nullopt;
  if (case1_applies(p, i)) return KSCase{CaseKind::Case1, i};
  if (case2_applies(p, i)) return KSCase{CaseKind::Case2, i};
  return std::nullopt;
}

inline PairedPartition apply_case(const PairedPartition& p, int i) {
  auto c = applicable_case(p, i);
  if (!c) throw Error(ErrorCode::NotApplicable, i, "neither reduction case applies at index " + std::to_string(i) + " of " + p.str());
  std::vector<int> q = p.parts();
  if (c->kind == CaseKind::Case1) {
    for (int t = 0; t < i; ++t) q[static_cast<std::size_t>(t)] -= 2;
  } else {
    for (int t = 0; t < i - 1; ++t) q[static_cast<std::size_t>(t)] -= 2;
    q[static_cast<std::size_t>(i - 1)] -= 1;
    q[static_cast<std::size_t>(i)] -= 1;
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  return validate(std::move(q), p.form());
}

inline PairedPartition apply_sequence(const PairedPartition& p, const std::vector<int>& seq) {
  PairedPartition cur = p;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (!applicable_case(cur, seq[k]))
      throw Error(ErrorCode::NotAdmissibleAt, static_cast<long>(k + 1),
                  "index " + std::to_string(seq[k]) + " is not admissible for " + cur.str());
    cur = apply_case(cur, seq[k]);
  }
  return cur;
}

// All maximal admissible sequences, every ordering, in lexicographic order.
inline std::vector<AdmissibleSequence> maximal_sequences(const PairedPartition& p) {
  std::map<PairedPartition, std::vector<std::vector<int>>> memo;
  auto rec = [&](auto&& self, const PairedPartition& q) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(q);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    for (int i = 1; i <= q.n(); ++i) {
      if (!applicable_case(q, i)) continue;
      for (const auto& tail : self(self, apply_case(q, i))) {
        std::vector<int> s{i};
        s.insert(s.end(), tail.begin(), tail.end());
        out.push_back(std::move(s));
      }
    }
    if (out.empty()) out.push_back({});
    return memo.emplace(q, std::move(out)).first->second;
  };
  std::vector<AdmissibleSequence> res;
  for (const auto& s : rec(rec, p)) res.push_back({s, true});
  return res;
}

// Memoized enumeration of sheet classes: for every intermediate state the set
// of (sorted index multiset, residual) pairs reachable by maximal sequences.
class SheetCache {
 public:
  using Entry = std::pair<std::vector<int>, PairedPartition>;

  const std::vector<Entry>& classes(const PairedPartition& p) {
    auto it = memo_.find(p);
    if (it != memo_.end()) return it->second;
    std::set<Entry> acc;
    for (int i = 1; i <= p.n(); ++i) {
      if (!applicable_case(p, i)) continue;
      PairedPartition q = apply_case(p, i);
      for (const auto& [blocks, res] : classes(q)) {
        std::vector<int> b = blocks;
        b.insert(std::upper_bound(b.begin(), b.end(), i), i);
        acc.emplace(std::move(b), res);
      }
    }
    if (acc.empty()) acc.emplace(std::vector<int>{}, p);
    return memo_.emplace(p, std::vector<Entry>(acc.begin(), acc.end())).first->second;
  }

  std::size_t size() const { return memo_.size(); }

 private:
  std::map<PairedPartition, std::vector<Entry>> memo_;
};

inline SheetCache& thread_sheet_cache() {
  thread_local SheetCache cache;
  return cache;
}

// Maximal sequences grouped by multiset. A multiset reaching two different
// residuals would contradict the reordering property and raises InvalidResult.
inline std::vector<SheetClass> sheet_classes(const PairedPartition& p, SheetCache& cache) {
  std::vector<SheetClass> out;
  for (const auto& [blocks, res] : cache.classes(p)) {
    if (!out.empty() && out.back().gl_blocks == blocks)
      throw Error(ErrorCode::InvalidResult, 0, "index multiset with two residuals for " + p.str());
    out.push_back({blocks, res, static_cast<int>(blocks.size())});
  }
  return out;
}

inline std::vector<SheetClass> sheet_classes(const PairedPartition& p) {
  return sheet_classes(p, thread_sheet_cache());
}

inline int r_invariant(const PairedPartition& p) {
  int r = 0;
  for (const auto& c : sheet_classes(p)) r = std::max(r, c.rank);
  return r;
}

namespace detail {

inline PairedPartition induce_step_unchecked(const PairedPartition& mu, int i) {
  std::vector<int> q = mu.parts();
  if (static_cast<int>(q.size()) < i + 1) q.resize(static_cast<std::size_t>(i + 1), 0);
  for (int t = 0; t < i; ++t) q[static_cast<std::size_t>(t)] += 2;
  auto trim = [](std::vector<int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  };
  std::vector<int> direct = trim(q);
  if (is_epsilon_partition(direct, mu.form())) return validate(std::move(direct), mu.form());
  q[static_cast<std::size_t>(i - 1)] -= 1;
  q[static_cast<std::size_t>(i)] += 1;
  std::vector<int> moved = trim(q);
  bool sorted = std::is_sorted(moved.rbegin(), moved.rend());
  if (!sorted || !is_epsilon_partition(moved, mu.form()))
    throw Error(ErrorCode::InvalidResult, i, "column addition at " + std::to_string(i) + " from " + mu.str());
  return validate(std::move(moved), mu.form());
}

}  // namespace detail

// Inverse of one reduction step: induction from gl_i x (smaller algebra).
// An orthogonal target of total size 2 is the torus so_2 and is refused.
inline PairedPartition induce_step(const PairedPartition& mu, int i) {
  if (i < 1) throw Error(ErrorCode::IndexOutOfRange, i, "block size must be positive");
  if (mu.form().is_orthogonal() && mu.N() + 2 * i == 2)
    throw Error(ErrorCode::DegenerateTarget, i, "target algebra would be so_2");
  return detail::induce_step_unchecked(mu, i);
}

// Folds the column-addition step over the blocks, largest first. Intermediate
// so_2 states are legitimate combinatorial states here, so only the final
// target is subject to the so_2 check.
inline PairedPartition induce_from_sheet(const SheetClass& s, FormType form) {
  PairedPartition cur = validate(s.residual.parts(), form);
  std::vector<int> blocks = s.gl_blocks;
  std::sort(blocks.rbegin(), blocks.rend());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (k + 1 == blocks.size()) cur = induce_step(cur, blocks[k]);
    else cur = detail::induce_step_unchecked(cur, blocks[k]);
  }
  return cur;
}

// Case 1 at each index, ascending, down to a gap of 2 when the index borders
// a 2-step of the input and the gap is even, otherwise down to a gap of 0 or
// 1; then Case 2 once at each good 2-step.
inline ShellResult shell(const PairedPartition& p) {
  ShellResult r{p, {}};
  PairedPartition& cur = r.shell;
  for (int i = 1; i <= p.n(); ++i) {
    int gap = p.at(i) - p.at(i + 1);
    bool keep_two = gap > 0 && even(gap) && (in_delta(p, i - 1) || in_delta(p, i + 1));
    int target = keep_two ? 2 : gap % 2;
    while (cur.at(i) - cur.at(i + 1) > target) {
      cur = apply_case(cur, i);
      r.sequence.push_back(i);
    }
  }
  for (const auto& t : two_steps(cur)) {
    if (t.quality != Quality::Good) continue;
    if (!case2_applies(cur, t.index)) continue;
    cur = apply_case(cur, t.index);
    r.sequence.push_back(t.index);
  }
  return r;
}

// Maximal runs j..k-1 of self-paired indices.
inline std::vector<Profile> profiles(const PairedPartition& p) {
  std::vector<Profile> out;
  const int n = p.n();
  for (int j = 1; j <= n;) {
    if (!p.fixed(j)) {
      ++j;
      continue;
    }
    int k = j;
    while (k <= n && p.fixed(k)) ++k;
    std::vector<int> mu;
    for (int i = j; i < k; ++i) mu.push_back(p.at(i) - p.at(k));
    FormType f = (k < n + 1) ? FormType::orthogonal() : p.form();
    out.push_back({j, k, validate(std::move(mu), f)});
    j = k;
  }
  return out;
}

inline int sheet_dimension(const SheetClass& s, const PairedPartition& p) {
  return dim_g(p.N(), p.form()) - centraliser_dimension(p).total + s.rank;
}

}  // namespace nilsheaf
