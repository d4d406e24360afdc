#pragma once

// Epsilon-partitions and their closed-form invariants.
//
// Indices exposed by this header are 1-based, matching the usual notation
// lambda_1 >= ... >= lambda_n. Reads outside 1..n return 0.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "nilsheaf/error.hpp"

namespace nilsheaf {

// +1 for the orthogonal form (so_N), -1 for the symplectic form (sp_N).
struct FormType {
  int epsilon = 1;

  static FormType orthogonal() { return {1}; }
  static FormType symplectic() { return {-1}; }
  bool is_orthogonal() const { return epsilon == 1; }
  bool is_symplectic() const { return epsilon == -1; }
  auto operator<=>(const FormType&) const = default;
};

// Type letter of the ambient algebra: B (so, N odd), D (so, N even), C (sp).
inline char type_letter(FormType f, int N) {
  if (f.is_symplectic()) return 'C';
  return (N % 2) ? 'B' : 'D';
}

inline int dim_g(int N, FormType f) {
  return f.is_orthogonal() ? N * (N - 1) / 2 : N * (N + 1) / 2;
}

struct Partition {
  std::vector<int> parts;
  FormType form;

  int n() const { return static_cast<int>(parts.size()); }
  int N() const {
    int t = 0;
    for (int p : parts) t += p;
    return t;
  }
  int at(int i) const { return (i >= 1 && i <= n()) ? parts[static_cast<std::size_t>(i - 1)] : 0; }
  auto operator<=>(const Partition&) const = default;
};

inline std::string to_string(const std::vector<int>& parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < parts.size(); ++k) os << (k ? "," : "") << parts[k];
  os << ')';
  return os.str();
}

// i is self-paired exactly when epsilon * (-1)^{lambda_i} = -1.
inline bool self_paired_size(int part, FormType f) {
  int sign = (part % 2 == 0) ? 1 : -1;
  return f.epsilon * sign == -1;
}

class PairedPartition;
inline PairedPartition validate(std::vector<int> parts, FormType form);

class PairedPartition {
 public:
  PairedPartition() = default;

  const Partition& base() const { return base_; }
  const std::vector<int>& parts() const { return base_.parts; }
  FormType form() const { return base_.form; }
  int epsilon() const { return base_.form.epsilon; }
  int n() const { return base_.n(); }
  int N() const { return base_.N(); }
  int at(int i) const { return base_.at(i); }

  // i' for 1 <= i <= n; indices outside that range are their own partner.
  int prime(int i) const {
    if (i < 1 || i > n()) return i;
    return inv_[static_cast<std::size_t>(i - 1)];
  }
  bool fixed(int i) const { return prime(i) == i; }
  const std::vector<int>& involution() const { return inv_; }

  auto operator<=>(const PairedPartition& o) const { return base_ <=> o.base_; }
  bool operator==(const PairedPartition& o) const { return base_ == o.base_; }

  std::string str() const { return to_string(base_.parts); }

 private:
  friend PairedPartition validate(std::vector<int> parts, FormType form);
  Partition base_;
  std::vector<int> inv_;
};

inline bool is_epsilon_partition(const std::vector<int>& parts, FormType form) {
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t e = k;
    while (e < parts.size() && parts[e] == parts[k]) ++e;
    if (!self_paired_size(parts[k], form) && (e - k) % 2 != 0) return false;
    k = e;
  }
  return true;
}

// Checks membership in P_eps(N) and attaches the canonical involution:
// non-self-paired parts are paired (i,i+1), (i+2,i+3), ... inside each block
// of equal parts.
inline PairedPartition validate(std::vector<int> parts, FormType form) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0)
      throw Error(ErrorCode::NotSorted, static_cast<long>(k + 1), "parts must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw Error(ErrorCode::NotSorted, static_cast<long>(k + 1), "parts must be non-increasing");
  }
  PairedPartition p;
  p.inv_.assign(parts.size(), 0);
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t e = k;
    while (e < parts.size() && parts[e] == parts[k]) ++e;
    if (self_paired_size(parts[k], form)) {
      for (std::size_t t = k; t < e; ++t) p.inv_[t] = static_cast<int>(t + 1);
    } else {
      if ((e - k) % 2 != 0) {
        std::ostringstream os;
        os << "part " << parts[k] << " has odd multiplicity " << (e - k) << " but must be paired ("
           << (form.is_orthogonal() ? "even parts in so_N" : "odd parts in sp_N") << ")";
        throw Error(ErrorCode::NotAnEpsilonPartition, parts[k], os.str());
      }
      for (std::size_t t = k; t < e; t += 2) {
        p.inv_[t] = static_cast<int>(t + 2);
        p.inv_[t + 1] = static_cast<int>(t + 1);
      }
    }
    k = e;
  }
  p.base_.parts = std::move(parts);
  p.base_.form = form;
  return p;
}

enum class Quality { Good, Bad };

inline const char* to_string(Quality q) { return q == Quality::Good ? "good" : "bad"; }

struct TwoStep {
  int index = 0;
  Quality quality = Quality::Good;
  bool operator==(const TwoStep&) const = default;
};

struct TwoCluster {
  std::vector<int> indices;
  Quality quality = Quality::Good;
  bool operator==(const TwoCluster&) const = default;
};

inline bool even(int x) { return x % 2 == 0; }

inline bool is_two_step(const PairedPartition& p, int i) {
  if (i < 1 || i >= p.n()) return false;
  if (!p.fixed(i) || !p.fixed(i + 1)) return false;
  return p.at(i - 1) != p.at(i) && p.at(i) >= p.at(i + 1) && p.at(i + 1) != p.at(i + 2);
}

inline std::vector<TwoStep> two_steps(const PairedPartition& p) {
  std::vector<TwoStep> out;
  for (int i = 1; i < p.n(); ++i) {
    if (!is_two_step(p, i)) continue;
    bool bad = (i > 1 && even(p.at(i - 1) - p.at(i))) || even(p.at(i + 1) - p.at(i + 2));
    out.push_back({i, bad ? Quality::Bad : Quality::Good});
  }
  return out;
}

inline bool in_delta(const PairedPartition& p, int i) { return is_two_step(p, i); }

inline std::vector<TwoStep> bad_two_steps(const PairedPartition& p) {
  std::vector<TwoStep> out;
  for (const auto& t : two_steps(p))
    if (t.quality == Quality::Bad) out.push_back(t);
  return out;
}

inline int s_invariant(const Partition& p) {
  int s = 0;
  for (int i = 1; i <= p.n(); ++i) s += (p.at(i) - p.at(i + 1)) / 2;
  return s;
}
inline int s_invariant(const PairedPartition& p) { return s_invariant(p.base()); }

// Maximal chains of 2-steps spaced by 2, of length at least 2. Proper
// sub-chains always have an even gap at the cut, so only maximal chains can
// be good.
inline std::vector<TwoCluster> two_clusters(const PairedPartition& p) {
  std::vector<TwoCluster> out;
  auto steps = two_steps(p);
  std::vector<bool> is_step(static_cast<std::size_t>(p.n() + 3), false);
  for (const auto& t : steps) is_step[static_cast<std::size_t>(t.index)] = true;
  for (const auto& t : steps) {
    int i = t.index;
    if (i >= 3 && is_step[static_cast<std::size_t>(i - 2)]) continue;
    TwoCluster c;
    for (int k = i; k < p.n() && is_step[static_cast<std::size_t>(k)]; k += 2) c.indices.push_back(k);
    if (c.indices.size() < 2) continue;
    int first = c.indices.front(), last = c.indices.back();
    bool bad = (first > 1 && even(p.at(first - 1) - p.at(first))) || even(p.at(last + 1) - p.at(last + 2));
    c.quality = bad ? Quality::Bad : Quality::Good;
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<TwoCluster> good_clusters(const PairedPartition& p) {
  std::vector<TwoCluster> out;
  for (auto& c : two_clusters(p))
    if (c.quality == Quality::Good) out.push_back(std::move(c));
  return out;
}

inline int c_invariant(const PairedPartition& p) {
  return s_invariant(p) + static_cast<int>(two_steps(p).size());
}

inline int z_invariant(const PairedPartition& p) {
  int delta = static_cast<int>(two_steps(p).size());
  int bad = static_cast<int>(bad_two_steps(p).size());
  int sigma = static_cast<int>(good_clusters(p).size());
  return s_invariant(p) + delta - (bad - sigma);
}

struct Flags {
  bool rigid = false;
  bool almost_rigid = false;
  bool exceptional = false;
  bool non_singular = false;
  bool very_even = false;
  bool operator==(const Flags&) const = default;
};

inline bool is_almost_rigid(const Partition& p) {
  for (int i = 1; i <= p.n(); ++i) {
    int g = p.at(i) - p.at(i + 1);
    if (g != 0 && g != 1) return false;
  }
  return true;
}

inline bool is_rigid(const PairedPartition& p) {
  return is_almost_rigid(p.base()) && two_steps(p).empty();
}

// Orthogonal, exactly two odd parts, sitting at adjacent indices k, k+1.
inline bool is_exceptional(const PairedPartition& p) {
  if (!p.form().is_orthogonal()) return false;
  std::vector<int> odd;
  for (int i = 1; i <= p.n(); ++i)
    if (!even(p.at(i))) odd.push_back(i);
  return odd.size() == 2 && odd[1] == odd[0] + 1;
}

inline bool is_non_singular(const PairedPartition& p) { return bad_two_steps(p).empty(); }

// Requires at least one part: the empty partition is not called very even.
inline bool is_very_even(const PairedPartition& p) {
  if (!p.form().is_orthogonal() || p.n() == 0) return false;
  return std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return even(x); });
}

inline Flags classify(const PairedPartition& p) {
  Flags f;
  f.almost_rigid = is_almost_rigid(p.base());
  f.rigid = f.almost_rigid && two_steps(p).empty();
  f.exceptional = is_exceptional(p);
  f.non_singular = is_non_singular(p);
  f.very_even = is_very_even(p);
  return f;
}

inline int c_gamma_invariant(const PairedPartition& p) {
  return s_invariant(p) + (is_exceptional(p) ? 1 : 0);
}

struct CentraliserCount {
  int h = 0;
  int n0 = 0;
  int n1 = 0;
  int total = 0;
  bool operator==(const CentraliserCount&) const = default;
};

inline CentraliserCount centraliser_dimension(const PairedPartition& p) {
  CentraliserCount c;
  const int n = p.n();
  for (int i = 1; i <= n; ++i) {
    int l = p.at(i);
    int ip = p.prime(i);
    if (i < ip) c.h += l;
    if (i == ip) c.h += l / 2;
    if (i != ip) c.n0 += (l + 1) / 2;
    for (int j = i + 1; j <= n; ++j)
      if (j != ip) c.n1 += p.at(j);
  }
  c.total = c.h + c.n0 + c.n1;
  return c;
}

inline std::vector<int> kappa(const Partition& p) {
  std::vector<int> k;
  for (int i = 1; i <= p.n(); ++i) k.push_back((p.at(i) - p.at(i + 1)) % 2);
  while (!k.empty() && k.back() == 0) k.pop_back();
  return k;
}

// Calls f on every partition of N, lexicographically descending.
inline void for_each_partition(int N, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int maxpart) {
    if (remaining == 0) {
      f(cur);
      return;
    }
    for (int k = std::min(remaining, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(N, N);
}

inline std::vector<PairedPartition> enumerate(int N, FormType form) {
  std::vector<PairedPartition> out;
  if (N < 0) return out;
  for_each_partition(N, [&](const std::vector<int>& parts) {
    if (is_epsilon_partition(parts, form)) out.push_back(validate(parts, form));
  });
  return out;
}

}  // namespace nilsheaf
