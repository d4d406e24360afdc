#pragma once

// Matrix model of a nilpotent e(lambda) in so_N / sp_N and its centraliser
// k_e, computed independently by exact nullspace and compared against the
// structured zeta basis.
//
// Basis of V: e^s w_i ordered by block i ascending, then power s ascending.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nilsheaf/exact.hpp"
#include "nilsheaf/partition.hpp"

namespace nilsheaf {

inline constexpr int kDefaultOracleMaxN = 24;

// NILSHEAF_MAX_N overrides the default size guard.
inline int oracle_max_n() {
  if (const char* env = std::getenv("NILSHEAF_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultOracleMaxN;
}

enum class Family { H, N0, N1Minus, N1Plus };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::H: return "H";
    case Family::N0: return "N0";
    case Family::N1Minus: return "N1-";
    case Family::N1Plus: return "N1+";
  }
  return "?";
}

struct BasisLabel {
  int block = 0;
  int power = 0;
};

struct BasisElement {
  int i = 0;
  int j = 0;
  int s = 0;
  Family family = Family::H;
  IntMatrix matrix;
};

struct CentraliserModel {
  PairedPartition p;
  std::vector<BasisLabel> basis_labels;
  std::vector<int> offset;  // offset[i] = position of w_i, 1-based blocks
  IntMatrix E;
  IntMatrix J;
  std::vector<BasisElement> zeta_basis;

  int dim() const { return E.rows(); }
  int pos(int i, int s) const { return offset[static_cast<std::size_t>(i)] + s; }
};

inline int varpi(int a, int b) { return a <= b ? 1 : -1; }

inline int epsilon_sign(const PairedPartition& p, int i, int j, int s) {
  int sign = ((p.at(j) - s) % 2 == 0) ? 1 : -1;
  return sign * varpi(i, p.prime(i)) * varpi(j, p.prime(j));
}

// xi_i^{j,s}: w_i -> e^s w_j, extended to commute with e.
inline IntMatrix xi_matrix(const CentraliserModel& m, int i, int j, int s) {
  IntMatrix x(m.dim(), m.dim());
  const int li = m.p.at(i), lj = m.p.at(j);
  if (s < 0) return x;
  for (int u = 0; u < li; ++u)
    if (u + s < lj) x(m.pos(j, u + s), m.pos(i, u)) = 1;
  return x;
}

// zeta_i^{j,s}; zero when s lies outside 0 <= s < min(lambda_i, lambda_j).
inline IntMatrix zeta_matrix(const CentraliserModel& m, int i, int j, int s) {
  const PairedPartition& p = m.p;
  if (i < 1 || j < 1 || i > p.n() || j > p.n() || s < 0 || s >= std::min(p.at(i), p.at(j)))
    return IntMatrix(m.dim(), m.dim());
  IntMatrix a = xi_matrix(m, i, j, p.at(j) - 1 - s);
  IntMatrix b = xi_matrix(m, p.prime(j), p.prime(i), p.at(i) - 1 - s);
  int eps = epsilon_sign(p, i, j, s);
  return eps > 0 ? a + b : a - b;
}

namespace detail {

inline void check_model(const CentraliserModel& m) {
  const int eps = m.p.epsilon();
  IntMatrix Jt = m.J.transpose();
  if (!(Jt == (eps > 0 ? m.J : Integer(-1) * m.J)))
    throw Error(ErrorCode::InternalError, 0, "form matrix has the wrong symmetry");
  if (!(m.E.transpose() * m.J + m.J * m.E).is_zero())
    throw Error(ErrorCode::InternalError, 0, "e is not skew-adjoint");
  ExactMatrix Jq(m.dim(), m.dim());
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) Jq(r, c) = m.J(r, c);
  if (rank(Jq) != m.dim()) throw Error(ErrorCode::InternalError, 0, "form matrix is degenerate");
}

}  // namespace detail

inline CentraliserModel build_model(const PairedPartition& p) {
  if (p.N() > oracle_max_n())
    throw Error(ErrorCode::OracleTooLarge, p.N(),
                "N=" + std::to_string(p.N()) + " exceeds the oracle size limit " + std::to_string(oracle_max_n()));
  CentraliserModel m;
  m.p = p;
  const int n = p.n(), N = p.N();
  m.offset.assign(static_cast<std::size_t>(n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    m.offset[static_cast<std::size_t>(i)] = static_cast<int>(m.basis_labels.size());
    for (int s = 0; s < p.at(i); ++s) m.basis_labels.push_back({i, s});
  }
  m.offset[static_cast<std::size_t>(n + 1)] = N;
  m.E = IntMatrix(N, N);
  m.J = IntMatrix(N, N);
  for (int i = 1; i <= n; ++i) {
    const int l = p.at(i);
    for (int s = 0; s + 1 < l; ++s) m.E(m.pos(i, s + 1), m.pos(i, s)) = 1;
    const int ip = p.prime(i);
    for (int a = 0; a < l; ++a) {
      const int b = l - 1 - a;
      int v;
      if (i <= ip) v = (a % 2 == 0) ? 1 : -1;
      else v = p.epsilon() * ((b % 2 == 0) ? 1 : -1);
      m.J(m.pos(i, a), m.pos(ip, b)) = v;
    }
  }
  detail::check_model(m);

  for (int i = 1; i <= n; ++i) {
    const int ip = p.prime(i), li = p.at(i);
    for (int s = 0; s < li; ++s) {
      if (i < ip || (i == ip && (li - s) % 2 == 0)) m.zeta_basis.push_back({i, i, s, Family::H, {}});
    }
    if (i != ip)
      for (int s = 0; s < li; ++s)
        if ((li - s) % 2 != 0) m.zeta_basis.push_back({i, ip, s, Family::N0, {}});
    for (int j = i + 1; j <= n; ++j) {
      if (j == ip) continue;
      for (int s = 0; s < p.at(j); ++s) {
        bool minus = (j == i + 1) && (s == p.at(j) - 1) && in_delta(p, i);
        m.zeta_basis.push_back({i, j, s, minus ? Family::N1Minus : Family::N1Plus, {}});
      }
    }
  }
  for (auto& b : m.zeta_basis) {
    b.matrix = zeta_matrix(m, b.i, b.j, b.s);
    if (b.matrix.is_zero()) throw Error(ErrorCode::InternalError, 0, "zeta basis element vanishes");
  }
  return m;
}

inline bool in_form_algebra(const CentraliserModel& m, const IntMatrix& X) {
  return (X.transpose() * m.J + m.J * X).is_zero();
}

inline bool commutes_with_e(const CentraliserModel& m, const IntMatrix& X) {
  return commutator(X, m.E).is_zero();
}

// Kernel of X -> ([X,E], X^T J + J X), as primitive integer matrices.
inline std::vector<IntMatrix> centraliser_basis(const CentraliserModel& m) {
  const int N = m.dim();
  const int V = N * N;
  ExactMatrix sys(2 * V, V);
  auto var = [N](int r, int c) { return r * N + c; };
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      const int row = r * N + c;
      for (int k = 0; k < N; ++k) {
        if (m.E(k, c) != 0) sys(row, var(r, k)) += Rational(m.E(k, c));
        if (m.E(r, k) != 0) sys(row, var(k, c)) -= Rational(m.E(r, k));
        if (m.J(k, c) != 0) sys(V + row, var(k, r)) += Rational(m.J(k, c));
        if (m.J(r, k) != 0) sys(V + row, var(k, c)) += Rational(m.J(r, k));
      }
    }
  std::vector<IntMatrix> out;
  for (const auto& v : nullspace(std::move(sys))) out.push_back(unflatten(primitive(v), N));
  return out;
}

// Echelon basis of [k_e, k_e] from all pairwise brackets of `basis`.
inline RowSpace derived_space(const std::vector<IntMatrix>& basis, int N) {
  RowSpace rs(static_cast<std::size_t>(N) * N);
  const int cap = static_cast<int>(basis.size());
  for (std::size_t a = 0; a < basis.size() && rs.rank() < cap; ++a)
    for (std::size_t b = a + 1; b < basis.size() && rs.rank() < cap; ++b) {
      IntMatrix c = commutator(basis[a], basis[b]);
      if (!c.is_zero()) rs.insert(flatten(c));
    }
  return rs;
}

inline int derived_dim(const CentraliserModel& m) {
  return derived_space(centraliser_basis(m), m.dim()).rank();
}

inline int abelianisation_dim(const CentraliserModel& m) {
  auto basis = centraliser_basis(m);
  return static_cast<int>(basis.size()) - derived_space(basis, m.dim()).rank();
}

// The zeta basis lies in k_e, spans the nullspace-computed centraliser, and
// every spanning element satisfies zeta_i^{j,s} = eps_{i,j,s} zeta_{j'}^{i',s}.
inline bool zeta_basis_check(const CentraliserModel& m, const std::vector<IntMatrix>& basis) {
  const int N = m.dim();
  RowSpace ref(static_cast<std::size_t>(N) * N);
  for (const auto& b : basis) ref.insert(flatten(b));
  RowSpace zs(static_cast<std::size_t>(N) * N);
  for (const auto& z : m.zeta_basis) {
    if (!in_form_algebra(m, z.matrix) || !commutes_with_e(m, z.matrix)) return false;
    if (!zs.insert(flatten(z.matrix))) return false;
    if (!ref.contains(flatten(z.matrix))) return false;
  }
  if (zs.rank() != ref.rank()) return false;
  const PairedPartition& p = m.p;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = 1; j <= p.n(); ++j)
      for (int s = 0; s < std::min(p.at(i), p.at(j)); ++s) {
        IntMatrix lhs = zeta_matrix(m, i, j, s);
        IntMatrix rhs = zeta_matrix(m, p.prime(j), p.prime(i), s);
        if (epsilon_sign(p, i, j, s) < 0) rhs = Integer(-1) * rhs;
        if (!(lhs == rhs)) return false;
      }
  return true;
}

inline bool zeta_basis_check(const CentraliserModel& m) { return zeta_basis_check(m, centraliser_basis(m)); }

// Generators of N0 + N1+ + H0+ + H1, built from the block data.
inline std::vector<IntMatrix> decomposition_generators(const CentraliserModel& m) {
  const PairedPartition& p = m.p;
  const int n = p.n();
  std::vector<IntMatrix> gens;
  for (const auto& b : m.zeta_basis) {
    bool h1 = b.family == Family::H && (p.at(b.i) - b.s) % 2 != 0;
    if (b.family == Family::N0 || b.family == Family::N1Plus || h1) gens.push_back(b.matrix);
  }
  for (int mm = 1; mm <= p.at(1) / 2; ++mm) {
    std::vector<int> a{1};
    for (int x = 2; x <= n + 1; ++x)
      if (p.at(x - 1) - p.at(x) >= 2 * mm) a.push_back(x);
    const std::size_t t = a.size();
    for (std::size_t jb = 0; jb < t; ++jb) {
      int lo = a[jb];
      int hi = (jb + 1 < t) ? a[jb + 1] : n + 1;
      std::vector<IntMatrix> cls;
      for (int i = lo; i < hi; ++i) {
        if (p.prime(i) < i) continue;
        if (p.at(i) < 2 * mm) continue;
        cls.push_back(zeta_matrix(m, i, i, p.at(i) - 2 * mm));
      }
      if (jb + 1 < t) {
        for (std::size_t c = 0; c + 1 < cls.size(); ++c) gens.push_back(cls[c] - cls[c + 1]);
      } else {
        for (auto& c : cls) gens.push_back(c);
      }
    }
  }
  return gens;
}

// The structured subspace is a direct sum of its generators and coincides
// with the bracket span of k_e.
inline bool derived_decomposition_check(const CentraliserModel& m, const RowSpace& derived) {
  const int N = m.dim();
  RowSpace S(static_cast<std::size_t>(N) * N);
  auto gens = decomposition_generators(m);
  for (const auto& g : gens)
    if (!S.insert(flatten(g))) return false;
  if (S.rank() != derived.rank()) return false;
  for (const auto& g : gens)
    if (!derived.contains(flatten(g))) return false;
  return true;
}

inline bool derived_decomposition_check(const CentraliserModel& m) {
  return derived_decomposition_check(m, derived_space(centraliser_basis(m), m.dim()));
}

// Commutators of all spanning zeta elements against the closed-form product.
inline long zeta_bracket_mismatches(const CentraliserModel& m) {
  const PairedPartition& p = m.p;
  const int n = p.n();
  struct Z {
    int i, j, s;
    IntMatrix mat;
  };
  std::vector<Z> span;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int s = 0; s < std::min(p.at(i), p.at(j)); ++s) span.push_back({i, j, s, zeta_matrix(m, i, j, s)});
  auto delta = [](int a, int b) { return a == b; };
  long bad = 0;
  for (const auto& x : span)
    for (const auto& y : span) {
      const int i = x.i, j = x.j, s = x.s, k = y.i, l = y.j, r = y.s;
      IntMatrix rhs(m.dim(), m.dim());
      const int si = r + s - (p.at(i) - 1);
      const int sj = r + s - (p.at(j) - 1);
      if (delta(i, l)) rhs = rhs + zeta_matrix(m, k, j, si);
      if (delta(j, k)) rhs = rhs - zeta_matrix(m, i, l, sj);
      IntMatrix tail(m.dim(), m.dim());
      if (delta(k, p.prime(i))) tail = tail + zeta_matrix(m, p.prime(l), j, si);
      if (delta(j, p.prime(l))) tail = tail - zeta_matrix(m, i, p.prime(k), sj);
      rhs = epsilon_sign(p, k, l, r) > 0 ? rhs + tail : rhs - tail;
      if (!(commutator(x.mat, y.mat) == rhs)) ++bad;
    }
  return bad;
}

inline bool zeta_bracket_check(const CentraliserModel& m) { return zeta_bracket_mismatches(m) == 0; }

// Diagonal involutions g_i negating Jordan block i, for self-paired i with
// lambda_i > lambda_{i+1}; orthogonal forms use the products g_i g_j.
inline std::vector<IntMatrix> gamma_generators(const CentraliserModel& m) {
  const PairedPartition& p = m.p;
  std::vector<int> I;
  for (int i = 1; i <= p.n(); ++i)
    if (p.fixed(i) && p.at(i) > p.at(i + 1)) I.push_back(i);
  auto g = [&](std::vector<int> blocks) {
    IntMatrix x = IntMatrix::identity(m.dim());
    for (int b : blocks)
      for (int s = 0; s < p.at(b); ++s) x(m.pos(b, s), m.pos(b, s)) = -1;
    if (!(x.transpose() * m.J * x == m.J))
      throw Error(ErrorCode::GeneratorNotInFormGroup, blocks.front(), "block sign change does not preserve the form");
    return x;
  };
  std::vector<IntMatrix> gens;
  if (p.form().is_symplectic()) {
    for (int i : I) gens.push_back(g({i}));
  } else {
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = a + 1; b < I.size(); ++b) gens.push_back(g({I[a], I[b]}));
  }
  return gens;
}

// Dimension of the subspace of k_e / [k_e,k_e] fixed by every generator.
// The complement to the derived algebra is picked greedily from `basis`.
inline int gamma_fixed_dim(const CentraliserModel& m, const std::vector<IntMatrix>& basis, const RowSpace& derived) {
  RowSpace ext = derived;
  std::vector<std::vector<Integer>> comp;
  for (const auto& b : basis) {
    auto v = flatten(b);
    if (ext.insert(v)) comp.push_back(std::move(v));
  }
  const int q = static_cast<int>(comp.size());
  auto gens = gamma_generators(m);
  if (q == 0) return 0;
  if (gens.empty()) return q;
  std::vector<std::vector<Integer>> full = derived.rows();
  const int d = static_cast<int>(full.size());
  for (const auto& c : comp) full.push_back(c);
  ExactMatrix stacked(q * static_cast<int>(gens.size()), q);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const IntMatrix& g = gens[gi];
    for (int c = 0; c < q; ++c) {
      IntMatrix y = g * unflatten(comp[static_cast<std::size_t>(c)], m.dim()) * g;
      auto x = coordinates(full, flatten(y));
      if (!x) throw Error(ErrorCode::InternalError, 0, "conjugate left the centraliser");
      for (int r = 0; r < q; ++r) {
        Rational v = (*x)[static_cast<std::size_t>(d + r)];
        if (r == c) v -= 1;
        stacked(static_cast<int>(gi) * q + r, c) = v;
      }
    }
  }
  return q - rank(std::move(stacked));
}

inline int gamma_fixed_dim(const CentraliserModel& m, unsigned shuffle_seed = 0) {
  auto basis = centraliser_basis(m);
  if (shuffle_seed != 0) {
    std::mt19937 rng(shuffle_seed);
    std::shuffle(basis.begin(), basis.end(), rng);
  }
  return gamma_fixed_dim(m, basis, derived_space(basis, m.dim()));
}

// Everything the oracle knows about one partition, sharing one nullspace and
// one bracket span.
struct OracleReport {
  int centraliser_dim = 0;
  int derived_dim = 0;
  int abelianisation_dim = 0;
  int gamma_fixed_dim = 0;
  bool decomposition_ok = false;
  bool zeta_basis_ok = false;
};

inline OracleReport run_oracle(const PairedPartition& p) {
  CentraliserModel m = build_model(p);
  auto basis = centraliser_basis(m);
  RowSpace derived = derived_space(basis, m.dim());
  OracleReport r;
  r.centraliser_dim = static_cast<int>(basis.size());
  r.derived_dim = derived.rank();
  r.abelianisation_dim = r.centraliser_dim - r.derived_dim;
  r.gamma_fixed_dim = gamma_fixed_dim(m, basis, derived);
  r.decomposition_ok = derived_decomposition_check(m, derived);
  r.zeta_basis_ok = zeta_basis_check(m, basis);
  return r;
}

}  // namespace nilsheaf
