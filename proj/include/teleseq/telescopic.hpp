#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"
#include "teleseq/monoid_oracle.hpp"
#include "teleseq/polynomial.hpp"
#include "teleseq/sequence.hpp"

namespace teleseq {

// A sequence G with c(G) = (c_2, ..., c_k) is telescopic when
// c_j * g_j lies in <g_1, ..., g_{j-1}> for every j >= 2. Telescopic
// sequences with gcd 1 generate the free numerical semigroups, for which
// Apery set, Frobenius number and genus all have closed forms.

struct TelescopyResult {
  bool telescopic;
  std::size_t witness;  // least violating index j, 0 when telescopic

  explicit operator bool() const { return telescopic; }
};

// Decides telescopicness by testing the defining memberships with the
// brute-force oracle. The z-characterization below is kept independent so
// the two can be checked against each other.
inline TelescopyResult is_telescopic_witness(const Sequence& g) {
  if (g.term(1) == 0) {
    throw Error("HeadZero",
                "telescopy test requires g_1 > 0; normalize the head first");
  }
  if (g.size() == 1) return {true, 0};
  GcdProfile p = gcd_profile(g);
  for (std::size_t j = 2; j <= g.size(); ++j) {
    Sequence prefix = slice(g, 0, j - 1);
    if (!contains(prefix, p.c_value(j) * g.term(j))) {
      return {false, j};
    }
  }
  return {true, 0};
}

inline bool is_telescopic(const Sequence& g) {
  return is_telescopic_witness(g).telescopic;
}

inline void require_telescopic(const Sequence& g) {
  TelescopyResult r = is_telescopic_witness(g);
  if (!r.telescopic) {
    throw Error("NotTelescopic",
                "sequence " + g.str() + " fails the telescopy condition at j=" +
                    std::to_string(r.witness));
  }
}

// The (d, c, z) triple with g_i = z_i * C_{i,k}: z_1 = d, every z_i is a
// multiple of d with gcd(z_i/d, c_i) = 1, and z_i is generated by the
// scaled-down prefix { z_j * C_{j,i-1} : j < i }. A sequence is telescopic
// exactly when such a triple exists.
struct ZDecomposition {
  Int d;
  std::vector<Int> c;  // c_2..c_k
  std::vector<Int> z;  // z_1..z_k, z_1 = d

  std::size_t size() const { return z.size(); }

  // C_{m,n} over the stored c-values, 1 <= m <= n <= k.
  Int c_product(std::size_t m, std::size_t n) const {
    Int prod = 1;
    for (std::size_t j = m + 1; j <= n; ++j) prod *= c[j - 2];
    return prod;
  }

  // Generators of the z-space membership condition for index i.
  Sequence membership_generators(std::size_t i) const {
    std::vector<Int> gens;
    for (std::size_t j = 1; j < i; ++j)
      gens.push_back(z[j - 1] * c_product(j, i - 1));
    return Sequence(std::move(gens));
  }

  Sequence to_sequence() const {
    std::vector<Int> terms;
    for (std::size_t i = 1; i <= size(); ++i)
      terms.push_back(z[i - 1] * c_product(i, size()));
    return Sequence(std::move(terms));
  }
};

inline ZDecomposition z_decompose(const Sequence& g) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  ZDecomposition zd;
  zd.d = p.gcd;
  zd.c = p.c;
  zd.z.reserve(g.size());
  for (std::size_t i = 1; i <= g.size(); ++i) {
    // C_{i,k} = d_i / d, so z_i = g_i * d / d_i
    Int cik = c_product(p, i, g.size());
    zd.z.push_back(exact_div(g.term(i), cik, "z_decompose"));
  }
  return zd;
}

// The unique expansion n = n_1 g_1 + sum_{j>=2} n_j g_j with 0 <= n_j < c_j;
// n_1 may be negative, and n is a member of <G> exactly when n_1 >= 0.
struct Representation {
  Int n1;
  std::vector<Int> coeffs;  // n_2..n_k
  Int value;
};

// Precomputed view of a telescopic sequence for repeated representation
// and membership queries: telescopy is verified and the modular inverses
// (z_j/d)^{-1} mod c_j are computed once at construction.
class TelescopicView {
 public:
  explicit TelescopicView(Sequence g)
      : g_(std::move(g)), profile_(gcd_profile(g_)), zd_(z_decompose(g_)) {
    inverses_.reserve(g_.size());
    inverses_.push_back(0);  // unused slot for index 1
    for (std::size_t j = 2; j <= g_.size(); ++j) {
      const Int& cj = profile_.c_value(j);
      Int yj = exact_div(zd_.z[j - 1], zd_.d, "TelescopicView");
      inverses_.push_back(cj == 1 ? Int(0) : mod_inverse(yj, cj));
    }
  }

  const Sequence& sequence() const { return g_; }
  const GcdProfile& profile() const { return profile_; }
  const ZDecomposition& decomposition() const { return zd_; }

  // Computes the expansion coefficients back to front: at index j the
  // value still to be represented is a multiple of d_j, and reducing it
  // modulo c_j * d_j pins n_j through the inverse of z_j/d mod c_j (which
  // exists because gcd(z_j/d, c_j) = 1). No search is involved.
  Representation represent(const Int& n) const {
    if (mod_floor(n, zd_.d) != 0) {
      throw Error("NotMultipleOfGcd",
                  n.str() + " is not a multiple of gcd(G) = " + zd_.d.str());
    }
    Representation rep;
    rep.value = n;
    rep.coeffs.assign(g_.size() - 1, Int(0));
    Int remaining = n;
    for (std::size_t j = g_.size(); j >= 2; --j) {
      const Int& cj = profile_.c_value(j);
      if (cj == 1) continue;  // n_j = 0 forced
      Int s = exact_div(remaining, profile_.d_value(j), "represent");
      Int nj = mod_floor(s * inverses_[j - 1], cj);
      rep.coeffs[j - 2] = nj;
      remaining -= nj * g_.term(j);
    }
    rep.n1 = exact_div(remaining, g_.term(1), "represent");
    // reconstruction must be exact
    Int check = rep.n1 * g_.term(1);
    for (std::size_t j = 2; j <= g_.size(); ++j)
      check += rep.coeffs[j - 2] * g_.term(j);
    if (check != n) {
      throw Error("InternalInvariant", "representation failed to reconstruct");
    }
    return rep;
  }

  // Membership through the representation; non-multiples of gcd(G) are
  // simply non-members.
  bool contains(const Int& n) const {
    if (mod_floor(n, zd_.d) != 0) return false;
    return represent(n).n1 >= 0;
  }

 private:
  Sequence g_;
  GcdProfile profile_;
  ZDecomposition zd_;
  std::vector<Int> inverses_;  // (z_j/d)^{-1} mod c_j at slot j-1
};

inline Representation represent(const Sequence& g, const Int& n) {
  return TelescopicView(g).represent(n);
}

inline bool contains_fast(const Sequence& g, const Int& n) {
  return TelescopicView(g).contains(n);
}

inline constexpr std::size_t kDefaultAperyCap = 1000000;

// Ap(S; g_1) = { sum_{j>=2} n_j g_j : 0 <= n_j < c_j } for gcd(G) = 1.
// The set has exactly g_1 elements, one per residue class mod g_1.
inline std::vector<Int> apery_closed(const Sequence& g,
                                     std::size_t size_cap = kDefaultAperyCap) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  if (p.gcd != 1) {
    throw Error("NonUnitGcd",
                "closed-form Apery set requires gcd(G) = 1, got " +
                    p.gcd.str());
  }
  if (g.term(1) > Int(size_cap)) {
    throw Error("SizeCapExceeded",
                "Apery set would have " + g.term(1).str() +
                    " elements, above the cap of " + std::to_string(size_cap));
  }
  std::vector<Int> values;
  values.push_back(0);
  for (std::size_t j = 2; j <= g.size(); ++j) {
    std::size_t cj = to_table_index(p.c_value(j));
    std::vector<Int> next;
    next.reserve(values.size() * cj);
    Int step = 0;
    for (std::size_t nj = 0; nj < cj; ++nj, step += g.term(j)) {
      for (const Int& v : values) next.push_back(v + step);
    }
    values = std::move(next);
  }
  std::sort(values.begin(), values.end());
  return values;
}

// F(S) = -g_1 + sum_{j=2}^{k} (c_j - 1) g_j for a free numerical semigroup.
inline Int frobenius_closed(const Sequence& g) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  if (p.gcd != 1) {
    throw Error("NonUnitGcd",
                "Frobenius closed form requires gcd(G) = 1, got " +
                    p.gcd.str());
  }
  Int f = -g.term(1);
  for (std::size_t j = 2; j <= g.size(); ++j)
    f += (p.c_value(j) - 1) * g.term(j);
  return f;
}

// Free numerical semigroups are symmetric: g(S) = (1 + F(S)) / 2.
inline Int genus_closed(const Sequence& g) {
  return exact_div(1 + frobenius_closed(g), 2, "genus_closed");
}

namespace detail {

// Nested sum over 0 <= n_j < c_j of f(sum n_j g_j), without materializing
// the value set.
inline Int box_sum(const Sequence& g, const GcdProfile& p,
                   const IntPolynomial& f, std::size_t j, const Int& partial) {
  if (j > g.size()) return f(partial);
  Int total = 0;
  Int step = 0;
  std::size_t cj = to_table_index(p.c_value(j));
  for (std::size_t nj = 0; nj < cj; ++nj, step += g.term(j)) {
    total += box_sum(g, p, f, j + 1, partial + step);
  }
  return total;
}

}  // namespace detail

// The explicit gap identity for free numerical semigroups:
//   sum_{n in H(S)} [f(n+g_1) - f(n)]
//     = sum_{0<=n_j<c_j} f(sum_j n_j g_j) - sum_{n=0}^{g_1-1} f(n).
// The left side walks the oracle's gap list, the right side is evaluated
// from the closed form; both are returned for comparison.
inline std::pair<Int, Int> gap_identity_check(const Sequence& g,
                                              const IntPolynomial& f) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  if (p.gcd != 1) {
    throw Error("NonUnitGcd", "gap identity requires gcd(G) = 1");
  }
  MonoidSummary s = gaps(g);
  Int lhs = 0;
  for (const Int& n : s.gaps) lhs += f(n + g.term(1)) - f(n);
  Int rhs = detail::box_sum(g, p, f, 2, Int(0));
  for (Int n = 0; n < g.term(1); ++n) rhs -= f(n);
  return {lhs, rhs};
}

}  // namespace teleseq
