#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"
#include "teleseq/polynomial.hpp"
#include "teleseq/sequence.hpp"

namespace teleseq {

// Brute-force ground truth for the submonoid <G> of the non-negative
// integers generated by the terms of G. Everything here is deliberately
// simple dynamic programming over small tables; the closed-form results in
// the telescopic module are tested against these oracles, never the other
// way round.

struct MonoidSummary {
  std::vector<Int> gaps;  // sorted ascending
  Int frobenius;          // -1 when there are no gaps
  Int genus;              // = gaps.size()
  std::size_t embedding_dimension;
};

namespace detail {

// reach[x] = true iff x is an N_0-linear combination of `gens`
// (gcd of gens assumed 1 by callers that rely on eventual density).
inline std::vector<bool> reach_table(const std::vector<std::size_t>& gens,
                                     std::size_t hi) {
  std::vector<bool> reach(hi + 1, false);
  reach[0] = true;
  for (std::size_t x = 1; x <= hi; ++x) {
    for (std::size_t g : gens) {
      if (g <= x && reach[x - g]) {
        reach[x] = true;
        break;
      }
    }
  }
  return reach;
}

// Distinct positive terms of G/d as table indices, smallest first.
inline std::vector<std::size_t> scaled_generators(const Sequence& g,
                                                  const Int& d) {
  std::vector<std::size_t> gens;
  for (const Int& t : g.terms()) {
    if (t > 0) gens.push_back(to_table_index(t / d));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

}  // namespace detail

// Membership n in <G>, by DP over 0..n/gcd(G).
inline bool contains(const Sequence& g, const Int& n) {
  if (n < 0) return false;
  if (n == 0) return true;
  Int d = g.gcd();
  if (d == 0) return false;  // <G> = {0}
  if (n % d != 0) return false;
  Int target = n / d;
  std::size_t hi = to_table_index(target);
  auto gens = detail::scaled_generators(g, d);
  // cheap exits: a generator divides the target, or target below them all
  for (std::size_t gen : gens) {
    if (hi % gen == 0) return true;
  }
  if (hi < gens.front()) return false;
  return detail::reach_table(gens, hi)[hi];
}

// Keeps exactly those terms that are not generated by the other kept terms
// (zeros dropped, duplicates collapsed to their first occurrence); the
// relative order of survivors is preserved. The all-zero sequence
// degenerates to (0).
inline Sequence minimal_generators(const Sequence& g) {
  std::vector<Int> distinct;
  for (const Int& t : g.terms()) {
    if (t == 0) continue;
    if (std::find(distinct.begin(), distinct.end(), t) == distinct.end())
      distinct.push_back(t);
  }
  if (distinct.empty()) return Sequence::single(0);
  std::vector<Int> kept;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    std::vector<Int> others;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (j != i) others.push_back(distinct[j]);
    }
    // a term is redundant exactly when the remaining distinct terms
    // generate it; for submonoids of N_0 this test is order-free
    if (others.empty() || !contains(Sequence(others), distinct[i])) {
      kept.push_back(distinct[i]);
    }
  }
  return Sequence(std::move(kept));
}

// Enumerates the complement of the numerical semigroup <G> (gcd(G) must
// be 1). The scan stops once `min positive generator` consecutive members
// have been seen: from there on every integer is a member.
inline MonoidSummary gaps(const Sequence& g) {
  if (g.gcd() != 1) {
    throw Error("InfiniteComplement",
                "gap enumeration requires gcd(G) = 1, got gcd = " +
                    g.gcd().str());
  }
  auto gens = detail::scaled_generators(g, 1);
  std::size_t m_min = gens.front();
  std::vector<bool> reach;
  reach.push_back(true);  // 0 is a member
  std::vector<Int> gap_list;
  std::size_t run = 1;  // consecutive members ending at the scan position
  std::size_t x = 0;
  while (run < m_min) {
    ++x;
    if (x > kOracleTableCap) {
      throw Error("OracleCapExceeded", "gap scan exceeded the table cap");
    }
    bool member = false;
    for (std::size_t gen : gens) {
      if (gen <= x && reach[x - gen]) {
        member = true;
        break;
      }
    }
    reach.push_back(member);
    if (member) {
      ++run;
    } else {
      run = 0;
      gap_list.emplace_back(x);
    }
  }
  MonoidSummary s;
  s.genus = Int(gap_list.size());
  s.frobenius = gap_list.empty() ? Int(-1) : gap_list.back();
  s.gaps = std::move(gap_list);
  s.embedding_dimension = minimal_generators(g).size();
  return s;
}

// Apery set of <G> relative to t: for each residue r mod t, the least
// member congruent to r. Returned as a vector indexed by residue.
inline std::vector<Int> apery_bf(const Sequence& g, const Int& t) {
  if (g.gcd() != 1) {
    throw Error("InfiniteComplement",
                "Apery sets are defined here only for gcd(G) = 1");
  }
  if (t == 0 || !contains(g, t)) {
    throw Error("NotAMember",
                "t = " + t.str() + " must be a nonzero member of <G>");
  }
  MonoidSummary s = gaps(g);
  std::size_t t_idx = to_table_index(t);
  // every residue class has a member in (F, F + t]
  std::size_t hi = to_table_index(s.frobenius + t);
  auto gens = detail::scaled_generators(g, 1);
  std::vector<bool> reach = detail::reach_table(gens, hi);
  std::vector<Int> out(t_idx, Int(-1));
  std::size_t found = 0;
  for (std::size_t x = 0; x <= hi && found < t_idx; ++x) {
    if (!reach[x]) continue;
    std::size_t r = x % t_idx;
    if (out[r] < 0) {
      out[r] = Int(x);
      ++found;
    }
  }
  return out;
}

inline Int frobenius_from_apery(const std::vector<Int>& apery, const Int& t) {
  if (t <= 0 || Int(apery.size()) != t) {
    throw Error("SizeMismatch", "Apery map must have exactly t entries");
  }
  Int mx = apery[0];
  for (const Int& v : apery) mx = std::max(mx, v);
  return mx - t;
}

// g(S) = (1 - t)/2 + (1/t) * sum(Apery values), evaluated exactly:
// t(1-t)/2 is an integer and the overall expression is an integer for any
// residue-consistent Apery map.
inline Int genus_from_apery(const std::vector<Int>& apery, const Int& t) {
  if (t <= 0 || Int(apery.size()) != t) {
    throw Error("SizeMismatch", "Apery map must have exactly t entries");
  }
  Int sum = 0;
  for (const Int& v : apery) sum += v;
  Int num = t * (1 - t) / 2 + sum;
  return exact_div(num, t, "genus_from_apery");
}

// True iff no single term is generated by the others; single-term removal
// suffices because the minimal subsequence is unique.
inline bool is_minimal_bf(const Sequence& g) {
  if (g.size() == 1) return g.term(1) != 0;
  for (std::size_t n = 1; n <= g.size(); ++n) {
    std::vector<Int> rest;
    for (std::size_t i = 1; i <= g.size(); ++i) {
      if (i != n) rest.push_back(g.term(i));
    }
    if (contains(Sequence(std::move(rest)), g.term(n))) return false;
  }
  return true;
}

inline bool monoids_equal(const Sequence& g, const Sequence& h) {
  Int dg = g.gcd(), dh = h.gcd();
  if (dg != dh) return false;
  if (dg == 0) return true;  // both are {0}
  Sequence gs = divide(g, dg);
  Sequence hs = divide(h, dh);
  // equal numerical semigroups have equal gap sets, and comparing gap
  // lists checks membership on all of 0..max(F_1, F_2)+1
  return gaps(gs).gaps == gaps(hs).gaps;
}

// Both sides of the Apery-set summation identity
//   sum_{n in H(S)} [f(n+t) - f(n)]
//     = sum_{n in Ap(S;t)} f(n) - sum_{n=0}^{t-1} f(n),
// computed independently so the test suite can compare them.
inline std::pair<Int, Int> tuenter_check(const Sequence& g, const Int& t,
                                         const IntPolynomial& f) {
  MonoidSummary s = gaps(g);
  std::vector<Int> ap = apery_bf(g, t);
  Int lhs = 0;
  for (const Int& n : s.gaps) lhs += f(n + t) - f(n);
  Int rhs = 0;
  for (const Int& v : ap) rhs += f(v);
  for (Int n = 0; n < t; ++n) rhs -= f(n);
  return {lhs, rhs};
}

}  // namespace teleseq
