#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"
#include "teleseq/monoid_oracle.hpp"
#include "teleseq/sequence.hpp"
#include "teleseq/telescopic.hpp"
#include "teleseq/transforms.hpp"

namespace teleseq {

// A telescopic sequence can fail to be minimal in exactly two ways:
// Case 1, g_n is generated by the earlier terms (equivalently c_n = 1);
// Case 2, g_n = c_m * g_m for some later index m. Each case has a removal
// that keeps the sequence telescopic and the generated submonoid unchanged,
// so iterating them reduces any telescopic sequence to a minimal one.

struct RedundancyWitness {
  enum class Case { One, Two };
  Case which;
  std::size_t n;                 // the redundant index
  std::optional<std::size_t> m;  // Case 2 only: g_n = c_m * g_m, m > n
};

// Scans for a value match g_i = c_j * g_j (j >= max(i, 2)); the sequence is
// minimal exactly when no match exists. Matches with j < i are subsumed by
// the diagonal match at i, so they are never reported. Ties break to the
// smallest i, then the smallest j.
inline std::optional<RedundancyWitness> find_redundancy(const Sequence& g) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  for (std::size_t i = 1; i <= g.size(); ++i) {
    for (std::size_t j = std::max<std::size_t>(i, 2); j <= g.size(); ++j) {
      if (g.term(i) != p.c_value(j) * g.term(j)) continue;
      if (j == i) {
        // diagonal match forces c_i = 1, hence g_i in <G_{i-1}>
        return RedundancyWitness{RedundancyWitness::Case::One, i,
                                 std::nullopt};
      }
      return RedundancyWitness{RedundancyWitness::Case::Two, i, j};
    }
  }
  return std::nullopt;
}

inline bool is_minimal_telescopic(const Sequence& g) {
  return !find_redundancy(g).has_value();
}

// Case 1 removal: when g_n is generated by the earlier terms, c_n = 1 and
// plain deletion keeps the sequence telescopic.
inline Sequence remove_case1(const Sequence& g, std::size_t n) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  if (n < 2 || n > g.size() || p.c_value(n) != 1 ||
      !contains(slice(g, 0, n - 1), g.term(n))) {
    throw Error("PreconditionViolated",
                "Case 1 removal needs c_n = 1 and g_n generated by the "
                "earlier terms");
  }
  return pi(g, n);
}

// Case 2 removal: when g_n = c_m * g_m with m > n, swap positions n and m,
// then delete position m. For n = 1 the head is first moved aside with the
// transposition (1 2); if that leaves a zero in front, the head is
// normalized again so the result stays workable.
inline Sequence remove_case2(const Sequence& g, std::size_t n, std::size_t m) {
  require_telescopic(g);
  GcdProfile p = gcd_profile(g);
  if (n < 1 || m <= n || m > g.size() ||
      g.term(n) != p.c_value(m) * g.term(m)) {
    throw Error("PreconditionViolated",
                "Case 2 removal needs m > n and g_n = c_m * g_m");
  }
  Sequence work = g;
  std::size_t from = n;
  if (n == 1) {
    work = apply_permutation(
        g, Permutation::transposition(g.size(), 1, 2));
    from = 2;
  }
  Sequence out =
      from == m
          ? pi(work, m)
          : pi(apply_permutation(
                   work, Permutation::transposition(work.size(), from, m)),
               m);
  if (out.term(1) == 0) out = normalize_head(out);
  return out;
}

struct ReductionStep {
  Sequence before;
  RedundancyWitness witness;
  Sequence after;
};

using ReductionTrace = std::vector<ReductionStep>;

// Repeatedly removes the smallest redundancy witness until none is left.
// Terminates in fewer than k steps since every removal shortens the
// sequence; the result is telescopic, minimal, and generates <G>.
inline std::pair<Sequence, ReductionTrace> minimize_telescopic(
    const Sequence& g) {
  require_telescopic(g);
  ReductionTrace trace;
  Sequence cur = g;
  while (auto witness = find_redundancy(cur)) {
    Sequence next = witness->which == RedundancyWitness::Case::One
                        ? remove_case1(cur, witness->n)
                        : remove_case2(cur, witness->n, *witness->m);
    trace.push_back(ReductionStep{cur, *witness, next});
    cur = std::move(next);
  }
  return {std::move(cur), std::move(trace)};
}

// Reorders H (which must generate the same submonoid as the telescopic G)
// into a telescopic permutation: the terms of a minimal telescopic sequence
// for <G> come first, matched by value, and the remaining terms of H follow
// in their original order with trailing c-values 1.
inline Sequence telescopic_reorder(const Sequence& h, const Sequence& g) {
  require_telescopic(g);
  if (!monoids_equal(h, g)) {
    throw Error("MonoidMismatch", "<H> != <G>, cannot reorder");
  }
  Sequence minimal = minimize_telescopic(g).first;
  std::vector<bool> used(h.size(), false);
  std::vector<Int> out;
  out.reserve(h.size());
  for (std::size_t i = 1; i <= minimal.size(); ++i) {
    bool found = false;
    for (std::size_t j = 1; j <= h.size(); ++j) {
      if (!used[j - 1] && h.term(j) == minimal.term(i)) {
        used[j - 1] = true;
        out.push_back(h.term(j));
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error("MissingTerm",
                  "minimal generator " + minimal.term(i).str() +
                      " does not occur in H; inputs are inconsistent");
    }
  }
  for (std::size_t j = 1; j <= h.size(); ++j) {
    if (!used[j - 1]) out.push_back(h.term(j));
  }
  return Sequence(std::move(out));
}

}  // namespace teleseq
