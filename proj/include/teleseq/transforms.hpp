#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"
#include "teleseq/monoid_oracle.hpp"
#include "teleseq/sequence.hpp"
#include "teleseq/telescopic.hpp"

namespace teleseq {

// The sequence calculus: rho_n contracts (divide the prefix by c_n, drop
// term n), tau_{g,m} extends by gluing (scale by m, append g), pi_n deletes
// a term. rho and tau preserve telescopicness and are mutually inverse with
// matched parameters, which is what makes programs between telescopic
// sequences possible.

struct RhoStep {
  std::size_t n;
};
struct TauStep {
  Int g;
  Int m;
};
struct PiStep {
  std::size_t n;
};
struct SwapStep {
  std::size_t i;
  std::size_t j;
};

using TransformStep = std::variant<RhoStep, TauStep, PiStep, SwapStep>;

// A concrete list of steps. Parameters are bound to specific values, so a
// program is only meaningful for the source sequence it was derived for
// (and its gcd is recorded to make that checkable).
struct TransformProgram {
  std::vector<TransformStep> steps;
  Int source_gcd = 0;
};

// rho_n(G) = (G_{n-1} / c_n) x G_{n,k}. The division is always exact:
// c_n divides gcd(G_{n-1}).
inline Sequence rho(const Sequence& g, std::size_t n) {
  if (g.size() < 2 || n < 2 || n > g.size()) {
    throw Error("IndexOutOfRange",
                "rho index must satisfy 2 <= n <= k with k >= 2, got n=" +
                    std::to_string(n) + " k=" + std::to_string(g.size()));
  }
  GcdProfile p = gcd_profile(g);  // throws HeadZero when g_1 = 0
  const Int& cn = p.c_value(n);
  std::vector<Int> out;
  out.reserve(g.size() - 1);
  for (std::size_t i = 1; i < n; ++i)
    out.push_back(exact_div(g.term(i), cn, "rho"));
  for (std::size_t i = n + 1; i <= g.size(); ++i) out.push_back(g.term(i));
  return Sequence(std::move(out));
}

// Removal of the first entry equals removal of the second:
// rho_2((1 2)(G)) = rho_2(G) = (gcd(g_1, g_2), g_3, ..., g_k).
inline Sequence rho_first(const Sequence& g) {
  if (g.size() < 2) {
    throw Error("IndexOutOfRange", "rho_first needs k >= 2");
  }
  if (g.term(1) + g.term(2) == 0) {
    throw Error("HeadZero", "rho_first needs g_1 + g_2 > 0");
  }
  std::vector<Int> out;
  out.reserve(g.size() - 1);
  out.push_back(gcd(g.term(1), g.term(2)));
  for (std::size_t i = 3; i <= g.size(); ++i) out.push_back(g.term(i));
  return Sequence(std::move(out));
}

// tau_{g,m}(G) = (mG) x (g), for a member g of <G> and m >= 1 with
// gcd(m, g / gcd(G)) = 1. The coprimality is checked against the scaled
// value g / gcd(G): that is the condition under which gcd and c-sequence
// bookkeeping hold for any gcd(G), and it reduces to gcd(m, g) = 1 when
// gcd(G) = 1.
inline Sequence tau(const Sequence& seq, const Int& g, const Int& m) {
  if (m < 1) {
    throw Error("ZeroMultiplier", "tau multiplier must be at least 1");
  }
  if (!contains(seq, g)) {
    throw Error("NotAMember", "g = " + g.str() + " is not a member of <G>");
  }
  Int d = seq.gcd();
  Int scaled = d == 0 ? g : g / d;  // d | g since g is a member
  if (gcd(m, scaled) != 1) {
    throw Error("NotCoprime", "tau requires gcd(m, g/gcd(G)) = 1, got gcd(" +
                                  m.str() + ", " + scaled.str() + ") != 1");
  }
  std::vector<Int> out;
  out.reserve(seq.size() + 1);
  for (const Int& t : seq.terms()) out.push_back(t * m);
  out.push_back(g);
  return Sequence(std::move(out));
}

// pi_n(G) deletes the n-th term, nothing else.
inline Sequence pi(const Sequence& g, std::size_t n) {
  if (g.size() < 2 || n < 1 || n > g.size()) {
    throw Error("IndexOutOfRange",
                "pi index must satisfy 1 <= n <= k with k >= 2, got n=" +
                    std::to_string(n) + " k=" + std::to_string(g.size()));
  }
  std::vector<Int> out;
  out.reserve(g.size() - 1);
  for (std::size_t i = 1; i <= g.size(); ++i) {
    if (i != n) out.push_back(g.term(i));
  }
  return Sequence(std::move(out));
}

// The collapse map rho_2 o rho_3 o ... o rho_k, which sends any sequence
// (telescopic or not) to its gcd. Returns the gcd and the recorded steps.
inline std::pair<Int, TransformProgram> collapse(const Sequence& g) {
  if (g.term(1) == 0) {
    throw Error("HeadZero", "collapse requires g_1 > 0");
  }
  TransformProgram prog;
  prog.source_gcd = g.gcd();
  Sequence cur = g;
  for (std::size_t len = g.size(); len >= 2; --len) {
    prog.steps.push_back(RhoStep{len});
    cur = rho(cur, len);
  }
  return {cur.term(1), std::move(prog)};
}

namespace detail {

inline void validate_decomposition(const ZDecomposition& zd) {
  auto fail = [](const std::string& why) {
    throw Error("InvalidDecomposition", why);
  };
  if (zd.d < 1) fail("d must be at least 1");
  if (zd.z.empty() || zd.z.size() != zd.c.size() + 1)
    fail("z must have length k and c length k-1");
  if (zd.z.front() != zd.d) fail("z_1 must equal d");
  for (const Int& c : zd.c) {
    if (c < 1) fail("c-values must be at least 1");
  }
  for (std::size_t i = 2; i <= zd.size(); ++i) {
    const Int& zi = zd.z[i - 1];
    const Int& ci = zd.c[i - 2];
    if (zi < 0 || zi % zd.d != 0)
      fail("z_" + std::to_string(i) + " is not a multiple of d");
    if (gcd(zi / zd.d, ci) != 1)
      fail("gcd(z_" + std::to_string(i) + "/d, c_" + std::to_string(i) +
           ") != 1");
    if (!contains(zd.membership_generators(i), zi))
      fail("z_" + std::to_string(i) +
           " is not generated by the scaled earlier z-values");
  }
}

}  // namespace detail

// The rebuild map tau_{z_k,c_k} o ... o tau_{z_2,c_2} applied to (d),
// which reconstructs the unique telescopic sequence with the given
// decomposition. All decomposition invariants are checked eagerly.
inline std::pair<Sequence, TransformProgram> rebuild(const ZDecomposition& zd) {
  detail::validate_decomposition(zd);
  TransformProgram prog;
  prog.source_gcd = zd.d;
  Sequence cur = Sequence::single(zd.d);
  for (std::size_t i = 2; i <= zd.size(); ++i) {
    prog.steps.push_back(TauStep{zd.z[i - 1], zd.c[i - 2]});
    cur = tau(cur, zd.z[i - 1], zd.c[i - 2]);
  }
  return {std::move(cur), std::move(prog)};
}

// The program collapse(G) followed by rebuild(H): applied to G it yields
// exactly H. Both sequences must be telescopic with equal gcd.
inline TransformProgram morph(const Sequence& g, const Sequence& h) {
  require_telescopic(g);
  require_telescopic(h);
  Int dg = g.gcd(), dh = h.gcd();
  if (dg != dh) {
    throw Error("GcdMismatch", "morph requires gcd(G) = gcd(H), got " +
                                   dg.str() + " and " + dh.str());
  }
  TransformProgram down = collapse(g).second;
  TransformProgram up = rebuild(z_decompose(h)).second;
  TransformProgram prog;
  prog.source_gcd = dg;
  prog.steps = std::move(down.steps);
  prog.steps.insert(prog.steps.end(), up.steps.begin(), up.steps.end());
  return prog;
}

inline Sequence apply_step(const Sequence& g, const TransformStep& step) {
  return std::visit(
      [&](const auto& s) -> Sequence {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RhoStep>) {
          return rho(g, s.n);
        } else if constexpr (std::is_same_v<T, TauStep>) {
          return tau(g, s.g, s.m);
        } else if constexpr (std::is_same_v<T, PiStep>) {
          return pi(g, s.n);
        } else {
          return apply_permutation(
              g, Permutation::transposition(g.size(), s.i, s.j));
        }
      },
      step);
}

// Folds the steps left to right; a failing step rethrows its error
// annotated with the 1-based step index.
inline Sequence apply_program(const Sequence& g, const TransformProgram& p) {
  Sequence cur = g;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    try {
      cur = apply_step(cur, p.steps[i]);
    } catch (const Error& e) {
      throw Error(e.name(), std::string(e.what()) + " (at step " +
                                std::to_string(i + 1) + ")");
    }
  }
  return cur;
}

// Like apply_program but records every intermediate sequence, the input
// included, so traces can be inspected or serialized.
inline std::vector<Sequence> apply_program_trace(const Sequence& g,
                                                 const TransformProgram& p) {
  std::vector<Sequence> trace;
  trace.reserve(p.steps.size() + 1);
  trace.push_back(g);
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    try {
      trace.push_back(apply_step(trace.back(), p.steps[i]));
    } catch (const Error& e) {
      throw Error(e.name(), std::string(e.what()) + " (at step " +
                                std::to_string(i + 1) + ")");
    }
  }
  return trace;
}

}  // namespace teleseq
