#pragma once

#include <cstddef>
#include <optional>
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

// Forward construction: choose d >= 1 and a c-sequence, then pick z-values
// subject to the gcd and membership conditions; g_i = z_i * C_{i,k} is then
// telescopic with gcd d and the requested c(G). Every telescopic sequence
// arises this way.

struct ConstructionRequest {
  Int d;
  std::vector<Int> c;  // c_2..c_k
  std::vector<Int> z;  // z_2..z_k (z_1 is always d)

  std::size_t length() const { return c.size() + 1; }

  ZDecomposition decomposition() const {
    ZDecomposition zd;
    zd.d = d;
    zd.c = c;
    zd.z.reserve(length());
    zd.z.push_back(d);
    zd.z.insert(zd.z.end(), z.begin(), z.end());
    return zd;
  }
};

namespace detail {

inline void validate_request_shape(const ConstructionRequest& req) {
  if (req.d < 1) {
    throw Error("GcdConditionFailed", "d must be at least 1");
  }
  if (req.z.size() != req.c.size()) {
    throw Error("SizeMismatch",
                "z must list z_2..z_k, matching the length of c");
  }
  for (const Int& c : req.c) {
    if (c < 1) {
      throw Error("GcdConditionFailed", "c-values must be at least 1");
    }
  }
}

// The per-index construction conditions: gcd(z_i, d*c_i) = d and z_i
// generated by the scaled-down earlier z-values.
inline void validate_buildable(const ZDecomposition& zd) {
  for (std::size_t i = 2; i <= zd.size(); ++i) {
    const Int& zi = zd.z[i - 1];
    const Int& ci = zd.c[i - 2];
    if (zi < 0 || gcd(zi, zd.d * ci) != zd.d) {
      throw Error("GcdConditionFailed",
                  "need gcd(z_" + std::to_string(i) + ", d*c_" +
                      std::to_string(i) + ") = d at index " +
                      std::to_string(i));
    }
    if (!contains(zd.membership_generators(i), zi)) {
      throw Error("MembershipConditionFailed",
                  "z_" + std::to_string(i) +
                      " is not generated by the scaled earlier z-values");
    }
  }
}

}  // namespace detail

// Builds g_i = z_i * C_{i,k} after checking the construction conditions;
// the first failed index is reported 1-based.
inline Sequence build(const ConstructionRequest& req) {
  detail::validate_request_shape(req);
  ZDecomposition zd = req.decomposition();
  detail::validate_buildable(zd);
  return zd.to_sequence();
}

struct MinimalityCheck {
  bool minimal;
  std::string violation;  // empty when minimal

  explicit operator bool() const { return minimal; }
};

// The constructed sequence is minimal exactly when every c_j > 1 and
// z_j does not divide z_i * C_{i,j} for any i < j (z_1 = d).
inline MinimalityCheck validate_minimal(const ConstructionRequest& req) {
  detail::validate_request_shape(req);
  ZDecomposition zd = req.decomposition();
  detail::validate_buildable(zd);
  for (std::size_t j = 2; j <= zd.size(); ++j) {
    if (zd.c[j - 2] == 1) {
      return {false, "c_" + std::to_string(j) + " = 1"};
    }
  }
  for (std::size_t j = 2; j <= zd.size(); ++j) {
    if (zd.z[j - 1] == 0) continue;  // possible only with c_j = 1, caught above
    for (std::size_t i = 1; i < j; ++i) {
      if (zd.z[i - 1] * zd.c_product(i, j) % zd.z[j - 1] == 0) {
        return {false, "z_" + std::to_string(j) + " divides z_" +
                           std::to_string(i) + "*C_{" + std::to_string(i) +
                           "," + std::to_string(j) + "}"};
      }
    }
  }
  return {true, ""};
}

// The three classical families. All of them have gcd 1 and are telescopic
// by construction.
struct GeometricFamily {
  Int a;
  Int b;
  std::size_t k;
};

struct SupersymmetricFamily {
  std::vector<Int> a;  // pairwise coprime
};

struct CompoundFamily {
  std::vector<Int> a;  // a_1..a_{k-1}
  std::vector<Int> b;  // b_1..b_{k-1}, gcd(a_i, b_j) = 1 for i >= j
};

using FamilySpec =
    std::variant<GeometricFamily, SupersymmetricFamily, CompoundFamily>;

// g_i = a^{k-i} * b^{i-1}; c_i = a for all i.
inline Sequence family(const GeometricFamily& spec) {
  if (spec.k < 1 || spec.a < 1 || spec.b < 1) {
    throw Error("InvalidFamilyParameters",
                "geometric family needs a, b >= 1 and k >= 1");
  }
  if (gcd(spec.a, spec.b) != 1) {
    throw Error("InvalidFamilyParameters",
                "geometric family needs gcd(a, b) = 1, got gcd(" +
                    spec.a.str() + ", " + spec.b.str() + ") != 1");
  }
  std::vector<Int> terms(spec.k, Int(1));
  for (std::size_t i = 0; i < spec.k; ++i) {
    for (std::size_t e = 0; e < spec.k - 1 - i; ++e) terms[i] *= spec.a;
    for (std::size_t e = 0; e < i; ++e) terms[i] *= spec.b;
  }
  return Sequence(std::move(terms));
}

// g_i = A / a_i for A = a_1 * ... * a_k; c_i = a_i.
inline Sequence family(const SupersymmetricFamily& spec) {
  if (spec.a.empty()) {
    throw Error("InvalidFamilyParameters",
                "supersymmetric family needs at least one parameter");
  }
  for (std::size_t i = 0; i < spec.a.size(); ++i) {
    if (spec.a[i] < 1) {
      throw Error("InvalidFamilyParameters",
                  "supersymmetric parameters must be positive");
    }
    for (std::size_t j = i + 1; j < spec.a.size(); ++j) {
      if (gcd(spec.a[i], spec.a[j]) != 1) {
        throw Error("InvalidFamilyParameters",
                    "supersymmetric family needs pairwise coprime "
                    "parameters; gcd(a_" +
                        std::to_string(i + 1) + ", a_" +
                        std::to_string(j + 1) + ") != 1");
      }
    }
  }
  Int product = 1;
  for (const Int& a : spec.a) product *= a;
  std::vector<Int> terms;
  terms.reserve(spec.a.size());
  for (const Int& a : spec.a) terms.push_back(product / a);
  return Sequence(std::move(terms));
}

// g_i = b_1...b_{i-1} * a_i...a_{k-1}; c_i = a_{i-1}.
inline Sequence family(const CompoundFamily& spec) {
  if (spec.a.empty() || spec.a.size() != spec.b.size()) {
    throw Error("InvalidFamilyParameters",
                "compound family needs equally long nonempty a and b lists");
  }
  for (std::size_t i = 0; i < spec.a.size(); ++i) {
    if (spec.a[i] < 1 || spec.b[i] < 1) {
      throw Error("InvalidFamilyParameters",
                  "compound parameters must be positive");
    }
    for (std::size_t j = 0; j <= i; ++j) {
      if (gcd(spec.a[i], spec.b[j]) != 1) {
        throw Error("InvalidFamilyParameters",
                    "compound family needs gcd(a_i, b_j) = 1 for i >= j; "
                    "gcd(a_" +
                        std::to_string(i + 1) + ", b_" + std::to_string(j + 1) +
                        ") != 1");
      }
    }
  }
  std::size_t k = spec.a.size() + 1;
  std::vector<Int> terms(k, Int(1));
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j < i; ++j) terms[i - 1] *= spec.b[j - 1];
    for (std::size_t j = i; j <= k - 1; ++j) terms[i - 1] *= spec.a[j - 1];
  }
  return Sequence(std::move(terms));
}

inline Sequence family(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return family(s); }, spec);
}

// Sufficient minimality test: a telescopic non-decreasing sequence with
// every c_j > 1 is minimal. Returns false when the hypothesis fails, with
// no claim either way.
inline bool check_nondecreasing_minimal(const Sequence& g) {
  require_telescopic(g);
  for (std::size_t i = 2; i <= g.size(); ++i) {
    if (g.term(i) < g.term(i - 1)) return false;
  }
  GcdProfile p = gcd_profile(g);
  for (std::size_t j = 2; j <= g.size(); ++j) {
    if (p.c_value(j) == 1) return false;
  }
  return true;
}

// Enumerates, in lexicographic z-order, every telescopic sequence with the
// given d and c-sequence whose z-values satisfy d <= z_i <= z_bound. With
// minimal_only set, the minimality conditions are enforced as well. The
// gcd condition restricts z_i to multiples of d, so the odometer walks
// those directly; memberships are only tested after the cheap checks pass.
class TelescopicEnumerator {
 public:
  TelescopicEnumerator(Int d, std::vector<Int> c, Int z_bound,
                       bool minimal_only)
      : z_bound_(std::move(z_bound)), minimal_only_(minimal_only) {
    req_.d = std::move(d);
    req_.c = std::move(c);
    if (req_.d < 1) {
      throw Error("GcdConditionFailed", "d must be at least 1");
    }
    for (const Int& cv : req_.c) {
      if (cv < 1) {
        throw Error("GcdConditionFailed", "c-values must be at least 1");
      }
    }
    if (z_bound_ < req_.d) exhausted_ = true;
    if (minimal_only_) {
      for (const Int& cv : req_.c) {
        if (cv == 1) exhausted_ = true;  // c_j = 1 can never be minimal
      }
    }
    zd_.d = req_.d;
    zd_.c = req_.c;
    zd_.z.assign(1, req_.d);
  }

  // Next sequence in lexicographic z-order, or nullopt when exhausted.
  std::optional<Sequence> next() {
    if (exhausted_) return std::nullopt;
    std::size_t k = req_.length();
    if (k == 1) {
      exhausted_ = true;
      return Sequence::single(req_.d);
    }
    // positions 2..k; zd_.z holds the accepted prefix
    while (true) {
      if (zd_.z.size() < k) {
        // descend: place the smallest admissible value at the next slot
        if (!place(zd_.z.size() + 1, req_.d)) {
          if (!backtrack()) {
            exhausted_ = true;
            return std::nullopt;
          }
        }
        continue;
      }
      Sequence result = zd_.to_sequence();
      if (!backtrack()) exhausted_ = true;
      return result;
    }
  }

  // Collects up to `limit` sequences (no limit when 0).
  std::vector<Sequence> collect(std::size_t limit = 0) {
    std::vector<Sequence> out;
    while (auto s = next()) {
      out.push_back(std::move(*s));
      if (limit && out.size() >= limit) break;
    }
    return out;
  }

 private:
  // Tries z-values from `start` upward at position i; true once a value
  // satisfying all prefix conditions is appended.
  bool place(std::size_t i, const Int& start) {
    for (Int zi = start; zi <= z_bound_; zi += req_.d) {
      if (!admissible(i, zi)) continue;
      zd_.z.push_back(zi);
      return true;
    }
    return false;
  }

  // Advances the deepest slot; pops exhausted slots. False when the whole
  // space is spent.
  bool backtrack() {
    while (zd_.z.size() > 1) {
      Int last = zd_.z.back();
      zd_.z.pop_back();
      if (place(zd_.z.size() + 1, last + req_.d)) return true;
    }
    return false;
  }

  bool admissible(std::size_t i, const Int& zi) const {
    const Int& ci = req_.c[i - 2];
    if (gcd(zi, req_.d * ci) != req_.d) return false;
    if (minimal_only_) {
      for (std::size_t p = 1; p < i; ++p) {
        if (zd_.z[p - 1] * zd_.c_product(p, i) % zi == 0) return false;
      }
    }
    return contains(zd_.membership_generators(i), zi);
  }

  ConstructionRequest req_;
  ZDecomposition zd_;  // z holds the accepted prefix z_1..z_p
  Int z_bound_;
  bool minimal_only_;
  bool exhausted_ = false;
};

}  // namespace teleseq
