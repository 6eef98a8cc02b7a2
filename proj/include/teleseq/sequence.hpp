#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"

namespace teleseq {

// A finite sequence of non-negative integers, the basic object everything
// else operates on. Sequences are immutable values; operations return new
// sequences. Zeros and repeated values are allowed. Public indices are
// 1-based throughout, matching the usual mathematical convention for
// g_1, ..., g_k.
class Sequence {
 public:
  explicit Sequence(std::vector<Int> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) {
      throw Error("EmptySequence", "a sequence must have at least one term");
    }
    for (const Int& t : terms_) {
      if (t < 0) {
        throw Error("NegativeTerm",
                    "sequence terms must be non-negative, got " + t.str());
      }
    }
  }

  static Sequence single(Int value) {
    std::vector<Int> t;
    t.push_back(std::move(value));
    return Sequence(std::move(t));
  }

  // Parses the canonical text form: comma-separated base-10 integers with
  // no whitespace, e.g. "660,550,352,50,201".
  static Sequence parse(std::string_view text) {
    std::vector<Int> terms;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      if (tok.empty() ||
          tok.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error("ParseError",
                    "malformed sequence literal: expected comma-separated "
                    "base-10 integers with no whitespace");
      }
      terms.emplace_back(std::string(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return Sequence(std::move(terms));
  }

  std::size_t size() const { return terms_.size(); }

  // 1-based access: term(1) = g_1, ..., term(k) = g_k.
  const Int& term(std::size_t i) const {
    if (i < 1 || i > terms_.size()) {
      throw Error("IndexOutOfRange", "term index " + std::to_string(i) +
                                         " outside 1.." +
                                         std::to_string(terms_.size()));
    }
    return terms_[i - 1];
  }

  const std::vector<Int>& terms() const { return terms_; }

  Int gcd() const {
    Int g = 0;
    for (const Int& t : terms_) g = teleseq::gcd(g, t);
    return g;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) out += ',';
      out += terms_[i].str();
    }
    return out;
  }

  bool operator==(const Sequence& other) const {
    return terms_ == other.terms_;
  }
  bool operator!=(const Sequence& other) const { return !(*this == other); }

 private:
  std::vector<Int> terms_;
};

// Prefix gcds d_i = gcd(g_1, ..., g_i), the quotients c_j = d_{j-1} / d_j
// for j = 2..k, and their products C_{m,n}. Only defined for g_1 > 0, which
// keeps every d_i positive.
struct GcdProfile {
  std::vector<Int> d;  // d[i-1] = d_i, length k
  std::vector<Int> c;  // c[j-2] = c_j, length k-1
  Int gcd;             // = d_k

  const Int& d_value(std::size_t i) const {
    if (i < 1 || i > d.size()) {
      throw Error("IndexOutOfRange", "d index " + std::to_string(i) +
                                         " outside 1.." +
                                         std::to_string(d.size()));
    }
    return d[i - 1];
  }

  const Int& c_value(std::size_t j) const {
    if (j < 2 || j > d.size()) {
      throw Error("IndexOutOfRange", "c index " + std::to_string(j) +
                                         " outside 2.." +
                                         std::to_string(d.size()));
    }
    return c[j - 2];
  }
};

inline GcdProfile gcd_profile(const Sequence& g) {
  if (g.term(1) == 0) {
    throw Error("HeadZero",
                "gcd profile requires g_1 > 0; normalize the head first");
  }
  GcdProfile p;
  p.d.reserve(g.size());
  Int running = 0;
  for (const Int& t : g.terms()) {
    running = gcd(running, t);
    p.d.push_back(running);
  }
  p.c.reserve(g.size() - 1);
  for (std::size_t j = 2; j <= g.size(); ++j) {
    p.c.push_back(exact_div(p.d[j - 2], p.d[j - 1], "gcd_profile"));
  }
  p.gcd = p.d.back();
  return p;
}

// C_{m,n} = product of c_j over m < j <= n; equals d_m / d_n, and 1 when
// n = m (empty product).
inline Int c_product(const GcdProfile& p, std::size_t m, std::size_t n) {
  if (m < 1 || n > p.d.size() || m > n) {
    throw Error("IndexOutOfRange",
                "c_product requires 1 <= m <= n <= k, got m=" +
                    std::to_string(m) + " n=" + std::to_string(n));
  }
  return exact_div(p.d[m - 1], p.d[n - 1], "c_product");
}

inline Sequence scale(const Sequence& g, const Int& m) {
  if (m < 0) throw Error("NegativeTerm", "scale factor must be non-negative");
  std::vector<Int> out;
  out.reserve(g.size());
  for (const Int& t : g.terms()) out.push_back(t * m);
  return Sequence(std::move(out));
}

inline Sequence divide(const Sequence& g, const Int& m) {
  if (m == 0) throw Error("ZeroScale", "cannot divide a sequence by zero");
  if (m < 0) throw Error("NegativeTerm", "divisor must be positive");
  std::vector<Int> out;
  out.reserve(g.size());
  for (const Int& t : g.terms()) {
    if (t % m != 0) {
      throw Error("NotDivisible",
                  "term " + t.str() + " is not a multiple of " + m.str());
    }
    out.push_back(t / m);
  }
  return Sequence(std::move(out));
}

// slice(G, i, j) = (g_{i+1}, ..., g_j), a half-open window with
// 0 <= i < j <= k.
inline Sequence slice(const Sequence& g, std::size_t i, std::size_t j) {
  if (i >= j || j > g.size()) {
    throw Error("IndexOutOfRange",
                "slice requires 0 <= i < j <= k, got i=" + std::to_string(i) +
                    " j=" + std::to_string(j));
  }
  std::vector<Int> out(g.terms().begin() + static_cast<std::ptrdiff_t>(i),
                       g.terms().begin() + static_cast<std::ptrdiff_t>(j));
  return Sequence(std::move(out));
}

inline Sequence concat(const Sequence& g, const Sequence& h) {
  std::vector<Int> out = g.terms();
  out.insert(out.end(), h.terms().begin(), h.terms().end());
  return Sequence(std::move(out));
}

// A bijection on {1, ..., k}, stored as its image list.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> image)
      : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t v : image_) {
      if (v < 1 || v > image_.size() || seen[v - 1]) {
        throw Error("InvalidPermutation",
                    "image list is not a rearrangement of 1..k");
      }
      seen[v - 1] = true;
    }
  }

  static Permutation identity(std::size_t k) {
    std::vector<std::size_t> img(k);
    std::iota(img.begin(), img.end(), std::size_t{1});
    return Permutation(std::move(img));
  }

  // The transposition (i j) in S_k.
  static Permutation transposition(std::size_t k, std::size_t i,
                                   std::size_t j) {
    if (i < 1 || j < 1 || i > k || j > k) {
      throw Error("IndexOutOfRange",
                  "transposition indices outside 1.." + std::to_string(k));
    }
    Permutation p = identity(k);
    std::swap(p.image_[i - 1], p.image_[j - 1]);
    return p;
  }

  std::size_t size() const { return image_.size(); }
  std::size_t operator()(std::size_t i) const { return image_[i - 1]; }

 private:
  std::vector<std::size_t> image_;
};

// sigma(G) = (g_{sigma(1)}, ..., g_{sigma(k)}).
inline Sequence apply_permutation(const Sequence& g, const Permutation& sigma) {
  if (sigma.size() != g.size()) {
    throw Error("SizeMismatch", "permutation acts on " +
                                    std::to_string(sigma.size()) +
                                    " letters but |G| = " +
                                    std::to_string(g.size()));
  }
  std::vector<Int> out;
  out.reserve(g.size());
  for (std::size_t i = 1; i <= g.size(); ++i) out.push_back(g.term(sigma(i)));
  return Sequence(std::move(out));
}

// Swaps the first two terms when g_1 = 0, so that profile-dependent
// operations can assume g_1 > 0. Telescopicness is preserved by the swap.
inline Sequence normalize_head(const Sequence& g) {
  if (g.term(1) != 0) return g;
  if (g.size() < 2 || g.term(2) == 0) {
    throw Error("DegenerateHead",
                "sequence needs g_1 + g_2 > 0 (or g_1 > 0 when k = 1)");
  }
  return apply_permutation(g, Permutation::transposition(g.size(), 1, 2));
}

}  // namespace teleseq
