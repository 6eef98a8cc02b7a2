#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teleseq/bigint.hpp"
#include "teleseq/error.hpp"

namespace teleseq {

// Integer-coefficient polynomial, constant term first. This is the function
// class accepted by the gap-identity checks: exactly evaluable and easy to
// pass through the CLI.
class IntPolynomial {
 public:
  explicit IntPolynomial(std::vector<Int> coefficients)
      : coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) coeffs_.push_back(0);
  }

  static IntPolynomial constant(Int c) {
    std::vector<Int> v;
    v.push_back(std::move(c));
    return IntPolynomial(std::move(v));
  }

  // "c0,c1,c2" -> c0 + c1*n + c2*n^2. Coefficients may be negative.
  static IntPolynomial parse(std::string_view text) {
    std::vector<Int> coeffs;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - pos);
      std::string_view digits = tok;
      if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error("ParseError",
                    "malformed polynomial: expected comma-separated integer "
                    "coefficients, constant term first");
      }
      coeffs.emplace_back(std::string(tok));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
  }

  Int operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }

  const std::vector<Int>& coefficients() const { return coeffs_; }

 private:
  std::vector<Int> coeffs_;
};

}  // namespace teleseq
