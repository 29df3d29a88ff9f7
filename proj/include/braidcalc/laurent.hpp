#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidcalc {

// Exact Laurent polynomial in one variable with 128-bit integer coefficients
// (intermediate Temperley-Lieb coefficients of 60-letter braids pass 2^63).
// Stored densely from the lowest nonzero exponent to the highest; both ends
// are always nonzero, so equal polynomials have equal representations.
// Arithmetic throws Error{Overflow} instead of wrapping.
class LaurentPoly {
 public:
  __extension__ using Coefficient = __int128;

  LaurentPoly() = default;
  LaurentPoly(Coefficient constant);  // NOLINT: implicit by design of the algebra
  static LaurentPoly monomial(Coefficient coefficient, int exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Exponent bounds; only meaningful for nonzero polynomials.
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coefficient(int exponent) const noexcept;

  // Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, Coefficient>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  // Adds coefficient * x^exponent * other, the inner loop of every state sum.
  void add_scaled(const LaurentPoly& other, Coefficient coefficient, int exponent);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // x -> x^factor (factor may be negative); used for A -> A^{-1} and q
  // substitutions.
  LaurentPoly substitute_power(int factor) const;
  // Exact division of every exponent by divisor; throws Precondition if some
  // exponent is not a multiple.
  LaurentPoly divide_exponents(int divisor) const;
  LaurentPoly pow(int exponent) const;  // exponent >= 0

  // Canonical ascending form, e.g. "-A^-4 - A^4", "1", "0", "A - 2A^3".
  std::string to_string(std::string_view variable = "A") const;
  // Like to_string but exponents are halves: q^(1/2) units print as
  // "q^(3/2)" and integral ones as "q^2".
  std::string to_string_half(std::string_view variable = "q") const;

  static LaurentPoly parse(std::string_view text, std::string_view variable = "A");

 private:
  void trim();

  int low_ = 0;
  std::vector<Coefficient> coeffs_;
};

}  // namespace braidcalc
