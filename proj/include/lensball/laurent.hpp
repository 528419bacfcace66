#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lensball {

/// Integer Laurent polynomial in one variable, stored densely from the lowest
/// exponent. Zero coefficients at either end are trimmed.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exp, std::int64_t coef = 1);
  static LaurentPoly from_terms(const std::map<int, std::int64_t>& terms);

  bool is_zero() const { return coef_.empty(); }
  int min_exp() const { return lo_; }
  int max_exp() const { return lo_ + static_cast<int>(coef_.size()) - 1; }
  std::int64_t coef(int exp) const;
  std::map<int, std::int64_t> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^-1.
  LaurentPoly inverted() const;
  /// x -> x^k for integer k != 0.
  LaurentPoly substituted(int k) const;
  /// Exact division by another polynomial; throws std::domain_error if inexact.
  LaurentPoly divided_by(const LaurentPoly& d) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "-t^-4 + t^-3 + t^-1". When exp_denominator
  /// is 2, exponents are printed as halves.
  std::string str(const std::string& var = "A", int exp_denominator = 1) const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<std::int64_t> coef_;
};

}  // namespace lensball
