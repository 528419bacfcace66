// Hirzebruch-Jung continued fractions over arbitrary-precision integers.
//
//   [a1, a2, ..., ak] = a1 - 1/(a2 - 1/(... - 1/ak))
//
// Every coprime p > q >= 1 has a unique expansion with all ai >= 2.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lensball {

using BigInt = mpz_class;

/// Coefficients of a continued fraction, left to right.
using HJString = std::vector<std::int64_t>;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact positive rational in lowest terms.
struct Fraction {
  BigInt num;
  BigInt den;

  /// Normalizes sign and common factors. Throws DomainError on den == 0.
  static Fraction make(BigInt num, BigInt den);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const;
};

HJString hj_expand(const BigInt& p, const BigInt& q);
Fraction hj_eval(const HJString& s);

/// Expansion of p/(p-q), computed through hj_expand.
HJString dual(const BigInt& p, const BigInt& q);

/// Riemenschneider point-diagram rewrite of an all->=2 string into the
/// expansion of p/(p-q). Independent of the arithmetic route in dual().
HJString riemenschneider_dual(const HJString& s);

HJString reverse(const HJString& s);

/// n with q*n = 1 (mod p), 0 < n < p. For p == 1 returns 0.
BigInt mod_inverse(const BigInt& q, const BigInt& p);

/// Expansion of p^2/(pq-1), assembled from p/q and p/(p-q), and checked
/// against hj_expand(p^2, pq-1).
HJString wahl_minus(const BigInt& p, const BigInt& q);

/// Expansion of p^2/(pq+1), assembled the same way.
HJString wahl_plus(const BigInt& p, const BigInt& q);

/// Fibonacci numbers with F(1) = F(2) = 1, F(0) = 0.
BigInt fib(unsigned n);

struct FibonacciReport {
  unsigned n = 0;
  bool recurrence = false;    // F(2n+2) = 3F(2n) - F(2n-2)
  bool ratio = false;         // F(2n+2)/F(2n) = [3^n]
  bool dual_ratio = false;    // F(2n+2)/(F(2n+2)-F(2n)) = [2,3^(n-1),2]
  bool wahl = false;          // F(2n+2)^2/(F(2n+2)F(2n)-1) = [3^(n-1),5,3^(n-1),2]
  bool ok() const { return recurrence && ratio && dual_ratio && wahl; }
};

FibonacciReport fibonacci_identities(unsigned n);

bool coprime(const BigInt& a, const BigInt& b);

std::string to_string(const HJString& s);
/// "2,2,5,4" or "[2, 2, 5, 4]". Throws DomainError on empty or bad entries.
HJString parse_hj(const std::string& csv);

}  // namespace lensball
