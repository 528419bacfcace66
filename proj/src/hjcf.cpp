#include "lensball/hjcf.hpp"

#include <algorithm>
#include <sstream>

namespace lensball {

Fraction Fraction::make(BigInt num, BigInt den) {
  if (den == 0) throw DomainError("fraction with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  BigInt g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Fraction{std::move(num), std::move(den)};
}

std::string Fraction::str() const { return num.get_str() + "/" + den.get_str(); }

bool coprime(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g == 1;
}

static void require_pair(const BigInt& p, const BigInt& q, const char* who) {
  if (!(q >= 1 && p > q))
    throw DomainError(std::string(who) + ": need p > q >= 1, got " + p.get_str() + "," + q.get_str());
  if (!coprime(p, q))
    throw DomainError(std::string(who) + ": p and q not coprime: " + p.get_str() + "," + q.get_str());
}

HJString hj_expand(const BigInt& p0, const BigInt& q0) {
  require_pair(p0, q0, "hj_expand");
  HJString out;
  BigInt p = p0, q = q0;
  while (q != 0) {
    BigInt a;
    mpz_cdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (!a.fits_slong_p()) throw DomainError("hj_expand: coefficient overflow");
    out.push_back(a.get_si());
    BigInt r = a * q - p;
    p = q;
    q = r;
  }
  return out;
}

Fraction hj_eval(const HJString& s) {
  if (s.empty()) throw DomainError("hj_eval: empty string");
  // Fold from the right: value = num/den of the tail.
  BigInt num = s.back(), den = 1;
  for (auto it = s.rbegin() + 1; it != s.rend(); ++it) {
    if (num == 0) throw DomainError("hj_eval: non-admissible string " + to_string(s));
    BigInt next = BigInt(*it) * num - den;
    den = num;
    num = next;
  }
  return Fraction::make(num, den);
}

HJString dual(const BigInt& p, const BigInt& q) {
  require_pair(p, q, "dual");
  HJString d = hj_expand(p, p - q);
  if (riemenschneider_dual(hj_expand(p, q)) != d)
    throw std::logic_error("dual: point-diagram rewrite disagrees for " + p.get_str() + "," + q.get_str());
  return d;
}

HJString riemenschneider_dual(const HJString& s) {
  // Row i of the point diagram holds s[i]-1 points; row i+1 starts in the
  // column where row i ends. Dual coefficients are 1 + column sizes.
  std::vector<std::int64_t> col_size;
  std::size_t col = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 2) throw DomainError("riemenschneider_dual: coefficient < 2");
    for (std::int64_t j = 0; j < s[i] - 1; ++j) {
      if (col_size.size() <= col) col_size.resize(col + 1, 0);
      ++col_size[col];
      if (j + 1 < s[i] - 1) ++col;
    }
  }
  HJString out;
  out.reserve(col_size.size());
  for (auto c : col_size) out.push_back(c + 1);
  return out;
}

HJString reverse(const HJString& s) { return HJString(s.rbegin(), s.rend()); }

BigInt mod_inverse(const BigInt& q, const BigInt& p) {
  if (p < 1) throw DomainError("mod_inverse: modulus must be positive");
  if (p == 1) return 0;
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t()) == 0)
    throw DomainError("mod_inverse: " + q.get_str() + " not invertible mod " + p.get_str());
  return r;
}

static HJString wahl_assemble(const BigInt& p, const BigInt& q, bool plus) {
  if (p < 2) throw DomainError("wahl string: need p >= 2");
  const HJString a = hj_expand(p, q);
  const HJString b = dual(p, q);
  HJString out(a.begin(), a.end() - 1);
  if (plus) {
    out.push_back(a.back());
    out.push_back(2);
    out.push_back(b.back());
  } else {
    out.push_back(a.back() + b.back());
  }
  for (auto it = b.rbegin() + 1; it != b.rend(); ++it) out.push_back(*it);
  const BigInt den = plus ? BigInt(p * q + 1) : BigInt(p * q - 1);
  if (out != hj_expand(p * p, den))
    throw std::logic_error("wahl string mismatch for " + p.get_str() + "," + q.get_str());
  return out;
}

HJString wahl_minus(const BigInt& p, const BigInt& q) {
  require_pair(p, q, "wahl_minus");
  return wahl_assemble(p, q, false);
}

HJString wahl_plus(const BigInt& p, const BigInt& q) {
  require_pair(p, q, "wahl_plus");
  return wahl_assemble(p, q, true);
}

BigInt fib(unsigned n) {
  BigInt f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

FibonacciReport fibonacci_identities(unsigned n) {
  FibonacciReport r;
  r.n = n;
  if (n == 0) return r;
  const BigInt hi = fib(2 * n + 2), lo = fib(2 * n), lower = fib(2 * n - 2);
  r.recurrence = hi == 3 * lo - lower;
  r.ratio = hj_expand(hi, lo) == HJString(n, 3);
  HJString d{2};
  d.insert(d.end(), n - 1, 3);
  d.push_back(2);
  r.dual_ratio = hj_expand(hi, hi - lo) == d;
  HJString w(n - 1, 3);
  w.push_back(5);
  w.insert(w.end(), n - 1, 3);
  w.push_back(2);
  r.wahl = hj_expand(hi * hi, hi * lo - 1) == w && wahl_minus(hi, lo) == w;
  return r;
}

std::string to_string(const HJString& s) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ']';
  return os.str();
}

HJString parse_hj(const std::string& csv) {
  HJString out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' ' || c == '[' || c == ']'; }),
              tok.end());
    if (tok.empty()) throw DomainError("empty coefficient in '" + csv + "'");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::logic_error&) {
      throw DomainError("bad coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw DomainError("bad coefficient '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty continued fraction");
  return out;
}

}  // namespace lensball
