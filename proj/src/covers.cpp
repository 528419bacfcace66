#include "lensball/covers.hpp"

#include "lensball/tait_builder.hpp"

namespace lensball {

PlumbingLattice linear_lattice(const HJString& w) {
  if (w.empty()) throw DomainError("linear_lattice: empty weights");
  PlumbingLattice L;
  L.weights = w;
  const std::size_t k = w.size();
  L.matrix = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    L.matrix(i, i) = -w[i];
    if (i + 1 < k) L.matrix(i, i + 1) = L.matrix(i + 1, i) = 1;
  }
  // Leading minors of a tridiagonal matrix: D_n = -w_n D_{n-1} - D_{n-2}.
  // Negative definite iff they alternate in sign, starting negative.
  BigInt prev = 0, cur = 1;
  L.negative_definite = true;
  for (std::size_t n = 0; n < k; ++n) {
    const BigInt next = -w[n] * cur - prev;
    prev = cur;
    cur = next;
    if (n % 2 == 0 ? cur >= 0 : cur <= 0) L.negative_definite = false;
  }
  L.det = cur;
  return L;
}

BigInt chain_numerator(const HJString& c) {
  // K_j = c_{k-j+1} K_{j-1} - K_{j-2}, read right to left from K_{-1} = 0, K_0 = 1.
  BigInt km2 = 0, km1 = 1;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const BigInt k = BigInt(*it) * km1 - km2;
    km2 = km1;
    km1 = k;
  }
  return km1;
}

BigInt AbelianGroupData::order() const {
  BigInt n = 1;
  for (auto& f : factors) {
    if (f == 0) return 0;
    n *= f;
  }
  return n;
}

std::string AbelianGroupData::str() const {
  if (factors.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " + ";
    s += factors[i] == 0 ? std::string("Z") : "Z/" + factors[i].get_str();
  }
  return s;
}

AbelianGroupData snf(const IntMatrix& m) {
  AbelianGroupData g;
  for (auto& d : smith_diagonal(m))
    if (d != 1) g.factors.push_back(d);
  // Columns beyond the rank of a wide matrix are free generators.
  for (std::size_t i = std::min(m.rows, m.cols); i < m.cols; ++i) g.factors.push_back(0);
  return g;
}

TwoBridgeNormalForm boundary_lens(const HJString& w) {
  for (auto x : w)
    if (x < 2) throw DomainError("boundary_lens: weights must be at least 2");
  const Fraction f = hj_eval(w);
  return normal_form(f.num, f.den);
}

VerificationReport rational_ball_checks(const BigInt& p, const BigInt& q) {
  VerificationReport r;
  r.theorem = "rational_ball";
  r.params = {{"p", p.get_str()}, {"q", q.get_str()}};
  if (!(p > q && q >= 1 && coprime(p, q))) throw DomainError("rational_ball_checks: need coprime p > q >= 1");
  const HJString w = wahl_minus(p, q);
  const PlumbingLattice L = linear_lattice(w);
  const BigInt h1 = abs(L.det);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), h1.get_mpz_t());
  r.expect_eq("boundary |H1| is a square", BigInt(p * p).get_str(), h1.get_str());
  r.expect_eq("square root", p.get_str(), root * root == h1 ? root.get_str() : "not a square");
  r.expect_eq("boundary lens space", normal_form(p * p, p * q - 1).str(), boundary_lens(w).str());
  // Handle picture: the chain [a1..ak, 1, bl..b1] blows down to a 0-framed
  // unknot (a 1-handle); the 2-handle winds around it w times, with w the
  // numerator of [a1..ak] (equivalently of [bl..b1]).
  const HJString a = hj_expand(p, q), b = dual(p, q);
  HJString chain = a;
  chain.push_back(1);
  for (auto it = b.rbegin(); it != b.rend(); ++it) chain.push_back(*it);
  r.expect_eq("chain blows down to a 0-framed unknot", "0", chain_numerator(chain).get_str());
  const BigInt wa = chain_numerator(a), wb = chain_numerator(reverse(b));
  r.expect_eq("winding from a-side equals b-side", wa.get_str(), wb.get_str());
  IntMatrix rel(1, 1);
  rel(0, 0) = wa;
  const AbelianGroupData h = snf(rel);
  r.expect_eq("H1(B)", "Z/" + p.get_str(), h.str());
  r.expect_eq("|H1(B)|^2 = |H1(boundary)|", h1.get_str(), BigInt(h.order() * h.order()).get_str());
  // The branch surface: two minima and one band.
  r.expect_eq("chi(cover) = 2 - chi(Delta)", "1", std::to_string(2 - (2 - 1)));
  return r;
}

CoverStats cover_stats(const DiagramWithBands& s, const std::optional<HJString>& weights) {
  CoverStats c;
  c.surface_euler = s.euler();
  c.cover_euler = 2 - c.surface_euler;
  if (weights) c.b2 = static_cast<int>(weights->size());
  return c;
}

}  // namespace lensball
