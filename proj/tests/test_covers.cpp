#include <doctest.h>

#include "lensball/covers.hpp"
#include "lensball/surfaces.hpp"

using namespace lensball;

namespace {

long gcdl(long a, long b) { return b == 0 ? a : gcdl(b, a % b); }

// Independent oracle: |det| of the tridiagonal lattice by the three-term
// recurrence on machine integers.
long long tridiagonal_det(const HJString& w) {
  long long prev = 1, cur = -w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    const long long next = -w[i] * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

TEST_SUITE("covers") {
  TEST_CASE("linear lattices") {
    const PlumbingLattice L = linear_lattice({2, 2, 4});
    CHECK(L.matrix.rows == 3);
    CHECK(L.matrix(0, 0) == -2);
    CHECK(L.matrix(0, 1) == 1);
    CHECK(L.matrix(0, 2) == 0);
    CHECK(L.det == -10);
    CHECK(L.det == static_cast<long>(tridiagonal_det({2, 2, 4})));
    CHECK(L.negative_definite);
    CHECK(linear_lattice({4}).det == -4);
    CHECK(linear_lattice({6}).det == -6);
    CHECK(!linear_lattice({1, 1}).negative_definite);
    CHECK_THROWS_AS(linear_lattice({}), DomainError);
  }

  TEST_CASE("lattice determinant is the numerator") {
    for (long p = 2; p <= 300; ++p)
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1) continue;
        const PlumbingLattice L = linear_lattice(hj_expand(p, q));
        CHECK(abs(L.det) == p);
        CHECK(L.negative_definite);
      }
  }

  TEST_CASE("boundary lens spaces") {
    CHECK(boundary_lens({2, 2, 5, 4}) == normal_form(49, 34));
    CHECK(boundary_lens({3}) == normal_form(3, 1));
    CHECK(boundary_lens({2, 2, 4}) == normal_form(10, 7));
    CHECK_THROWS_AS(boundary_lens({1, 3}), DomainError);
  }

  TEST_CASE("smith normal forms") {
    CHECK(snf(linear_lattice({2, 2, 5, 4}).matrix).str() == "Z/49");
    CHECK(snf(IntMatrix::identity(2)).trivial());
    CHECK(snf(goeritz(18, 11)).str() == "Z/18");
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 4;
    CHECK(snf(m).str() == "Z/2 + Z/4");
    CHECK(snf(m).order() == 8);
    CHECK(snf(IntMatrix(1, 1)).str() == "Z");
    for (long p = 2; p <= 60; ++p)
      for (long q = 1; q < p; ++q)
        if (gcdl(p, q) == 1) CHECK(snf(goeritz(p, q)) == snf(linear_lattice(hj_expand(p, q)).matrix));
  }

  TEST_CASE("chain numerators") {
    CHECK(chain_numerator({2, 3, 4}) == 18);
    CHECK(chain_numerator({2, 1, 2}) == 0);
    CHECK(chain_numerator({1, 1}) == 0);
  }

  TEST_CASE("rational ball checks") {
    for (auto [p, q] : std::vector<std::pair<long, long>>{{2, 1}, {7, 5}, {3, 2}}) {
      const VerificationReport r = rational_ball_checks(p, q);
      CHECK(r.pass());
    }
    bool found = false;
    for (auto& c : rational_ball_checks(7, 5).checks)
      if (c.name == "H1(B)") found = c.computed == "Z/7";
    CHECK(found);
    for (long p = 2; p <= 50; ++p)
      for (long q = 1; q < p; ++q)
        if (gcdl(p, q) == 1) CHECK(rational_ball_checks(p, q).pass());
    CHECK_THROWS_AS(rational_ball_checks(4, 2), DomainError);
  }

  TEST_CASE("cover euler characteristics") {
    CHECK(cover_stats(delta(3, 1, DeltaStyle::Vertical)).cover_euler == 1);
    CHECK(cover_stats(moebius_minus()).cover_euler == 2);
    const CoverStats f = cover_stats(f_delta(7, 5), HJString{2, 2, 4});
    CHECK(f.surface_euler == -2);
    CHECK(f.cover_euler == 4);
    CHECK(f.b2 == 3);
  }
}
