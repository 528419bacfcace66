#include <doctest.h>

#include "lensball/hjcf.hpp"

using namespace lensball;

namespace {

// Independent oracle: continued fraction value by exact rational fold, done
// with plain 128-bit integers instead of the library's GMP path.
std::pair<__int128, __int128> fold(const HJString& s) {
  __int128 num = s.back(), den = 1;
  for (auto it = s.rbegin() + 1; it != s.rend(); ++it) {
    __int128 n = static_cast<__int128>(*it) * num - den;
    den = num;
    num = n;
  }
  return {num, den};
}

long gcdl(long a, long b) { return b == 0 ? a : gcdl(b, a % b); }

}  // namespace

TEST_SUITE("hjcf") {
  TEST_CASE("hj_expand examples") {
    CHECK(hj_expand(18, 11) == HJString{2, 3, 4});
    CHECK(hj_expand(2, 1) == HJString{2});
    CHECK(hj_expand(7, 5) == HJString{2, 2, 3});
    CHECK_THROWS_AS(hj_expand(6, 4), DomainError);
    CHECK_THROWS_AS(hj_expand(3, 5), DomainError);
    CHECK_THROWS_AS(hj_expand(5, 0), DomainError);
  }

  TEST_CASE("hj_eval examples") {
    CHECK(hj_eval({2, 3, 4}) == Fraction::make(18, 11));
    CHECK(hj_eval({4}) == Fraction::make(4, 1));
    auto [n, d] = fold({2, 2, 5, 4});
    CHECK(n == 49);
    CHECK(d == 34);
    CHECK(hj_eval({2, 2, 5, 4}) == Fraction::make(49, 34));
    CHECK_THROWS_WITH_AS(hj_eval({1, 1, 1}), doctest::Contains("non-admissible"), DomainError);
    CHECK_THROWS_AS(hj_eval({}), DomainError);
  }

  TEST_CASE("dual examples") {
    CHECK(dual(7, 5) == HJString{4, 2});
    CHECK(dual(8, 3) == HJString{2, 3, 2});
    CHECK(dual(2, 1) == HJString{2});
    CHECK(dual(9, 8) == HJString{9});
    CHECK(riemenschneider_dual({3, 3}) == HJString{2, 3, 2});
    CHECK_THROWS_AS(dual(5, 5), DomainError);
  }

  TEST_CASE("reverse and mod_inverse") {
    CHECK(reverse({2, 3, 4}) == HJString{4, 3, 2});
    CHECK(hj_eval(reverse({2, 3, 4})) == Fraction::make(18, 5));
    CHECK((BigInt(11) * 5) % 18 == 1);
    CHECK(reverse({4}) == HJString{4});
    CHECK(hj_eval(reverse({2, 2, 3})) == Fraction::make(7, 3));
    CHECK(mod_inverse(5, 7) == 3);
    CHECK(mod_inverse(1, 9) == 1);
    CHECK(mod_inverse(11, 18) == 5);
    CHECK_THROWS_AS(mod_inverse(4, 8), DomainError);
  }

  TEST_CASE("wahl strings") {
    CHECK(wahl_minus(2, 1) == HJString{4});
    CHECK(wahl_minus(7, 5) == HJString{2, 2, 5, 4});
    CHECK(hj_expand(49, 34) == HJString{2, 2, 5, 4});
    CHECK(wahl_minus(3, 1) == HJString{5, 2});
    CHECK(hj_expand(9, 2) == HJString{5, 2});
    CHECK(wahl_plus(2, 1) == HJString{2, 2, 2});
    CHECK(wahl_plus(3, 1) == HJString{3, 2, 2, 2});
    CHECK(hj_expand(9, 4) == HJString{3, 2, 2, 2});
    CHECK(wahl_plus(7, 5) == HJString{2, 2, 3, 2, 2, 4});
    CHECK(hj_expand(49, 36) == HJString{2, 2, 3, 2, 2, 4});
    CHECK_THROWS_AS(wahl_minus(1, 1), DomainError);
  }

  TEST_CASE("fibonacci") {
    CHECK(fib(4) == 3);
    CHECK(fib(6) == 8);
    CHECK(hj_expand(fib(4), fib(2)) == HJString{3});
    CHECK(hj_expand(8, 3) == HJString{3, 3});
    CHECK(hj_expand(64, 23) == HJString{3, 5, 3, 2});
    for (unsigned n = 1; n <= 20; ++n) CHECK_MESSAGE(fibonacci_identities(n).ok(), "n=" << n);
  }

  TEST_CASE("round trip, duality, reversal, wahl identities") {
    for (long p = 2; p <= 500; ++p) {
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1) continue;
        const HJString s = hj_expand(p, q);
        const auto [n, d] = fold(s);
        REQUIRE(n == p);
        REQUIRE(d == q);
        for (auto c : s) REQUIRE(c >= 2);
        REQUIRE(hj_expand(p, p - q) == dual(p, q));
        if (p - q < p && p - q >= 1) REQUIRE(dual(p, p - q) == s);
        long inv = 0;
        for (long x = 1; x < p; ++x)
          if ((q * x) % p == 1) inv = x;
        REQUIRE(hj_eval(reverse(s)) == Fraction::make(p, inv));
        if (p <= 200) {
          REQUIRE(wahl_minus(p, q) == hj_expand(p * p, p * q - 1));
          REQUIRE(wahl_plus(p, q) == hj_expand(p * p, p * q + 1));
        }
        if (p <= 300) {
          HJString left = s, right{2};
          left.front() += 1;
          right.insert(right.end(), s.begin(), s.end());
          REQUIRE(hj_expand(p + q, q) == left);
          REQUIRE(hj_expand(2 * p - q, p) == right);
          // dual identities: (p+q)/p = [2, b...] and (2p-q)/(p-q) = [b1+1, ...]
          const HJString b = dual(p, q);
          HJString dl{2}, dr = b;
          dl.insert(dl.end(), b.begin(), b.end());
          dr.front() += 1;
          REQUIRE(dual(p + q, q) == dl);
          REQUIRE(dual(2 * p - q, p) == dr);
        }
      }
    }
  }

  TEST_CASE("parse and format") {
    CHECK(parse_hj("2,3,4") == HJString{2, 3, 4});
    CHECK(parse_hj("[2, 2,5]") == HJString{2, 2, 5});
    CHECK(to_string(HJString{2, 3}) == "[2,3]");
    CHECK_THROWS_AS(parse_hj("2,x"), std::exception);
  }
}
