#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lensball/trees.hpp"

using namespace lensball;

namespace {

std::vector<std::pair<std::int64_t, std::int64_t>> pairs(const std::vector<NodeLabel>& ns) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (auto& n : ns) out.emplace_back(n.p, n.q);
  return out;
}

using PQ = std::vector<std::pair<std::int64_t, std::int64_t>>;

}  // namespace

TEST_SUITE("trees") {
  TEST_CASE("children and relabelling") {
    auto [l, r] = children_w1(NodeLabel{});
    CHECK(std::pair(l.p, l.q) == std::pair<std::int64_t, std::int64_t>(3, 1));
    CHECK(std::pair(r.p, r.q) == std::pair<std::int64_t, std::int64_t>(3, 2));
    auto [l2, r2] = children_w1(NodeLabel{3, 2, ""});
    CHECK(std::pair(l2.p, l2.q) == std::pair<std::int64_t, std::int64_t>(5, 2));
    CHECK(std::pair(r2.p, r2.q) == std::pair<std::int64_t, std::int64_t>(4, 3));
    auto [l3, r3] = children_w1(NodeLabel{3, 1, ""});
    CHECK(std::pair(l3.p, l3.q) == std::pair<std::int64_t, std::int64_t>(4, 1));
    CHECK(std::pair(r3.p, r3.q) == std::pair<std::int64_t, std::int64_t>(5, 3));

    CHECK(label_w2(NodeLabel{2, 1, ""}).q == 1);
    CHECK(label_w2(NodeLabel{5, 3, ""}).q == 2);
    CHECK(label_w2(NodeLabel{4, 3, ""}).q == 3);
  }

  TEST_CASE("enumerate") {
    CHECK(pairs(enumerate(TreeVariant::W1, 0)) == PQ{{2, 1}});
    CHECK(pairs(enumerate(TreeVariant::W1, 1)) == PQ{{2, 1}, {3, 1}, {3, 2}});
    CHECK(pairs(enumerate(TreeVariant::W2, 1)) == PQ{{2, 1}, {3, 1}, {3, 2}});
    // Row 2 derived from the recursion: (4,1),(5,3),(5,2),(4,3) and their inverses.
    auto w1 = pairs(enumerate(TreeVariant::W1, 2));
    CHECK(PQ(w1.begin() + 3, w1.end()) == PQ{{4, 1}, {5, 3}, {5, 2}, {4, 3}});
    auto w2 = pairs(enumerate(TreeVariant::W2, 2));
    CHECK(PQ(w2.begin() + 3, w2.end()) == PQ{{4, 1}, {5, 2}, {5, 3}, {4, 3}});
    CHECK_THROWS_AS(enumerate(TreeVariant::W1, 21), DomainError);
    CHECK(enumerate(TreeVariant::W1, 12).size() == 8191);
  }

  TEST_CASE("every coprime pair appears once") {
    const auto nodes = enumerate_bounded(TreeVariant::W1, 100);
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (auto& n : nodes) CHECK(seen.emplace(n.p, n.q).second);
    std::size_t expected = 0;
    for (std::int64_t p = 2; p <= 100; ++p)
      for (std::int64_t q = 1; q < p; ++q) expected += std::gcd(p, q) == 1;
    CHECK(seen.size() == expected);
    for (auto& n : nodes) {
      const NodeLabel w = label_w2(n);
      CHECK(label_w2(w).q == n.q);
      CHECK((w.q * n.q) % n.p == 1 % n.p);
    }
  }

  TEST_CASE("s1 rewrites") {
    CHECK(s1_step({4}) == std::pair(HJString{5, 2}, HJString{2, 5}));
    CHECK(s1_step({5, 2}) == std::pair(HJString{6, 2, 2}, HJString{2, 5, 3}));
    CHECK(s1_step({2, 2, 2}) == std::pair(HJString{3, 2, 2, 2}, HJString{2, 2, 2, 3}));
  }

  TEST_CASE("s2 rewrites") {
    auto [l, r] = s2_step(WahlString::minus_root());
    CHECK(l.coeffs == HJString{5, 2});
    CHECK(r.coeffs == HJString{2, 5});
    CHECK(l.center == 0);
    CHECK(r.center == 1);

    // [2,2,5,4] = wahl_minus(7,5): centre 2 splits 5 = 3 + 2.
    WahlString w{WahlFamily::Minus, {2, 2, 5, 4}, 2, 3, 2};
    auto [a, b] = s2_step(w);
    // The W2 node labelled (7,5) has children labelled (10,7) and (11,8).
    CHECK(a.coeffs == HJString{2, 2, 6, 2, 4});
    CHECK(a.coeffs == wahl_minus(10, 7));
    CHECK(b.coeffs == HJString{2, 2, 3, 5, 4});
    CHECK(b.coeffs == wahl_minus(11, 8));

    auto [pl, pr] = s2_step(WahlString::plus_root());
    CHECK(pl.coeffs == HJString{3, 2, 2, 2});
    CHECK(pr.coeffs == HJString{2, 2, 2, 3});

    CHECK_THROWS_AS(s2_step(WahlString{WahlFamily::Minus, {2, 2, 5, 4}, 1, 3, 2}), DomainError);
  }

  TEST_CASE("lemma: both recursions give the wahl strings") {
    const auto r0 = verify_lemma_wahl(0);
    CHECK(r0.ok());
    CHECK(r0.strings == 1);
    const auto r1 = verify_lemma_wahl(1);
    CHECK(r1.ok());
    CHECK(r1.level_sizes == std::vector<std::size_t>{1, 2});
    const auto p3 = verify_lemma_wahl(3, WahlFamily::Plus);
    CHECK_MESSAGE(p3.ok(), p3.first_mismatch);
    CHECK(p3.level_sizes.back() == 8);
    const auto m10 = verify_lemma_wahl(10);
    CHECK_MESSAGE(m10.ok(), m10.first_mismatch);
    CHECK(m10.strings == 2047);
    const auto p10 = verify_lemma_wahl(10, WahlFamily::Plus);
    CHECK_MESSAGE(p10.ok(), p10.first_mismatch);
    CHECK_THROWS_AS(verify_lemma_wahl(13), DomainError);
  }
}
