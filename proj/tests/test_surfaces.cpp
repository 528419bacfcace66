#include <doctest.h>

#include "lensball/invariants.hpp"
#include "lensball/surfaces.hpp"

using namespace lensball;

namespace {

long gcdl(long a, long b) { return b == 0 ? a : gcdl(b, a % b); }

long coeff_sum(const HJString& c) {
  long s = 0;
  for (auto x : c) s += x;
  return s;
}

}  // namespace

TEST_SUITE("surfaces") {
  TEST_CASE("delta examples") {
    const DiagramWithBands s = delta(2, 1, DeltaStyle::Horizontal);
    CHECK(s.minima == 2);
    CHECK(s.bands.size() == 1);
    CHECK(s.euler() == 1);
    CHECK(is_unlink_certificate(apply_all_bands(s).diagram, 2));
    // Crossings on either side of the vertical band follow 7/5 = [2,2,3] and
    // 7/2 = [4,2]: sum minus the path edges, 5 each.
    CHECK(delta_side_counts(7, 5) == std::pair{5, 5});
    CHECK(delta_side_counts(3, 1) == std::pair{3, 3});
    CHECK(delta(3, 1, DeltaStyle::Vertical).diagram.crossing_count() == 6);
  }

  TEST_CASE("delta over a range") {
    for (long p = 2; p <= 12; ++p)
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1 || coeff_sum(wahl_minus(p, q)) > 20) continue;
        const BoundaryTag k = BoundaryTag::two_bridge(p * p, p * q - 1);
        for (DeltaStyle st : {DeltaStyle::Vertical, DeltaStyle::Horizontal}) {
          const DiagramWithBands s = delta(p, q, st);
          CHECK(s.euler() == 1);
          CHECK(boundary_matches(s.diagram, k));
          CHECK(is_unlink_certificate(apply_all_bands(s).diagram, 2));
          CHECK(orientable(s) == (p % 2 == 1));
        }
        CHECK(is_unlink_certificate(apply_all_bands(delta_both(p, q)).diagram, 3));
      }
  }

  TEST_CASE("recursion steps") {
    const DeltaSurface d21 = delta_surface(2, 1, DeltaStyle::Horizontal);
    const DeltaSurface l = delta_recursion_step(d21, Direction::Left, RecursionStyle::Exp2);
    CHECK(l.p == 3);
    CHECK(l.q == 1);
    CHECK(boundary_matches(l.surface.diagram, BoundaryTag::two_bridge(9, 2)));
    const DeltaSurface r = delta_recursion_step(d21, Direction::Right, RecursionStyle::Exp2);
    CHECK(r.p == 3);
    CHECK(r.q == 2);
    CHECK(boundary_matches(r.surface.diagram, BoundaryTag::two_bridge(9, 5)));
    CHECK_THROWS_AS(delta_recursion_step(d21, Direction::Left, RecursionStyle::Exp1), DomainError);
    const DeltaSurface v = delta_recursion_step(delta_surface(3, 2, DeltaStyle::Vertical), Direction::Left,
                                                RecursionStyle::Exp1);
    // (3, 2^-1 = 2) -> (5, 2) -> (5, 2^-1 = 3).
    CHECK(v.p == 5);
    CHECK(v.q == 3);
  }

  TEST_CASE("f_delta examples") {
    CHECK(delta_half_weights(7, 5) == HJString{2, 2, 4});
    CHECK(delta_half_weights(2, 1) == HJString{3});
    CHECK(delta_half_weights(6, 1) == HJString{7});
    const DiagramWithBands f = f_delta(7, 5);
    CHECK(f.euler() == -2);
    CHECK(boundary_matches(f.diagram, BoundaryTag::two_bridge(10, 7)));
    CHECK(is_unlink_certificate(apply_all_bands(f).diagram, f.minima));
  }

  TEST_CASE("f_prime agrees with f_delta") {
    for (long p = 2; p <= 8; ++p)
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1) continue;
        const DiagramWithBands a = f_delta(p, q), b = f_prime(p, q);
        CHECK(a.euler() == b.euler());
        const Fraction fr = hj_eval(delta_half_weights(p, q));
        CHECK(boundary_matches(b.diagram, BoundaryTag::two_bridge(fr.num, fr.den)));
      }
    CHECK(verify_pps(2, 1).pass());
    CHECK(verify_pps(3, 1).pass());
    CHECK(verify_pps(7, 5).pass());
  }

  TEST_CASE("moebius bands and the twisted annulus") {
    for (auto s : {moebius_minus(), moebius_plus()}) {
      CHECK(s.euler() == 0);
      CHECK(is_unlink_certificate(s.diagram, 1));
      CHECK(!orientable(s));
      CHECK(determinant(s.diagram) == 1);
    }
    CHECK(jones(moebius_plus().diagram) == jones(moebius_minus().diagram));
    const DiagramWithBands f = f_minus4();
    CHECK(f.euler() == 0);
    CHECK(orientable(f));
    CHECK(boundary_matches(f.diagram, BoundaryTag::two_bridge(4, 1)));
  }

  TEST_CASE("boundary sums") {
    const DiagramWithBands a = boundary_sum(delta(2, 1, DeltaStyle::Horizontal), moebius_minus());
    CHECK(a.euler() == 0);
    CHECK(boundary_matches(a.diagram, BoundaryTag::two_bridge(4, 1)));
    CHECK(is_unlink_certificate(apply_all_bands(a).diagram, a.minima));
    CHECK(boundary_sum(moebius_minus(), moebius_minus()).euler() == -1);
    const DiagramWithBands b = boundary_sum(delta(3, 1, DeltaStyle::Vertical), moebius_minus());
    CHECK(determinant(b.diagram) == 9);
    CHECK(boundary_matches(b.diagram, BoundaryTag::two_bridge(9, 2)));
  }

  TEST_CASE("swims") {
    const auto seq = swim_sequence({5, 7}, 1);
    REQUIRE(seq.size() == 3);
    CHECK(seq[1].inner == 3);
    CHECK(seq[2].outer == 3);
    CHECK_THROWS_AS(swim_sequence({4, 6}, 1), DomainError);
  }

  TEST_CASE("family verifiers") {
    CHECK(verify_kh13(3).pass());
    CHECK(verify_kh13(4).pass());
    CHECK(verify_psquared(2).pass());
    CHECK(verify_cp2bar(1).pass());
    CHECK(verify_cp2bar(1, Sign::Plus).pass());
    CHECK(verify_kh12(3).pass());
    CHECK(!verify_kh13(2).pass());
  }

  TEST_CASE("sublevel witnesses") {
    const DiagramWithBands s = kh13_surface(5);
    CHECK(check_sublevel(sublevel(s, {0}, 5, 1)).pass());
    CHECK(!check_sublevel(sublevel(s, {0}, 5, 2)).pass());
    CHECK(!check_sublevel(sublevel(s, {}, 5, 1)).pass());
  }

  TEST_CASE("equivariant blow-up") {
    const DiagramWithBands f = f_prime(2, 1);
    const BlowupResult b = equivariant_blowup(f, sublevel(f, {0}, 2, 1));
    // chi drops by 1 - (1 - k) with k = |[4]| = 1.
    CHECK(b.surface.euler() == f.euler() - 1);
    CHECK(boundary_matches(b.surface.diagram, BoundaryTag::two_bridge(3, 1)));
    CHECK(verify_blowup("cp2bar(2)", cp2bar_surface(2, Sign::Minus),
                        sublevel(cp2bar_surface(2, Sign::Minus), {0}, 8, 3), BoundaryTag::unknot())
              .pass());
    const DiagramWithBands k = kh13_surface(3);
    CHECK_THROWS_AS(equivariant_blowup(k, sublevel(k, {0}, 3, 2)), DomainError);
  }
}
