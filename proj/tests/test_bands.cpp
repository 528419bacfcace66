#include <doctest.h>

#include "lensball/bands.hpp"
#include "lensball/bracket.hpp"
#include "lensball/invariants.hpp"
#include "lensball/simplify.hpp"
#include "lensball/surfaces.hpp"
#include "lensball/tait_builder.hpp"
#include "lensball/twobridge.hpp"

using namespace lensball;

namespace {

// Two marker feet on a crossingless loop, joined by an untwisted band.
DiagramWithBands split_unknot() {
  DiagramWithBands s;
  const int m = s.diagram.add_free_loop();
  const int n = s.diagram.subdivide(PDCode::he(m, 0));
  std::vector<int> f;
  s.diagram.faces(f);
  const int a = PDCode::he(m, 0);
  const int b = f[static_cast<std::size_t>(PDCode::he(n, 0))] == f[static_cast<std::size_t>(a)] ? PDCode::he(n, 0)
                                                                                                  : PDCode::he(n, 1);
  s.bands.push_back(BandSpec{a, b, {}, 0, "split"});
  s.minima = 2;
  s.diagram.orient();
  return s;
}

// Nested pair of bands on the [2,5,3] diagram, both feet of the inner one on
// the arc the outer one spans.
DiagramWithBands nested_pair() {
  TaitGraph g = gamma_graph({2, 5, 3}).graph;
  split_vertex(g, 2, 0, 3, EdgeKind::BlackBand, 0, "A");
  split_vertex(g, g.vertex_count() - 1, 0, 2, EdgeKind::BlackBand, -1, "B");
  return realize(g);
}

std::vector<SubsetProfile> closed_profiles(const DiagramWithBands& s, std::size_t mover, std::size_t over) {
  std::vector<SubsetProfile> out;
  for (auto& pr : subset_profile(s)) {
    const bool has_m = std::find(pr.subset.begin(), pr.subset.end(), mover) != pr.subset.end();
    const bool has_o = std::find(pr.subset.begin(), pr.subset.end(), over) != pr.subset.end();
    if (!has_m || has_o) out.push_back(pr);
  }
  return out;
}

PDCode kink(bool under02) {
  PDCode d;
  const int c = d.add_crossing(under02);
  d.connect(PDCode::he(c, 0), PDCode::he(c, 1));
  d.connect(PDCode::he(c, 2), PDCode::he(c, 3));
  d.orient();
  return d;
}

}  // namespace

TEST_SUITE("linkengine") {
  TEST_CASE("trivial band splits an unknot") {
    const DiagramWithBands s = split_unknot();
    s.validate();
    CHECK(is_unlink_certificate(s.diagram, 1));
    CHECK(is_unlink_certificate(apply_all_bands(s).diagram, 2));
  }

  TEST_CASE("delta_{2,1} bands give the 2-unlink") {
    for (DeltaStyle st : {DeltaStyle::Vertical, DeltaStyle::Horizontal}) {
      const DiagramWithBands s = delta(2, 1, st);
      CHECK(boundary_matches(s.diagram, BoundaryTag::two_bridge(4, 1)));
      CHECK(is_unlink_certificate(apply_all_bands(s).diagram, 2));
    }
    CHECK(is_unlink_certificate(apply_all_bands(delta(7, 5, DeltaStyle::Vertical)).diagram, 2));
  }

  TEST_CASE("unlink certificates") {
    PDCode u2;
    u2.add_free_loop();
    u2.add_free_loop();
    CHECK(is_unlink_certificate(u2, 2));
    CHECK(!is_unlink_certificate(u2, 1));
    CHECK(!is_unlink_certificate(standard_diagram(3, 1), 1));
    CHECK(!is_unlink_certificate(standard_diagram(2, 1), 2));
  }

  TEST_CASE("kh13 blue band gives S(4,1)") {
    const DiagramWithBands raw = kh13_bands(3);
    const PDCode after = apply_band_move(raw, band_index(raw, "blue")).diagram;
    CHECK(determinant(after) == 4);
    CHECK(boundary_matches(after, BoundaryTag::two_bridge(4, 1)));
  }

  TEST_CASE("dual band undoes the move") {
    for (auto s : {delta(3, 1, DeltaStyle::Vertical), delta(5, 2, DeltaStyle::Horizontal), kh13_bands(4)}) {
      for (std::size_t id = 0; id < s.bands.size(); ++id) {
        const DiagramWithBands d = dual_band(s, id);
        REQUIRE(d.bands.size() == 1);
        CHECK(link_evidence(apply_all_bands(d).diagram) == link_evidence(s.diagram));
        const DiagramWithBands inv = invert_band(s, id);
        CHECK(inv.bands.front().label == "dual");
        CHECK(inv.bands.size() == s.bands.size());
      }
    }
  }

  TEST_CASE("band slide keeps the surface and slides back") {
    const DiagramWithBands s = nested_pair();
    const LaurentPoly v = jones(s.diagram);
    for (std::size_t mover = 0; mover < 2; ++mover) {
      const std::size_t over = 1 - mover;
      const DiagramWithBands t = band_slide(s, mover, over);
      CHECK(jones(t.diagram) == v);
      CHECK(closed_profiles(t, mover, over) == closed_profiles(s, mover, over));
      CHECK(orientable(t) == orientable(s));
      const DiagramWithBands u = band_slide(t, mover, over);
      CHECK(subset_profile(u) == subset_profile(s));
    }
  }

  TEST_CASE("untwisting trades twists for kinks") {
    const DiagramWithBands s = delta(3, 1, DeltaStyle::Vertical);
    const DiagramWithBands t = untwist_band(s, 0);
    CHECK(t.bands[0].half_twists == 0);
    CHECK(jones(t.diagram) == jones(s.diagram));
    CHECK(subset_profile(t) == subset_profile(s));
  }

  TEST_CASE("orientability of face surfaces") {
    CHECK(!orientable(face_surface({1})));
    CHECK(orientable(face_surface({2})));
    CHECK(!orientable(face_surface({3})));
    CHECK(orientable(face_surface({4})));
  }

  TEST_CASE("simplify") {
    for (bool u : {true, false}) {
      SimplifyStats st;
      CHECK(simplify(kink(u), &st).crossing_count() == 0);
      CHECK(st.r1 == 1);
    }
    // Hopf link with one crossing switched: two loops cancelling by R2.
    PDCode r2 = PDCode::from_tuples({{4, 1, 3, 2}, {2, 3, 1, 4}});
    r2.set_under02(0, !r2.under02(0));
    SimplifyStats st2;
    CHECK(simplify(r2, &st2).crossing_count() == 0);
    CHECK(st2.r2 == 1);
    for (int n = 1; n <= 2; ++n) {
      const PDCode b = cp2bar_surface(n, Sign::Minus).diagram;
      SimplifyStats st;
      const PDCode s = simplify_with_r3(b, &st);
      CHECK(s.crossing_count() == 0);
      CHECK(st.r3 > 0);
      CHECK(jones(b) == LaurentPoly::monomial(0));
    }
  }

  TEST_CASE("R3 keeps the jones polynomial") {
    const PDCode b = simplify(cp2bar_surface(2, Sign::Minus).diagram);
    const LaurentPoly v = jones(b);
    int moved = 0;
    for (int h : b.live_half_edges()) {
      PDCode d = b;
      if (r3_move(d, h)) {
        ++moved;
        d.validate();
        CHECK(jones(d) == v);
      }
    }
    CHECK(moved > 0);
  }

  TEST_CASE("mirror inverts jones") {
    for (auto c : std::vector<HJString>{{3}, {2, 3}, {5, 2}, {2, 2, 5, 4}, {3, 5, 3, 2}}) {
      const PDCode d = standard_diagram(c);
      CHECK(jones(d.mirror()) == jones(d).inverted());
    }
  }
}
