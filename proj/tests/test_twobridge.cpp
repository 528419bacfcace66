#include <doctest.h>

#include "lensball/bracket.hpp"
#include "lensball/covers.hpp"
#include "lensball/invariants.hpp"
#include "lensball/tait_builder.hpp"
#include "lensball/twobridge.hpp"

using namespace lensball;

namespace {

// Independent oracle: Laplace expansion on machine integers.
long long laplace(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  long long s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      sub.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * laplace(sub);
  }
  return s;
}

std::vector<std::vector<long long>> to_ll(const IntMatrix& a) {
  std::vector<std::vector<long long>> m(a.rows, std::vector<long long>(a.cols));
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = a(i, j).get_si();
  return m;
}

bool has_shape(const TaitGraph& g, const HJString& c) {
  for (auto& s : gamma_shape(g))
    if (s == c) return true;
  return false;
}

long gcdl(long a, long b) { return b == 0 ? a : gcdl(b, a % b); }

}  // namespace

TEST_SUITE("twobridge") {
  TEST_CASE("tait graph examples") {
    const GammaGraph g = tait_graph(18, 11);
    CHECK(g.graph.vertex_count() == 4);
    CHECK(g.graph.valence(1) == 2);
    CHECK(g.graph.valence(2) == 3);
    CHECK(g.graph.valence(3) == 4);
    CHECK(g.graph.multiplicity(1, 2) == 1);
    CHECK(g.graph.multiplicity(2, 3) == 1);
    for (auto& e : g.graph.edges) {
      const bool path = (e.tail == 1 && e.head == 2) || (e.tail == 2 && e.head == 3);
      CHECK((path || e.head == 0 || e.tail == 0));
    }
    CHECK(tait_graph(2, 1).graph.vertex_count() == 2);
    CHECK(tait_graph(2, 1).graph.multiplicity(0, 1) == 2);
    CHECK(tait_graph(3, 1).graph.multiplicity(0, 1) == 3);
  }

  TEST_CASE("planar dual of the tait graph") {
    CHECK(has_shape(planar_dual(tait_graph(8, 3).graph), {2, 3, 2}));
    CHECK(has_shape(planar_dual(tait_graph(2, 1).graph), {2}));
    CHECK(has_shape(planar_dual(tait_graph(7, 5).graph), {4, 2}));
    for (long p = 2; p <= 30; ++p)
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1) continue;
        const TaitGraph g = tait_graph(p, q).graph;
        const TaitGraph d = planar_dual(g);
        CHECK(has_shape(d, hj_expand(p, p - q)));
        CHECK(has_shape(planar_dual(d), hj_expand(p, q)));
      }
  }

  TEST_CASE("standard diagrams") {
    const PDCode t = standard_diagram(3, 1);
    CHECK(t.crossing_count() == 3);
    // Left-handed trefoil: -t^-4 + t^-3 + t^-1 (exponents doubled).
    CHECK(jones(t) == LaurentPoly::from_terms({{-8, -1}, {-6, 1}, {-2, 1}}));
    CHECK(bracket_state_sum_serial(t) == kauffman_bracket(t));
    CHECK(standard_diagram(2, 1).crossing_count() == 2);
    CHECK(standard_diagram(2, 1).component_count() == 2);
    // One crossing per edge of the Tait graph: sum of coefficients minus the
    // k - 1 path edges counted twice.
    CHECK(standard_diagram(49, 34).crossing_count() == 13 - 3);
    CHECK(determinant(standard_diagram(49, 34)) == 49);
    CHECK(determinant(standard_diagram(18, 11)) == 18);
  }

  TEST_CASE("determinant and components over a range") {
    for (long p = 2; p <= 40; ++p)
      for (long q = 1; q < p; ++q) {
        if (gcdl(p, q) != 1) continue;
        const PDCode d = standard_diagram(p, q);
        CHECK(determinant(d) == p);
        CHECK(d.component_count() == (p % 2 ? 1 : 2));
        const HJString c = hj_expand(p, q);
        long sum = 0;
        for (auto x : c) sum += x;
        if (sum <= 20) CHECK(determinant_from_bracket(kauffman_bracket(d)) == p);
      }
  }

  TEST_CASE("goeritz matrices") {
    const IntMatrix g31 = goeritz(3, 1);
    CHECK(g31.rows == 1);
    CHECK(abs(g31(0, 0)) == 3);
    CHECK(laplace(to_ll(goeritz(18, 11))) == 18);
    const IntMatrix g49 = goeritz(49, 34);
    CHECK(g49.rows == 4);
    CHECK(std::llabs(laplace(to_ll(g49))) == 49);
    // Cyclic: the minor without the first row and last column is a unit.
    auto m = to_ll(g49);
    std::vector<std::vector<long long>> corner;
    for (std::size_t i = 1; i < 4; ++i) corner.emplace_back(m[i].begin(), m[i].begin() + 3);
    CHECK(std::llabs(laplace(corner)) == 1);
    CHECK(snf(g49).str() == "Z/49");
    // The diagram's own chessboard form agrees.
    CHECK(abs(bareiss_det(diagram_goeritz(standard_diagram(49, 34), 0))) == 49);
  }

  TEST_CASE("normal forms") {
    CHECK(same_link(10, 7, 10, 3));
    CHECK(normal_form(10, 7) == normal_form(10, 3));
    CHECK(same_link(5, 2, 5, 3));
    CHECK(!same_link(7, 1, 7, 2));
    CHECK(normal_form(7, 1).str() == "S(7,1)");
    CHECK_THROWS_AS(normal_form(6, 4), DomainError);
  }
}
