#include "lensball/invariants.hpp"

#include <map>

#include "lensball/simplify.hpp"

namespace lensball {

namespace {

// Chessboard colour per face; the colour of face_of[h] and face_of[mate h]
// always differ. Requires a connected diagram.
std::vector<int> chessboard(const PDCode& d, const std::vector<int>& face_of, int nfaces) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nfaces));
  for (int h : d.live_half_edges())
    adj[static_cast<std::size_t>(face_of[static_cast<std::size_t>(h)])].push_back(
        face_of[static_cast<std::size_t>(d.mate(h))]);
  std::vector<int> colour(static_cast<std::size_t>(nfaces), -1);
  std::vector<int> stack;
  const auto hs = d.live_half_edges();
  if (hs.empty()) return colour;
  const int f0 = face_of[static_cast<std::size_t>(hs.front())];
  colour[static_cast<std::size_t>(f0)] = 0;
  stack.push_back(f0);
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      if (colour[static_cast<std::size_t>(g)] == -1) {
        colour[static_cast<std::size_t>(g)] = 1 - colour[static_cast<std::size_t>(f)];
        stack.push_back(g);
      } else if (colour[static_cast<std::size_t>(g)] == colour[static_cast<std::size_t>(f)]) {
        throw InvalidDiagram("diagram has no chessboard colouring");
      }
    }
  }
  return colour;
}

}  // namespace

std::vector<int> chessboard_colouring(const PDCode& d, std::vector<int>& face_of) {
  if (d.piece_count() != 1) throw InvalidDiagram("chessboard_colouring: diagram is not connected");
  const int nf = d.faces(face_of);
  return chessboard(d, face_of, nf);
}

IntMatrix goeritz_matrix(const PDCode& d, int colour) {
  if (d.piece_count() != 1) throw InvalidDiagram("goeritz_matrix: diagram is not connected");
  std::vector<int> face_of;
  const int nf = d.faces(face_of);
  const std::vector<int> col = chessboard(d, face_of, nf);
  std::vector<int> index(static_cast<std::size_t>(nf), -1);
  std::size_t n = 0;
  for (int f = 0; f < nf; ++f)
    if (col[static_cast<std::size_t>(f)] == colour) index[static_cast<std::size_t>(f)] = static_cast<int>(n++);
  IntMatrix g(n, n);
  for (int c = 0; c < d.node_count(); ++c) {
    if (!d.is_crossing(c)) continue;
    // Corner k is the sector between slots k and k+1. A-regions start at the
    // over-strand slot o.
    const int o = d.under02(c) ? 1 : 0;
    int k = 0;
    while (col[static_cast<std::size_t>(face_of[static_cast<std::size_t>(PDCode::he(c, k))])] != colour) ++k;
    const int eta = ((k - o) & 1) == 0 ? 1 : -1;
    const int i = index[static_cast<std::size_t>(face_of[static_cast<std::size_t>(PDCode::he(c, k))])];
    const int j = index[static_cast<std::size_t>(face_of[static_cast<std::size_t>(PDCode::he(c, (k + 2) & 3))])];
    if (i == j) continue;
    const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    g(ui, uj) -= eta;
    g(uj, ui) -= eta;
    g(ui, ui) += eta;
    g(uj, uj) += eta;
  }
  return g;
}

BigInt determinant(const PDCode& d) {
  if (d.piece_count() != 1) return 0;
  if (d.crossing_count() == 0) return 1;
  const IntMatrix g = goeritz_matrix(d, 0);
  if (g.rows <= 1) return 1;
  return abs(bareiss_det(g.minor(0)));
}

BigInt determinant_from_bracket(const LaurentPoly& b) {
  if (b.is_zero()) return 0;
  const int k0 = b.min_exp();
  BigInt s = 0;
  for (auto& [k, c] : b.terms()) {
    if ((k - k0) % 4 != 0) throw std::logic_error("bracket exponents are not congruent mod 4");
    s += (((k - k0) / 4) % 2 == 0) ? BigInt(c) : BigInt(-c);
  }
  return abs(s);
}

int component_count(const PDCode& d) { return d.component_count(); }

LaurentPoly normalized_bracket(const LaurentPoly& b) {
  if (b.is_zero()) return b;
  LaurentPoly r = b.shifted(-b.min_exp());
  return r.coef(0) < 0 ? -r : r;
}

LinkEvidence link_evidence(const PDCode& d0) {
  const PDCode d = simplify(d0);
  return LinkEvidence{d.component_count(), determinant(d), normalized_bracket(kauffman_bracket(d))};
}

bool is_unlink_certificate(const PDCode& d0, int n) {
  const PDCode d = simplify(d0);
  if (d.component_count() != n) return false;
  if (determinant(d) != (n == 1 ? 1 : 0)) return false;
  return jones(d) == unlink_jones(n);
}

}  // namespace lensball
