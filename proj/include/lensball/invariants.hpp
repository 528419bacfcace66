// Link invariants computed from a planar diagram.
#pragma once

#include "lensball/bracket.hpp"
#include "lensball/diagram.hpp"
#include "lensball/matrix.hpp"

namespace lensball {

/// Colour (0 or 1) of every face, with face ids written to face_of. Faces on
/// the two sides of an edge differ. Requires a connected diagram.
std::vector<int> chessboard_colouring(const PDCode& d, std::vector<int>& face_of);

/// Goeritz matrix on the faces of colour `colour` (0 or 1), unreduced.
/// The colouring is the chessboard colouring in which the face on the left
/// of the smallest live half-edge has colour 0. Requires a connected diagram.
IntMatrix goeritz_matrix(const PDCode& d, int colour = 0);

/// |H_1| of the double branched cover; 0 when infinite. Goeritz route; any
/// diagram that is disconnected as a planar graph is split and gives 0.
BigInt determinant(const PDCode& d);

/// The same number read off the bracket at A = exp(i pi / 4).
BigInt determinant_from_bracket(const LaurentPoly& bracket);

int component_count(const PDCode& d);

/// Bracket up to multiplication by a unit +-A^k: shifted to lowest exponent 0
/// with a positive lowest coefficient. Does not depend on orientations.
LaurentPoly normalized_bracket(const LaurentPoly& bracket);

/// Invariant fingerprint used to compare links.
struct LinkEvidence {
  int components = 0;
  BigInt det = 0;
  LaurentPoly bracket;  // normalized
  friend bool operator==(const LinkEvidence&, const LinkEvidence&) = default;
};

/// Simplifies first so that the bracket cap is met where possible.
LinkEvidence link_evidence(const PDCode& d);

/// Components, Jones polynomial and determinant all match the n-component
/// unlink. A certificate, not a proof.
bool is_unlink_certificate(const PDCode& d, int n);

}  // namespace lensball
