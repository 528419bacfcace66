// Linear plumbings, Smith normal forms, lens-space boundaries, and Euler
// characteristic bookkeeping for double branched covers of the 4-ball.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lensball/bands.hpp"
#include "lensball/hjcf.hpp"
#include "lensball/matrix.hpp"
#include "lensball/report.hpp"
#include "lensball/twobridge.hpp"

namespace lensball {

/// Intersection lattice of the linear plumbing of disk bundles over spheres
/// with Euler numbers -w1, ..., -wk: diagonal -wi, off-diagonal 1.
struct PlumbingLattice {
  HJString weights;
  IntMatrix matrix;
  BigInt det = 0;
  bool negative_definite = false;
};

PlumbingLattice linear_lattice(const HJString& weights);

/// Numerator of the chain [c1, ..., ck] computed by the continuant recursion,
/// which stays defined when a partial fraction vanishes.
BigInt chain_numerator(const HJString& c);

/// Finite abelian group (or with free part) as invariant factors: every entry
/// is 0 (a copy of Z) or at least 2, and each divides the next.
struct AbelianGroupData {
  std::vector<BigInt> factors;
  bool trivial() const { return factors.empty(); }
  /// |G|, or 0 when G is infinite.
  BigInt order() const;
  /// "0", "Z/49", "Z/2 + Z/4", "Z".
  std::string str() const;
  friend bool operator==(const AbelianGroupData&, const AbelianGroupData&) = default;
};

/// Cokernel of the matrix.
AbelianGroupData snf(const IntMatrix& m);

/// The lens space bounding the plumbing, as the normal form of hj_eval(w).
TwoBridgeNormalForm boundary_lens(const HJString& weights);

/// Checks on the rational ball B_{p,q}: |H_1| of the boundary is the square
/// p^2, the one-relator presentation from the handle picture gives Z/p, and
/// the branch surface has Euler characteristic 1.
VerificationReport rational_ball_checks(const BigInt& p, const BigInt& q);

struct CoverStats {
  int surface_euler = 0;
  int cover_euler = 0;               // 2 - surface_euler
  std::optional<int> b2;             // known for pushed-in chessboard surfaces
};

/// chi of the double branched cover of the 4-ball along the surface. Pass the
/// plumbing weights when the surface is a pushed-in chessboard surface.
CoverStats cover_stats(const DiagramWithBands& s, const std::optional<HJString>& weights = std::nullopt);

}  // namespace lensball
