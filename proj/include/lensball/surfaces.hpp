// Surfaces in the 4-ball as knots with bands: the slice disks Delta_{p,q},
// pushed-in chessboard surfaces, Moebius bands, boundary sums, and the
// families built on Wahl diagrams, each with a verifier.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lensball/bands.hpp"
#include "lensball/hjcf.hpp"
#include "lensball/report.hpp"
#include "lensball/simplify.hpp"
#include "lensball/twobridge.hpp"

namespace lensball {

enum class DeltaStyle { Vertical, Horizontal };
enum class Direction { Left, Right };
enum class RecursionStyle { Exp1, Exp2 };
enum class Tri { No, Yes, Unknown };
enum class Sign { Minus, Plus };

std::string to_string(DeltaStyle s);
std::string to_string(Tri t);

/// A two-bridge link (unknot when p == 1) or an unlink of n >= 2 components.
struct BoundaryTag {
  int unlink = 0;
  TwoBridgeNormalForm link{1, 0};

  static BoundaryTag two_bridge(const BigInt& p, const BigInt& q);
  static BoundaryTag unknot() { return two_bridge(1, 0); }
  static BoundaryTag unlink_of(int n);
  std::string str() const;
  friend bool operator==(const BoundaryTag&, const BoundaryTag&) = default;
};

/// Whether the diagram's invariants match the tagged link: unlink
/// certificates for unlinks and the unknot, link evidence against the
/// standard diagram otherwise.
bool boundary_matches(const PDCode& d, const BoundaryTag& tag);

struct SurfaceStats {
  int euler = 0;
  int zero_handles = 0;
  int one_handles = 0;
  BoundaryTag boundary;
  bool boundary_verified = false;
  Tri orientable = Tri::Unknown;
};

SurfaceStats surface_stats(const DiagramWithBands& s, const BoundaryTag& boundary);

/// Index of the first band with this label; throws if there is none.
std::size_t band_index(const DiagramWithBands& s, const std::string& label);

// --- slice disks -------------------------------------------------------------

/// Delta_{p,q} on the standard diagram of K_{p,q} = S(p^2, pq-1), with one
/// band and two minima. The vertical band splits the centre vertex of the
/// Wahl string; the horizontal band splits the outer region.
DiagramWithBands delta(const BigInt& p, const BigInt& q, DeltaStyle style);

/// Crossings on the a-side and b-side of the vertical band.
std::pair<int, int> delta_side_counts(const BigInt& p, const BigInt& q);

/// Both bands on one diagram (labels "vertical", "horizontal"), three minima.
DiagramWithBands delta_both(const BigInt& p, const BigInt& q);

struct DeltaSurface {
  BigInt p, q;
  DeltaStyle style = DeltaStyle::Vertical;
  DiagramWithBands surface;
};

DeltaSurface delta_surface(const BigInt& p, const BigInt& q, DeltaStyle style);

/// One step down the tree of slice disks. Exp2 pairs with the horizontal band
/// and moves (p, q) to (p+q, q) on the left, (2p-q, p) on the right. Exp1
/// pairs with the vertical band and makes the same move on (p, q^-1 mod p).
/// Throws DomainError on a style mismatch.
DeltaSurface delta_recursion_step(const DeltaSurface& s, Direction dir, RecursionStyle style);

// --- pushed-in chessboard surfaces ------------------------------------------

/// The surface whose disks are the white regions of the standard diagram of
/// [c] and whose bands sit at its crossings. Euler characteristic 1 - len(c);
/// its double cover is the linear plumbing on c.
DiagramWithBands face_surface(const HJString& c);

/// Untwisted corner bands at every crossing of d, in the regions of the given
/// colour (chessboard_colouring convention). minima is the number of those
/// regions.
DiagramWithBands corner_surface(const PDCode& d, int colour);

/// [a1, ..., a_{k-1}, a_k + 1] for p/q = [a1, ..., ak].
HJString delta_half_weights(const BigInt& p, const BigInt& q);

/// F^delta_{p,q}: the face surface of delta_half_weights(p, q).
DiagramWithBands f_delta(const BigInt& p, const BigInt& q);

/// F'_{p,q}: the vertical Delta_{p,q} band ("pink") plus blue white bands on
/// all but the innermost crossing of the b-side joined to the outer region.
/// Blue bands are listed first.
DiagramWithBands f_prime(const BigInt& p, const BigInt& q);

/// Unknotted Moebius bands with unknot boundary. Normal Euler numbers are
/// carried as data.
DiagramWithBands moebius_minus();
DiagramWithBands moebius_plus();
inline constexpr int kNormalEulerMoebiusMinus = 2;
inline constexpr int kNormalEulerMoebiusPlus = -2;

/// Twisted annulus on S(4,1), double cover V_{-4}.
DiagramWithBands f_minus4();

DiagramWithBands mirror(const DiagramWithBands& s);

/// Boundary connected sum: the diagrams are joined by cutting one edge of
/// each, and the two surfaces share one minimum. chi adds and drops by 1.
DiagramWithBands boundary_sum(const DiagramWithBands& s1, const DiagramWithBands& s2);

// --- sublevels ----------------------------------------------------------------

/// Performing band_subset on parent leaves residual, which should be a slice
/// disk Delta_{p,q}.
struct SublevelWitness {
  DiagramWithBands parent;
  std::vector<std::size_t> band_subset;
  DiagramWithBands residual;
  BigInt p = 0, q = 0;
};

SublevelWitness sublevel(const DiagramWithBands& parent, std::vector<std::size_t> subset, const BigInt& p,
                         const BigInt& q);

/// Residual has one band and two minima, its boundary is K_{p,q}, and its band
/// gives a 2-unlink certificate.
VerificationReport check_sublevel(const SublevelWitness& w);

// --- families -----------------------------------------------------------------

/// Wahl diagram of K_{p,1} with a blue band (move gives K_{2,1}) and a red
/// band (move gives the 2-unlink); the surface is the blue band inverted, so
/// its boundary is K_{2,1} and its bands are the inverse of blue, then red.
DiagramWithBands kh13_bands(int p);
DiagramWithBands kh13_surface(int p);

/// Same shape on K_{p^2,p-1}; blue gives K_{p,1}.
DiagramWithBands psquared_bands(int p);
DiagramWithBands psquared_surface(int p);

/// Minus: Wahl diagram of K_{F(2n+2),F(2n)} with a blue band to the unknot and
/// a red band to the 2-unlink. Plus: the same on K_{F(2n+1),F(2n-1)}.
DiagramWithBands cp2bar_bands(int n, Sign sign);
DiagramWithBands cp2bar_surface(int n, Sign sign);

/// A nested pair of bands with the crossing counts between their ends.
struct NestedPair {
  int inner = 0;
  int outer = 0;
};

/// Band swims, run symbolically: each swim lowers both counts by 2.
std::vector<NestedPair> swim_sequence(NestedPair start, int stop_inner);

VerificationReport verify_delta(const BigInt& p, const BigInt& q);
VerificationReport verify_pps(const BigInt& p, const BigInt& q);
VerificationReport verify_kh12(int p);
VerificationReport verify_kh13(int p);
VerificationReport verify_psquared(int p);
VerificationReport verify_cp2bar(int n, Sign sign = Sign::Minus);

// --- equivariant rational blow-up -------------------------------------------

struct BlowupResult {
  DiagramWithBands surface;
  int colour = 0;
  int pushed_in_euler = 0;
  int delta_euler = 0;
};

/// Replaces the slice disk certified by w with the pushed-in chessboard
/// surface of its boundary, then undoes the subset bands so that the
/// boundary is the parent's again. Throws DomainError for an invalid witness.
BlowupResult equivariant_blowup(const DiagramWithBands& s, const SublevelWitness& w);

/// Boundary preserved, chi ledger, unlink after all bands.
VerificationReport verify_blowup(const std::string& name, const DiagramWithBands& s, const SublevelWitness& w,
                                 const BoundaryTag& boundary);

}  // namespace lensball
