// Knots with bands: a diagram, bands attached at markers, and a count of the
// minima capping the unlink left after all band moves.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "lensball/diagram.hpp"

namespace lensball {

class UnrealizableBand : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Push the band end across the edge at `edge`, a half-edge whose left face
/// is the face the band end currently sits in. The finger passes over the
/// edge when `over` is set.
struct RouteStep {
  int edge = -1;
  bool over = true;
  friend bool operator==(const RouteStep&, const RouteStep&) = default;
};

/// A band between two markers. attach1/attach2 are marker half-edges; the band
/// lies in the face to the left of leaving each marker through them. Positive
/// half twists put the strand entering from the left (looking from attach1
/// towards attach2) over.
struct BandSpec {
  int attach1 = -1;
  int attach2 = -1;
  std::vector<RouteStep> routing;  // applied to the attach1 end, in order
  int half_twists = 0;
  std::string label;
  friend bool operator==(const BandSpec&, const BandSpec&) = default;
};

struct DiagramWithBands {
  PDCode diagram;
  std::vector<BandSpec> bands;
  int minima = 0;

  int euler() const { return minima - static_cast<int>(bands.size()); }
  /// Markers, disjoint anchors and realizable routing.
  void validate() const;
};

/// Realizes the routing of band `id` as finger moves; the band then has no
/// routing and both ends share a face.
DiagramWithBands realize_routing(const DiagramWithBands& s, std::size_t id);

/// Performs the band move: cut at both anchors, reconnect along the band
/// sides, insert the twist crossings. The band is removed from the list.
DiagramWithBands apply_band_move(const DiagramWithBands& s, std::size_t id);

/// Applies the bands with the given indices (into s.bands) in order. The
/// untouched bands keep their relative order.
DiagramWithBands apply_bands(const DiagramWithBands& s, std::vector<std::size_t> ids);
DiagramWithBands apply_all_bands(const DiagramWithBands& s);

/// The inverse band of the move on band `id`, anchored on the result: applying
/// it to apply_band_move(s, id).diagram gives back s.diagram up to isotopy.
/// Returned as a one-band DiagramWithBands over the post-move diagram.
DiagramWithBands dual_band(const DiagramWithBands& s, std::size_t id);

/// Performs band `id` and puts its dual band first in the list, so that the
/// result describes the same surface seen from the other side of that saddle.
/// The remaining bands keep their order after it.
DiagramWithBands invert_band(const DiagramWithBands& s, std::size_t id);

/// Trades every half twist of band `id` for a kink of the diagram at the
/// band's second foot; the band ends up untwisted and the surface unchanged.
DiagramWithBands untwist_band(const DiagramWithBands& s, std::size_t id);

/// Slides a foot of `mover` over band `over`. The foot must sit next to a foot
/// of `over`, on the same strand with no crossing or other foot between, and
/// in the face that holds `over`. It moves to the matching side of the other
/// foot of `over`. A twisted `over` is untwisted first.
DiagramWithBands band_slide(const DiagramWithBands& s, std::size_t mover, std::size_t over);

/// Whether the surface is orientable: some orientation of the boundary link
/// makes every band coherent when the bands are performed in order.
bool orientable(const DiagramWithBands& s);

/// Components, determinant and normalized bracket after applying each subset
/// of the bands that contains `required` (every subset when required < 0).
struct SubsetProfile {
  std::vector<std::size_t> subset;
  int components = 0;
  std::string det;
  friend bool operator==(const SubsetProfile&, const SubsetProfile&) = default;
};
std::vector<SubsetProfile> subset_profile(const DiagramWithBands& s, int required = -1);

}  // namespace lensball
