// Planar link diagrams stored as a rotation system on half-edges.
//
// Every node has four slots numbered counterclockwise. A crossing uses all
// four; a marker (a 2-valent point on an edge, used to anchor bands and to
// represent crossingless loops) uses slots 0 and 1. Half-edge h = 4*node+slot.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lensball {

class InvalidDiagram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NodeKind : std::uint8_t { Dead, Crossing, Marker };

/// One crossing of a PD tuple in the KnotTheory convention: edge labels listed
/// counterclockwise starting from the incoming under-strand.
using PDTuple = std::array<int, 4>;

class PDCode {
 public:
  static constexpr int npos = -1;

  // --- construction -------------------------------------------------------
  /// under02: the under-strand runs through slots 0 and 2.
  int add_crossing(bool under02);
  int add_marker();
  /// A crossingless unknotted loop made of one marker; returns the marker.
  int add_free_loop();
  void connect(int h1, int h2);
  void disconnect(int h);
  void kill(int node);
  /// Removes a marker by joining its two neighbours. A marker alone on a
  /// loop is kept; returns false in that case.
  bool splice_out(int marker);
  /// Inserts a marker on the edge at h; returns it. Slot 0 faces h.
  int subdivide(int h);

  /// Builds a diagram from PD tuples. Orientation follows the tuples.
  static PDCode from_tuples(const std::vector<PDTuple>& xs, int free_loops = 0);

  // --- access ---------------------------------------------------------------
  int node_count() const { return static_cast<int>(kind_.size()); }
  NodeKind kind(int n) const { return kind_[static_cast<std::size_t>(n)]; }
  bool is_crossing(int n) const { return kind(n) == NodeKind::Crossing; }
  bool is_marker(int n) const { return kind(n) == NodeKind::Marker; }
  int degree(int n) const { return is_crossing(n) ? 4 : is_marker(n) ? 2 : 0; }
  bool under02(int n) const { return under02_[static_cast<std::size_t>(n)] != 0; }
  void set_under02(int n, bool v) { under02_[static_cast<std::size_t>(n)] = v; }
  int mate(int h) const { return mate_[static_cast<std::size_t>(h)]; }
  static int node_of(int h) { return h >> 2; }
  static int slot_of(int h) { return h & 3; }
  static int he(int node, int slot) { return 4 * node + slot; }
  /// True when the strand leaves its node through h (after orient()).
  bool outgoing(int h) const { return out_[static_cast<std::size_t>(h)] != 0; }

  int crossing_count() const;
  std::vector<int> live_half_edges() const;

  /// Slot reached by continuing straight through the node.
  int through(int h) const;
  /// Next half-edge along the face lying to the left of h (h taken outgoing).
  int face_next(int h) const;

  // --- derived structure --------------------------------------------------
  /// Face id of every live half-edge (the face on the left when leaving
  /// through it); -1 on unused slots. Returns the face count.
  int faces(std::vector<int>& face_of) const;
  /// Component id per live half-edge; returns the component count.
  int components(std::vector<int>& comp_of) const;
  int component_count() const;
  /// Connected pieces of the underlying planar graph.
  int piece_count() const;

  /// Re-derives the orientation bits so that every component is coherently
  /// oriented. The current bit on the smallest half-edge of a component wins.
  void orient();
  /// Reverses the orientation of the component through h.
  void reverse_component(int h);
  /// +1 / -1 for a crossing, using the current orientation.
  int sign(int crossing) const;
  int writhe() const;

  /// Swaps every crossing.
  PDCode mirror() const;
  /// Removes dead nodes and renumbers; remap[old] = new or -1.
  PDCode compacted(std::vector<int>* remap = nullptr) const;

  /// Checks mates, marker loops, and V - E + F = 2 on every piece.
  void validate() const;

  /// PD tuples (KnotTheory convention) and the number of crossingless loops.
  std::vector<PDTuple> tuples(int* free_loops = nullptr) const;

 private:
  void grow();
  std::vector<NodeKind> kind_;
  std::vector<std::uint8_t> under02_;
  std::vector<int> mate_;
  std::vector<std::uint8_t> out_;
};

}  // namespace lensball
