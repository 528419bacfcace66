// Embedded Tait graphs and their medial link diagrams.
//
// Vertices are the black regions of the chessboard colouring, edges are
// crossings. An edge may instead carry a band: a white band lies in the white
// region obtained by deleting the edge, a black band in the black region
// obtained by contracting it.
#pragma once

#include <string>
#include <vector>

#include "lensball/bands.hpp"

namespace lensball {

enum class EdgeKind { Crossing, WhiteBand, BlackBand };

struct TaitEdge {
  int tail = 0;
  int head = 0;
  EdgeKind kind = EdgeKind::Crossing;
  /// Crossing: +1 or -1. Band: signed number of crossings the band move puts
  /// in its place, in the same units as crossing types.
  int value = 1;
  std::string label;
};

/// An edge end in a rotation. end 0 is the tail, 1 the head.
struct EdgeEnd {
  int edge = 0;
  int end = 0;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

struct TaitGraph {
  std::vector<std::vector<EdgeEnd>> rotation;  // counterclockwise, per vertex
  std::vector<TaitEdge> edges;

  int add_vertex();
  /// Adds the edge without touching the rotations.
  int add_edge(int tail, int head, EdgeKind kind = EdgeKind::Crossing, int value = 1, std::string label = {});
  int vertex_count() const { return static_cast<int>(rotation.size()); }
  int valence(int v) const { return static_cast<int>(rotation[static_cast<std::size_t>(v)].size()); }
  /// Number of edges joining u and w (u != w).
  int multiplicity(int u, int w) const;
  /// Every edge end listed once at the right vertex; planar rotation system.
  void validate() const;
  /// Faces of the embedding as sequences of edge ends.
  std::vector<std::vector<EdgeEnd>> faces() const;
};

/// Moves the `count` edge ends of v's rotation starting at `first` (cyclically)
/// onto a new vertex joined to v by an edge of the given kind. Contracting that
/// edge gives back g. Returns the new edge's index; its tail is v.
int split_vertex(TaitGraph& g, int v, std::size_t first, std::size_t count, EdgeKind kind, int value,
                 std::string label = {});

/// Adds an edge from u to w drawn through a face: its tail end is inserted
/// before position iu of u's rotation, its head end before position iw of w's.
/// Throws InvalidDiagram if the result is not planar.
int add_chord(TaitGraph& g, int u, std::size_t iu, int w, std::size_t iw, EdgeKind kind, int value,
              std::string label = {});

/// Planar dual, computed from the rotation system. Edge i of the dual crosses
/// edge i of g; crossing types flip and white and black bands swap.
TaitGraph planar_dual(const TaitGraph& g);

/// Replaces every band by what its band move leaves behind: a white band by
/// a path of |value| crossings (contracted when value is 0), a black band by
/// |value| parallel crossings (deleted when value is 0).
TaitGraph apply_tait_bands(const TaitGraph& g);

/// Medial diagram with the bands as BandSpecs. minima is left at 0.
DiagramWithBands realize(const TaitGraph& g);

/// under02 of a crossing of the given Tait type.
bool under02_for_type(int type);

}  // namespace lensball
