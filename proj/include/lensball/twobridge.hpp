// Tait graphs of two-bridge links, their standard alternating diagrams and
// the two-bridge classification.
#pragma once

#include <string>
#include <vector>

#include "lensball/diagram.hpp"
#include "lensball/hjcf.hpp"
#include "lensball/matrix.hpp"
#include "lensball/tait_builder.hpp"

namespace lensball {

/// Gamma for [c1..ck]: vertex 0 is v0, vertex i is v_i. Path edges join v_i
/// and v_{i+1}; the remaining edges join v_i to v0 and are drawn on one side.
struct GammaGraph {
  TaitGraph graph;
  HJString coeffs;
  std::vector<int> path_edges;               // path_edges[i-1] joins v_i, v_{i+1}
  std::vector<std::vector<int>> v0_edges;    // v0_edges[i-1]: edges v_i - v0, left to right
};

GammaGraph gamma_graph(const HJString& coeffs);
GammaGraph tait_graph(const BigInt& p, const BigInt& q);

/// Medial diagram of the Gamma graph: sum(c) - (k-1) crossings.
PDCode standard_diagram(const HJString& coeffs);
PDCode standard_diagram(const BigInt& p, const BigInt& q);

/// Goeritz form on the black regions (the Tait graph vertices) with v0
/// deleted: the tridiagonal matrix with c_i on the diagonal.
IntMatrix goeritz(const BigInt& p, const BigInt& q);
/// Same form computed from the diagram: colour 0 or 1 of its chessboard
/// colouring, with the first face deleted.
IntMatrix diagram_goeritz(const PDCode& d, int colour);

struct TwoBridgeNormalForm {
  BigInt p = 0;
  BigInt q = 0;  // min(q, q^-1 mod p)
  std::string str() const;
  friend bool operator==(const TwoBridgeNormalForm&, const TwoBridgeNormalForm&) = default;
};

TwoBridgeNormalForm normal_form(const BigInt& p, const BigInt& q);
bool same_link(const BigInt& p, const BigInt& q, const BigInt& p2, const BigInt& q2);

/// Reads back [c1..ck] from a graph shaped like some Gamma: a hub vertex whose
/// removal leaves a simple path. Returns every reading (either direction,
/// any hub); empty when the graph has no such shape.
std::vector<HJString> gamma_shape(const TaitGraph& g);

}  // namespace lensball
