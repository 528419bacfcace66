// The inverse Stern-Brocot tree W1, the Stern-Brocot tree W2, and the two
// recursions that generate Wahl strings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lensball/hjcf.hpp"

namespace lensball {

enum class TreeVariant { W1, W2 };

struct NodeLabel {
  std::int64_t p = 2;
  std::int64_t q = 1;
  std::string path;  // 'L'/'R' steps from the root

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// Left child (p+q, q), right child (2p-q, p).
std::pair<NodeLabel, NodeLabel> children_w1(const NodeLabel& n);

/// (p, q^{-1} mod p).
NodeLabel label_w2(const NodeLabel& n);

inline constexpr int kDefaultMaxDepth = 20;

/// Breadth-first listing of every node at depth <= depth.
std::vector<NodeLabel> enumerate(TreeVariant v, int depth, int max_depth = kDefaultMaxDepth);

/// Every node with p <= pmax, breadth-first. p grows along every edge, so the
/// pruned tree is finite.
std::vector<NodeLabel> enumerate_bounded(TreeVariant v, std::int64_t pmax);

/// Rewrite [c1..ck] -> [c1+1,..,ck,2] and [2,c1,..,ck+1].
std::pair<HJString, HJString> s1_step(const HJString& s);

enum class WahlFamily { Minus, Plus };

/// A Wahl string with its distinguished centre position.
///   Minus: coeffs[center] = a + b (the merged a_k + b_l entry).
///   Plus:  coeffs[center] = 2 with a = coeffs[center-1], b = coeffs[center+1].
struct WahlString {
  WahlFamily family = WahlFamily::Minus;
  HJString coeffs{4};
  std::size_t center = 0;
  std::int64_t a = 2;
  std::int64_t b = 2;

  static WahlString minus_root() { return {}; }
  static WahlString plus_root() { return {WahlFamily::Plus, {2, 2, 2}, 1, 2, 2}; }
  void validate() const;

  friend bool operator==(const WahlString&, const WahlString&) = default;
};

std::pair<WahlString, WahlString> s2_step(const WahlString& w);

struct LemmaWahlReport {
  int depth = 0;
  WahlFamily family = WahlFamily::Minus;
  std::size_t strings = 0;      // total over all levels
  std::vector<std::size_t> level_sizes;
  bool sets_equal = true;
  bool nodewise = true;          // child-by-child agreement with the tree labels
  bool shape = true;             // length d+k0, coefficient sum grows by 3 per level
  std::string first_mismatch;
  bool ok() const { return sets_equal && nodewise && shape; }
};

inline constexpr int kMaxLemmaDepth = 12;

/// Compares, level by level, the strings produced by s1_step, by s2_step and
/// by wahl_minus / wahl_plus on the W1 and W2 labels.
LemmaWahlReport verify_lemma_wahl(int depth, WahlFamily family = WahlFamily::Minus);

}  // namespace lensball
