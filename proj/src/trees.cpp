#include "lensball/trees.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lensball {

std::pair<NodeLabel, NodeLabel> children_w1(const NodeLabel& n) {
  return {NodeLabel{n.p + n.q, n.q, n.path + 'L'}, NodeLabel{2 * n.p - n.q, n.p, n.path + 'R'}};
}

NodeLabel label_w2(const NodeLabel& n) {
  const BigInt inv = mod_inverse(BigInt(static_cast<long>(n.q)), BigInt(static_cast<long>(n.p)));
  return NodeLabel{n.p, inv.get_si(), n.path};
}

namespace {

// One BFS level -> the next. Children of node i land at 2i and 2i+1, so the
// output order does not depend on scheduling.
std::vector<NodeLabel> expand_level(const std::vector<NodeLabel>& level) {
  std::vector<NodeLabel> next(2 * level.size());
  const auto n = static_cast<std::ptrdiff_t>(level.size());
#pragma omp parallel for if (n > 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto [l, r] = children_w1(level[i]);
    next[2 * i] = std::move(l);
    next[2 * i + 1] = std::move(r);
  }
  return next;
}

std::vector<std::vector<NodeLabel>> w1_levels(int depth) {
  std::vector<std::vector<NodeLabel>> levels{{NodeLabel{}}};
  for (int d = 1; d <= depth; ++d) levels.push_back(expand_level(levels.back()));
  return levels;
}

}  // namespace

std::vector<NodeLabel> enumerate(TreeVariant v, int depth, int max_depth) {
  if (depth < 0 || depth > max_depth)
    throw DomainError("enumerate: depth " + std::to_string(depth) + " outside [0," + std::to_string(max_depth) + "]");
  std::vector<NodeLabel> out;
  for (auto& level : w1_levels(depth))
    for (auto& n : level) out.push_back(v == TreeVariant::W1 ? n : label_w2(n));
  return out;
}

std::vector<NodeLabel> enumerate_bounded(TreeVariant v, std::int64_t pmax) {
  std::vector<NodeLabel> out;
  if (pmax < 2) return out;
  std::vector<NodeLabel> level{NodeLabel{}};
  while (!level.empty()) {
    std::vector<NodeLabel> next;
    for (auto& n : level) {
      out.push_back(v == TreeVariant::W1 ? n : label_w2(n));
      auto [l, r] = children_w1(n);
      if (l.p <= pmax) next.push_back(std::move(l));
      if (r.p <= pmax) next.push_back(std::move(r));
    }
    level = std::move(next);
  }
  return out;
}

std::pair<HJString, HJString> s1_step(const HJString& s) {
  if (s.empty()) throw DomainError("s1_step: empty string");
  HJString left = s, right;
  left.front() += 1;
  left.push_back(2);
  right.reserve(s.size() + 1);
  right.push_back(2);
  right.insert(right.end(), s.begin(), s.end());
  right.back() += 1;
  return {left, right};
}

void WahlString::validate() const {
  if (a < 2 || b < 2) throw DomainError("WahlString: split parts must be >= 2");
  if (family == WahlFamily::Minus) {
    if (center >= coeffs.size() || coeffs[center] != a + b)
      throw DomainError("WahlString: centre does not hold a+b in " + to_string(coeffs));
  } else {
    if (center == 0 || center + 1 >= coeffs.size() || coeffs[center] != 2 || coeffs[center - 1] != a ||
        coeffs[center + 1] != b)
      throw DomainError("WahlString: malformed plus-family centre in " + to_string(coeffs));
  }
}

std::pair<WahlString, WahlString> s2_step(const WahlString& w) {
  w.validate();
  const auto& c = w.coeffs;
  const auto at = [&](std::size_t i) { return c.begin() + static_cast<std::ptrdiff_t>(i); };
  WahlString left{w.family, {}, w.center, w.a + 1, 2};
  WahlString right{w.family, {}, w.center + 1, 2, w.b + 1};
  if (w.family == WahlFamily::Minus) {
    // [.., a+b, ..] -> [.., (a+1)+2, b, ..] and [.., a, 2+(b+1), ..]
    left.coeffs.assign(c.begin(), at(w.center));
    left.coeffs.push_back(w.a + 1 + 2);
    left.coeffs.push_back(w.b);
    left.coeffs.insert(left.coeffs.end(), at(w.center + 1), c.end());

    right.coeffs.assign(c.begin(), at(w.center));
    right.coeffs.push_back(w.a);
    right.coeffs.push_back(2 + w.b + 1);
    right.coeffs.insert(right.coeffs.end(), at(w.center + 1), c.end());
  } else {
    // [.., a, 2, b, ..] -> [.., a+1, 2, 2, b, ..] and [.., a, 2, 2, b+1, ..]
    left.coeffs.assign(c.begin(), at(w.center - 1));
    left.coeffs.insert(left.coeffs.end(), {w.a + 1, 2, 2, w.b});
    left.coeffs.insert(left.coeffs.end(), at(w.center + 2), c.end());

    right.coeffs.assign(c.begin(), at(w.center - 1));
    right.coeffs.insert(right.coeffs.end(), {w.a, 2, 2, w.b + 1});
    right.coeffs.insert(right.coeffs.end(), at(w.center + 2), c.end());
  }
  left.validate();
  right.validate();
  return {left, right};
}

LemmaWahlReport verify_lemma_wahl(int depth, WahlFamily family) {
  if (depth < 0 || depth > kMaxLemmaDepth)
    throw DomainError("verify_lemma_wahl: depth must be in [0," + std::to_string(kMaxLemmaDepth) + "]");
  LemmaWahlReport rep;
  rep.depth = depth;
  rep.family = family;
  const bool minus = family == WahlFamily::Minus;
  const auto wahl = [&](const NodeLabel& n) {
    return minus ? wahl_minus(BigInt(static_cast<long>(n.p)), BigInt(static_cast<long>(n.q)))
                 : wahl_plus(BigInt(static_cast<long>(n.p)), BigInt(static_cast<long>(n.q)));
  };
  const auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.first_mismatch.empty()) rep.first_mismatch = what;
  };

  std::vector<HJString> s1{minus ? HJString{4} : HJString{2, 2, 2}};
  std::vector<WahlString> s2{minus ? WahlString::minus_root() : WahlString::plus_root()};
  const auto levels = w1_levels(depth);
  const std::size_t base_len = s1.front().size();
  const std::int64_t base_sum = minus ? 4 : 6;

  for (int d = 0; d <= depth; ++d) {
    if (d > 0) {
      std::vector<HJString> n1(2 * s1.size());
      std::vector<WahlString> n2(2 * s2.size());
      for (std::size_t i = 0; i < s1.size(); ++i) {
        std::tie(n1[2 * i], n1[2 * i + 1]) = s1_step(s1[i]);
        std::tie(n2[2 * i], n2[2 * i + 1]) = s2_step(s2[i]);
      }
      s1 = std::move(n1);
      s2 = std::move(n2);
    }
    const auto& w1 = levels[static_cast<std::size_t>(d)];
    std::set<HJString> set1(s1.begin(), s1.end()), set2, setw1, setw2;
    for (std::size_t i = 0; i < w1.size(); ++i) {
      const NodeLabel n2 = label_w2(w1[i]);
      const HJString from_w1 = wahl(w1[i]), from_w2 = wahl(n2);
      setw1.insert(from_w1);
      setw2.insert(from_w2);
      set2.insert(s2[i].coeffs);
      if (s1[i] != from_w1) fail(rep.nodewise, "s1 node " + w1[i].path + ": " + to_string(s1[i]) + " vs " + to_string(from_w1));
      if (s2[i].coeffs != from_w2)
        fail(rep.nodewise, "s2 node " + w1[i].path + ": " + to_string(s2[i].coeffs) + " vs " + to_string(from_w2));
      const std::int64_t sum = std::accumulate(s1[i].begin(), s1[i].end(), std::int64_t{0});
      if (s1[i].size() != base_len + static_cast<std::size_t>(d) || sum != base_sum + 3 * d)
        fail(rep.shape, "shape at " + to_string(s1[i]));
    }
    if (!(set1 == set2 && set2 == setw1 && setw1 == setw2 && set1.size() == w1.size()))
      fail(rep.sets_equal, "level " + std::to_string(d) + " sets differ");
    rep.level_sizes.push_back(set1.size());
    rep.strings += set1.size();
  }
  return rep;
}

}  // namespace lensball
