#include "lensball/twobridge.hpp"

#include <algorithm>
#include <set>

#include "lensball/invariants.hpp"

namespace lensball {

GammaGraph gamma_graph(const HJString& c) {
  if (c.empty()) throw DomainError("gamma_graph: empty coefficient string");
  for (auto x : c)
    if (x < 1) throw DomainError("gamma_graph: coefficients must be positive");
  GammaGraph G;
  G.coeffs = c;
  TaitGraph& g = G.graph;
  const int k = static_cast<int>(c.size());
  for (int v = 0; v <= k; ++v) g.add_vertex();
  for (int i = 1; i < k; ++i) G.path_edges.push_back(g.add_edge(i, i + 1));
  G.v0_edges.resize(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) {
    const int path = (i > 1) + (i < k);
    const std::int64_t n = c[static_cast<std::size_t>(i - 1)] - path;
    if (n < 0) throw DomainError("gamma_graph: coefficient too small for its path edges");
    for (std::int64_t j = 0; j < n; ++j) G.v0_edges[static_cast<std::size_t>(i - 1)].push_back(g.add_edge(i, 0));
  }
  // v_i, counterclockwise from the east: right path edge, v0 edges right to
  // left (v0 is drawn above the path), left path edge.
  for (int i = 1; i <= k; ++i) {
    auto& r = g.rotation[static_cast<std::size_t>(i)];
    if (i < k) r.push_back(EdgeEnd{G.path_edges[static_cast<std::size_t>(i - 1)], 0});
    const auto& up = G.v0_edges[static_cast<std::size_t>(i - 1)];
    for (auto it = up.rbegin(); it != up.rend(); ++it) r.push_back(EdgeEnd{*it, 0});
    if (i > 1) r.push_back(EdgeEnd{G.path_edges[static_cast<std::size_t>(i - 2)], 1});
  }
  // v0, counterclockwise from the west: everything below it, left to right.
  for (int i = 1; i <= k; ++i)
    for (int e : G.v0_edges[static_cast<std::size_t>(i - 1)]) g.rotation[0].push_back(EdgeEnd{e, 1});
  g.validate();
  return G;
}

GammaGraph tait_graph(const BigInt& p, const BigInt& q) { return gamma_graph(hj_expand(p, q)); }

PDCode standard_diagram(const HJString& c) { return realize(gamma_graph(c).graph).diagram; }

PDCode standard_diagram(const BigInt& p, const BigInt& q) { return standard_diagram(hj_expand(p, q)); }

IntMatrix goeritz(const BigInt& p, const BigInt& q) {
  const HJString c = hj_expand(p, q);
  const std::size_t k = c.size();
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    m(i, i) = c[i];
    if (i + 1 < k) m(i, i + 1) = m(i + 1, i) = -1;
  }
  return m;
}

IntMatrix diagram_goeritz(const PDCode& d, int colour) {
  const IntMatrix g = goeritz_matrix(d, colour);
  return g.rows == 0 ? g : g.minor(0);
}

std::string TwoBridgeNormalForm::str() const { return "S(" + p.get_str() + "," + q.get_str() + ")"; }

TwoBridgeNormalForm normal_form(const BigInt& p, const BigInt& q) {
  if (p < 1 || !coprime(p, q)) throw DomainError("normal_form: need coprime p, q with p >= 1");
  BigInt r = q % p;
  if (r < 0) r += p;
  if (p == 1) return {1, 0};
  const BigInt inv = mod_inverse(r, p);
  return {p, std::min(r, inv)};
}

bool same_link(const BigInt& p, const BigInt& q, const BigInt& p2, const BigInt& q2) {
  return normal_form(p, q) == normal_form(p2, q2);
}

std::vector<HJString> gamma_shape(const TaitGraph& g) {
  std::vector<HJString> out;
  const int n = g.vertex_count();
  if (n < 2) return out;
  for (int hub = 0; hub < n; ++hub) {
    // Non-hub edges must form a simple path through every other vertex.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    bool ok = true;
    for (auto& e : g.edges) {
      if (e.tail == hub || e.head == hub) continue;
      if (e.tail == e.head) ok = false;
      adj[static_cast<std::size_t>(e.tail)].push_back(e.head);
      adj[static_cast<std::size_t>(e.head)].push_back(e.tail);
    }
    if (!ok) continue;
    std::vector<int> ends;
    for (int v = 0; v < n; ++v) {
      if (v == hub) continue;
      const auto deg = adj[static_cast<std::size_t>(v)].size();
      if (deg > 2) ok = false;
      if (deg <= 1) ends.push_back(v);
    }
    if (!ok) continue;
    if (n == 2) ends = {hub == 0 ? 1 : 0};
    if (ends.empty()) continue;
    std::vector<int> order{ends.front()};
    std::set<int> seen{ends.front()};
    while (true) {
      int nxt = -1;
      for (int w : adj[static_cast<std::size_t>(order.back())])
        if (!seen.count(w)) nxt = w;
      if (nxt < 0) break;
      // A doubled path edge would show up as a repeated neighbour.
      order.push_back(nxt);
      seen.insert(nxt);
    }
    if (static_cast<int>(order.size()) != n - 1) continue;
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      if (g.multiplicity(order[i], order[i + 1]) != 1) ok = false;
    if (!ok) continue;
    HJString c;
    for (int v : order) c.push_back(g.valence(v));
    out.push_back(c);
    out.push_back(reverse(c));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lensball
