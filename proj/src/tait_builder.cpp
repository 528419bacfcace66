#include "lensball/tait_builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lensball {

namespace {

// Slots of the crossing on an edge, with the edge drawn from its tail (west)
// to its head (east): 0 NE, 1 NW, 2 SW, 3 SE.
int slot_towards_next(int end) { return end == 0 ? 1 : 3; }
int slot_towards_prev(int end) { return end == 0 ? 2 : 0; }

// Band twist in diagram half twists per unit of Tait value.
constexpr int kWhiteTwistSign = 1;
constexpr int kBlackTwistSign = -1;

std::size_t index_of(const std::vector<EdgeEnd>& r, EdgeEnd x) {
  const auto it = std::find(r.begin(), r.end(), x);
  if (it == r.end()) throw InvalidDiagram("edge end missing from rotation");
  return static_cast<std::size_t>(it - r.begin());
}

// The rotation at v read counterclockwise starting just after x.
std::vector<EdgeEnd> after(const std::vector<EdgeEnd>& r, EdgeEnd x) {
  const std::size_t i = index_of(r, x);
  std::vector<EdgeEnd> out;
  for (std::size_t k = 1; k < r.size(); ++k) out.push_back(r[(i + k) % r.size()]);
  return out;
}

}  // namespace

bool under02_for_type(int type) { return type > 0; }

int TaitGraph::add_vertex() {
  rotation.emplace_back();
  return vertex_count() - 1;
}

int TaitGraph::add_edge(int tail, int head, EdgeKind kind, int value, std::string label) {
  edges.push_back(TaitEdge{tail, head, kind, value, std::move(label)});
  return static_cast<int>(edges.size()) - 1;
}

int TaitGraph::multiplicity(int u, int w) const {
  int m = 0;
  for (auto& e : edges)
    if ((e.tail == u && e.head == w) || (e.tail == w && e.head == u)) ++m;
  return m;
}

std::vector<std::vector<EdgeEnd>> TaitGraph::faces() const {
  std::map<std::pair<int, int>, std::pair<int, std::size_t>> where;  // dart -> (vertex, index)
  for (int v = 0; v < vertex_count(); ++v)
    for (std::size_t i = 0; i < rotation[static_cast<std::size_t>(v)].size(); ++i) {
      const EdgeEnd x = rotation[static_cast<std::size_t>(v)][i];
      where[{x.edge, x.end}] = {v, i};
    }
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<EdgeEnd>> out;
  for (auto& [dart, loc] : where) {
    if (seen.count(dart)) continue;
    std::vector<EdgeEnd> face;
    std::pair<int, int> d = dart;
    while (!seen.count(d)) {
      seen.insert(d);
      face.push_back(EdgeEnd{d.first, d.second});
      // Cross the edge, then turn to the next end counterclockwise.
      const auto [w, i] = where.at({d.first, 1 - d.second});
      const auto& r = rotation[static_cast<std::size_t>(w)];
      const EdgeEnd nx = r[(i + 1) % r.size()];
      d = {nx.edge, nx.end};
    }
    out.push_back(std::move(face));
  }
  return out;
}

void TaitGraph::validate() const {
  std::vector<int> count(2 * edges.size(), 0);
  for (int v = 0; v < vertex_count(); ++v)
    for (auto& x : rotation[static_cast<std::size_t>(v)]) {
      if (x.edge < 0 || x.edge >= static_cast<int>(edges.size()) || (x.end != 0 && x.end != 1))
        throw InvalidDiagram("bad edge end in rotation");
      const TaitEdge& e = edges[static_cast<std::size_t>(x.edge)];
      if ((x.end == 0 ? e.tail : e.head) != v) throw InvalidDiagram("edge end listed at the wrong vertex");
      ++count[static_cast<std::size_t>(2 * x.edge + x.end)];
    }
  for (int c : count)
    if (c != 1) throw InvalidDiagram("edge end not listed exactly once");
  std::vector<int> parent(static_cast<std::size_t>(vertex_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (auto& e : edges) parent[static_cast<std::size_t>(find(e.tail))] = find(e.head);
  int pieces = 0, isolated = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (find(v) == v) ++pieces;
    if (rotation[static_cast<std::size_t>(v)].empty()) ++isolated;
  }
  const long chi = static_cast<long>(vertex_count()) - static_cast<long>(edges.size()) +
                   static_cast<long>(faces().size()) + isolated;
  if (chi != 2L * pieces) throw InvalidDiagram("Tait graph rotation system is not planar");
}

int split_vertex(TaitGraph& out, int v, std::size_t first, std::size_t count, EdgeKind kind, int value,
                 std::string label) {
  TaitGraph g = out;
  auto r = g.rotation.at(static_cast<std::size_t>(v));
  if (r.empty() || count > r.size()) throw InvalidDiagram("split_vertex: bad arc");
  const int w = g.add_vertex();
  const int id = g.add_edge(v, w, kind, value, std::move(label));
  std::vector<EdgeEnd> moved, kept;
  for (std::size_t k = 0; k < r.size(); ++k) {
    const EdgeEnd x = r[(first + k) % r.size()];
    (k < count ? moved : kept).push_back(x);
  }
  for (auto& x : moved) {
    TaitEdge& e = g.edges[static_cast<std::size_t>(x.edge)];
    (x.end == 0 ? e.tail : e.head) = w;
  }
  moved.push_back(EdgeEnd{id, 1});
  kept.insert(kept.begin(), EdgeEnd{id, 0});
  g.rotation[static_cast<std::size_t>(v)] = kept;
  g.rotation[static_cast<std::size_t>(w)] = moved;
  g.validate();
  out = std::move(g);
  return id;
}

int add_chord(TaitGraph& out, int u, std::size_t iu, int w, std::size_t iw, EdgeKind kind, int value,
              std::string label) {
  TaitGraph g = out;
  auto& ru = g.rotation.at(static_cast<std::size_t>(u));
  auto& rw = g.rotation.at(static_cast<std::size_t>(w));
  if (iu > ru.size() || iw > rw.size()) throw InvalidDiagram("add_chord: bad position");
  const int id = g.add_edge(u, w, kind, value, std::move(label));
  if (u == w) {
    // Insert the later position first so the earlier index stays valid.
    if (iu >= iw) {
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iu), EdgeEnd{id, 0});
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iw), EdgeEnd{id, 1});
    } else {
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iw), EdgeEnd{id, 1});
      ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iu), EdgeEnd{id, 0});
    }
  } else {
    ru.insert(ru.begin() + static_cast<std::ptrdiff_t>(iu), EdgeEnd{id, 0});
    rw.insert(rw.begin() + static_cast<std::ptrdiff_t>(iw), EdgeEnd{id, 1});
  }
  g.validate();
  out = std::move(g);
  return id;
}

TaitGraph planar_dual(const TaitGraph& g) {
  const auto fs = g.faces();
  std::map<std::pair<int, int>, int> face_of;
  for (std::size_t f = 0; f < fs.size(); ++f)
    for (auto& x : fs[f]) face_of[{x.edge, x.end}] = static_cast<int>(f);
  TaitGraph d;
  for (std::size_t f = 0; f < fs.size(); ++f) d.add_vertex();
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const int ei = static_cast<int>(e);
    const EdgeKind k = g.edges[e].kind == EdgeKind::WhiteBand   ? EdgeKind::BlackBand
                       : g.edges[e].kind == EdgeKind::BlackBand ? EdgeKind::WhiteBand
                                                                : EdgeKind::Crossing;
    d.add_edge(face_of.at({ei, 0}), face_of.at({ei, 1}), k, -g.edges[e].value, g.edges[e].label);
  }
  // Around a face, darts come in boundary order; reversing gives a
  // counterclockwise rotation about the dual vertex.
  for (std::size_t f = 0; f < fs.size(); ++f) {
    auto& r = d.rotation[f];
    for (auto& x : fs[f]) r.push_back(EdgeEnd{x.edge, x.end});
    std::reverse(r.begin(), r.end());
  }
  return d;
}

TaitGraph apply_tait_bands(const TaitGraph& g) {
  TaitGraph out;
  out.rotation = g.rotation;
  std::vector<int> alive(g.rotation.size(), 1);
  std::vector<TaitEdge> edges = g.edges;
  std::vector<int> contract;
  // New edges are appended; old band edges are retired at the end.
  std::vector<int> retire;
  auto replace = [&](int v, EdgeEnd x, const std::vector<EdgeEnd>& with) {
    auto& r = out.rotation[static_cast<std::size_t>(v)];
    const std::size_t i = index_of(r, x);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
    r.insert(r.begin() + static_cast<std::ptrdiff_t>(i), with.begin(), with.end());
  };
  const std::size_t n0 = edges.size();
  for (std::size_t ei = 0; ei < n0; ++ei) {
    const TaitEdge e = edges[ei];
    const int id = static_cast<int>(ei);
    if (e.kind == EdgeKind::Crossing) continue;
    const int t = std::abs(e.value), type = e.value > 0 ? 1 : -1;
    if (e.kind == EdgeKind::WhiteBand) {
      if (t == 0) {
        edges[ei].kind = EdgeKind::Crossing;
        contract.push_back(id);
        continue;
      }
      retire.push_back(id);
      int prev = e.tail;
      for (int k = 0; k < t; ++k) {
        const int next = k + 1 == t ? e.head : static_cast<int>(out.rotation.size());
        if (k + 1 < t) {
          out.rotation.emplace_back();
          alive.push_back(1);
        }
        const int ne = static_cast<int>(edges.size());
        edges.push_back(TaitEdge{prev, next, EdgeKind::Crossing, type, e.label});
        if (k == 0)
          replace(e.tail, EdgeEnd{id, 0}, {EdgeEnd{ne, 0}});
        else
          out.rotation[static_cast<std::size_t>(prev)].push_back(EdgeEnd{ne, 0});
        if (k + 1 == t)
          replace(e.head, EdgeEnd{id, 1}, {EdgeEnd{ne, 1}});
        else
          out.rotation[static_cast<std::size_t>(next)].push_back(EdgeEnd{ne, 1});
        prev = next;
      }
    } else {
      retire.push_back(id);
      std::vector<EdgeEnd> at_tail, at_head;
      for (int k = 0; k < t; ++k) {
        const int ne = static_cast<int>(edges.size());
        edges.push_back(TaitEdge{e.tail, e.head, EdgeKind::Crossing, type, e.label});
        at_tail.push_back(EdgeEnd{ne, 0});
        at_head.insert(at_head.begin(), EdgeEnd{ne, 1});
      }
      replace(e.tail, EdgeEnd{id, 0}, at_tail);
      replace(e.head, EdgeEnd{id, 1}, at_head);
    }
  }
  for (int id : contract) {
    const TaitEdge e = edges[static_cast<std::size_t>(id)];
    const int a = e.tail, b = e.head;
    if (a == b) throw InvalidDiagram("cannot contract a loop");
    const auto ra = after(out.rotation[static_cast<std::size_t>(a)], EdgeEnd{id, 0});
    const auto rb = after(out.rotation[static_cast<std::size_t>(b)], EdgeEnd{id, 1});
    std::vector<EdgeEnd> merged = rb;
    merged.insert(merged.end(), ra.begin(), ra.end());
    out.rotation[static_cast<std::size_t>(a)] = merged;
    out.rotation[static_cast<std::size_t>(b)].clear();
    alive[static_cast<std::size_t>(b)] = 0;
    for (auto& x : edges) {
      if (x.tail == b) x.tail = a;
      if (x.head == b) x.head = a;
    }
    retire.push_back(id);
  }
  // Renumber vertices and edges.
  std::vector<int> vmap(out.rotation.size(), -1), emap(edges.size(), -1);
  std::sort(retire.begin(), retire.end());
  TaitGraph res;
  for (std::size_t v = 0; v < out.rotation.size(); ++v)
    if (alive[v]) vmap[v] = res.add_vertex();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (std::binary_search(retire.begin(), retire.end(), static_cast<int>(e))) continue;
    const TaitEdge& x = edges[e];
    emap[e] = res.add_edge(vmap[static_cast<std::size_t>(x.tail)], vmap[static_cast<std::size_t>(x.head)], x.kind,
                           x.value, x.label);
  }
  for (std::size_t v = 0; v < out.rotation.size(); ++v) {
    if (!alive[v]) continue;
    for (auto& x : out.rotation[v])
      res.rotation[static_cast<std::size_t>(vmap[v])].push_back(EdgeEnd{emap[static_cast<std::size_t>(x.edge)], x.end});
  }
  res.validate();
  return res;
}

DiagramWithBands realize(const TaitGraph& g0) {
  g0.validate();
  std::vector<std::vector<EdgeEnd>> rot = g0.rotation;
  std::vector<TaitEdge> edges = g0.edges;
  std::vector<int> alive(rot.size(), 1);
  // Contract black-band edges; the band ends become ends 2 and 3.
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    if (edges[ei].kind != EdgeKind::BlackBand) continue;
    const int id = static_cast<int>(ei);
    const int a = edges[ei].tail, b = edges[ei].head;
    if (a == b) throw InvalidDiagram("black band on a loop");
    const auto ra = after(rot[static_cast<std::size_t>(a)], EdgeEnd{id, 0});
    const auto rb = after(rot[static_cast<std::size_t>(b)], EdgeEnd{id, 1});
    std::vector<EdgeEnd> merged{EdgeEnd{id, 2}};
    merged.insert(merged.end(), rb.begin(), rb.end());
    merged.push_back(EdgeEnd{id, 3});
    merged.insert(merged.end(), ra.begin(), ra.end());
    rot[static_cast<std::size_t>(a)] = merged;
    rot[static_cast<std::size_t>(b)].clear();
    alive[static_cast<std::size_t>(b)] = 0;
    for (auto& x : edges) {
      if (x.tail == b) x.tail = a;
      if (x.head == b) x.head = a;
    }
  }

  DiagramWithBands out;
  PDCode& d = out.diagram;
  std::map<std::pair<int, int>, int> node_of_end;
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const int id = static_cast<int>(ei);
    switch (edges[ei].kind) {
      case EdgeKind::Crossing: {
        if (edges[ei].value != 1 && edges[ei].value != -1) throw InvalidDiagram("crossing type must be +-1");
        const int c = d.add_crossing(under02_for_type(edges[ei].value));
        node_of_end[{id, 0}] = node_of_end[{id, 1}] = c;
        break;
      }
      case EdgeKind::WhiteBand:
        node_of_end[{id, 0}] = d.add_marker();
        node_of_end[{id, 1}] = d.add_marker();
        break;
      case EdgeKind::BlackBand:
        node_of_end[{id, 2}] = d.add_marker();
        node_of_end[{id, 3}] = d.add_marker();
        break;
    }
  }
  auto slot = [&](EdgeEnd x, bool next) {
    const int n = node_of_end.at({x.edge, x.end});
    if (d.is_marker(n)) return PDCode::he(n, next ? 1 : 0);
    return PDCode::he(n, next ? slot_towards_next(x.end) : slot_towards_prev(x.end));
  };
  for (std::size_t v = 0; v < rot.size(); ++v) {
    if (!alive[v]) continue;
    const auto& r = rot[v];
    if (r.empty()) {
      d.add_free_loop();
      continue;
    }
    for (std::size_t i = 0; i < r.size(); ++i) d.connect(slot(r[i], true), slot(r[(i + 1) % r.size()], false));
  }
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const int id = static_cast<int>(ei);
    const TaitEdge& e = edges[ei];
    if (e.kind == EdgeKind::WhiteBand)
      out.bands.push_back(BandSpec{PDCode::he(node_of_end.at({id, 0}), 0), PDCode::he(node_of_end.at({id, 1}), 0), {},
                                   kWhiteTwistSign * e.value, e.label});
    else if (e.kind == EdgeKind::BlackBand)
      out.bands.push_back(BandSpec{PDCode::he(node_of_end.at({id, 2}), 1), PDCode::he(node_of_end.at({id, 3}), 1), {},
                                   kBlackTwistSign * e.value, e.label});
  }
  d.orient();
  d.validate();
  return out;
}

}  // namespace lensball
