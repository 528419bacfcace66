#include "lensball/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lensball {

void PDCode::grow() {
  kind_.push_back(NodeKind::Dead);
  under02_.push_back(0);
  for (int i = 0; i < 4; ++i) {
    mate_.push_back(npos);
    out_.push_back(0);
  }
}

int PDCode::add_crossing(bool under02) {
  grow();
  const int n = node_count() - 1;
  kind_.back() = NodeKind::Crossing;
  under02_.back() = under02;
  return n;
}

int PDCode::add_marker() {
  grow();
  kind_.back() = NodeKind::Marker;
  return node_count() - 1;
}

int PDCode::add_free_loop() {
  const int m = add_marker();
  connect(he(m, 0), he(m, 1));
  out_[static_cast<std::size_t>(he(m, 1))] = 1;
  return m;
}

void PDCode::connect(int h1, int h2) {
  mate_[static_cast<std::size_t>(h1)] = h2;
  mate_[static_cast<std::size_t>(h2)] = h1;
}

void PDCode::disconnect(int h) {
  const int m = mate(h);
  mate_[static_cast<std::size_t>(h)] = npos;
  if (m != npos) mate_[static_cast<std::size_t>(m)] = npos;
}

void PDCode::kill(int node) {
  for (int s = 0; s < 4; ++s) {
    const int h = he(node, s);
    const int m = mate(h);
    if (m != npos && node_of(m) != node && mate(m) == h) mate_[static_cast<std::size_t>(m)] = npos;
    mate_[static_cast<std::size_t>(h)] = npos;
  }
  kind_[static_cast<std::size_t>(node)] = NodeKind::Dead;
}

int PDCode::subdivide(int h) {
  const int m = mate(h);
  const bool h_out = outgoing(h);
  const int x = add_marker();
  connect(h, he(x, 0));
  connect(he(x, 1), m);
  out_[static_cast<std::size_t>(he(x, 0))] = !h_out;
  out_[static_cast<std::size_t>(he(x, 1))] = h_out;
  return x;
}

bool PDCode::splice_out(int marker) {
  const int a = mate(he(marker, 0)), b = mate(he(marker, 1));
  if (a == he(marker, 1)) return false;
  mate_[static_cast<std::size_t>(he(marker, 0))] = npos;
  mate_[static_cast<std::size_t>(he(marker, 1))] = npos;
  connect(a, b);
  kind_[static_cast<std::size_t>(marker)] = NodeKind::Dead;
  return true;
}

int PDCode::crossing_count() const {
  return static_cast<int>(std::count(kind_.begin(), kind_.end(), NodeKind::Crossing));
}

std::vector<int> PDCode::live_half_edges() const {
  std::vector<int> hs;
  for (int n = 0; n < node_count(); ++n)
    for (int s = 0; s < degree(n); ++s) hs.push_back(he(n, s));
  return hs;
}

int PDCode::through(int h) const {
  const int n = node_of(h), s = slot_of(h);
  return is_crossing(n) ? he(n, (s + 2) & 3) : he(n, s ^ 1);
}

int PDCode::face_next(int h) const {
  const int m = mate(h);
  const int n = node_of(m), d = degree(n);
  return he(n, (slot_of(m) + d - 1) % d);
}

int PDCode::faces(std::vector<int>& face_of) const {
  face_of.assign(mate_.size(), -1);
  int f = 0;
  for (int h : live_half_edges()) {
    if (face_of[static_cast<std::size_t>(h)] != -1) continue;
    int g = h;
    do {
      face_of[static_cast<std::size_t>(g)] = f;
      g = face_next(g);
    } while (g != h);
    ++f;
  }
  return f;
}

int PDCode::components(std::vector<int>& comp_of) const {
  comp_of.assign(mate_.size(), -1);
  int c = 0;
  for (int h : live_half_edges()) {
    if (comp_of[static_cast<std::size_t>(h)] != -1) continue;
    int g = h;
    do {
      const int m = mate(g);
      comp_of[static_cast<std::size_t>(g)] = c;
      comp_of[static_cast<std::size_t>(m)] = c;
      g = through(m);
    } while (g != h);
    ++c;
  }
  return c;
}

int PDCode::component_count() const {
  std::vector<int> tmp;
  return components(tmp);
}

int PDCode::piece_count() const {
  std::vector<int> parent(static_cast<std::size_t>(node_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (int h : live_half_edges()) parent[static_cast<std::size_t>(find(node_of(h)))] = find(node_of(mate(h)));
  int pieces = 0;
  for (int n = 0; n < node_count(); ++n)
    if (kind(n) != NodeKind::Dead && find(n) == n) ++pieces;
  return pieces;
}

void PDCode::orient() {
  std::vector<int> comp;
  const int nc = components(comp);
  std::vector<char> done(static_cast<std::size_t>(nc), 0);
  for (int h : live_half_edges()) {
    const int c = comp[static_cast<std::size_t>(h)];
    if (done[static_cast<std::size_t>(c)]) continue;
    done[static_cast<std::size_t>(c)] = 1;
    const int start = outgoing(h) ? h : mate(h);
    int g = start;
    do {
      const int m = mate(g);
      out_[static_cast<std::size_t>(g)] = 1;
      out_[static_cast<std::size_t>(m)] = 0;
      g = through(m);
    } while (g != start);
  }
}

void PDCode::reverse_component(int h) {
  const int start = h;
  int g = h;
  do {
    const int m = mate(g);
    out_[static_cast<std::size_t>(g)] ^= 1;
    out_[static_cast<std::size_t>(m)] ^= 1;
    g = through(m);
  } while (g != start);
}

int PDCode::sign(int c) const {
  const int u = under02(c) ? 0 : 1, o = u ^ 1;
  const int u_in = outgoing(he(c, u)) ? u + 2 : u;
  const int o_in = outgoing(he(c, o)) ? o + 2 : o;
  return ((u_in - o_in + 4) & 3) == 1 ? 1 : -1;
}

int PDCode::writhe() const {
  int w = 0;
  for (int n = 0; n < node_count(); ++n)
    if (is_crossing(n)) w += sign(n);
  return w;
}

PDCode PDCode::mirror() const {
  PDCode d = *this;
  for (int n = 0; n < node_count(); ++n)
    if (is_crossing(n)) d.under02_[static_cast<std::size_t>(n)] ^= 1;
  return d;
}

PDCode PDCode::compacted(std::vector<int>* remap) const {
  std::vector<int> map(static_cast<std::size_t>(node_count()), -1);
  PDCode d;
  for (int n = 0; n < node_count(); ++n) {
    if (kind(n) == NodeKind::Dead) continue;
    map[static_cast<std::size_t>(n)] = is_crossing(n) ? d.add_crossing(under02(n)) : d.add_marker();
  }
  for (int h : live_half_edges()) {
    const int m = mate(h);
    const int nh = he(map[static_cast<std::size_t>(node_of(h))], slot_of(h));
    if (m != npos) d.mate_[static_cast<std::size_t>(nh)] = he(map[static_cast<std::size_t>(node_of(m))], slot_of(m));
    d.out_[static_cast<std::size_t>(nh)] = out_[static_cast<std::size_t>(h)];
  }
  if (remap) *remap = std::move(map);
  return d;
}

void PDCode::validate() const {
  for (int h : live_half_edges()) {
    const int m = mate(h);
    if (m == npos) throw InvalidDiagram("unmatched half-edge " + std::to_string(h));
    if (m < 0 || m >= static_cast<int>(mate_.size()) || kind(node_of(m)) == NodeKind::Dead ||
        slot_of(m) >= degree(node_of(m)) || mate(m) != h)
      throw InvalidDiagram("inconsistent mate at half-edge " + std::to_string(h));
    if (m == h) throw InvalidDiagram("half-edge mated to itself");
  }
  // Euler characteristic per connected piece.
  std::vector<int> face_of;
  faces(face_of);
  std::vector<int> parent(static_cast<std::size_t>(node_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (int h : live_half_edges()) {
    const int a = find(node_of(h)), b = find(node_of(mate(h)));
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  std::map<int, long> euler;
  std::map<int, std::vector<int>> piece_faces;
  for (int n = 0; n < node_count(); ++n) {
    if (kind(n) == NodeKind::Dead) continue;
    const int r = find(n);
    euler[r] += 2 - degree(n);  // V - E with E counted as half of the degree sum
    for (int s = 0; s < degree(n); ++s) piece_faces[r].push_back(face_of[static_cast<std::size_t>(he(n, s))]);
  }
  for (auto& [r, e] : euler) {
    auto& fs = piece_faces[r];
    std::sort(fs.begin(), fs.end());
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    // 2V - 2E + 2F = 4
    if (e + 2 * static_cast<long>(fs.size()) != 4)
      throw InvalidDiagram("rotation system is not planar (Euler characteristic " +
                           std::to_string((e + 2 * static_cast<long>(fs.size())) / 2) + ")");
  }
}

PDCode PDCode::from_tuples(const std::vector<PDTuple>& xs, int free_loops) {
  PDCode d;
  std::map<int, std::vector<int>> ends;
  for (auto& x : xs) {
    const int c = d.add_crossing(true);
    for (int s = 0; s < 4; ++s) ends[x[static_cast<std::size_t>(s)]].push_back(he(c, s));
  }
  std::map<int, int> known;  // half-edge -> outgoing bit
  for (int c = 0; c < d.node_count(); ++c) {
    known[he(c, 0)] = 0;
    known[he(c, 2)] = 1;
  }
  for (auto& [label, hs] : ends) {
    if (hs.size() != 2) throw InvalidDiagram("edge label " + std::to_string(label) + " does not appear exactly twice");
    d.connect(hs[0], hs[1]);
  }
  // Propagate along strands; components that are never under fall back to
  // the label order on the over-strand.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int h : d.live_half_edges()) {
      auto it = known.find(h);
      if (it == known.end()) continue;
      const int bit = it->second;
      for (auto [g, b] : {std::pair{d.mate(h), 1 - bit}, std::pair{d.through(h), 1 - bit}}) {
        if (known.emplace(g, b).second) changed = true;
      }
    }
    if (!changed) {
      for (std::size_t c = 0; c < xs.size(); ++c) {
        const int h1 = he(static_cast<int>(c), 1);
        if (known.count(h1)) continue;
        const int j = xs[c][1], l = xs[c][3];
        known[h1] = (l == j + 1 || j > l + 1) ? 0 : 1;
        changed = true;
        break;
      }
    }
  }
  for (auto& [h, bit] : known) d.out_[static_cast<std::size_t>(h)] = static_cast<std::uint8_t>(bit);
  for (int i = 0; i < free_loops; ++i) d.add_free_loop();
  d.validate();
  return d;
}

std::vector<PDTuple> PDCode::tuples(int* free_loops) const {
  PDCode d = compacted();
  d.orient();
  std::vector<int> label(d.mate_.size(), 0);
  int next = 1, loops = 0;
  std::vector<char> seen(d.mate_.size(), 0);
  for (int h : d.live_half_edges()) {
    if (seen[static_cast<std::size_t>(h)] || !d.outgoing(h)) continue;
    // Walk back to a crossing so labels start right after one.
    int start = h;
    bool has_crossing = false;
    {
      int g = h;
      do {
        if (d.is_crossing(node_of(g))) {
          start = g;
          has_crossing = true;
          break;
        }
        g = d.through(d.mate(g));
      } while (g != h);
    }
    int g = start;
    do {
      const int m = d.mate(g);
      seen[static_cast<std::size_t>(g)] = seen[static_cast<std::size_t>(m)] = 1;
      label[static_cast<std::size_t>(g)] = label[static_cast<std::size_t>(m)] = next;
      g = d.through(m);
      if (d.is_crossing(node_of(g)) || g == start) ++next;
    } while (g != start);
    if (!has_crossing) {
      ++loops;
      --next;
    }
  }
  std::vector<PDTuple> out;
  for (int c = 0; c < d.node_count(); ++c) {
    if (!d.is_crossing(c)) continue;
    const int u = d.under02(c) ? 0 : 1;
    const int u_in = d.outgoing(he(c, u)) ? u + 2 : u;
    PDTuple t{};
    for (int i = 0; i < 4; ++i) t[static_cast<std::size_t>(i)] = label[static_cast<std::size_t>(he(c, (u_in + i) & 3))];
    out.push_back(t);
  }
  if (free_loops) *free_loops = loops;
  return out;
}

}  // namespace lensball
