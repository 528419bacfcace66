#include "lensball/bands.hpp"

#include <algorithm>
#include <set>

#include "lensball/invariants.hpp"

namespace lensball {

namespace {

int other_slot(int h) { return PDCode::he(PDCode::node_of(h), PDCode::slot_of(h) ^ 1); }

void require_marker(const PDCode& d, int h, const char* what) {
  if (h < 0 || PDCode::node_of(h) >= d.node_count() || !d.is_marker(PDCode::node_of(h)) || PDCode::slot_of(h) > 1)
    throw UnrealizableBand(std::string(what) + " is not a marker half-edge");
  if (d.mate(h) == other_slot(h)) throw UnrealizableBand(std::string(what) + " sits on a loop with no other node");
}

int face_at(const PDCode& d, int h) {
  std::vector<int> f;
  d.faces(f);
  return f[static_cast<std::size_t>(h)];
}

// Both neighbours of the marker at h become fresh markers, so that the ends
// around it are distinct from everything else.
void isolate(PDCode& d, int h) {
  d.subdivide(h);
  d.subdivide(other_slot(h));
}

// One finger move of the end at `h` across the edge at `g`. Returns the new
// anchor half-edge.
int finger(PDCode& d, int h, const RouteStep& step) {
  const int g = step.edge;
  if (g < 0 || PDCode::node_of(g) >= d.node_count() || d.kind(PDCode::node_of(g)) == NodeKind::Dead)
    throw UnrealizableBand("routing edge does not exist");
  if (face_at(d, g) != face_at(d, h)) throw UnrealizableBand("routing edge does not bound the band's face");
  if (PDCode::node_of(g) == PDCode::node_of(h) || PDCode::node_of(d.mate(g)) == PDCode::node_of(h))
    throw UnrealizableBand("band cannot be routed across its own edge");
  isolate(d, h);
  const int xe = d.mate(other_slot(h)), ye = d.mate(h);
  const int r = g, s = d.mate(g);
  const int m = PDCode::node_of(h);
  d.kill(m);
  d.disconnect(r);
  // Local frame: the crossed edge runs west to east (r to s), the finger comes
  // down from the north. Slots: 0 east, 1 north, 2 west, 3 south.
  const int ce = d.add_crossing(step.over), cw = d.add_crossing(step.over), tip = d.add_marker();
  d.connect(xe, PDCode::he(ce, 1));
  d.connect(PDCode::he(ce, 3), PDCode::he(tip, 0));
  d.connect(PDCode::he(tip, 1), PDCode::he(cw, 3));
  d.connect(PDCode::he(cw, 1), ye);
  d.connect(r, PDCode::he(cw, 2));
  d.connect(PDCode::he(cw, 0), PDCode::he(ce, 2));
  d.connect(PDCode::he(ce, 0), s);
  return PDCode::he(tip, 1);
}

struct MoveEnds {
  int xe, ye;  // the two strands leaving the first anchor, after the move
};

MoveEnds band_move_in_place(DiagramWithBands& s, std::size_t id) {
  if (id >= s.bands.size()) throw UnrealizableBand("no band " + std::to_string(id));
  PDCode& d = s.diagram;
  BandSpec b = s.bands[id];
  require_marker(d, b.attach1, "first anchor");
  require_marker(d, b.attach2, "second anchor");
  for (auto& step : b.routing) b.attach1 = finger(d, b.attach1, step);
  const int h1 = b.attach1, h2 = b.attach2;
  if (PDCode::node_of(h1) == PDCode::node_of(h2)) throw UnrealizableBand("band anchors share a marker");
  if (face_at(d, h1) != face_at(d, h2)) throw UnrealizableBand("band ends are in different faces");
  isolate(d, h1);
  isolate(d, h2);
  const int xe = d.mate(other_slot(h1)), ye = d.mate(h1);
  const int we = d.mate(h2), ze = d.mate(other_slot(h2));
  d.kill(PDCode::node_of(h1));
  d.kill(PDCode::node_of(h2));
  // Band frame: attach1 at the bottom, X on the left. Crossing slots:
  // 0 bottom-right, 1 top-right, 2 top-left, 3 bottom-left.
  int left = xe, right = ye;
  const int n = b.half_twists < 0 ? -b.half_twists : b.half_twists;
  for (int i = 0; i < n; ++i) {
    const int c = d.add_crossing(b.half_twists > 0);
    d.connect(left, PDCode::he(c, 3));
    d.connect(right, PDCode::he(c, 0));
    left = PDCode::he(c, 2);
    right = PDCode::he(c, 1);
  }
  d.connect(left, we);
  d.connect(right, ze);
  d.orient();
  s.bands.erase(s.bands.begin() + static_cast<std::ptrdiff_t>(id));
  return {xe, ye};
}

}  // namespace

void DiagramWithBands::validate() const {
  diagram.validate();
  std::set<int> used;
  for (auto& b : bands) {
    require_marker(diagram, b.attach1, "first anchor");
    require_marker(diagram, b.attach2, "second anchor");
    if (!used.insert(PDCode::node_of(b.attach1)).second || !used.insert(PDCode::node_of(b.attach2)).second)
      throw UnrealizableBand("two band ends share a marker");
    if (b.routing.empty() && face_at(diagram, b.attach1) != face_at(diagram, b.attach2))
      throw UnrealizableBand("band '" + b.label + "' has its ends in different faces");
  }
  if (minima < 0) throw UnrealizableBand("negative minima count");
}

DiagramWithBands realize_routing(const DiagramWithBands& s, std::size_t id) {
  DiagramWithBands out = s;
  BandSpec& b = out.bands.at(id);
  require_marker(out.diagram, b.attach1, "first anchor");
  for (auto& step : b.routing) b.attach1 = finger(out.diagram, b.attach1, step);
  b.routing.clear();
  out.diagram.orient();
  return out;
}

DiagramWithBands apply_band_move(const DiagramWithBands& s, std::size_t id) {
  DiagramWithBands out = s;
  band_move_in_place(out, id);
  return out;
}

DiagramWithBands apply_bands(const DiagramWithBands& s, std::vector<std::size_t> ids) {
  DiagramWithBands out = s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    band_move_in_place(out, ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (ids[j] == ids[i]) throw UnrealizableBand("band listed twice");
      if (ids[j] > ids[i]) --ids[j];
    }
  }
  return out;
}

DiagramWithBands apply_all_bands(const DiagramWithBands& s) {
  DiagramWithBands out = s;
  while (!out.bands.empty()) band_move_in_place(out, 0);
  return out;
}

DiagramWithBands dual_band(const DiagramWithBands& s, std::size_t id) {
  DiagramWithBands out = s;
  const MoveEnds e = band_move_in_place(out, id);
  PDCode& d = out.diagram;
  const int mx = d.subdivide(e.xe), my = d.subdivide(e.ye);
  std::vector<int> f;
  d.faces(f);
  for (int sx = 0; sx < 2; ++sx)
    for (int sy = 0; sy < 2; ++sy)
      if (f[static_cast<std::size_t>(PDCode::he(mx, sx))] == f[static_cast<std::size_t>(PDCode::he(my, sy))]) {
        out.bands = {BandSpec{PDCode::he(mx, sx), PDCode::he(my, sy), {}, 0, "dual"}};
        out.minima = 0;
        return out;
      }
  throw std::logic_error("dual_band: no common face next to the band");
}

DiagramWithBands invert_band(const DiagramWithBands& s, std::size_t id) {
  DiagramWithBands dual = dual_band(s, id);
  std::vector<BandSpec> rest = s.bands;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(id));
  dual.bands.insert(dual.bands.end(), rest.begin(), rest.end());
  dual.minima = s.minima;
  return dual;
}

namespace {

// Replaces the marker at the second foot of `b` by a kink whose loop carries
// the foot. The kink absorbs one half twist of sign +1 (over == false) or -1.
void foot_kink(PDCode& d, BandSpec& b, bool positive) {
  const int h2 = b.attach2;
  const int a = d.mate(other_slot(h2)), z = d.mate(h2);
  d.kill(PDCode::node_of(h2));
  const int c = d.add_crossing(!positive), m = d.add_marker();
  d.connect(PDCode::he(c, 0), PDCode::he(m, 0));
  d.connect(PDCode::he(m, 1), PDCode::he(c, 1));
  d.connect(PDCode::he(c, 2), a);
  d.connect(PDCode::he(c, 3), z);
  d.orient();
  const int f1 = face_at(d, b.attach1);
  for (int sl = 0; sl < 2; ++sl)
    if (face_at(d, PDCode::he(m, sl)) == f1) {
      b.attach2 = PDCode::he(m, sl);
      b.half_twists += positive ? -1 : 1;
      return;
    }
  throw std::logic_error("foot_kink: loop is not in the band's face");
}

bool anchors_band(const std::vector<BandSpec>& bands, int node) {
  for (auto& b : bands)
    if (PDCode::node_of(b.attach1) == node || PDCode::node_of(b.attach2) == node) return true;
  return false;
}

// Walks along the strand from foot half-edge `h` (leaving through h) past
// plain markers; returns the first node reached and the half-edge entering it.
std::pair<int, int> next_foot(const PDCode& d, const std::vector<BandSpec>& bands, int h) {
  int g = d.mate(h);
  for (;;) {
    const int n = PDCode::node_of(g);
    if (!d.is_marker(n) || anchors_band(bands, n)) return {n, g};
    g = d.mate(other_slot(g));
  }
}

}  // namespace

DiagramWithBands untwist_band(const DiagramWithBands& s, std::size_t id) {
  DiagramWithBands out = s;
  if (id >= out.bands.size()) throw UnrealizableBand("no band " + std::to_string(id));
  if (!out.bands[id].routing.empty()) out = realize_routing(out, id);
  BandSpec& b = out.bands[id];
  require_marker(out.diagram, b.attach2, "second anchor");
  while (b.half_twists != 0) foot_kink(out.diagram, b, b.half_twists > 0);
  out.diagram.validate();
  return out;
}

DiagramWithBands band_slide(const DiagramWithBands& s, std::size_t mover, std::size_t over) {
  if (mover == over || mover >= s.bands.size() || over >= s.bands.size())
    throw UnrealizableBand("band_slide: need two distinct bands");
  DiagramWithBands out = s;
  for (std::size_t i : {mover, over})
    if (!out.bands[i].routing.empty()) out = realize_routing(out, i);
  out = untwist_band(out, over);
  PDCode& d = out.diagram;
  const BandSpec o = out.bands[over];
  BandSpec& m = out.bands[mover];
  const int face = face_at(d, o.attach1);
  // (start half-edge at a foot of `over`, where the slid foot lands)
  const std::pair<int, int> routes[4] = {{other_slot(o.attach1), o.attach2},
                                         {o.attach1, other_slot(o.attach2)},
                                         {o.attach2, other_slot(o.attach1)},
                                         {other_slot(o.attach2), o.attach1}};
  for (auto [from, to] : routes) {
    const int n = next_foot(d, out.bands, from).first;
    int* foot = PDCode::node_of(m.attach1) == n ? &m.attach1 : PDCode::node_of(m.attach2) == n ? &m.attach2 : nullptr;
    if (!foot || face_at(d, *foot) != face) continue;
    const int old = PDCode::node_of(*foot);
    const int fresh = d.subdivide(to);
    const int now = face_at(d, o.attach1);
    *foot = -1;
    for (int sl = 0; sl < 2; ++sl)
      if (face_at(d, PDCode::he(fresh, sl)) == now) *foot = PDCode::he(fresh, sl);
    if (*foot < 0) throw std::logic_error("band_slide: landing point is off the band's face");
    d.splice_out(old);
    d.orient();
    out.validate();
    return out;
  }
  throw UnrealizableBand("band_slide: the mover has no foot next to a foot of the other band");
}

bool orientable(const DiagramWithBands& s0) {
  DiagramWithBands s = s0;
  for (std::size_t i = 0; i < s.bands.size(); ++i)
    if (!s.bands[i].routing.empty()) s = realize_routing(s, i);
  std::vector<int> comp;
  const int nc = s.diagram.components(comp);
  if (nc > 20) throw std::domain_error("orientable: too many components");
  // One representative half-edge per component.
  std::vector<int> rep(static_cast<std::size_t>(nc), -1);
  for (int h : s.diagram.live_half_edges())
    if (rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(h)])] < 0)
      rep[static_cast<std::size_t>(comp[static_cast<std::size_t>(h)])] = h;
  const std::uint32_t choices = nc > 0 ? 1u << (nc - 1) : 1u;
  for (std::uint32_t mask = 0; mask < choices; ++mask) {
    DiagramWithBands t = s;
    for (int c = 1; c < nc; ++c)
      if ((mask >> (c - 1)) & 1) t.diagram.reverse_component(rep[static_cast<std::size_t>(c)]);
    bool ok = true;
    while (ok && !t.bands.empty()) {
      const BandSpec& b = t.bands.front();
      // Untwisted bands are coherent when the band's face lies on the same
      // side of the strand at both feet; each half twist flips that.
      const bool same = t.diagram.outgoing(b.attach1) == t.diagram.outgoing(b.attach2);
      ok = same != ((b.half_twists & 1) != 0);
      if (ok) band_move_in_place(t, 0);
    }
    if (ok) return true;
  }
  return false;
}

std::vector<SubsetProfile> subset_profile(const DiagramWithBands& s, int required) {
  const std::size_t n = s.bands.size();
  if (n > 16) throw std::domain_error("subset_profile: too many bands");
  std::vector<SubsetProfile> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (required >= 0 && !((mask >> required) & 1)) continue;
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) ids.push_back(i);
    const PDCode d = apply_bands(s, ids).diagram;
    out.push_back({ids, d.component_count(), determinant(d).get_str()});
  }
  return out;
}

}  // namespace lensball
