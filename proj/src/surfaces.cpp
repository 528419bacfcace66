#include "lensball/surfaces.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lensball/covers.hpp"
#include "lensball/invariants.hpp"
#include "lensball/tait_builder.hpp"

namespace lensball {

std::string to_string(DeltaStyle s) { return s == DeltaStyle::Vertical ? "vertical" : "horizontal"; }

std::string to_string(Tri t) { return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown"; }

BoundaryTag BoundaryTag::two_bridge(const BigInt& p, const BigInt& q) {
  BoundaryTag t;
  t.link = normal_form(p, q);
  return t;
}

BoundaryTag BoundaryTag::unlink_of(int n) {
  if (n < 1) throw DomainError("unlink_of: need n >= 1");
  BoundaryTag t;
  if (n >= 2) t.unlink = n;
  return t;
}

std::string BoundaryTag::str() const {
  if (unlink >= 2) return "unlink(" + std::to_string(unlink) + ")";
  if (link.p == 1) return "unknot";
  return link.str();
}

bool boundary_matches(const PDCode& d, const BoundaryTag& tag) {
  if (tag.unlink >= 2) return is_unlink_certificate(d, tag.unlink);
  if (tag.link.p == 1) return is_unlink_certificate(d, 1);
  return link_evidence(d) == link_evidence(standard_diagram(tag.link.p, tag.link.q));
}

SurfaceStats surface_stats(const DiagramWithBands& s, const BoundaryTag& boundary) {
  SurfaceStats st;
  st.zero_handles = s.minima;
  st.one_handles = static_cast<int>(s.bands.size());
  st.euler = s.euler();
  st.boundary = boundary;
  st.boundary_verified = boundary_matches(s.diagram, boundary);
  try {
    st.orientable = orientable(s) ? Tri::Yes : Tri::No;
  } catch (const std::exception&) {
    st.orientable = Tri::Unknown;
  }
  return st;
}

std::size_t band_index(const DiagramWithBands& s, const std::string& label) {
  for (std::size_t i = 0; i < s.bands.size(); ++i)
    if (s.bands[i].label == label) return i;
  throw DomainError("no band labelled '" + label + "'");
}

namespace {

void require_pq(const BigInt& p, const BigInt& q, const char* who) {
  if (!(p > q && q >= 1 && coprime(p, q))) throw DomainError(std::string(who) + ": need coprime p > q >= 1");
}

// Centre vertex of the Wahl string and the length of the arc the vertical band
// moves off it.
struct WahlShape {
  HJString wahl;
  int centre = 0;
  std::size_t b_last = 0;
};

WahlShape wahl_shape(const BigInt& p, const BigInt& q) {
  WahlShape w;
  w.wahl = wahl_minus(p, q);
  w.centre = static_cast<int>(hj_expand(p, q).size());
  w.b_last = static_cast<std::size_t>(dual(p, q).back());
  return w;
}

void split_vertical(TaitGraph& g, const WahlShape& w, const std::string& label) {
  split_vertex(g, w.centre, 0, w.b_last, EdgeKind::BlackBand, -1, label);
}

// Leaves out the outermost edge at each end of the outer region's rotation.
void split_horizontal(TaitGraph& g, const std::string& label) {
  const int n0 = g.valence(0);
  if (n0 < 3) throw DomainError("horizontal band needs at least three edges at the outer vertex");
  split_vertex(g, 0, 1, static_cast<std::size_t>(n0 - 2), EdgeKind::BlackBand, -1, label);
}

// Corner band across sector (slot, slot + 1) of crossing c.
BandSpec corner_band(PDCode& d, int c, int slot) {
  const int m1 = d.subdivide(PDCode::he(c, slot));
  const int m2 = d.subdivide(PDCode::he(c, (slot + 1) % 4));
  std::vector<int> f;
  d.faces(f);
  const int face = f[static_cast<std::size_t>(PDCode::he(c, slot))];
  int a = -1, b = -1;
  for (int i = 0; i < 2; ++i) {
    if (f[static_cast<std::size_t>(PDCode::he(m1, i))] == face) a = PDCode::he(m1, i);
    if (f[static_cast<std::size_t>(PDCode::he(m2, i))] == face) b = PDCode::he(m2, i);
  }
  if (a < 0 || b < 0) throw std::logic_error("corner_band: markers miss the corner region");
  return BandSpec{a, b, {}, 0, "corner"};
}

// Copies the nodes of e into d; returns the node offset.
int append_diagram(PDCode& d, const PDCode& e) {
  const int off = d.node_count();
  for (int n = 0; n < e.node_count(); ++n) {
    const int m = e.is_crossing(n) ? d.add_crossing(e.under02(n)) : d.add_marker();
    if (m != off + n) throw std::logic_error("append_diagram: unexpected node numbering");
  }
  for (int h : e.live_half_edges())
    if (h < e.mate(h)) d.connect(h + 4 * off, e.mate(h) + 4 * off);
  return off;
}

int first_live(const PDCode& d, int from_node) {
  for (int h : d.live_half_edges())
    if (PDCode::node_of(h) >= from_node) return h;
  throw DomainError("boundary_sum: empty diagram");
}

// Builds a report, turning exceptions into failed checks.
template <class F>
VerificationReport run_report(const std::string& theorem, std::vector<std::pair<std::string, std::string>> params,
                              F&& body) {
  VerificationReport r;
  r.theorem = theorem;
  r.params = std::move(params);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail("exception", e.what());
  }
  return r;
}

void expect_stats(VerificationReport& r, const std::string& prefix, const SurfaceStats& st, int euler,
                  Tri orientable) {
  r.expect_true(prefix + "boundary " + st.boundary.str(), st.boundary_verified);
  r.expect_eq(prefix + "euler characteristic", std::to_string(euler), std::to_string(st.euler));
  if (orientable != Tri::Unknown) r.expect_eq(prefix + "orientable", to_string(orientable), to_string(st.orientable));
}

void expect_unlink_after_all(VerificationReport& r, const std::string& prefix, const DiagramWithBands& s) {
  const PDCode d = apply_all_bands(s).diagram;
  r.expect_true(prefix + "all bands give a " + std::to_string(s.minima) + "-unlink",
                is_unlink_certificate(d, s.minima));
}

void compare_terminal(VerificationReport& r, const SurfaceStats& got, const SurfaceStats& terminal,
                      const std::string& name) {
  r.expect_eq("terminal " + name + " euler characteristic", std::to_string(terminal.euler), std::to_string(got.euler));
  r.expect_eq("terminal " + name + " boundary", terminal.boundary.str(), got.boundary.str());
  r.expect_true("terminal " + name + " boundary verified", terminal.boundary_verified && got.boundary_verified);
  r.expect_eq("terminal " + name + " orientable", to_string(terminal.orientable), to_string(got.orientable));
}

void expect_swims(VerificationReport& r, NestedPair start, int stop_inner, int expected_swims) {
  const auto seq = swim_sequence(start, stop_inner);
  r.expect_eq("band swims", std::to_string(expected_swims), std::to_string(seq.size() - 1));
  bool nested = true;
  for (auto& s : seq) nested = nested && s.outer == s.inner + 2;
  r.expect_true("swims keep the pair nested with counts two apart", nested);
  r.expect_eq("final inner count", std::to_string(stop_inner), std::to_string(seq.back().inner));
  r.params.emplace_back("swim_start", std::to_string(start.inner) + "," + std::to_string(start.outer));
}

}  // namespace

// --- slice disks -------------------------------------------------------------

DiagramWithBands delta(const BigInt& p, const BigInt& q, DeltaStyle style) {
  require_pq(p, q, "delta");
  const WahlShape w = wahl_shape(p, q);
  TaitGraph g = gamma_graph(w.wahl).graph;
  if (style == DeltaStyle::Vertical)
    split_vertical(g, w, "vertical");
  else
    split_horizontal(g, "horizontal");
  DiagramWithBands s = realize(g);
  s.minima = 2;
  return s;
}

std::pair<int, int> delta_side_counts(const BigInt& p, const BigInt& q) {
  require_pq(p, q, "delta_side_counts");
  const WahlShape w = wahl_shape(p, q);
  TaitGraph g = gamma_graph(w.wahl).graph;
  const int band = split_vertex(g, w.centre, 0, w.b_last, EdgeKind::BlackBand, -1);
  const int moved = g.vertex_count() - 1;
  // Vertices reachable from the moved arc without passing through the outer
  // region or the band.
  std::vector<char> right(static_cast<std::size_t>(g.vertex_count()), 0);
  std::queue<int> todo;
  todo.push(moved);
  right[static_cast<std::size_t>(moved)] = 1;
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (auto& e : g.rotation[static_cast<std::size_t>(v)]) {
      if (e.edge == band) continue;
      const auto& ed = g.edges[static_cast<std::size_t>(e.edge)];
      const int o = e.end == 0 ? ed.head : ed.tail;
      if (o == 0 || right[static_cast<std::size_t>(o)]) continue;
      right[static_cast<std::size_t>(o)] = 1;
      todo.push(o);
    }
  }
  int l = 0, r = 0;
  for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
    if (i == band) continue;
    const auto& e = g.edges[static_cast<std::size_t>(i)];
    const int v = e.tail == 0 ? e.head : e.tail;
    (right[static_cast<std::size_t>(v)] ? r : l) += 1;
  }
  return {l, r};
}

DiagramWithBands delta_both(const BigInt& p, const BigInt& q) {
  require_pq(p, q, "delta_both");
  const WahlShape w = wahl_shape(p, q);
  TaitGraph g = gamma_graph(w.wahl).graph;
  split_vertical(g, w, "vertical");
  split_horizontal(g, "horizontal");
  DiagramWithBands s = realize(g);
  const std::size_t v = band_index(s, "vertical");
  if (v != 0) std::swap(s.bands[0], s.bands[v]);
  s.minima = 3;
  return s;
}

DeltaSurface delta_surface(const BigInt& p, const BigInt& q, DeltaStyle style) {
  return DeltaSurface{p, q, style, delta(p, q, style)};
}

DeltaSurface delta_recursion_step(const DeltaSurface& s, Direction dir, RecursionStyle style) {
  const bool horizontal = s.style == DeltaStyle::Horizontal;
  if ((style == RecursionStyle::Exp2) != horizontal)
    throw DomainError("delta_recursion_step: exp2 moves horizontal bands and exp1 vertical ones");
  BigInt p = s.p, q = s.q;
  if (style == RecursionStyle::Exp1) q = mod_inverse(q, p);
  BigInt np, nq;
  if (dir == Direction::Left) {
    np = p + q;
    nq = q;
  } else {
    np = 2 * p - q;
    nq = p;
  }
  if (style == RecursionStyle::Exp1) nq = mod_inverse(nq, np);
  return delta_surface(np, nq, s.style);
}

// --- pushed-in chessboard surfaces ------------------------------------------

DiagramWithBands corner_surface(const PDCode& d0, int colour) {
  DiagramWithBands s;
  s.diagram = d0;
  std::vector<int> face_of;
  const std::vector<int> col = chessboard_colouring(d0, face_of);
  s.minima = static_cast<int>(std::count(col.begin(), col.end(), colour));
  std::vector<std::pair<int, int>> corners;
  for (int n = 0; n < d0.node_count(); ++n) {
    if (!d0.is_crossing(n)) continue;
    for (int sl = 0; sl < 4; ++sl)
      if (col[static_cast<std::size_t>(face_of[static_cast<std::size_t>(PDCode::he(n, sl))])] == colour) {
        corners.emplace_back(n, sl);
        break;
      }
  }
  for (auto [n, sl] : corners) s.bands.push_back(corner_band(s.diagram, n, sl));
  s.diagram.orient();
  s.validate();
  return s;
}

DiagramWithBands face_surface(const HJString& c) {
  const PDCode d = standard_diagram(c);
  std::vector<int> face_of;
  const std::vector<int> col = chessboard_colouring(d, face_of);
  // Sector 0 of every crossing is a region of the outer-vertex side's dual,
  // the colour whose regions number sum(c) - 2 len(c) + 2.
  for (int n = 0; n < d.node_count(); ++n)
    if (d.is_crossing(n))
      return corner_surface(d, col[static_cast<std::size_t>(face_of[static_cast<std::size_t>(PDCode::he(n, 0))])]);
  throw DomainError("face_surface: diagram has no crossings");
}

HJString delta_half_weights(const BigInt& p, const BigInt& q) {
  require_pq(p, q, "delta_half_weights");
  HJString a = hj_expand(p, q);
  a.back() += 1;
  return a;
}

DiagramWithBands f_delta(const BigInt& p, const BigInt& q) { return face_surface(delta_half_weights(p, q)); }

DiagramWithBands f_prime(const BigInt& p, const BigInt& q) {
  require_pq(p, q, "f_prime");
  const WahlShape w = wahl_shape(p, q);
  GammaGraph G = gamma_graph(w.wahl);
  TaitGraph& g = G.graph;
  // Edges to the outer vertex on the b-side: those in the arc the vertical
  // band moves off the centre, then everything right of the centre.
  std::vector<int> bside;
  const auto& rc = g.rotation[static_cast<std::size_t>(w.centre)];
  for (std::size_t i = 0; i < w.b_last && i < rc.size(); ++i) {
    const auto& e = g.edges[static_cast<std::size_t>(rc[i].edge)];
    if (e.tail == 0 || e.head == 0) bside.push_back(rc[i].edge);
  }
  for (std::size_t v = static_cast<std::size_t>(w.centre) + 1; v <= w.wahl.size(); ++v)
    for (int e : G.v0_edges[v - 1]) bside.push_back(e);
  if (bside.empty()) throw std::logic_error("f_prime: no b-side edges");
  // The innermost one, adjacent to the band, stays a crossing.
  const int kept = rc[w.b_last - 1].edge;
  for (int e : bside) {
    if (e == kept) continue;
    auto& ed = g.edges[static_cast<std::size_t>(e)];
    ed.kind = EdgeKind::WhiteBand;
    ed.label = "blue";
  }
  split_vertical(g, w, "pink");
  DiagramWithBands s = realize(g);
  std::stable_partition(s.bands.begin(), s.bands.end(), [](const BandSpec& b) { return b.label == "blue"; });
  s.minima = 2;
  return s;
}

DiagramWithBands moebius_minus() { return face_surface({1}); }

DiagramWithBands moebius_plus() { return mirror(moebius_minus()); }

DiagramWithBands f_minus4() { return face_surface({4}); }

DiagramWithBands mirror(const DiagramWithBands& s) {
  DiagramWithBands m = s;
  m.diagram = s.diagram.mirror();
  for (auto& b : m.bands) {
    b.half_twists = -b.half_twists;
    for (auto& st : b.routing) st.over = !st.over;
  }
  return m;
}

DiagramWithBands boundary_sum(const DiagramWithBands& s1, const DiagramWithBands& s2) {
  if (s1.minima < 1 || s2.minima < 1) throw DomainError("boundary_sum: surfaces need a minimum each");
  DiagramWithBands out = s1;
  std::vector<int> remap;
  const PDCode e = s2.diagram.compacted(&remap);
  PDCode& d = out.diagram;
  const int off = append_diagram(d, e);
  auto move = [&](int h) {
    const int n = remap[static_cast<std::size_t>(PDCode::node_of(h))];
    if (n < 0) throw DomainError("boundary_sum: band anchored on a dead node");
    return PDCode::he(n + off, PDCode::slot_of(h));
  };
  for (BandSpec b : s2.bands) {
    b.attach1 = move(b.attach1);
    b.attach2 = move(b.attach2);
    for (auto& st : b.routing) st.edge = move(st.edge);
    out.bands.push_back(b);
  }
  // Cut one edge of each and cross-connect: a connected sum of the boundaries.
  const int h1 = first_live(d, 0), h2 = first_live(d, off);
  const int e1 = d.mate(h1), e2 = d.mate(h2);
  d.disconnect(h1);
  d.disconnect(h2);
  d.connect(h1, e2);
  d.connect(h2, e1);
  d.orient();
  out.minima = s1.minima + s2.minima - 1;
  out.validate();
  return out;
}

// --- sublevels ----------------------------------------------------------------

SublevelWitness sublevel(const DiagramWithBands& parent, std::vector<std::size_t> subset, const BigInt& p,
                         const BigInt& q) {
  SublevelWitness w;
  w.parent = parent;
  w.band_subset = subset;
  w.residual = apply_bands(parent, std::move(subset));
  w.p = p;
  w.q = q;
  return w;
}

VerificationReport check_sublevel(const SublevelWitness& w) {
  return run_report("sublevel", {{"p", w.p.get_str()}, {"q", w.q.get_str()}}, [&](VerificationReport& r) {
    r.expect_eq("residual bands", "1", std::to_string(w.residual.bands.size()));
    r.expect_eq("residual minima", "2", std::to_string(w.residual.minima));
    const BoundaryTag k = BoundaryTag::two_bridge(w.p * w.p, w.p * w.q - 1);
    r.expect_true("residual boundary " + k.str(), boundary_matches(w.residual.diagram, k));
    if (w.residual.bands.size() == 1)
      r.expect_true("residual band gives a 2-unlink",
                    is_unlink_certificate(apply_all_bands(w.residual).diagram, 2));
  });
}

// --- families -----------------------------------------------------------------

DiagramWithBands kh13_bands(int p) {
  if (p < 3) throw DomainError("kh13: need p >= 3");
  TaitGraph g = gamma_graph(wahl_minus(p, 1)).graph;
  add_chord(g, 0, 0, 2, 0, EdgeKind::WhiteBand, -1, "blue");
  split_vertex(g, 1, 0, 2, EdgeKind::BlackBand, -1, "red");
  return realize(g);
}

DiagramWithBands kh13_surface(int p) {
  const DiagramWithBands raw = kh13_bands(p);
  DiagramWithBands s = invert_band(raw, band_index(raw, "blue"));
  s.minima = 2;
  return s;
}

DiagramWithBands psquared_bands(int p) {
  if (p < 2) throw DomainError("psquared: need p >= 2");
  const BigInt P = BigInt(p) * p, Q = p - 1;
  const WahlShape w = wahl_shape(P, Q);
  TaitGraph g = gamma_graph(w.wahl).graph;
  add_chord(g, 0, 0, p, 0, EdgeKind::WhiteBand, -1, "blue");
  split_vertical(g, w, "red");
  return realize(g);
}

DiagramWithBands psquared_surface(int p) {
  const DiagramWithBands raw = psquared_bands(p);
  DiagramWithBands s = invert_band(raw, band_index(raw, "blue"));
  s.minima = 2;
  return s;
}

namespace {

std::pair<BigInt, BigInt> cp2bar_pq(int n, Sign sign) {
  if (n < 1) throw DomainError("cp2bar: need n >= 1");
  const auto un = static_cast<unsigned>(n);
  return sign == Sign::Minus ? std::pair{fib(2 * un + 2), fib(2 * un)} : std::pair{fib(2 * un + 1), fib(2 * un - 1)};
}

}  // namespace

DiagramWithBands cp2bar_bands(int n, Sign sign) {
  const auto [P, Q] = cp2bar_pq(n, sign);
  const WahlShape w = wahl_shape(P, Q);
  TaitGraph g = gamma_graph(w.wahl).graph;
  // Two nested splits of the centre vertex; the red band is the vertical
  // Delta band and the blue one lies one edge outside (minus) or inside (plus).
  if (sign == Sign::Minus) {
    split_vertex(g, w.centre, 0, w.b_last + 1, EdgeKind::BlackBand, -1, "blue");
    split_vertex(g, g.vertex_count() - 1, 0, w.b_last, EdgeKind::BlackBand, -1, "red");
  } else {
    split_vertex(g, w.centre, 0, w.b_last, EdgeKind::BlackBand, -1, "red");
    split_vertex(g, g.vertex_count() - 1, 0, w.b_last - 1, EdgeKind::BlackBand, -1, "blue");
  }
  return realize(g);
}

DiagramWithBands cp2bar_surface(int n, Sign sign) {
  const DiagramWithBands raw = cp2bar_bands(n, sign);
  DiagramWithBands s = invert_band(raw, band_index(raw, "blue"));
  s.minima = 2;
  return s;
}

std::vector<NestedPair> swim_sequence(NestedPair start, int stop_inner) {
  if (start.inner < stop_inner || (start.inner - stop_inner) % 2 != 0)
    throw DomainError("swim_sequence: inner count cannot reach the stop value in steps of 2");
  std::vector<NestedPair> seq{start};
  while (seq.back().inner > stop_inner) seq.push_back({seq.back().inner - 2, seq.back().outer - 2});
  return seq;
}

// --- verifiers ----------------------------------------------------------------

VerificationReport verify_delta(const BigInt& p, const BigInt& q) {
  return run_report("delta", {{"p", p.get_str()}, {"q", q.get_str()}}, [&](VerificationReport& r) {
    const BoundaryTag k = BoundaryTag::two_bridge(p * p, p * q - 1);
    std::vector<SurfaceStats> st;
    for (DeltaStyle style : {DeltaStyle::Vertical, DeltaStyle::Horizontal}) {
      const DiagramWithBands s = delta(p, q, style);
      const std::string pre = to_string(style) + ": ";
      st.push_back(surface_stats(s, k));
      // A disk for odd p; a disk and a Moebius band for even p.
      expect_stats(r, pre, st.back(), 1, p % 2 != 0 ? Tri::Yes : Tri::No);
      r.expect_true(pre + "band gives a 2-unlink", is_unlink_certificate(apply_all_bands(s).diagram, 2));
    }
    r.expect_true("styles agree on stats", st[0].euler == st[1].euler && st[0].zero_handles == st[1].zero_handles &&
                                               st[0].one_handles == st[1].one_handles);
    r.expect_true("both bands give a 3-unlink", is_unlink_certificate(apply_all_bands(delta_both(p, q)).diagram, 3));
  });
}

VerificationReport verify_pps(const BigInt& p, const BigInt& q) {
  return run_report("pps", {{"p", p.get_str()}, {"q", q.get_str()}}, [&](VerificationReport& r) {
    const HJString weights = delta_half_weights(p, q);
    const int k = static_cast<int>(weights.size());
    const Fraction f = hj_eval(weights);
    const BoundaryTag tag = BoundaryTag::two_bridge(f.num, f.den);
    const DiagramWithBands fd = f_delta(p, q), fp = f_prime(p, q);
    r.params.emplace_back("weights", to_string(weights));
    r.params.emplace_back("boundary", tag.str());
    r.params.emplace_back("boundary_fraction", f.str());
    r.expect_true("F_delta boundary " + tag.str(), boundary_matches(fd.diagram, tag));
    r.expect_true("F' boundary " + tag.str(), boundary_matches(fp.diagram, tag));
    r.expect_eq("chi(F_delta)", std::to_string(1 - k), std::to_string(fd.euler()));
    r.expect_eq("chi(F')", std::to_string(1 - k), std::to_string(fp.euler()));
    std::vector<std::size_t> blue;
    for (std::size_t i = 0; i < fp.bands.size(); ++i)
      if (fp.bands[i].label == "blue") blue.push_back(i);
    r.merge(check_sublevel(sublevel(fp, blue, p, q)), "Delta sublevel: ");
    expect_unlink_after_all(r, "F_delta: ", fd);
    expect_unlink_after_all(r, "F': ", fp);
    const CoverStats c = cover_stats(fd, weights);
    r.expect_eq("chi(cover of F_delta) = 1 + k", std::to_string(1 + k), std::to_string(c.cover_euler));
    r.expect_eq("b2(cover) = number of weights", std::to_string(k), std::to_string(c.b2.value_or(-1)));
  });
}

VerificationReport verify_kh12(int p) {
  return run_report("kh12", {{"p", std::to_string(p)}}, [&](VerificationReport& r) {
    if (p < 2) throw DomainError("kh12: need p >= 2");
    r.expect_eq("F_delta weights", "[" + std::to_string(p + 1) + "]", to_string(delta_half_weights(p, 1)));
    const PlumbingLattice L = linear_lattice(delta_half_weights(p, 1));
    r.expect_eq("plumbing determinant", std::to_string(-(p + 1)), L.det.get_str());
    r.expect_true("plumbing negative definite", L.negative_definite);
    r.merge(verify_pps(p, 1), "");
  });
}

VerificationReport verify_kh13(int p) {
  return run_report("kh13", {{"p", std::to_string(p)}}, [&](VerificationReport& r) {
    const DiagramWithBands raw = kh13_bands(p);
    const BoundaryTag kp = BoundaryTag::two_bridge(BigInt(p) * p, p - 1), k2 = BoundaryTag::two_bridge(4, 1);
    r.expect_true("diagram is " + kp.str(), boundary_matches(raw.diagram, kp));
    r.expect_true("red band gives a 2-unlink",
                  is_unlink_certificate(apply_band_move(raw, band_index(raw, "red")).diagram, 2));
    r.expect_true("blue band gives " + k2.str(),
                  boundary_matches(apply_band_move(raw, band_index(raw, "blue")).diagram, k2));
    const DiagramWithBands s = kh13_surface(p);
    const SurfaceStats st = surface_stats(s, k2);
    expect_stats(r, "surface: ", st, 0, p % 2 ? Tri::Yes : Tri::No);
    expect_unlink_after_all(r, "surface: ", s);
    r.merge(check_sublevel(sublevel(s, {0}, p, 1)), "Delta sublevel: ");
    const bool odd = p % 2 == 1;
    expect_swims(r, {p, p + 2}, odd ? 1 : 2, odd ? (p - 1) / 2 : (p - 2) / 2);
    const DiagramWithBands terminal =
        odd ? f_minus4() : boundary_sum(delta(2, 1, DeltaStyle::Horizontal), moebius_minus());
    compare_terminal(r, st, surface_stats(terminal, k2), odd ? "F_-4" : "Delta_{2,1} # P_-");
  });
}

VerificationReport verify_psquared(int p) {
  return run_report("psquared", {{"p", std::to_string(p)}}, [&](VerificationReport& r) {
    const DiagramWithBands raw = psquared_bands(p);
    const BigInt P = BigInt(p) * p, Q = p - 1;
    const BoundaryTag big = BoundaryTag::two_bridge(P * P, P * Q - 1), kp = BoundaryTag::two_bridge(P, Q);
    r.expect_true("diagram is " + big.str(), boundary_matches(raw.diagram, big));
    r.expect_true("red band gives a 2-unlink",
                  is_unlink_certificate(apply_band_move(raw, band_index(raw, "red")).diagram, 2));
    r.expect_true("blue band gives " + kp.str(),
                  boundary_matches(apply_band_move(raw, band_index(raw, "blue")).diagram, kp));
    const DiagramWithBands s = psquared_surface(p);
    const SurfaceStats st = surface_stats(s, kp);
    expect_stats(r, "surface: ", st, 0, Tri::No);
    expect_unlink_after_all(r, "surface: ", s);
    r.merge(check_sublevel(sublevel(s, {0}, P, Q)), "Delta sublevel: ");
    expect_swims(r, {2 * p + 2, 2 * p + 4}, 2, p);
    const DiagramWithBands terminal = boundary_sum(delta(p, 1, DeltaStyle::Horizontal), moebius_minus());
    compare_terminal(r, st, surface_stats(terminal, kp), "Delta_{p,1} # P_-");
  });
}

VerificationReport verify_cp2bar(int n, Sign sign) {
  const std::string tag = sign == Sign::Minus ? "minus" : "plus";
  return run_report("cp2bar", {{"n", std::to_string(n)}, {"sign", tag}}, [&](VerificationReport& r) {
    const auto [P, Q] = cp2bar_pq(n, sign);
    if (sign == Sign::Minus) r.expect_true("Fibonacci identities", fibonacci_identities(static_cast<unsigned>(n)).ok());
    const DiagramWithBands raw = cp2bar_bands(n, sign);
    const BoundaryTag k = BoundaryTag::two_bridge(P * P, P * Q - 1);
    r.expect_true("diagram is " + k.str(), boundary_matches(raw.diagram, k));
    r.expect_true("red band gives a 2-unlink",
                  is_unlink_certificate(apply_band_move(raw, band_index(raw, "red")).diagram, 2));
    r.expect_true("blue band gives the unknot",
                  is_unlink_certificate(apply_band_move(raw, band_index(raw, "blue")).diagram, 1));
    const DiagramWithBands s = cp2bar_surface(n, sign);
    SimplifyStats moves;
    const PDCode simple = simplify_with_r3(s.diagram, &moves);
    r.expect_eq("boundary simplifies to a crossingless unknot", "0", std::to_string(simple.crossing_count()));
    r.params.emplace_back("boundary_crossings", std::to_string(s.diagram.crossing_count()));
    r.params.emplace_back("r3_moves", std::to_string(moves.r3));
    r.params.emplace_back("r2_moves", std::to_string(moves.r2));
    r.params.emplace_back("r1_moves", std::to_string(moves.r1));
    const SurfaceStats st = surface_stats(s, BoundaryTag::unknot());
    expect_stats(r, "surface: ", st, 0, Tri::No);
    expect_unlink_after_all(r, "surface: ", s);
    const SublevelWitness w = sublevel(s, {0}, P, Q);
    r.merge(check_sublevel(w), "Delta sublevel: ");
    r.expect_eq("sublevel boundary", normal_form(P * P, P * Q - 1).str(), k.str());
    const DiagramWithBands terminal = sign == Sign::Minus ? moebius_minus() : moebius_plus();
    compare_terminal(r, st, surface_stats(terminal, BoundaryTag::unknot()), sign == Sign::Minus ? "P_-" : "P_+");
  });
}

// --- equivariant rational blow-up -------------------------------------------

BlowupResult equivariant_blowup(const DiagramWithBands& s, const SublevelWitness& w) {
  const VerificationReport ok = check_sublevel(w);
  if (!ok.pass()) throw DomainError("equivariant_blowup: witness does not certify a slice disk");
  DiagramWithBands t = s;
  std::vector<std::size_t> ids = w.band_subset;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    t = invert_band(t, ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (ids[j] < ids[i]) ++ids[j];
  }
  const std::size_t nd = ids.size();
  if (t.bands.size() != nd + 1) throw DomainError("equivariant_blowup: expected one slice-disk band");
  BlowupResult out;
  out.delta_euler = w.residual.euler();
  const int target = 1 - static_cast<int>(wahl_minus(w.p, w.q).size());
  std::optional<DiagramWithBands> pushed;
  for (int colour = 0; colour < 2 && !pushed; ++colour) {
    DiagramWithBands c = corner_surface(t.diagram, colour);
    if (c.euler() == target) {
      pushed = std::move(c);
      out.colour = colour;
    }
  }
  if (!pushed) throw DomainError("equivariant_blowup: no chessboard surface of the boundary has chi " +
                                 std::to_string(target));
  out.pushed_in_euler = pushed->euler();
  DiagramWithBands u = *pushed;
  std::vector<BandSpec> bands(t.bands.begin(), t.bands.begin() + static_cast<std::ptrdiff_t>(nd));
  bands.insert(bands.end(), u.bands.begin(), u.bands.end());
  u.bands = std::move(bands);
  // The inverted subset bands sit in front, last one first; performing each
  // in turn brings the boundary back to the parent's.
  for (std::size_t i = 0; i < nd; ++i) u = invert_band(u, i);
  u.minima = pushed->minima;
  u.validate();
  out.surface = std::move(u);
  return out;
}

VerificationReport verify_blowup(const std::string& name, const DiagramWithBands& s, const SublevelWitness& w,
                                 const BoundaryTag& boundary) {
  return run_report("blowup", {{"instance", name}, {"p", w.p.get_str()}, {"q", w.q.get_str()}},
                    [&](VerificationReport& r) {
                      r.merge(check_sublevel(w), "witness: ");
                      const BlowupResult b = equivariant_blowup(s, w);
                      r.expect_true("boundary " + boundary.str() + " preserved",
                                    boundary_matches(s.diagram, boundary) &&
                                        boundary_matches(b.surface.diagram, boundary));
                      const int k = static_cast<int>(wahl_minus(w.p, w.q).size());
                      r.expect_eq("chi(pushed-in surface) = 1 - len(wahl)", std::to_string(1 - k),
                                  std::to_string(b.pushed_in_euler));
                      r.expect_eq("chi(result) = chi(s) - chi(Delta) + chi(pushed-in)",
                                  std::to_string(s.euler() - b.delta_euler + b.pushed_in_euler),
                                  std::to_string(b.surface.euler()));
                      expect_unlink_after_all(r, "result: ", b.surface);
                    });
}

}  // namespace lensball
