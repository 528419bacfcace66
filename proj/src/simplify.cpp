#include "lensball/simplify.hpp"

namespace lensball {

namespace {

bool over_at(const PDCode& d, int h) {
  return (PDCode::slot_of(h) % 2 == 1) == d.under02(PDCode::node_of(h));
}

}  // namespace

PDCode strip_markers(const PDCode& d) {
  PDCode out = d;
  for (int n = 0; n < out.node_count(); ++n)
    if (out.is_marker(n)) out.splice_out(n);
  return out.compacted();
}

bool r1_step(PDCode& d) {
  for (int c = 0; c < d.node_count(); ++c) {
    if (!d.is_crossing(c)) continue;
    for (int k = 0; k < 4; ++k) {
      if (d.mate(PDCode::he(c, k)) != PDCode::he(c, (k + 1) & 3)) continue;
      // Kink joining slots k and k+1; the strand continues through k+2 and k+3.
      const int s1 = PDCode::he(c, (k + 2) & 3), s2 = PDCode::he(c, (k + 3) & 3);
      const int x = d.subdivide(s1), y = d.subdivide(s2);
      d.kill(c);
      d.connect(PDCode::he(x, 0), PDCode::he(y, 0));
      return true;
    }
  }
  return false;
}

bool r2_step(PDCode& d) {
  std::vector<int> face_of;
  d.faces(face_of);
  for (int h : d.live_half_edges()) {
    const int c1 = PDCode::node_of(h);
    if (!d.is_crossing(c1)) continue;
    const int g = d.face_next(h);
    const int c2 = PDCode::node_of(g);
    if (c2 == c1 || !d.is_crossing(c2) || d.face_next(g) != h) continue;
    // Bigon: h=(c1,s) meets (c2,t), and g=(c2,t-1) meets (c1,s+1).
    const int s = PDCode::slot_of(h);
    const int t = PDCode::slot_of(d.mate(h));
    if (over_at(d, h) != over_at(d, d.mate(h))) continue;
    const int a1 = PDCode::he(c1, (s + 2) & 3), a2 = PDCode::he(c2, (t + 2) & 3);
    const int b1 = PDCode::he(c1, (s + 3) & 3), b2 = PDCode::he(c2, (t + 1) & 3);
    const int xa1 = d.subdivide(a1), xa2 = d.subdivide(a2);
    const int xb1 = d.subdivide(b1), xb2 = d.subdivide(b2);
    d.kill(c1);
    d.kill(c2);
    d.connect(PDCode::he(xa1, 0), PDCode::he(xa2, 0));
    d.connect(PDCode::he(xb1, 0), PDCode::he(xb2, 0));
    return true;
  }
  return false;
}

bool r3_move(PDCode& d, int h) {
  int x[3], side[3];
  int g = h;
  for (int i = 0; i < 3; ++i) {
    x[i] = PDCode::node_of(g);
    side[i] = PDCode::slot_of(g);
    if (!d.is_crossing(x[i])) return false;
    g = d.face_next(g);
  }
  if (g != h || x[0] == x[1] || x[1] == x[2] || x[0] == x[2]) return false;
  bool movable = false;
  for (int i = 0; i < 3; ++i) {
    const int a = PDCode::he(x[i], side[i]);
    if (over_at(d, a) == over_at(d, d.mate(a))) movable = true;
  }
  if (!movable) return false;
  // Side i runs from slot side[i] of x[i] to slot side[i+1]+1 of x[i+1]; its
  // strand leaves the triangle through the opposite slots.
  int xs[3], ys[3], ox[3], oy[3];
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    xs[i] = PDCode::he(x[i], side[i]);
    ys[i] = d.mate(xs[i]);
    if (PDCode::node_of(ys[i]) != x[j]) return false;
    ox[i] = d.mate(PDCode::he(x[i], (side[i] + 2) & 3));
    oy[i] = d.mate(PDCode::he(x[j], (PDCode::slot_of(ys[i]) + 2) & 3));
  }
  for (int i = 0; i < 3; ++i)
    for (int n : {PDCode::node_of(ox[i]), PDCode::node_of(oy[i])})
      if (n == x[0] || n == x[1] || n == x[2]) return false;
  // Each crossing keeps its strands; the triangle flips to the opposite
  // sectors, so every strand meets its two crossings in the other order.
  for (int i = 0; i < 3; ++i) {
    const int xo = PDCode::he(x[i], (side[i] + 2) & 3);
    const int yo = PDCode::he(PDCode::node_of(ys[i]), (PDCode::slot_of(ys[i]) + 2) & 3);
    d.disconnect(xs[i]);
    d.disconnect(xo);
    d.disconnect(yo);
  }
  for (int i = 0; i < 3; ++i) {
    const int xo = PDCode::he(x[i], (side[i] + 2) & 3);
    const int yo = PDCode::he(PDCode::node_of(ys[i]), (PDCode::slot_of(ys[i]) + 2) & 3);
    d.connect(xs[i], oy[i]);
    d.connect(ys[i], ox[i]);
    d.connect(xo, yo);
  }
  d.orient();
  return true;
}

bool untongue_step(PDCode& d) {
  std::vector<int> face_of;
  const int nf = d.faces(face_of);
  std::vector<char> tried(static_cast<std::size_t>(nf), 0);
  for (int h : d.live_half_edges()) {
    const int f = face_of[static_cast<std::size_t>(h)];
    if (f < 0 || tried[static_cast<std::size_t>(f)]) continue;
    tried[static_cast<std::size_t>(f)] = 1;
    PDCode e = d;
    if (!r3_move(e, h)) continue;
    PDCode r = e;
    if (!r1_step(r) && !r2_step(r)) continue;
    d = e;
    return true;
  }
  return false;
}

PDCode simplify_with_r3(const PDCode& d0, SimplifyStats* stats) {
  SimplifyStats total, st;
  PDCode d = simplify(d0, &st);
  total.r1 += st.r1;
  total.r2 += st.r2;
  while (d.crossing_count() > 0 && untongue_step(d)) {
    ++total.r3;
    d = simplify(d, &st);
    total.r1 += st.r1;
    total.r2 += st.r2;
  }
  if (stats) *stats = total;
  return d;
}

PDCode simplify(const PDCode& d0, SimplifyStats* stats) {
  PDCode d = strip_markers(d0);
  SimplifyStats st;
  for (;;) {
    if (r1_step(d)) {
      ++st.r1;
    } else if (r2_step(d)) {
      ++st.r2;
    } else {
      break;
    }
    d = strip_markers(d);
  }
  d.orient();
  if (stats) *stats = st;
  return d;
}

}  // namespace lensball
