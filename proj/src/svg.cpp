#include "lensball/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace lensball {

namespace {

struct Point {
  double x = 0, y = 0;
};

constexpr double kCell = 240;  // width and height of one piece's drawing
constexpr double kRadius = 100;
constexpr double kGap = 7;     // break in an under-strand at a crossing

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string pt(Point p) { return fmt(p.x) + "," + fmt(p.y); }

struct Layout {
  std::vector<Point> pos;       // per node
  std::vector<Point> face_pos;  // per face id
  std::vector<char> outer;      // per face id
  std::vector<int> face_of;     // per half-edge
  int pieces = 0;
};

// Pieces of the underlying graph, by node.
std::vector<int> piece_of(const PDCode& d) {
  std::vector<int> piece(static_cast<std::size_t>(d.node_count()), -1);
  int next = 0;
  for (int n = 0; n < d.node_count(); ++n) {
    if (d.kind(n) == NodeKind::Dead || piece[static_cast<std::size_t>(n)] >= 0) continue;
    std::vector<int> stack{n};
    piece[static_cast<std::size_t>(n)] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < d.degree(v); ++s) {
        const int w = PDCode::node_of(d.mate(PDCode::he(v, s)));
        if (piece[static_cast<std::size_t>(w)] < 0) {
          piece[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return piece;
}

// Barycentric embedding of the node-face incidence graph of each piece, with
// the nodes of its longest face fixed on a circle.
Layout layout(const PDCode& d) {
  Layout L;
  L.pos.resize(static_cast<std::size_t>(d.node_count()));
  const int nf = d.faces(L.face_of);
  L.face_pos.resize(static_cast<std::size_t>(nf));
  L.outer.assign(static_cast<std::size_t>(nf), 0);
  const std::vector<int> piece = piece_of(d);
  for (int p : piece) L.pieces = std::max(L.pieces, p + 1);
  std::vector<std::vector<int>> face_nodes(static_cast<std::size_t>(nf)), node_faces(static_cast<std::size_t>(d.node_count()));
  std::vector<int> face_piece(static_cast<std::size_t>(nf), -1), first_he(static_cast<std::size_t>(nf), -1);
  for (int h : d.live_half_edges()) {
    const auto f = static_cast<std::size_t>(L.face_of[static_cast<std::size_t>(h)]);
    const int n = PDCode::node_of(h);
    face_nodes[f].push_back(n);
    node_faces[static_cast<std::size_t>(n)].push_back(static_cast<int>(f));
    face_piece[f] = piece[static_cast<std::size_t>(n)];
    if (first_he[f] < 0) first_he[f] = h;
  }
  for (int pc = 0; pc < L.pieces; ++pc) {
    const Point centre{kCell * (pc + 0.5), kCell / 2};
    int outer = -1;
    for (int f = 0; f < nf; ++f)
      if (face_piece[static_cast<std::size_t>(f)] == pc &&
          (outer < 0 || face_nodes[static_cast<std::size_t>(f)].size() > face_nodes[static_cast<std::size_t>(outer)].size()))
        outer = f;
    std::vector<char> fixed(static_cast<std::size_t>(d.node_count()), 0);
    std::vector<int> ring;
    if (outer >= 0) {
      L.outer[static_cast<std::size_t>(outer)] = 1;
      const int start = first_he[static_cast<std::size_t>(outer)];
      int h = start;
      do {
        const int v = PDCode::node_of(h);
        if (!fixed[static_cast<std::size_t>(v)]) {
          fixed[static_cast<std::size_t>(v)] = 1;
          ring.push_back(v);
        }
        h = d.face_next(h);
      } while (h != start);
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
      L.pos[static_cast<std::size_t>(ring[i])] = {centre.x + kRadius * std::cos(a), centre.y - kRadius * std::sin(a)};
    }
    for (int n = 0; n < d.node_count(); ++n)
      if (piece[static_cast<std::size_t>(n)] == pc && !fixed[static_cast<std::size_t>(n)]) L.pos[static_cast<std::size_t>(n)] = centre;
    for (int f = 0; f < nf; ++f)
      if (face_piece[static_cast<std::size_t>(f)] == pc) L.face_pos[static_cast<std::size_t>(f)] = centre;
    // Gauss-Seidel sweeps: faces to the mean of their corners, free nodes to
    // the mean of their inner faces.
    for (int it = 0; it < 600; ++it) {
      for (int f = 0; f < nf; ++f) {
        if (face_piece[static_cast<std::size_t>(f)] != pc || f == outer) continue;
        Point s;
        for (int n : face_nodes[static_cast<std::size_t>(f)]) {
          s.x += L.pos[static_cast<std::size_t>(n)].x;
          s.y += L.pos[static_cast<std::size_t>(n)].y;
        }
        const double k = static_cast<double>(face_nodes[static_cast<std::size_t>(f)].size());
        L.face_pos[static_cast<std::size_t>(f)] = {s.x / k, s.y / k};
      }
      for (int n = 0; n < d.node_count(); ++n) {
        if (piece[static_cast<std::size_t>(n)] != pc || fixed[static_cast<std::size_t>(n)]) continue;
        Point s;
        int k = 0;
        for (int f : node_faces[static_cast<std::size_t>(n)]) {
          if (f == outer) continue;
          s.x += L.face_pos[static_cast<std::size_t>(f)].x;
          s.y += L.face_pos[static_cast<std::size_t>(f)].y;
          ++k;
        }
        if (k > 0) L.pos[static_cast<std::size_t>(n)] = {s.x / k, s.y / k};
      }
    }
  }
  return L;
}

bool is_under(const PDCode& d, int h) {
  const int n = PDCode::node_of(h);
  if (!d.is_crossing(n)) return false;
  return (PDCode::slot_of(h) % 2 == 0) == d.under02(n);
}

Point unit(Point v) {
  const double n = std::hypot(v.x, v.y);
  return n < 1e-9 ? Point{1, 0} : Point{v.x / n, v.y / n};
}

std::string draw_diagram(const PDCode& d, const Layout& L) {
  // A point each edge passes through: towards the midpoint of its two side
  // faces, or away from the centre on the outer boundary.
  const auto nh = static_cast<std::size_t>(4 * d.node_count());
  std::vector<Point> through(nh);
  for (int h : d.live_half_edges()) {
    const int m = d.mate(h);
    const Point pa = L.pos[static_cast<std::size_t>(PDCode::node_of(h))];
    const Point pb = L.pos[static_cast<std::size_t>(PDCode::node_of(m))];
    const int fl = L.face_of[static_cast<std::size_t>(h)], fr = L.face_of[static_cast<std::size_t>(m)];
    const bool ol = L.outer[static_cast<std::size_t>(fl)] != 0, orr = L.outer[static_cast<std::size_t>(fr)] != 0;
    const Point mid{(pa.x + pb.x) / 2, (pa.y + pb.y) / 2};
    Point t = mid;
    if (!ol && !orr) {
      const Point fa = L.face_pos[static_cast<std::size_t>(fl)], fb = L.face_pos[static_cast<std::size_t>(fr)];
      t = {mid.x + 0.8 * ((fa.x + fb.x) / 2 - mid.x), mid.y + 0.8 * ((fa.y + fb.y) / 2 - mid.y)};
    } else if (ol != orr) {
      const Point centre{kCell * (std::floor(pa.x / kCell) + 0.5), kCell / 2};
      t = {mid.x + (mid.x - centre.x) * 0.35, mid.y + (mid.y - centre.y) * 0.35};
    }
    through[static_cast<std::size_t>(h)] = t;
  }
  // Tangents: opposite slots of a crossing, and the two slots of a marker,
  // leave in opposite directions.
  std::vector<Point> tangent(nh);
  for (int n = 0; n < d.node_count(); ++n) {
    if (d.kind(n) == NodeKind::Dead) continue;
    const int deg = d.degree(n), half = deg / 2;
    const Point c = L.pos[static_cast<std::size_t>(n)];
    for (int s = 0; s < half; ++s) {
      const int h1 = PDCode::he(n, s), h2 = PDCode::he(n, s + half);
      const Point r1 = unit({through[static_cast<std::size_t>(h1)].x - c.x, through[static_cast<std::size_t>(h1)].y - c.y});
      const Point r2 = unit({through[static_cast<std::size_t>(h2)].x - c.x, through[static_cast<std::size_t>(h2)].y - c.y});
      const Point axis = unit({r1.x - r2.x, r1.y - r2.y});
      tangent[static_cast<std::size_t>(h1)] = axis;
      tangent[static_cast<std::size_t>(h2)] = {-axis.x, -axis.y};
    }
  }
  std::string out;
  for (int h : d.live_half_edges()) {
    const int m = d.mate(h);
    if (m < h) continue;
    const int a = PDCode::node_of(h), b = PDCode::node_of(m);
    const Point pa = L.pos[static_cast<std::size_t>(a)], pb = L.pos[static_cast<std::size_t>(b)];
    if (a == b && d.is_marker(a)) {
      out += "<circle cx=\"" + fmt(pa.x) + "\" cy=\"" + fmt(pa.y) + "\" r=\"30\" class=\"strand\"/>\n";
      continue;
    }
    const Point ta = tangent[static_cast<std::size_t>(h)], tb = tangent[static_cast<std::size_t>(m)];
    const double len = a == b ? 36 : 0.45 * std::hypot(pb.x - pa.x, pb.y - pa.y);
    const double ga = is_under(d, h) ? kGap : 0, gb = is_under(d, m) ? kGap : 0;
    const Point s{pa.x + ga * ta.x, pa.y + ga * ta.y}, e{pb.x + gb * tb.x, pb.y + gb * tb.y};
    const Point c1{pa.x + len * ta.x, pa.y + len * ta.y}, c2{pb.x + len * tb.x, pb.y + len * tb.y};
    out += "<path d=\"M" + pt(s) + " C" + pt(c1) + " " + pt(c2) + " " + pt(e) + "\" class=\"strand\"/>\n";
  }
  return out;
}

std::string document(double width, const std::string& body) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(kCell) +
         "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(kCell) + "\">\n" +
         "<style>.strand{fill:none;stroke:#000;stroke-width:2}.band{fill:none;stroke-width:6;stroke-opacity:0.6}"
         "text{font:10px sans-serif}</style>\n" +
         body + "</svg>\n";
}

}  // namespace

std::string band_colour(const std::string& label) {
  static const std::map<std::string, std::string> named{
      {"pink", "#e377c2"},     {"blue", "#1f77b4"},       {"red", "#d62728"},   {"vertical", "#e377c2"},
      {"horizontal", "#e377c2"}, {"dual", "#17becf"},     {"corner", "#2ca02c"}, {"green", "#2ca02c"}};
  if (auto it = named.find(label); it != named.end()) return it->second;
  static const char* palette[] = {"#9467bd", "#8c564b", "#ff7f0e", "#7f7f7f"};
  std::size_t h = 0;
  for (char c : label) h = h * 31 + static_cast<unsigned char>(c);
  return palette[h % 4];
}

std::string svg_export(const PDCode& d) {
  const Layout L = layout(d);
  return document(kCell * std::max(1, L.pieces), draw_diagram(d, L));
}

std::string svg_export(const DiagramWithBands& s) {
  const Layout L = layout(s.diagram);
  std::string body = draw_diagram(s.diagram, L);
  for (const auto& b : s.bands) {
    const Point a = L.pos[static_cast<std::size_t>(PDCode::node_of(b.attach1))];
    const Point c = L.pos[static_cast<std::size_t>(PDCode::node_of(b.attach2))];
    const std::string dash = b.routing.empty() ? "" : " stroke-dasharray=\"6,4\"";
    body += "<line x1=\"" + fmt(a.x) + "\" y1=\"" + fmt(a.y) + "\" x2=\"" + fmt(c.x) + "\" y2=\"" + fmt(c.y) +
            "\" class=\"band\" stroke=\"" + band_colour(b.label) + "\"" + dash + "/>\n";
    const std::string text = b.label + (b.half_twists ? " (" + std::to_string(b.half_twists) + ")" : "");
    body += "<text x=\"" + fmt((a.x + c.x) / 2 + 4) + "\" y=\"" + fmt((a.y + c.y) / 2 - 4) + "\">" + text + "</text>\n";
  }
  return document(kCell * std::max(1, L.pieces), body);
}

}  // namespace lensball
