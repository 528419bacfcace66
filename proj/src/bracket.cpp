#include "lensball/bracket.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

namespace lensball {

int bracket_cap() {
  if (const char* s = std::getenv("LENSBALL_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return kDefaultCrossingCap;
}

void check_cap(const PDCode& d) {
  const int n = d.crossing_count(), cap = bracket_cap();
  if (n > cap)
    throw CapExceeded("too large for exact bracket: " + std::to_string(n) + " crossings, cap " + std::to_string(cap));
}

namespace {

const LaurentPoly& delta_power(int k) {
  static const std::vector<LaurentPoly> table = [] {
    std::vector<LaurentPoly> t{LaurentPoly::monomial(0)};
    const LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    for (int i = 1; i <= 2 * 64 + 8; ++i) t.push_back(t.back() * delta);
    return t;
  }();
  return table.at(static_cast<std::size_t>(k));
}

// Crossings only: markers are contracted away.
struct CrossingGraph {
  int n = 0;
  std::vector<int> conn;           // slot 4i+k -> slot it is joined to
  std::vector<std::uint8_t> a01;   // A-smoothing joins (0,1),(2,3); else (1,2),(3,0)
  int free_loops = 0;
};

CrossingGraph crossing_graph(const PDCode& d) {
  CrossingGraph g;
  std::vector<int> index(static_cast<std::size_t>(d.node_count()), -1);
  for (int v = 0; v < d.node_count(); ++v)
    if (d.is_crossing(v)) {
      index[static_cast<std::size_t>(v)] = g.n++;
      g.a01.push_back(d.under02(v));
    }
  g.conn.assign(static_cast<std::size_t>(4 * g.n), -1);
  for (int v = 0; v < d.node_count(); ++v) {
    if (!d.is_crossing(v)) continue;
    for (int s = 0; s < 4; ++s) {
      int h = d.mate(PDCode::he(v, s));
      while (d.is_marker(PDCode::node_of(h))) h = d.mate(d.through(h));
      g.conn[static_cast<std::size_t>(4 * index[static_cast<std::size_t>(v)] + s)] =
          4 * index[static_cast<std::size_t>(PDCode::node_of(h))] + PDCode::slot_of(h);
    }
  }
  std::vector<int> comp;
  const int nc = d.components(comp);
  std::vector<char> has_crossing(static_cast<std::size_t>(nc), 0);
  for (int h : d.live_half_edges())
    if (d.is_crossing(PDCode::node_of(h))) has_crossing[static_cast<std::size_t>(comp[static_cast<std::size_t>(h)])] = 1;
  g.free_loops = static_cast<int>(std::count(has_crossing.begin(), has_crossing.end(), 0));
  return g;
}

struct DSU {
  std::vector<int> p;
  explicit DSU(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

// Loops in the state given by mask (bit i set = B-smoothing at crossing i).
int state_loops(const CrossingGraph& g, std::uint64_t mask) {
  const int m = 4 * g.n;
  DSU dsu(m);
  int comps = m;
  for (int h = 0; h < m; ++h)
    if (h < g.conn[static_cast<std::size_t>(h)] && dsu.unite(h, g.conn[static_cast<std::size_t>(h)])) --comps;
  for (int i = 0; i < g.n; ++i) {
    const bool b = (mask >> i) & 1;
    const bool pair01 = g.a01[static_cast<std::size_t>(i)] != b;
    const int base = 4 * i;
    if (pair01) {
      comps -= dsu.unite(base, base + 1);
      comps -= dsu.unite(base + 2, base + 3);
    } else {
      comps -= dsu.unite(base + 1, base + 2);
      comps -= dsu.unite(base + 3, base);
    }
  }
  return comps;
}

// hist[b][loops] -> bracket.
LaurentPoly assemble(const CrossingGraph& g, const std::vector<std::vector<std::int64_t>>& hist) {
  LaurentPoly r;
  for (int b = 0; b <= g.n; ++b)
    for (std::size_t l = 1; l < hist[static_cast<std::size_t>(b)].size(); ++l)
      if (auto c = hist[static_cast<std::size_t>(b)][l])
        r += LaurentPoly::monomial(g.n - 2 * b, c) * delta_power(static_cast<int>(l) - 1 + g.free_loops);
  return r;
}

LaurentPoly empty_bracket(const CrossingGraph& g) {
  return g.free_loops == 0 ? LaurentPoly::monomial(0) : delta_power(g.free_loops - 1);
}

}  // namespace

LaurentPoly bracket_state_sum_serial(const PDCode& d) {
  check_cap(d);
  const CrossingGraph g = crossing_graph(d);
  if (g.n == 0) return empty_bracket(g);
  std::vector<std::vector<std::int64_t>> hist(static_cast<std::size_t>(g.n + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(2 * g.n + 2), 0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n); ++mask)
    ++hist[static_cast<std::size_t>(__builtin_popcountll(mask))][static_cast<std::size_t>(state_loops(g, mask))];
  return assemble(g, hist);
}

LaurentPoly bracket_state_sum_parallel(const PDCode& d) {
  check_cap(d);
  const CrossingGraph g = crossing_graph(d);
  if (g.n == 0) return empty_bracket(g);
  const std::size_t rows = static_cast<std::size_t>(g.n + 1), cols = static_cast<std::size_t>(2 * g.n + 2);
  std::vector<std::int64_t> total(rows * cols, 0);
  const auto states = static_cast<std::int64_t>(std::uint64_t{1} << g.n);
#pragma omp parallel
  {
    std::vector<std::int64_t> local(rows * cols, 0);
#pragma omp for schedule(static)
    for (std::int64_t mask = 0; mask < states; ++mask) {
      const auto m = static_cast<std::uint64_t>(mask);
      ++local[static_cast<std::size_t>(__builtin_popcountll(m)) * cols + static_cast<std::size_t>(state_loops(g, m))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += local[i];
  }
  std::vector<std::vector<std::int64_t>> hist(rows);
  for (std::size_t b = 0; b < rows; ++b)
    hist[b].assign(total.begin() + static_cast<std::ptrdiff_t>(b * cols),
                   total.begin() + static_cast<std::ptrdiff_t>((b + 1) * cols));
  return assemble(g, hist);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int16_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ static_cast<std::size_t>(x + 7);
    return h;
  }
};

// Greedy order keeping the frontier small: next is the crossing with the most
// connections into the processed set.
std::vector<int> sweep_order(const CrossingGraph& g) {
  std::vector<int> order;
  std::vector<char> used(static_cast<std::size_t>(g.n), 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1, best_score = -1;
    for (int c = 0; c < g.n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      int score = 0;
      for (int k = 0; k < 4; ++k) score += used[static_cast<std::size_t>(g.conn[static_cast<std::size_t>(4 * c + k)] / 4)];
      if (score > best_score) {
        best = c;
        best_score = score;
      }
    }
    used[static_cast<std::size_t>(best)] = 1;
    order.push_back(best);
  }
  return order;
}

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& d) {
  check_cap(d);
  const CrossingGraph g = crossing_graph(d);
  if (g.n == 0) return empty_bracket(g);

  using State = std::vector<std::int16_t>;  // partner index within the boundary
  std::unordered_map<State, LaurentPoly, VecHash> states{{State{}, LaurentPoly::monomial(0)}};
  std::vector<int> boundary;  // sorted slot ids of processed crossings facing unprocessed ones
  std::vector<char> done(static_cast<std::size_t>(g.n), 0);

  for (int c : sweep_order(g)) {
    done[static_cast<std::size_t>(c)] = 1;
    const int nb = static_cast<int>(boundary.size());
    // Local vertices: 0..nb-1 old boundary, nb..nb+3 the slots of c.
    std::vector<int> new_boundary;
    std::vector<int> local_of_new;
    for (int i = 0; i < nb; ++i)
      if (g.conn[static_cast<std::size_t>(boundary[static_cast<std::size_t>(i)])] / 4 != c) {
        new_boundary.push_back(boundary[static_cast<std::size_t>(i)]);
      }
    for (int k = 0; k < 4; ++k) {
      const int other = g.conn[static_cast<std::size_t>(4 * c + k)] / 4;
      if (!done[static_cast<std::size_t>(other)]) new_boundary.push_back(4 * c + k);
    }
    std::sort(new_boundary.begin(), new_boundary.end());
    std::vector<int> pos_in_old(static_cast<std::size_t>(4 * g.n), -1);
    for (int i = 0; i < nb; ++i) pos_in_old[static_cast<std::size_t>(boundary[static_cast<std::size_t>(i)])] = i;
    for (int v : new_boundary) local_of_new.push_back(v / 4 == c ? nb + v % 4 : pos_in_old[static_cast<std::size_t>(v)]);
    std::vector<int> new_index(static_cast<std::size_t>(nb + 4), -1);
    for (std::size_t i = 0; i < local_of_new.size(); ++i) new_index[static_cast<std::size_t>(local_of_new[i])] = static_cast<int>(i);

    // Fixed edges for this step: old boundary -> slot of c, and self-loops at c.
    std::vector<int> fixed(static_cast<std::size_t>(nb + 4), -1);
    for (int i = 0; i < nb; ++i) {
      const int t = g.conn[static_cast<std::size_t>(boundary[static_cast<std::size_t>(i)])];
      if (t / 4 == c) {
        fixed[static_cast<std::size_t>(i)] = nb + t % 4;
        fixed[static_cast<std::size_t>(nb + t % 4)] = i;
      }
    }
    for (int k = 0; k < 4; ++k) {
      const int t = g.conn[static_cast<std::size_t>(4 * c + k)];
      if (t / 4 == c) fixed[static_cast<std::size_t>(nb + k)] = nb + t % 4;
    }

    std::unordered_map<State, LaurentPoly, VecHash> next;
    next.reserve(states.size() * 2);
    const bool a01 = g.a01[static_cast<std::size_t>(c)];
    for (auto& [st, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {  // 0 = A, 1 = B
        const bool pair01 = a01 != (smoothing == 1);
        std::array<int, 4> arc{};
        if (pair01)
          arc = {1, 0, 3, 2};
        else
          arc = {3, 2, 1, 0};
        // Each local vertex has up to two neighbours: its matching/arc partner
        // and its fixed edge. Walk paths from each new boundary endpoint.
        auto partner = [&](int v) { return v < nb ? static_cast<int>(st[static_cast<std::size_t>(v)]) : nb + arc[static_cast<std::size_t>(v - nb)]; };
        std::vector<char> seen(static_cast<std::size_t>(nb + 4), 0);
        State ns(new_boundary.size(), -1);
        for (std::size_t i = 0; i < local_of_new.size(); ++i) {
          const int v0 = local_of_new[i];
          if (seen[static_cast<std::size_t>(v0)]) continue;
          int v = v0;
          seen[static_cast<std::size_t>(v)] = 1;
          v = partner(v);
          while (fixed[static_cast<std::size_t>(v)] != -1) {
            seen[static_cast<std::size_t>(v)] = 1;
            v = fixed[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = 1;
            v = partner(v);
          }
          seen[static_cast<std::size_t>(v)] = 1;
          const int j = new_index[static_cast<std::size_t>(v)];
          ns[i] = static_cast<std::int16_t>(j);
          ns[static_cast<std::size_t>(j)] = static_cast<std::int16_t>(i);
        }
        int loops = 0;
        for (int v0 = 0; v0 < nb + 4; ++v0) {
          if (seen[static_cast<std::size_t>(v0)] || fixed[static_cast<std::size_t>(v0)] == -1) continue;
          ++loops;
          int v = v0;
          do {
            seen[static_cast<std::size_t>(v)] = 1;
            v = fixed[static_cast<std::size_t>(v)];
            seen[static_cast<std::size_t>(v)] = 1;
            v = partner(v);
          } while (v != v0);
        }
        LaurentPoly term = poly.shifted(smoothing == 0 ? 1 : -1);
        if (loops) term = term * delta_power(loops);
        next[ns] += term;
      }
    }
    states = std::move(next);
    boundary = std::move(new_boundary);
  }
  LaurentPoly total = states.at(State{});
  const LaurentPoly delta = delta_power(1);
  if (g.free_loops > 0) return total * delta_power(g.free_loops - 1);
  return total.divided_by(delta);
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  // V(t) = (-A^3)^(-w) <D>, A = t^(-1/4); A^k -> t^(-k/4) -> doubled exponent -k/2.
  const LaurentPoly f = LaurentPoly::monomial(-3 * writhe, (writhe % 2 == 0) ? 1 : -1) * bracket;
  std::map<int, std::int64_t> terms;
  for (auto& [k, c] : f.terms()) {
    if (k % 2 != 0) throw std::logic_error("bracket exponent has the wrong parity");
    terms[-k / 2] += c;
  }
  return LaurentPoly::from_terms(terms);
}

LaurentPoly jones(const PDCode& d) {
  PDCode o = d;
  o.orient();
  return jones_from_bracket(kauffman_bracket(o), o.writhe());
}

LaurentPoly unlink_jones(int n) {
  if (n < 1) throw std::domain_error("unlink_jones: n must be positive");
  LaurentPoly r = LaurentPoly::monomial(0);
  const LaurentPoly f = LaurentPoly::monomial(1, -1) + LaurentPoly::monomial(-1, -1);
  for (int i = 1; i < n; ++i) r = r * f;
  return r;
}

std::string jones_string(const LaurentPoly& v) { return v.str("t", 2); }

}  // namespace lensball
