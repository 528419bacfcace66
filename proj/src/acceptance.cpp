#include "lensball/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "lensball/bracket.hpp"
#include "lensball/covers.hpp"
#include "lensball/hjcf.hpp"
#include "lensball/invariants.hpp"
#include "lensball/matrix.hpp"
#include "lensball/surfaces.hpp"
#include "lensball/trees.hpp"
#include "lensball/twobridge.hpp"

namespace lensball {

namespace {

// Tallies one property over many instances and reports it as a single check:
// how many instances held, and the first one that did not.
class Sweep {
 public:
  void check(const std::string& property, bool ok, const std::string& where) {
    auto it = index_.find(property);
    if (it == index_.end()) {
      it = index_.emplace(property, rows_.size()).first;
      rows_.push_back({property, 0, 0, {}});
    }
    Row& row = rows_[it->second];
    ++row.total;
    if (!ok) {
      if (row.failures == 0) row.first_failure = where;
      ++row.failures;
    }
  }

  void emit(VerificationReport& r) const {
    for (const Row& row : rows_) {
      const std::string all = "all " + std::to_string(row.total);
      r.expect_eq(row.property, all,
                  row.failures == 0 ? all
                                    : std::to_string(row.failures) + " of " + std::to_string(row.total) +
                                          " fail, first at " + row.first_failure);
    }
  }

 private:
  struct Row {
    std::string property;
    std::size_t total = 0;
    std::size_t failures = 0;
    std::string first_failure;
  };
  std::vector<Row> rows_;
  std::map<std::string, std::size_t> index_;
};

std::string pq_str(const BigInt& p, const BigInt& q) { return "(" + p.get_str() + "," + q.get_str() + ")"; }

std::vector<std::pair<int, int>> coprime_pairs(int pmin, int pmax) {
  std::vector<std::pair<int, int>> out;
  for (int p = pmin; p <= pmax; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

// Runs f on every item in parallel and merges the reports in item order.
template <class T, class F>
void fan_out(VerificationReport& r, const std::vector<T>& items, F&& f,
             const std::function<std::string(const T&)>& prefix) {
  std::vector<VerificationReport> parts(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < items.size(); ++i) parts[i] = f(items[i]);
  for (std::size_t i = 0; i < items.size(); ++i) r.merge(parts[i], prefix(items[i]));
}

std::string pair_prefix(const std::pair<int, int>& pq) { return pq_str(pq.first, pq.second) + " "; }

HJString concat(HJString a, const HJString& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// --- 1 -------------------------------------------------------------------------

VerificationReport continued_fractions(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "continued fractions";
  r.params = {{"pmax", std::to_string(cfg.cf_pmax)}};
  Sweep s;
  for (auto [pi, qi] : coprime_pairs(2, cfg.cf_pmax)) {
    const BigInt p = pi, q = qi;
    const std::string at = pq_str(p, q);
    const HJString a = hj_expand(p, q), b = dual(p, q);
    bool ge2 = true;
    for (auto c : a) ge2 = ge2 && c >= 2;
    s.check("hj_eval(hj_expand(p,q)) = p/q", hj_eval(a) == Fraction::make(p, q), at);
    s.check("coefficients >= 2", ge2, at);
    s.check("dual(p,q) = hj_expand(p,p-q)", b == hj_expand(p, p - q), at);
    s.check("dual(p,p-q) = hj_expand(p,q)", dual(p, p - q) == a, at);

    // [a1..a_{k-1}, a_k + b_l, b_{l-1}..b1] and [a1..a_k, 2, b_l..b1]
    HJString minus(a.begin(), a.end() - 1), tail(b.rbegin(), b.rend());
    minus.push_back(a.back() + tail.front());
    minus.insert(minus.end(), tail.begin() + 1, tail.end());
    HJString plus = a;
    plus.push_back(2);
    plus.insert(plus.end(), tail.begin(), tail.end());
    const HJString wm = wahl_minus(p, q), wp = wahl_plus(p, q);
    s.check("wahl_minus = hj_expand(p^2, pq-1)", wm == hj_expand(p * p, p * q - 1), at);
    s.check("wahl_minus = [a1..a_k+b_l..b1]", wm == minus, at);
    s.check("wahl_plus = hj_expand(p^2, pq+1)", wp == hj_expand(p * p, p * q + 1), at);
    s.check("wahl_plus = [a1..a_k,2,b_l..b1]", wp == plus, at);
    s.check("reverse(hj_expand(p,q)) = p/(q^-1 mod p)", hj_eval(reverse(a)) == Fraction::make(p, mod_inverse(q, p)),
            at);

    HJString left = a;
    left.front() += 1;
    HJString dright = b;
    dright.front() += 1;
    s.check("hj_expand(p+q,q) = [a1+1,..,ak]", hj_expand(p + q, q) == left, at);
    s.check("hj_expand(2p-q,p) = [2,a1,..,ak]", hj_expand(2 * p - q, p) == concat({2}, a), at);
    s.check("dual(p+q,q) = [2,b1,..,bl]", dual(p + q, q) == concat({2}, b), at);
    s.check("dual(2p-q,p) = [b1+1,..,bl]", dual(2 * p - q, p) == dright, at);
  }
  s.emit(r);
  r.expect_eq("18/11", "[2,3,4]", to_string(hj_expand(18, 11)));
  r.expect_eq("7/5", "[2,2,3]", to_string(hj_expand(7, 5)));
  r.expect_eq("7/2", "[4,2]", to_string(hj_expand(7, 2)));
  r.expect_eq("49/34", "[2,2,5,4]", to_string(hj_expand(49, 34)));
  return r;
}

// --- 2 -------------------------------------------------------------------------

VerificationReport wahl_enumeration(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "wahl enumeration";
  r.params = {{"depth", std::to_string(cfg.wahl_depth)}};
  const std::string expected = std::to_string((std::size_t{1} << (cfg.wahl_depth + 1)) - 1);
  for (WahlFamily fam : {WahlFamily::Minus, WahlFamily::Plus}) {
    const std::string tag = fam == WahlFamily::Minus ? "minus: " : "plus: ";
    try {
      const LemmaWahlReport w = verify_lemma_wahl(cfg.wahl_depth, fam);
      r.expect_eq(tag + "strings", expected, std::to_string(w.strings));
      r.expect_true(tag + "both recursions give the same set", w.sets_equal, w.first_mismatch);
      r.expect_true(tag + "node-by-node agreement", w.nodewise, w.first_mismatch);
      r.expect_true(tag + "length and coefficient-sum growth", w.shape, w.first_mismatch);
    } catch (const std::exception& e) {
      r.fail(tag + "enumeration", e.what());
    }
  }
  return r;
}

// --- 3 -------------------------------------------------------------------------

VerificationReport tree_coverage(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "tree coverage";
  r.params = {{"pmax", std::to_string(cfg.tree_pmax)}};
  const auto nodes = enumerate_bounded(TreeVariant::W1, cfg.tree_pmax);
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  Sweep s;
  for (const NodeLabel& n : nodes) {
    const std::string at = pq_str(n.p, n.q) + " at " + (n.path.empty() ? "root" : n.path);
    s.check("appears once", seen.emplace(n.p, n.q).second, at);
    s.check("coprime, p > q", n.p > n.q && std::gcd(n.p, n.q) == 1, at);
    const NodeLabel w = label_w2(n);
    s.check("W2 label is (p, q^-1 mod p)", w.p == n.p && BigInt(w.q) == mod_inverse(n.q, n.p) && w.path == n.path,
            at);
  }
  s.emit(r);
  r.expect_eq("coprime pairs covered", std::to_string(coprime_pairs(2, cfg.tree_pmax).size()),
              std::to_string(seen.size()));
  return r;
}

// --- 4 -------------------------------------------------------------------------

void strings_with_sum(HJString& cur, int left, std::vector<HJString>& out) {
  for (int a = 2; a <= left; ++a) {
    cur.push_back(a);
    out.push_back(cur);
    strings_with_sum(cur, left - a, out);
    cur.pop_back();
  }
}

VerificationReport diagram_invariants(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "diagram invariants";
  r.params = {{"coefficient_sum", std::to_string(cfg.diagram_coeff_sum)}};
  std::vector<HJString> strings;
  HJString cur;
  strings_with_sum(cur, cfg.diagram_coeff_sum, strings);
  struct Row {
    std::string at;
    bool crossings, det_goeritz, det_bracket, det_tait, components;
    std::string error;
  };
  std::vector<Row> rows(strings.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const HJString& c = strings[i];
    Row& row = rows[i];
    const Fraction f = hj_eval(c);
    row.at = to_string(c) + " = " + f.str();
    try {
      const PDCode d = standard_diagram(c);
      std::int64_t sum = 0;
      for (auto x : c) sum += x;
      row.crossings = d.crossing_count() == sum - static_cast<std::int64_t>(c.size() - 1);
      row.det_goeritz = determinant(d) == f.num;
      row.det_bracket = determinant_from_bracket(kauffman_bracket(d)) == f.num;
      row.det_tait = abs(BigInt(bareiss_det(goeritz(f.num, f.den)))) == f.num;
      row.components = component_count(d) == (f.num % 2 == 0 ? 2 : 1);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  Sweep s;
  for (const Row& row : rows) {
    const bool ok = row.error.empty();
    s.check("no errors", ok, row.at + (ok ? "" : ": " + row.error));
    if (!ok) continue;
    s.check("crossings = sum(a) - (k-1)", row.crossings, row.at);
    s.check("determinant (diagram Goeritz) = p", row.det_goeritz, row.at);
    s.check("determinant (bracket) = p", row.det_bracket, row.at);
    s.check("determinant (Tait graph Goeritz) = p", row.det_tait, row.at);
    s.check("components = 2 iff p even", row.components, row.at);
  }
  s.emit(r);
  const LaurentPoly left_trefoil = LaurentPoly::from_terms({{-8, -1}, {-6, 1}, {-2, 1}});
  const PDCode s31 = standard_diagram(3, 1);
  r.expect_eq("jones(S(3,1)) is the left trefoil", jones_string(left_trefoil), jones_string(jones(s31)));
  r.expect_eq("jones(mirror S(3,1)) is the right trefoil", jones_string(left_trefoil.inverted()),
              jones_string(jones(s31.mirror())));
  return r;
}

// --- 5 -------------------------------------------------------------------------

VerificationReport delta_moves(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "delta band moves";
  r.params = {{"wahl_sum", std::to_string(cfg.delta_wahl_sum)}};
  // A Wahl string of length n has coefficient sum 3n + 1 and n grows with p,
  // so every qualifying pair has p well under this bound.
  const int pmax = 4 * cfg.delta_wahl_sum;
  std::vector<std::pair<int, int>> pairs;
  for (auto [p, q] : coprime_pairs(2, pmax)) {
    std::int64_t sum = 0;
    for (auto c : wahl_minus(p, q)) sum += c;
    if (sum <= cfg.delta_wahl_sum) pairs.emplace_back(p, q);
  }
  std::string list;
  for (auto [p, q] : pairs) list += pq_str(p, q);
  r.params.emplace_back("pairs", list);
  for (auto [p, q] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 3}, {7, 5}}) {
    std::int64_t sum = 0;
    for (auto c : wahl_minus(p, q)) sum += c;
    if (sum <= cfg.delta_wahl_sum) r.expect_true("includes " + pq_str(p, q), list.find(pq_str(p, q)) != std::string::npos);
  }
  fan_out<std::pair<int, int>>(
      r, pairs, [](const std::pair<int, int>& pq) { return verify_delta(pq.first, pq.second); }, pair_prefix);
  return r;
}

// --- 6 -------------------------------------------------------------------------

VerificationReport pps(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "pps";
  r.params = {{"pmax", std::to_string(cfg.pps_pmax)}};
  const auto pairs = coprime_pairs(2, cfg.pps_pmax);
  fan_out<std::pair<int, int>>(
      r, pairs, [](const std::pair<int, int>& pq) { return verify_pps(pq.first, pq.second); }, pair_prefix);
  if (cfg.pps_pmax >= 7) {
    const VerificationReport v = verify_pps(7, 5);
    std::string boundary;
    for (auto& [k, val] : v.params)
      if (k == "boundary") boundary = val;
    r.expect_eq("(7,5) boundary is S(10,7)", normal_form(10, 7).str(), boundary);
  }
  return r;
}

// --- 7 -------------------------------------------------------------------------

VerificationReport kh13_psquared(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "kh13 and psquared";
  r.params = {{"kh13", std::to_string(cfg.kh13_min) + ".." + std::to_string(cfg.kh13_max)},
              {"psquared", std::to_string(cfg.psquared_min) + ".." + std::to_string(cfg.psquared_max)}};
  std::vector<std::pair<int, int>> jobs;  // (family, p)
  for (int p = cfg.kh13_min; p <= cfg.kh13_max; ++p) jobs.emplace_back(0, p);
  for (int p = cfg.psquared_min; p <= cfg.psquared_max; ++p) jobs.emplace_back(1, p);
  fan_out<std::pair<int, int>>(
      r, jobs,
      [](const std::pair<int, int>& j) { return j.first == 0 ? verify_kh13(j.second) : verify_psquared(j.second); },
      [](const std::pair<int, int>& j) {
        return std::string(j.first == 0 ? "kh13" : "psquared") + "(" + std::to_string(j.second) + ") ";
      });
  return r;
}

// --- 8 -------------------------------------------------------------------------

VerificationReport cp2bar(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "cp2bar";
  std::string ns;
  for (int n : cfg.cp2bar_n) ns += (ns.empty() ? "" : ",") + std::to_string(n);
  r.params = {{"fib_nmax", std::to_string(cfg.fib_nmax)}, {"n", ns}};
  Sweep s;
  for (int n = 1; n <= cfg.fib_nmax; ++n) {
    const FibonacciReport f = fibonacci_identities(static_cast<unsigned>(n));
    const std::string at = "n=" + std::to_string(n);
    s.check("F(2n+2) = 3F(2n) - F(2n-2)", f.recurrence, at);
    s.check("F(2n+2)/F(2n) = [3^n]", f.ratio, at);
    s.check("F(2n+2)/(F(2n+2)-F(2n)) = [2,3^(n-1),2]", f.dual_ratio, at);
    s.check("Wahl string [3^(n-1),5,3^(n-1),2]", f.wahl, at);
  }
  s.emit(r);
  std::vector<std::pair<int, int>> jobs;  // (n, sign)
  for (int n : cfg.cp2bar_n) {
    jobs.emplace_back(n, 0);
    jobs.emplace_back(n, 1);
  }
  fan_out<std::pair<int, int>>(
      r, jobs,
      [](const std::pair<int, int>& j) { return verify_cp2bar(j.first, j.second == 0 ? Sign::Minus : Sign::Plus); },
      [](const std::pair<int, int>& j) {
        return std::string(j.second == 0 ? "minus" : "plus") + "(" + std::to_string(j.first) + ") ";
      });
  const std::map<int, std::string> anchors{{1, "S(9,2)"}, {2, "S(64,23)"}};
  for (int n : cfg.cp2bar_n) {
    const auto it = anchors.find(n);
    if (it == anchors.end()) continue;
    const BigInt P = fib(static_cast<unsigned>(2 * n + 2)), Q = fib(static_cast<unsigned>(2 * n));
    r.expect_eq("minus(" + std::to_string(n) + ") sublevel boundary", it->second, normal_form(P * P, P * Q - 1).str());
  }
  return r;
}

// --- 9 -------------------------------------------------------------------------

VerificationReport covers_suite(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "covers";
  r.params = {{"snf_pmax", std::to_string(cfg.covers_snf_pmax)},
              {"ball_pmax", std::to_string(cfg.covers_ball_pmax)},
              {"pps_pmax", std::to_string(cfg.pps_pmax)}};
  Sweep s;
  for (auto [pi, qi] : coprime_pairs(2, cfg.covers_snf_pmax)) {
    const BigInt p = pi, q = qi;
    const std::string at = pq_str(p, q);
    const PlumbingLattice L = linear_lattice(hj_expand(p, q));
    const AbelianGroupData a = snf(L.matrix), b = snf(goeritz(p, q));
    s.check("SNF(plumbing) = SNF(Goeritz)", a == b, at);
    s.check("SNF(plumbing) = Z/p", a.str() == "Z/" + p.get_str(), at);
    s.check("plumbing negative definite", L.negative_definite, at);
    s.check("boundary lens = S(p,q)", boundary_lens(hj_expand(p, q)) == normal_form(p, q), at);
  }
  const auto balls = coprime_pairs(2, cfg.covers_ball_pmax);
  std::vector<VerificationReport> reports(balls.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < balls.size(); ++i) {
    try {
      reports[i] = rational_ball_checks(balls[i].first, balls[i].second);
    } catch (const std::exception& e) {
      reports[i].fail("rational_ball_checks", e.what());
    }
  }
  for (std::size_t i = 0; i < balls.size(); ++i)
    for (const Check& c : reports[i].checks)
      s.check("rational ball: " + c.name, c.pass, pair_prefix(balls[i]) + c.computed);
  for (auto [p, q] : coprime_pairs(2, cfg.pps_pmax)) {
    const std::string at = pq_str(p, q);
    const HJString w = delta_half_weights(p, q);
    const int k = static_cast<int>(w.size());
    const CoverStats c = cover_stats(f_delta(p, q), w);
    s.check("chi(F_delta) = 1 - k", c.surface_euler == 1 - k, at);
    s.check("chi(cover of F_delta) = 2 - chi(F_delta) = 1 + b2", c.cover_euler == 2 - c.surface_euler &&
                                                                      c.b2.has_value() && c.cover_euler == 1 + *c.b2,
            at);
  }
  s.emit(r);
  return r;
}

// --- 10 ------------------------------------------------------------------------

struct BlowupJob {
  std::string name;
  std::function<DiagramWithBands()> surface;
  std::function<SublevelWitness(const DiagramWithBands&)> witness;
  BoundaryTag boundary;
};

BlowupJob fprime_job(int p, int q) {
  const Fraction f = hj_eval(delta_half_weights(p, q));
  return {"F'" + pq_str(p, q), [p, q] { return f_prime(p, q); },
          [p, q](const DiagramWithBands& s) {
            std::vector<std::size_t> blue;
            for (std::size_t i = 0; i < s.bands.size(); ++i)
              if (s.bands[i].label == "blue") blue.push_back(i);
            return sublevel(s, blue, p, q);
          },
          BoundaryTag::two_bridge(f.num, f.den)};
}

VerificationReport blowups(const SuiteConfig& cfg) {
  VerificationReport r;
  r.theorem = "blowup";
  r.params = {{"pps_pmax", std::to_string(cfg.pps_pmax)}};
  std::vector<BlowupJob> jobs;
  jobs.push_back(fprime_job(8, 3));
  jobs.push_back({"cp2bar(2)", [] { return cp2bar_surface(2, Sign::Minus); },
                  [](const DiagramWithBands& s) { return sublevel(s, {0}, 8, 3); }, BoundaryTag::unknot()});
  for (auto [p, q] : coprime_pairs(2, cfg.pps_pmax))
    if (!(p == 8 && q == 3)) jobs.push_back(fprime_job(p, q));
  fan_out<BlowupJob>(
      r, jobs,
      [](const BlowupJob& j) {
        try {
          const DiagramWithBands s = j.surface();
          return verify_blowup(j.name, s, j.witness(s), j.boundary);
        } catch (const std::exception& e) {
          VerificationReport v;
          v.fail("blowup", e.what());
          return v;
        }
      },
      [](const BlowupJob& j) { return j.name + " "; });
  return r;
}

struct Criterion {
  const char* title;
  double budget;
  VerificationReport (*run)(const SuiteConfig&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"continued fractions", 10, continued_fractions}, {"wahl enumeration", 5, wahl_enumeration},
    {"tree coverage", 5, tree_coverage},              {"diagram invariants", 60, diagram_invariants},
    {"delta band moves", 120, delta_moves},           {"pps", 120, pps},
    {"kh13 and psquared", 120, kh13_psquared},        {"cp2bar", 60, cp2bar},
    {"covers", 30, covers_suite},                     {"blowup", 30, blowups},
};

}  // namespace

SuiteConfig SuiteConfig::from_json(const nlohmann::json& j) {
  SuiteConfig c;
  if (!j.is_object()) throw std::invalid_argument("suite config: expected a JSON object");
  const std::map<std::string, int*> ints{
      {"cf_pmax", &c.cf_pmax},
      {"wahl_depth", &c.wahl_depth},
      {"tree_pmax", &c.tree_pmax},
      {"diagram_coeff_sum", &c.diagram_coeff_sum},
      {"delta_wahl_sum", &c.delta_wahl_sum},
      {"pps_pmax", &c.pps_pmax},
      {"kh13_min", &c.kh13_min},
      {"kh13_max", &c.kh13_max},
      {"psquared_min", &c.psquared_min},
      {"psquared_max", &c.psquared_max},
      {"fib_nmax", &c.fib_nmax},
      {"covers_snf_pmax", &c.covers_snf_pmax},
      {"covers_ball_pmax", &c.covers_ball_pmax},
  };
  for (auto& [key, value] : j.items()) {
    if (auto it = ints.find(key); it != ints.end()) {
      *it->second = value.get<int>();
    } else if (key == "cp2bar_n") {
      c.cp2bar_n = value.get<std::vector<int>>();
    } else if (key == "crossing_cap") {
      c.crossing_cap = value.get<int>();
    } else {
      throw std::invalid_argument("suite config: unknown key " + key);
    }
  }
  return c;
}

nlohmann::ordered_json SuiteConfig::to_json() const {
  nlohmann::ordered_json j;
  j["cf_pmax"] = cf_pmax;
  j["wahl_depth"] = wahl_depth;
  j["tree_pmax"] = tree_pmax;
  j["diagram_coeff_sum"] = diagram_coeff_sum;
  j["delta_wahl_sum"] = delta_wahl_sum;
  j["pps_pmax"] = pps_pmax;
  j["kh13_min"] = kh13_min;
  j["kh13_max"] = kh13_max;
  j["psquared_min"] = psquared_min;
  j["psquared_max"] = psquared_max;
  j["fib_nmax"] = fib_nmax;
  j["cp2bar_n"] = cp2bar_n;
  j["covers_snf_pmax"] = covers_snf_pmax;
  j["covers_ball_pmax"] = covers_ball_pmax;
  if (crossing_cap) j["crossing_cap"] = *crossing_cap;
  return j;
}

std::string CriterionResult::line() const {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, budget %.0f s", seconds, budget_seconds);
  std::string out = std::string(pass() ? "[PASS] " : "[FAIL] ") + std::to_string(id) + " " + title + " (" +
                    std::to_string(report.checks.size()) + " checks, " + timing + ")";
  if (!within_budget()) out += ": over the time budget";
  for (const Check& c : report.checks)
    if (!c.pass) {
      out += ": " + c.name + ": expected " + c.expected + ", got " + c.computed;
      break;
    }
  return out;
}

CriterionResult run_criterion(const SuiteConfig& cfg, int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no acceptance criterion " + std::to_string(id));
  if (cfg.crossing_cap) setenv("LENSBALL_CAP", std::to_string(*cfg.crossing_cap).c_str(), 1);
  const Criterion& c = kCriteria[id - 1];
  CriterionResult out;
  out.id = id;
  out.title = c.title;
  out.budget_seconds = c.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    out.report = c.run(cfg);
  } catch (const std::exception& e) {
    out.report.theorem = c.title;
    out.report.fail("criterion", e.what());
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.report.runtime_ms = out.seconds * 1000;
  return out;
}

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg, std::vector<int> ids) {
  if (ids.empty())
    for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
  std::sort(ids.begin(), ids.end());
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(cfg, id));
  return out;
}

}  // namespace lensball
