#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lensball/acceptance.hpp"
#include "lensball/bracket.hpp"
#include "lensball/covers.hpp"
#include "lensball/hjcf.hpp"
#include "lensball/invariants.hpp"
#include "lensball/pd_json.hpp"
#include "lensball/surfaces.hpp"
#include "lensball/svg.hpp"
#include "lensball/trees.hpp"
#include "lensball/twobridge.hpp"

namespace lensball::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt parse_big(const std::string& s, const std::string& what) {
  try {
    return BigInt(s);
  } catch (const std::invalid_argument&) {
    throw UsageError(what + ": not an integer: " + s);
  }
}

// Small values as JSON numbers, large ones as decimal strings.
Json big_json(const BigInt& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json fraction_json(const Fraction& f) {
  Json j;
  j["num"] = big_json(f.num);
  j["den"] = big_json(f.den);
  return j;
}

Json coeffs_json(const HJString& s) {
  Json j;
  j["coeffs"] = s;
  j["value"] = fraction_json(hj_eval(s));
  return j;
}

Json jones_json(const LaurentPoly& v) {
  Json terms = Json::array();
  for (auto [e, c] : v.terms()) terms.push_back({e, c});
  Json j;
  j["doubled_exponent_terms"] = terms;
  j["text"] = jones_string(v);
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// p > q >= 1, coprime.
void require_pair(const BigInt& p, const BigInt& q) {
  if (p < 2 || q < 1 || q >= p || !coprime(p, q)) throw UsageError("need coprime p > q >= 1");
}

// --- subcommand state --------------------------------------------------------

struct Options {
  // cf
  std::string cf_p, cf_q, cf_opt_p, cf_opt_q, cf_coeffs;
  bool cf_plus = false;
  // tree
  std::string tree_variant = "w1";
  int tree_depth = 3;
  std::string tree_dot;
  // wahl
  int wahl_depth = 10;
  bool wahl_plus = false;
  // diagram
  std::string diag_p, diag_q, diag_svg, diag_pd;
  // invariants
  std::string inv_pd;
  bool inv_jones = false, inv_det = false, inv_components = false;
  // covers
  std::string cov_weights;
  std::vector<std::string> cov_pq;
  // verify
  std::string ver_kind, ver_p, ver_q, ver_json, ver_svg_dir;
  int ver_n = 0;
  bool ver_plus = false, ver_timings = false;
  // suite
  std::string suite_config, suite_only, suite_json;
  bool suite_timings = false;
};

// --- cf -------------------------------------------------------------------------

int cmd_cf_expand(const Options& o, std::ostream& out) {
  const BigInt p = parse_big(o.cf_p, "p"), q = parse_big(o.cf_q, "q");
  require_pair(p, q);
  emit(out, coeffs_json(hj_expand(p, q)));
  return kExitPass;
}

int cmd_cf_eval(const Options& o, std::ostream& out) {
  HJString s;
  try {
    s = parse_hj(o.cf_coeffs);
  } catch (const std::exception& e) {
    throw UsageError(std::string("coefficients: ") + e.what());
  }
  if (s.empty()) throw UsageError("coefficients: empty list");
  emit(out, coeffs_json(s));
  return kExitPass;
}

int cmd_cf_wahl(const Options& o, std::ostream& out) {
  const std::string ps = !o.cf_opt_p.empty() ? o.cf_opt_p : o.cf_p;
  const std::string qs = !o.cf_opt_q.empty() ? o.cf_opt_q : o.cf_q;
  if (ps.empty() || qs.empty()) throw UsageError("cf wahl needs p and q");
  const BigInt p = parse_big(ps, "p"), q = parse_big(qs, "q");
  require_pair(p, q);
  emit(out, coeffs_json(o.cf_plus ? wahl_plus(p, q) : wahl_minus(p, q)));
  return kExitPass;
}

// --- tree -----------------------------------------------------------------------

int cmd_tree(const Options& o, std::ostream& out) {
  if (o.tree_depth < 0 || o.tree_depth > kDefaultMaxDepth)
    throw UsageError("depth must be in 0.." + std::to_string(kDefaultMaxDepth));
  const TreeVariant v = o.tree_variant == "w2" ? TreeVariant::W2 : TreeVariant::W1;
  const auto nodes = enumerate(v, o.tree_depth);
  Json list = Json::array();
  for (const NodeLabel& n : nodes) list.push_back({{"p", n.p}, {"q", n.q}, {"path", n.path}});
  Json j;
  j["variant"] = o.tree_variant;
  j["depth"] = o.tree_depth;
  j["nodes"] = list;
  emit(out, j);
  if (!o.tree_dot.empty()) {
    std::map<std::string, const NodeLabel*> by_path;
    for (const NodeLabel& n : nodes) by_path[n.path] = &n;
    auto id = [](const NodeLabel& n) { return "\"" + std::to_string(n.p) + "/" + std::to_string(n.q) + "\""; };
    std::string dot = "digraph " + o.tree_variant + " {\n";
    for (const NodeLabel& n : nodes) {
      if (n.path.empty()) continue;
      const NodeLabel& parent = *by_path.at(n.path.substr(0, n.path.size() - 1));
      dot += "  " + id(parent) + " -> " + id(n) + " [label=\"" + n.path.back() + "\"];\n";
    }
    dot += "}\n";
    write_file(o.tree_dot, dot);
  }
  return kExitPass;
}

// --- wahl -----------------------------------------------------------------------

int cmd_wahl(const Options& o, std::ostream& out) {
  LemmaWahlReport r;
  try {
    r = verify_lemma_wahl(o.wahl_depth, o.wahl_plus ? WahlFamily::Plus : WahlFamily::Minus);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Json j;
  j["family"] = o.wahl_plus ? "plus" : "minus";
  j["depth"] = r.depth;
  j["strings"] = r.strings;
  j["level_sizes"] = r.level_sizes;
  j["sets_equal"] = r.sets_equal;
  j["nodewise"] = r.nodewise;
  j["shape"] = r.shape;
  j["pass"] = r.ok();
  if (!r.first_mismatch.empty()) j["first_mismatch"] = r.first_mismatch;
  emit(out, j);
  return r.ok() ? kExitPass : kExitFail;
}

// --- diagram --------------------------------------------------------------------

int cmd_diagram(const Options& o, std::ostream& out) {
  const BigInt p = parse_big(o.diag_p, "p"), q = parse_big(o.diag_q, "q");
  require_pair(p, q);
  const PDCode d = standard_diagram(p, q);
  Json j;
  j["p"] = big_json(p);
  j["q"] = big_json(q);
  j["coeffs"] = hj_expand(p, q);
  j["normal_form"] = normal_form(p, q).str();
  j["crossings"] = d.crossing_count();
  j["components"] = component_count(d);
  j["determinant"] = big_json(determinant(d));
  if (d.crossing_count() <= bracket_cap())
    j["jones"] = jones_json(jones(d));
  else
    j["jones"] = nullptr;
  emit(out, j);
  if (!o.diag_svg.empty()) write_file(o.diag_svg, svg_export(d));
  if (!o.diag_pd.empty()) write_file(o.diag_pd, pd_to_json(d).dump(2) + "\n");
  return kExitPass;
}

// --- invariants -----------------------------------------------------------------

int cmd_invariants(const Options& o, std::ostream& out) {
  PDCode d;
  try {
    d = read_pd_file(o.inv_pd);
  } catch (const InvalidDiagram& e) {
    throw UsageError(e.what());
  }
  const bool all = !o.inv_jones && !o.inv_det && !o.inv_components;
  Json j;
  j["crossings"] = d.crossing_count();
  if (all || o.inv_components) j["components"] = component_count(d);
  if (all || o.inv_det) j["determinant"] = big_json(determinant(d));
  if (all || o.inv_jones) j["jones"] = jones_json(jones(d));
  emit(out, j);
  return kExitPass;
}

// --- covers ---------------------------------------------------------------------

int cmd_covers(const Options& o, std::ostream& out) {
  HJString w;
  if (!o.cov_pq.empty()) {
    if (o.cov_pq.size() != 2) throw UsageError("--pq takes p and q");
    const BigInt p = parse_big(o.cov_pq[0], "p"), q = parse_big(o.cov_pq[1], "q");
    require_pair(p, q);
    w = hj_expand(p, q);
  } else if (!o.cov_weights.empty()) {
    try {
      w = parse_hj(o.cov_weights);
    } catch (const std::exception& e) {
      throw UsageError(std::string("weights: ") + e.what());
    }
  } else {
    throw UsageError("covers needs --weights or --pq");
  }
  if (w.empty()) throw UsageError("weights: empty list");
  const PlumbingLattice L = linear_lattice(w);
  HJString neg(w.size());
  std::transform(w.begin(), w.end(), neg.begin(), [](std::int64_t x) { return -x; });
  const bool positive = linear_lattice(neg).negative_definite;
  Json j;
  j["weights"] = w;
  j["det"] = big_json(L.det);
  j["snf"] = snf(L.matrix).str();
  const bool lens = std::all_of(w.begin(), w.end(), [](std::int64_t x) { return x >= 2; });
  if (lens)
    j["boundary"] = boundary_lens(w).str();
  else
    j["boundary"] = nullptr;
  j["definite"] = L.negative_definite ? "negative" : positive ? "positive" : "indefinite";
  emit(out, j);
  return kExitPass;
}

// --- verify ---------------------------------------------------------------------

struct VerifyJob {
  VerificationReport report;
  std::vector<std::pair<std::string, std::function<std::string()>>> svgs;
};

VerifyJob build_verify(const Options& o) {
  auto need_p = [&] {
    if (o.ver_p.empty()) throw UsageError("verify " + o.ver_kind + " needs --p");
    return parse_big(o.ver_p, "p");
  };
  auto need_pq = [&] {
    const BigInt p = need_p();
    if (o.ver_q.empty()) throw UsageError("verify " + o.ver_kind + " needs --q");
    const BigInt q = parse_big(o.ver_q, "q");
    require_pair(p, q);
    return std::pair{p, q};
  };
  auto small_p = [&](int lo) {
    const BigInt p = need_p();
    if (p < lo || p > 1000) throw UsageError("verify " + o.ver_kind + ": p out of range");
    return static_cast<int>(p.get_si());
  };
  auto name_pq = [](const std::string& stem, const BigInt& p, const BigInt& q) {
    return stem + "_" + p.get_str() + "_" + q.get_str() + ".svg";
  };
  VerifyJob job;
  const std::string& k = o.ver_kind;
  if (k == "delta") {
    const auto [p, q] = need_pq();
    job.report = verify_delta(p, q);
    job.svgs.emplace_back(name_pq("delta_vertical", p, q),
                          [p, q] { return svg_export(delta(p, q, DeltaStyle::Vertical)); });
    job.svgs.emplace_back(name_pq("delta_horizontal", p, q),
                          [p, q] { return svg_export(delta(p, q, DeltaStyle::Horizontal)); });
  } else if (k == "pps" || k == "kh12" || k == "blowup") {
    BigInt p, q = 1;
    if (k == "kh12")
      p = small_p(2);
    else
      std::tie(p, q) = need_pq();
    if (k == "pps") job.report = verify_pps(p, q);
    if (k == "kh12") job.report = verify_kh12(static_cast<int>(p.get_si()));
    if (k == "blowup") {
      const DiagramWithBands s = f_prime(p, q);
      std::vector<std::size_t> blue;
      for (std::size_t i = 0; i < s.bands.size(); ++i)
        if (s.bands[i].label == "blue") blue.push_back(i);
      const Fraction f = hj_eval(delta_half_weights(p, q));
      job.report = verify_blowup("F'(" + p.get_str() + "," + q.get_str() + ")", s, sublevel(s, blue, p, q),
                                 BoundaryTag::two_bridge(f.num, f.den));
    }
    job.svgs.emplace_back(name_pq("f_delta", p, q), [p, q] { return svg_export(f_delta(p, q)); });
    job.svgs.emplace_back(name_pq("f_prime", p, q), [p, q] { return svg_export(f_prime(p, q)); });
  } else if (k == "kh13") {
    const int p = small_p(3);
    job.report = verify_kh13(p);
    job.svgs.emplace_back("kh13_bands_" + std::to_string(p) + ".svg", [p] { return svg_export(kh13_bands(p)); });
    job.svgs.emplace_back("kh13_surface_" + std::to_string(p) + ".svg", [p] { return svg_export(kh13_surface(p)); });
  } else if (k == "psquared") {
    const int p = small_p(2);
    job.report = verify_psquared(p);
    job.svgs.emplace_back("psquared_bands_" + std::to_string(p) + ".svg",
                          [p] { return svg_export(psquared_bands(p)); });
    job.svgs.emplace_back("psquared_surface_" + std::to_string(p) + ".svg",
                          [p] { return svg_export(psquared_surface(p)); });
  } else if (k == "cp2bar") {
    if (o.ver_n < 1 || o.ver_n > 20) throw UsageError("verify cp2bar needs --n in 1..20");
    const int n = o.ver_n;
    const Sign sign = o.ver_plus ? Sign::Plus : Sign::Minus;
    const std::string tag = (o.ver_plus ? "plus_" : "minus_") + std::to_string(n);
    job.report = verify_cp2bar(n, sign);
    job.svgs.emplace_back("cp2bar_bands_" + tag + ".svg", [n, sign] { return svg_export(cp2bar_bands(n, sign)); });
    job.svgs.emplace_back("cp2bar_surface_" + tag + ".svg",
                          [n, sign] { return svg_export(cp2bar_surface(n, sign)); });
  } else {
    throw UsageError("unknown verification " + k);
  }
  return job;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyJob job = build_verify(o);
  job.report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const Json j = job.report.to_json(o.ver_timings);
  emit(out, j);
  if (!o.ver_json.empty()) write_file(o.ver_json, j.dump(2) + "\n");
  if (!o.ver_svg_dir.empty()) {
    std::filesystem::create_directories(o.ver_svg_dir);
    for (auto& [name, make] : job.svgs) write_file((std::filesystem::path(o.ver_svg_dir) / name).string(), make());
  }
  return job.report.pass() ? kExitPass : kExitFail;
}

// --- suite ----------------------------------------------------------------------

int cmd_suite(const Options& o, std::ostream& out, std::ostream& err) {
  SuiteConfig cfg;
  if (!o.suite_config.empty()) {
    std::ifstream in(o.suite_config);
    if (!in) throw UsageError("cannot read " + o.suite_config);
    try {
      cfg = SuiteConfig::from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError(std::string("config: ") + e.what());
    }
  }
  std::vector<int> ids;
  if (!o.suite_only.empty()) {
    try {
      for (auto c : parse_hj(o.suite_only)) ids.push_back(static_cast<int>(c));
    } catch (const std::exception& e) {
      throw UsageError(std::string("--only: ") + e.what());
    }
    for (int id : ids)
      if (id < 1 || id > kCriterionCount) throw UsageError("--only: no criterion " + std::to_string(id));
  }
  const auto results = run_acceptance(cfg, ids);
  bool pass = true;
  Json list = Json::array();
  for (const CriterionResult& r : results) {
    err << r.line() << "\n";
    pass = pass && r.pass();
    Json c;
    c["id"] = r.id;
    c["title"] = r.title;
    c["pass"] = r.pass();
    c["report"] = r.report.to_json(o.suite_timings);
    list.push_back(c);
  }
  Json j;
  j["config"] = cfg.to_json();
  j["pass"] = pass;
  j["criteria"] = list;
  emit(out, j);
  if (!o.suite_json.empty()) write_file(o.suite_json, j.dump(2) + "\n");
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hirzebruch-Jung continued fractions, two-bridge links and slice surfaces", "lensball"};
  app.require_subcommand(1);
  Options o;

  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->require_subcommand(1);
  auto* cf_expand = cf->add_subcommand("expand", "Expand p/q");
  cf_expand->add_option("p", o.cf_p)->required();
  cf_expand->add_option("q", o.cf_q)->required();
  auto* cf_eval = cf->add_subcommand("eval", "Evaluate c1,c2,...");
  cf_eval->add_option("coeffs", o.cf_coeffs)->required();
  auto* cf_wahl = cf->add_subcommand("wahl", "Wahl string of p^2/(pq-1), or p^2/(pq+1) with --plus");
  cf_wahl->add_option("P", o.cf_p, "p (or --p)");
  cf_wahl->add_option("Q", o.cf_q, "q (or --q)");
  cf_wahl->add_option("--p", o.cf_opt_p);
  cf_wahl->add_option("--q", o.cf_opt_q);
  cf_wahl->add_flag("--plus", o.cf_plus);

  auto* tree = app.add_subcommand("tree", "List the binary tree of coprime pairs");
  tree->add_option("--variant", o.tree_variant)->check(CLI::IsMember({"w1", "w2"}));
  tree->add_option("--depth", o.tree_depth);
  tree->add_option("--dot", o.tree_dot, "Write a DOT graph");

  auto* wahl = app.add_subcommand("wahl", "Check that both string recursions give the Wahl strings");
  wahl->add_option("--depth", o.wahl_depth);
  wahl->add_flag("--plus", o.wahl_plus);

  auto* diagram = app.add_subcommand("diagram", "Standard diagram of S(p,q)");
  diagram->add_option("p", o.diag_p)->required();
  diagram->add_option("q", o.diag_q)->required();
  diagram->add_option("--svg", o.diag_svg);
  diagram->add_option("--pd", o.diag_pd);

  auto* inv = app.add_subcommand("invariants", "Invariants of a PD JSON file");
  inv->add_option("--pd", o.inv_pd)->required();
  inv->add_flag("--jones", o.inv_jones);
  inv->add_flag("--det", o.inv_det);
  inv->add_flag("--components", o.inv_components);

  auto* covers = app.add_subcommand("covers", "Linear plumbing lattice and its boundary");
  auto* cw = covers->add_option("--weights", o.cov_weights);
  auto* cpq = covers->add_option("--pq", o.cov_pq)->expected(2);
  cw->excludes(cpq);

  auto* verify = app.add_subcommand("verify", "Run one verification");
  verify->add_option("kind", o.ver_kind)
      ->required()
      ->check(CLI::IsMember({"delta", "pps", "kh12", "kh13", "psquared", "cp2bar", "blowup"}));
  verify->add_option("--p", o.ver_p);
  verify->add_option("--q", o.ver_q);
  verify->add_option("--n", o.ver_n);
  verify->add_flag("--plus", o.ver_plus, "cp2bar: the plus family");
  verify->add_option("--json", o.ver_json, "Also write the report here");
  verify->add_option("--svg-dir", o.ver_svg_dir, "Write one SVG per constructed diagram");
  verify->add_flag("--timings", o.ver_timings, "Include runtime_ms");

  auto* suite = app.add_subcommand("suite", "Run the acceptance matrix");
  suite->add_option("--config", o.suite_config, "JSON file overriding bounds");
  suite->add_option("--only", o.suite_only, "Comma-separated criterion ids");
  suite->add_option("--json", o.suite_json, "Also write the result here");
  suite->add_flag("--timings", o.suite_timings, "Include runtime_ms");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cf_expand->parsed()) return cmd_cf_expand(o, out);
    if (cf_eval->parsed()) return cmd_cf_eval(o, out);
    if (cf_wahl->parsed()) return cmd_cf_wahl(o, out);
    if (tree->parsed()) return cmd_tree(o, out);
    if (wahl->parsed()) return cmd_wahl(o, out);
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (inv->parsed()) return cmd_invariants(o, out);
    if (covers->parsed()) return cmd_covers(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (suite->parsed()) return cmd_suite(o, out, err);
  } catch (const UsageError& e) {
    err << "lensball: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "lensball: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lensball: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace lensball::cli
