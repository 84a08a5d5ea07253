// Command-line entry point: constructs evasive classes, colorings, and
// linear-representation graphs, verifies them exhaustively, and evaluates
// the bound calculators. Artifacts go to files or stdout, logs to stderr;
// the exit code mirrors the verdict (0 ok, 1 failed verdict, 2 usage error,
// 3 cap exceeded).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "evasive/evasive.hpp"

namespace {

using namespace evasive;
using json = io::json;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct GlobalOpts {
  std::string out;   // primary artifact path; empty or "-" means stdout
  std::string cert;  // certificate path; empty or "-" means stdout
  unsigned workers = 1;
  std::uint64_t seed = 0;
  std::uint64_t cap = geom::kDefaultPointCap;
  std::uint64_t field_cap = gf::Field::kDefaultElementCap;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::fwrite(content.data(), 1, content.size(), stdout);
    if (!content.empty() && content.back() != '\n') std::fputc('\n', stdout);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << content;
}

void log_line(const std::string& msg) { std::fprintf(stderr, "[evasive] %s\n", msg.c_str()); }

gf::FieldPtr field_for_q(std::uint64_t q, std::uint64_t field_cap) {
  auto [p, e] = gf::factor_prime_power(q);
  return gf::field_create(p, e, field_cap);
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

// ----- construct -------------------------------------------------------------

int run_construct(const GlobalOpts& g, std::uint64_t q, std::uint32_t t, std::uint32_t u,
                  bool verify) {
  auto F = field_for_q(q, g.field_cap);
  if (u >= q) throw CLI::ValidationError("--u", "class label must lie in [0, q)");
  if (t < 2) throw CLI::ValidationError("--t", "evasive construction needs t >= 2");
  TowerSpec T(F, t, g.field_cap);
  Timer timer;
  EvasiveClass cls = construct_class(T, u, g.cap);
  log_line("constructed class of " + std::to_string(cls.points.size()) + " points in " +
           std::to_string(timer.seconds()) + "s");
  if (!verify) {
    emit(g.out, io::class_csv(T, cls));
    return kExitOk;
  }

  // All fallible work happens before any output so a cap error leaves
  // nothing half-written.
  geom::AffineSpace S(F, T.flat_dim(), g.cap);
  Timer sweep_timer;
  auto verdict = geom::sweep_line_evasive(S, geom::make_indicator(S, cls.points), t, g.workers);
  log_line("swept " + std::to_string(verdict.lines_swept) + " lines in " +
           std::to_string(sweep_timer.seconds()) + "s");
  emit(g.out, io::class_csv(T, cls));
  emit(g.cert, io::evasive_certificate(T, u, verdict, cls.points.size()).dump(2));
  return verdict.ok ? kExitOk : kExitVerdictFail;
}

// ----- color -----------------------------------------------------------------

int run_color(const GlobalOpts& g, std::uint64_t q, std::uint32_t n, bool projective,
              bool merged, bool verify) {
  auto F = field_for_q(q, g.field_cap);
  color::Coloring c;
  if (merged) {
    if (!projective) throw CLI::ValidationError("--merged", "merging applies to --projective");
    c = color::merged_coloring(F, n);
  } else if (projective) {
    c = color::projective_coloring(F, n);
  } else {
    c = color::affine_coloring(F, n);
  }
  log_line("built " + c.construction + " with k=" + std::to_string(c.k) + " on " +
           std::to_string(c.colors.size()) + " points");
  if (!verify) {
    emit(g.out, io::coloring_csv(c));
    return kExitOk;
  }

  bool ok;
  json cert;
  if (c.projective) {
    auto sweep = color::certify_projective(c, g.workers, g.cap);
    ok = sweep.ok;
    json witness = nullptr;
    if (sweep.witness)
      witness = json{{"p0", sweep.witness->p0}, {"p1", sweep.witness->p1},
                     {"color", sweep.witness->color}};
    cert = io::coloring_certificate(c, ok, sweep.max_per_line_per_color, sweep.lines_swept,
                                    witness);
  } else {
    auto sweep = color::certify_affine(c, g.workers, g.cap);
    ok = sweep.ok;
    json witness = nullptr;
    if (sweep.witness)
      witness = json{{"base_rank", sweep.witness->base_rank},
                     {"direction_index", sweep.witness->dir_index},
                     {"color", sweep.witness->color}};
    cert = io::coloring_certificate(c, ok, sweep.max_per_line_per_color, sweep.lines_swept,
                                    witness);
  }
  emit(g.out, io::coloring_csv(c));
  emit(g.cert, cert.dump(2));
  return ok ? kExitOk : kExitVerdictFail;
}

// ----- graph -----------------------------------------------------------------

int run_graph(const GlobalOpts& g, std::uint64_t q, std::uint32_t n, std::uint32_t t,
              std::uint32_t u, std::uint32_t theta_t, bool verify) {
  auto F = field_for_q(q, g.field_cap);
  if (t < 2) throw CLI::ValidationError("--t", "evasive construction needs t >= 2");
  TowerSpec T(F, t, g.field_cap);
  if (n > T.flat_dim())
    throw CLI::ValidationError("--n", "restriction dimension exceeds the partition dimension");
  auto restricted = restrict_to_subspace(construct_class(T, u, g.cap).points, T.flat_dim(), n, q);
  if (restricted.empty()) throw CLI::ValidationError("--n", "restricted class is empty");
  geom::ProjectiveSpace hyperplane(F, n, g.cap);
  std::vector<std::uint64_t> S;
  for (auto r : restricted) S.push_back(hyperplane.from_affine_rank(r));
  auto rep = extremal::linear_representation(hyperplane, S, g.cap);
  log_line("graph with " + std::to_string(rep.g.n_left) + " point vertices, " +
           std::to_string(rep.g.n_right) + " line vertices, " +
           std::to_string(rep.g.edge_count()) + " edges");
  if (!verify) {
    emit(g.out, io::graph_edge_list(rep));
    return kExitOk;
  }

  auto deg = extremal::check_degrees(rep);
  auto c4 = extremal::check_c4_free(rep.g);
  auto theta = extremal::check_theta3_free(rep.g, theta_t == 0 ? t : theta_t);
  bool ok = deg.ok && c4.free && theta.free;
  json cert{{"property", "linear-representation"},
            {"space", io::space_json("projective", n + 1, q)},
            {"params", json{{"t", t}, {"u", u}, {"s_size", rep.s_size},
                            {"theta_t", theta_t == 0 ? t : theta_t}}},
            {"field", io::field_spec_json(*F)},
            {"verdict", ok ? "ok" : "fail"},
            {"degree_facts", deg.ok},
            {"c4_free", c4.free},
            {"theta_free", theta.free},
            {"theta_stage", theta.stage},
            {"max_3paths", theta.max_paths},
            {"counts", json{{"point_vertices", deg.point_vertices},
                            {"line_vertices", deg.line_vertices},
                            {"edges", deg.edges}}}};
  emit(g.out, io::graph_edge_list(rep));
  emit(g.cert, cert.dump(2));
  return ok ? kExitOk : kExitVerdictFail;
}

// ----- bounds ----------------------------------------------------------------

int run_bounds_chi(const GlobalOpts& g, std::uint32_t n, std::uint64_t q) {
  auto rep = chi_upper_bound(n, q);
  emit(g.cert.empty() ? g.out : g.cert, io::bound_report_json(rep).dump(2));
  return kExitOk;
}

int run_bounds_ramsey(const GlobalOpts& g, std::uint32_t k, std::uint64_t q) {
  auto rep = ramsey_lower_bound(k, q);
  emit(g.cert.empty() ? g.out : g.cert, io::bound_report_json(rep).dump(2));
  return kExitOk;
}

int run_bounds_turan(const GlobalOpts& g, std::uint64_t n, std::uint64_t m, std::uint32_t t) {
  auto env = extremal::turan_upper_bound(n, m, t);
  json j{{"kind", "turan-envelope"},
         {"note", "asymptotic envelope with (1+o(1)) set to 1, not a certified bound"},
         {"n", n},
         {"m", m},
         {"t", t},
         {"value", env.value},
         {"terms", json{{"lead", env.term_lead},
                        {"mid", env.term_mid},
                        {"cube_root", env.term_cube},
                        {"linear", env.term_linear}}},
         {"degree_split", env.degree_split},
         {"a", env.a},
         {"regime_ok", env.regime_ok}};
  emit(g.cert.empty() ? g.out : g.cert, j.dump(2));
  return kExitOk;
}

int run_bounds_params(const GlobalOpts& g, std::uint32_t t, std::uint32_t j) {
  auto params = extremal::lower_bound_parameters(t, j);
  json out{{"kind", "theta-lower-bound-parameters"},
           {"t", params.t},
           {"j", params.j},
           {"a", json{{"num", params.a.num}, {"den", params.a.den}}},
           {"edge_exponent", json{{"num", params.exponent.num}, {"den", params.exponent.den}}},
           {"line_vertex_exponent", params.line_vertex_exp},
           {"point_vertex_exponent", params.point_vertex_exp}};
  emit(g.cert.empty() ? g.out : g.cert, out.dump(2));
  return kExitOk;
}

// ----- check -----------------------------------------------------------------

int run_check_graph(const GlobalOpts& g, const std::string& in, bool c4, std::uint32_t theta_t) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot open " + in);
  auto graph = io::read_edge_list(f);
  bool ok = true;
  json cert{{"property", "subgraph-checks"}, {"input", in}};
  if (c4) {
    auto verdict = extremal::check_c4_free(graph);
    cert["c4_free"] = verdict.free;
    if (verdict.witness)
      cert["c4_witness"] = json{{"left", {verdict.witness->left_a, verdict.witness->left_b}},
                                {"right", {verdict.witness->right_a, verdict.witness->right_b}}};
    ok = ok && verdict.free;
  }
  if (theta_t >= 2) {
    auto verdict = extremal::check_theta3_free(graph, theta_t);
    cert["theta_t"] = theta_t;
    cert["theta_free"] = verdict.free;
    cert["theta_stage"] = verdict.stage;
    cert["max_3paths"] = verdict.max_paths;
    ok = ok && verdict.free;
  }
  cert["verdict"] = ok ? "ok" : "fail";
  emit(g.cert, cert.dump(2));
  return ok ? kExitOk : kExitVerdictFail;
}

int run_check_ap_free(const GlobalOpts& g, const std::string& in, std::uint32_t p,
                      std::uint32_t t) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot open " + in);
  auto cf = io::read_class_csv(f);
  if (cf.p != p || cf.e != 1)
    throw std::invalid_argument("progression check needs a prime-field point set matching --p");
  auto F = gf::field_create(cf.p, 1, g.field_cap);
  geom::AffineSpace S(F, cf.dim, g.cap);
  auto verdict = extremal::is_ap_free(S, cf.points, t, g.workers);
  json cert{{"property", "progression-free"},
            {"space", io::space_json("affine", cf.dim, p)},
            {"params", json{{"t", t}, {"points", cf.points.size()}}},
            {"field", io::field_spec_json(*F)},
            {"verdict", verdict.free ? "ok" : "fail"},
            {"vacuous", verdict.vacuous},
            {"fast_path_certified", verdict.fast_path_certified},
            {"exhaustive_ran", verdict.exhaustive_ran}};
  if (verdict.witness)
    cert["witness"] = json{{"start", verdict.witness->start}, {"diff", verdict.witness->diff}};
  else
    cert["witness"] = nullptr;
  emit(g.cert, cert.dump(2));
  return verdict.free ? kExitOk : kExitVerdictFail;
}

int run_check_awm(const GlobalOpts& g, std::uint32_t trials, std::uint32_t max_dim) {
  SplitMix64 rng(g.seed);
  std::uint32_t violations = 0;
  for (std::uint32_t i = 0; i < trials; ++i) {
    std::size_t m = 1 + rng.below(max_dim), n = 1 + rng.below(max_dim);
    extremal::IntMatrix B(m, std::vector<std::int64_t>(n, 0));
    for (auto& row : B)
      for (auto& x : row) x = static_cast<std::int64_t>(rng.below(2));
    if (!extremal::awm_check(B).holds) ++violations;
  }
  json cert{{"property", "sum-inequality"},
            {"trials", trials},
            {"max_dim", max_dim},
            {"seed", g.seed},
            {"violations", violations},
            {"verdict", violations == 0 ? "ok" : "fail"}};
  emit(g.cert, cert.dump(2));
  return violations == 0 ? kExitOk : kExitVerdictFail;
}

int run_check_slope(const GlobalOpts& g, std::uint64_t q, std::uint32_t t, std::uint32_t trials) {
  auto F = field_for_q(q, g.field_cap);
  TowerSpec T(F, t, g.field_cap);
  SplitMix64 rng(g.seed);
  std::uint32_t failures = 0;
  for (std::uint32_t i = 0; i < trials; ++i) {
    EvasiveVector b = zero_vector(T);
    for (std::uint32_t lvl = 1; lvl <= t; ++lvl)
      b.parts[lvl - 1] = static_cast<std::uint32_t>(rng.below(T.level(lvl).sup().size()));
    std::uint32_t u = static_cast<std::uint32_t>(rng.below(q));
    Poly f(t + 1, 0);
    f[0] = T.base().sub(class_label(T, b), u);
    for (std::uint32_t d = 1; d <= t; ++d) f[d] = static_cast<std::uint32_t>(rng.below(q));
    if (line_restriction_poly(T, solve_slope(T, b, u, f), b, u) != f) ++failures;
  }
  json cert{{"property", "slope-round-trip"},
            {"q", q},
            {"t", t},
            {"trials", trials},
            {"seed", g.seed},
            {"failures", failures},
            {"verdict", failures == 0 ? "ok" : "fail"}};
  emit(g.cert, cert.dump(2));
  return failures == 0 ? kExitOk : kExitVerdictFail;
}

// ----- verify ----------------------------------------------------------------

int run_verify_evasive(const GlobalOpts& g, const std::string& in, std::uint32_t t_override) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot open " + in);
  auto cf = io::read_class_csv(f);
  auto F = gf::field_create(cf.p, cf.e, g.field_cap);
  TowerSpec T(F, cf.t, g.field_cap);
  std::uint32_t t = t_override ? t_override : cf.t;
  geom::AffineSpace S(F, cf.dim, g.cap);
  auto verdict = geom::sweep_line_evasive(S, geom::make_indicator(S, cf.points), t, g.workers);
  auto cert = io::evasive_certificate(T, cf.u, verdict, cf.points.size());
  cert["params"]["t"] = t;
  emit(g.cert, cert.dump(2));
  return verdict.ok ? kExitOk : kExitVerdictFail;
}

int run_verify_coloring(const GlobalOpts& g, const std::string& in) {
  std::ifstream f(in);
  if (!f) throw std::runtime_error("cannot open " + in);
  auto c = io::read_coloring_csv(f);
  bool ok;
  json witness = nullptr;
  std::uint32_t max_count;
  std::uint64_t lines;
  if (c.projective) {
    auto sweep = color::certify_projective(c, g.workers, g.cap);
    ok = sweep.ok;
    max_count = sweep.max_per_line_per_color;
    lines = sweep.lines_swept;
    if (sweep.witness) witness = json{{"p0", sweep.witness->p0}, {"p1", sweep.witness->p1}};
  } else {
    auto sweep = color::certify_affine(c, g.workers, g.cap);
    ok = sweep.ok;
    max_count = sweep.max_per_line_per_color;
    lines = sweep.lines_swept;
    if (sweep.witness)
      witness = json{{"base_rank", sweep.witness->base_rank},
                     {"direction_index", sweep.witness->dir_index}};
  }
  emit(g.cert, io::coloring_certificate(c, ok, max_count, lines, witness).dump(2));
  return ok ? kExitOk : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructions and exhaustive verifiers for line-evasive partitions, "
               "projective colorings, and the derived extremal graphs"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--out", g.out, "artifact output path ('-' for stdout)");
  app.add_option("--cert", g.cert, "certificate output path ('-' for stdout)");
  app.add_option("--workers", g.workers, "worker threads for sweeps")->default_val(1);
  app.add_option("--seed", g.seed, "seed for randomized property pipelines")->default_val(0);
  app.add_option("--cap", g.cap, "point cap for exhaustive sweeps");
  app.add_option("--field-cap", g.field_cap, "element cap for field construction");

  // construct
  auto* construct = app.add_subcommand("construct", "build an evasive class");
  construct->fallthrough();  // global flags are accepted after the subcommand
  std::uint64_t q = 3;
  std::uint32_t t = 2, u = 0;
  bool verify = false;
  construct->add_option("--q", q, "field order (prime power)")->required();
  construct->add_option("--t", t, "line intersection bound")->required();
  construct->add_option("--u", u, "class label")->required();
  construct->add_flag("--verify", verify, "chain the exhaustive evasiveness sweep");

  // color
  auto* colorc = app.add_subcommand("color", "build a coloring with no monochromatic line");
  colorc->fallthrough();
  std::uint64_t cq = 3;
  std::uint32_t cn = 1;
  bool projective = false, affine = false, merged = false, cverify = false;
  colorc->add_option("--q", cq, "field order")->required();
  colorc->add_option("--n", cn, "space dimension")->required();
  colorc->add_flag("--projective", projective, "color PG(n, q)");
  colorc->add_flag("--affine", affine, "color AG(n, q)");
  colorc->add_flag("--merged", merged, "merge classes (projective only)");
  colorc->add_flag("--verify", cverify, "chain the exhaustive line sweep");

  // graph
  auto* graph = app.add_subcommand("graph", "build a linear-representation graph");
  graph->fallthrough();
  std::uint64_t gq = 3;
  std::uint32_t gn = 2, gt = 2, gu = 0, gtheta = 0;
  bool glinear = false, gverify = false;
  graph->add_flag("--linear-rep", glinear, "linear representation of an evasive set");
  graph->add_option("--q", gq, "field order")->required();
  graph->add_option("--n", gn, "hyperplane dimension holding the point set")->required();
  graph->add_option("--t", gt, "evasive parameter of the set")->required();
  graph->add_option("--u", gu, "class label")->default_val(0);
  graph->add_option("--theta", gtheta, "theta parameter to verify (defaults to t)");
  graph->add_flag("--verify", gverify, "verify degrees, C4-freeness and theta-freeness");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "evaluate bound formulas");
  bounds->fallthrough();
  bool bchi = false, bramsey = false, bturan = false, bparams = false;
  std::uint32_t bk = 1, bt = 2, bj = 2;
  std::uint64_t bq = 3, bnn = 1, bm = 1;
  bounds->add_flag("--chi", bchi, "upper bound on the projective chromatic number");
  bounds->add_flag("--ramsey", bramsey, "lower bound on R_q(2;k)");
  bounds->add_flag("--turan", bturan, "Turan envelope for {C4, theta_{3,t}}");
  bounds->add_flag("--theta-params", bparams, "lower-bound construction parameters");
  bounds->add_option("--n", bnn, "dimension / left part size");
  bounds->add_option("--m", bm, "right part size");
  bounds->add_option("--q", bq, "field order");
  bounds->add_option("--k", bk, "color count");
  bounds->add_option("--t", bt, "theta parameter");
  bounds->add_option("--j", bj, "construction index j");

  // check
  auto* check = app.add_subcommand("check", "run verifiers on existing artifacts");
  check->fallthrough();
  bool kc4 = false, kawm = false, kslope = false, kapfree = false;
  std::uint32_t ktheta = 0, kp = 3, kt = 3, ktrials = 1000, kmaxdim = 12;
  std::uint64_t ksq = 4;
  std::string kin;
  check->add_flag("--c4", kc4, "C4-freeness of an edge-list graph");
  check->add_option("--theta", ktheta, "theta_{3,t}-freeness of an edge-list graph");
  check->add_flag("--ap-free", kapfree, "progression-freeness of an exported point set");
  check->add_flag("--awm", kawm, "randomized sum-inequality trials");
  check->add_flag("--slope", kslope, "randomized slope round-trip trials");
  check->add_option("--in", kin, "input artifact path");
  check->add_option("--p", kp, "prime for --ap-free");
  check->add_option("--t", kt, "progression length for --ap-free / tower height for --slope");
  check->add_option("--trials", ktrials, "trial count for randomized checks");
  check->add_option("--max-dim", kmaxdim, "max matrix dimension for --awm");
  check->add_option("--q", ksq, "field order for --slope");

  // verify
  auto* verifyc = app.add_subcommand("verify", "re-verify exported artifacts");
  verifyc->fallthrough();
  bool vevasive = false, vcoloring = false;
  std::uint32_t vt = 0;
  std::string vin;
  verifyc->add_flag("--evasive", vevasive, "line-evasiveness of a class export");
  verifyc->add_flag("--coloring", vcoloring, "no-monochromatic-line of a coloring export");
  verifyc->add_option("--t", vt, "override the intersection bound");
  verifyc->add_option("--in", vin, "input artifact path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return run_construct(g, q, t, u, verify);
    if (colorc->parsed()) {
      if (projective == affine)
        throw std::invalid_argument("choose exactly one of --projective / --affine");
      return run_color(g, cq, cn, projective, merged, cverify);
    }
    if (graph->parsed()) {
      if (!glinear) throw std::invalid_argument("graph requires --linear-rep");
      return run_graph(g, gq, gn, gt, gu, gtheta, gverify);
    }
    if (bounds->parsed()) {
      if (bchi + bramsey + bturan + bparams != 1)
        throw std::invalid_argument("choose exactly one bounds mode");
      if (bchi) return run_bounds_chi(g, static_cast<std::uint32_t>(bnn), bq);
      if (bramsey) return run_bounds_ramsey(g, bk, bq);
      if (bturan) return run_bounds_turan(g, bnn, bm, bt);
      return run_bounds_params(g, bt, bj);
    }
    if (check->parsed()) {
      if (kawm) return run_check_awm(g, ktrials, kmaxdim);
      if (kslope) return run_check_slope(g, ksq, kt, ktrials);
      if (kapfree) return run_check_ap_free(g, kin, kp, kt);
      if (kc4 || ktheta >= 2) return run_check_graph(g, kin, kc4, ktheta);
      throw std::invalid_argument("choose a check mode");
    }
    if (verifyc->parsed()) {
      if (vevasive == vcoloring)
        throw std::invalid_argument("choose exactly one of --evasive / --coloring");
      if (vevasive) return run_verify_evasive(g, vin, vt);
      return run_verify_coloring(g, vin);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const CapError& e) {
    log_line(std::string("cap exceeded: ") + e.what());
    return kExitCap;
  } catch (const CLI::Error& e) {
    log_line(std::string("usage error: ") + e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    log_line(std::string("invalid parameters: ") + e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    log_line(std::string("error: ") + e.what());
    return kExitUsage;
  }

  return kExitUsage;
}
