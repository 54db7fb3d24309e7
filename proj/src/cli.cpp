#include "ecl/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"

#include "ecl/report.hpp"

namespace ecl {

std::complex<double> parse_cplx(const std::string& in) {
  std::string s;
  for (char c : in)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto parse_d = [](const std::string& t) -> double {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t pos = 0;
    double v = std::stod(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("trailing characters");
    return v;
  };
  try {
    if (s.empty()) throw std::invalid_argument("empty");
    if (s.back() == 'i') {
      std::string body = s.substr(0, s.size() - 1);
      std::size_t split = std::string::npos;
      for (std::size_t p = 1; p < body.size(); ++p)
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' &&
            body[p - 1] != 'E')
          split = p;
      if (split == std::string::npos) return {0.0, parse_d(body)};
      return {parse_d(body.substr(0, split)), parse_d(body.substr(split))};
    }
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return {v, 0.0};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse complex literal: " + in);
  }
}

namespace {

OJson top(const std::string& cmd) {
  OJson j;
  j["schema_version"] = "1";
  j["command"] = cmd;
  return j;
}

void emit(std::ostream& out, const OJson& j) { out << j.dump(2) << "\n"; }

Cplx upper_half_tau(const std::string& s) {
  Cplx tau = parse_cplx(s);
  if (!(tau.imag() > 0))
    throw std::invalid_argument("tau needs positive imaginary part");
  return tau;
}

int cmd_roots(std::ostream& out, const std::string& type, int rank) {
  RootSystem rs = build_root_system(root_type_from_string(type), rank);
  OJson j = top("roots");
  j["type"] = root_type_to_string(rs.type);
  j["rank"] = rs.rank;
  j["ambient_dim"] = rs.ambient_dim;
  j["num_roots"] = rs.num_roots();
  j["num_positive"] = rs.num_positive();
  j["dual_coxeter"] = json_rat(dual_coxeter(rs));
  OJson cls = OJson::array();
  for (const auto& c : classify_sum_pairs(rs)) {
    OJson x;
    x["len_a"] = json_rat(c.len_a);
    x["len_b"] = json_rat(c.len_b);
    x["len_ab"] = json_rat(c.len_ab);
    x["count"] = c.count;
    cls.push_back(std::move(x));
  }
  j["sum_pair_classes"] = std::move(cls);
  j["rank2_plane_count"] = rank2_planes(rs).size();
  emit(out, j);
  return 0;
}

int cmd_theta(std::ostream& out, const std::string& tau_s, int trials,
              std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  Cplx tau = upper_half_tau(tau_s);
  ThetaEngine eng(tau);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.08, 0.92);
  const Cplx I(0.0, 1.0);
  const double pi = std::numbers::pi;
  auto rel = [](Cplx a, Cplx b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
  };
  double e_one = 0, e_tau = 0, e_odd = 0;
  for (int t = 0; t < trials; ++t) {
    Cplx z = unif(rng) + unif(rng) * tau;
    Cplx th = eng.theta(z);
    e_one = std::max(e_one, rel(eng.theta(z + 1.0), -th));
    Cplx fac = -std::exp(-pi * I * tau - 2.0 * pi * I * z);
    e_tau = std::max(e_tau, rel(eng.theta(z + tau), fac * th));
    e_odd = std::max(e_odd, rel(eng.theta(-z), -th));
  }
  double heat = heat_equation_residual(tau, Cplx(0.23, 0.11));
  bool pass = e_one < 1e-10 && e_tau < 1e-10 && e_odd < 1e-10 && heat < 1e-6;
  OJson j = top("theta-check");
  j["tau"] = json_cplx(tau);
  j["trials"] = trials;
  j["seed"] = seed;
  j["max_rel_err_lattice_step"] = e_one;
  j["max_rel_err_tau_step"] = e_tau;
  j["max_rel_err_oddness"] = e_odd;
  j["heat_residual"] = heat;
  j["pass"] = pass;
  emit(out, j);
  return pass ? 0 : 1;
}

int cmd_kcoeffs(std::ostream& out, const std::string& tau_s, int order) {
  if (order < 1 || order > 24)
    throw std::invalid_argument("order must be in 1..24");
  Cplx tau = upper_half_tau(tau_s);
  ThetaEngine eng(tau);
  OJson j = top("k-coeffs");
  j["tau"] = json_cplx(tau);
  j["order"] = order;
  OJson cs = OJson::array();
  auto trig = trig_c_coeffs(order / 2 + 1);
  for (std::size_t m = 0; m < trig.size(); ++m) {
    OJson x;
    x["order"] = 2 * m + 1;
    x["coeff"] = json_rat(trig[m].coeff);
    x["pi_exp"] = trig[m].pi_exp;
    x["value"] = trig[m].value();
    cs.push_back(std::move(x));
  }
  j["trig_c"] = std::move(cs);
  OJson as = OJson::array();
  auto wa = weight_a_coeffs(order / 2 + 1);
  for (std::size_t m = 0; m < wa.size(); ++m) {
    OJson x;
    x["order"] = 2 * (m + 1);
    x["coeff"] = json_rat(wa[m].coeff);
    x["pi_exp"] = wa[m].pi_exp;
    x["value"] = wa[m].value();
    as.push_back(std::move(x));
  }
  j["weight_a"] = std::move(as);
  OJson eis = OJson::array();
  for (int m = 1; m <= 3; ++m) {
    OJson x;
    x["index"] = 2 * m + 2;
    x["value"] = json_cplx(eisenstein(eng, m));
    eis.push_back(std::move(x));
  }
  j["eisenstein"] = std::move(eis);
  const Cplx z0(0.31, 0.17);
  auto kk = k_series(eng, z0, static_cast<std::size_t>(order));
  auto kt = k_trig_coeffs(z0, static_cast<std::size_t>(order));
  double kmax = 0;
  for (int p = 0; p <= order; ++p)
    kmax = std::max(kmax, std::abs(kk[static_cast<std::size_t>(p)] -
                                   kt[static_cast<std::size_t>(p)]));
  j["k_minus_trig_max"] = kmax;
  emit(out, j);
  return 0;
}

int cmd_constant(std::ostream& out, const std::string& type, int rank) {
  RootSystem rs = build_root_system(root_type_from_string(type), rank);
  ConstantReport rep = constant_report(rs);
  OJson j = top("constant-c");
  j.update(json_constant(rep));
  emit(out, j);
  bool agree = rep.tilde_c == rep.tilde_c_classified &&
               rep.tilde_c == rep.tilde_c_bracket;
  return agree ? 0 : 1;
}

int cmd_verify(std::ostream& out, const std::string& suite, int k, int n,
               int degree, bool serial) {
  SuiteReport rep = run_suite(suite, k, n, degree, !serial);
  OJson j = top("verify-ddca");
  j.update(json_suite(rep));
  emit(out, j);
  return rep.all_asserted_pass ? 0 : 1;
}

int cmd_duality(std::ostream& out, int k, int n, int degree, int ad_order,
                bool serial) {
  SuiteReport rep = run_duality(k, n, degree, ad_order, !serial);
  OJson j = top("verify-duality");
  j["abelian_form"] = "euler_normalized";
  j.update(json_suite(rep));
  emit(out, j);
  return rep.all_asserted_pass ? 0 : 1;
}

int cmd_sl2_probe(std::ostream& out, int k, int n, int degree, bool serial) {
  SuiteReport rep = run_sl2_probe(k, n, degree, !serial);
  OJson j = top("sl2-probe");
  j.update(json_suite(rep));
  emit(out, j);
  // exploratory rows only, never a verdict
  return 0;
}

int cmd_flatness(std::ostream& out, const std::string& model) {
  FlatnessReport rep = flatness_relations_check(rep_by_name(model));
  OJson j = top("flatness");
  j.update(json_flatness(rep));
  emit(out, j);
  return rep.all_applicable_pass ? 0 : 1;
}

Path path_from_json(const OJson& pj) {
  Path path;
  for (const auto& s : pj.at("segments")) {
    PathSegment seg;
    for (const auto& v : s.at("from"))
      seg.from.push_back(parse_cplx(v.get<std::string>()));
    for (const auto& v : s.at("to"))
      seg.to.push_back(parse_cplx(v.get<std::string>()));
    if (seg.from.size() != seg.to.size() || seg.from.empty())
      throw std::invalid_argument("segment endpoints disagree in size");
    path.segments.push_back(std::move(seg));
  }
  if (path.segments.empty()) throw std::invalid_argument("no segments");
  return path;
}

int cmd_monodromy(std::ostream& out, const std::string& model,
                  const std::string& oracle, const std::string& path_file,
                  const std::string& tau_s, double tol, double min_clearance) {
  TransportOptions opt;
  opt.tol = tol;
  opt.min_clearance = min_clearance;
  OJson j = top("monodromy");
  const Cplx I(0.0, 1.0);
  const double pi = std::numbers::pi;

  if (!oracle.empty()) {
    if (!model.empty() || !path_file.empty())
      throw std::invalid_argument("--oracle excludes --model and --path");
    Cplx tau = upper_half_tau(tau_s);
    const Cplx z0(0.37, 0.21);
    Path path;
    Cplx weight(1.0, 0.0);
    Cplx expected;
    if (oracle == "period1") {
      path = segment_path({{z0}, {z0 + 1.0}});
      expected = -1.0;
    } else if (oracle == "periodtau") {
      path = segment_path({{z0}, {z0 + tau}});
      expected = -std::exp(-pi * I * tau - 2.0 * pi * I * z0);
    } else if (oracle == "divisor") {
      weight = Cplx(1.0 / 3.0, 0.0);
      path = rectangle_loop({Cplx(0.0, 0.0)}, 0, Cplx(0.0, 0.0), 0.3, 0.3);
      expected = std::exp(2.0 * pi * I / 3.0);
    } else {
      throw std::invalid_argument("unknown oracle: " + oracle);
    }
    TransportResult res = transport(scalar_kernel_evaluator(weight, tau), path, opt);
    double err = std::abs(res.matrix.at(0, 0) - expected);
    bool pass = err < 1e-8;
    j["oracle"] = oracle;
    j["tau"] = json_cplx(tau);
    j["weight"] = json_cplx(weight);
    j["transport"] = json_transport(res);
    j["expected"] = json_cplx(expected);
    j["abs_error"] = err;
    j["pass"] = pass;
    emit(out, j);
    return pass ? 0 : 1;
  }

  if (model.empty() || path_file.empty())
    throw std::invalid_argument("need --oracle, or --model together with --path");
  std::ifstream f(path_file);
  if (!f) throw std::invalid_argument("cannot open " + path_file);
  Cplx tau;
  Path path;
  try {
    OJson pj = OJson::parse(f);
    tau = upper_half_tau(pj.at("tau").get<std::string>());
    path = path_from_json(pj);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad path file: ") + e.what());
  }
  KzbForm form(rep_by_name(model), tau);
  for (const auto& seg : path.segments)
    if (static_cast<int>(seg.from.size()) != form.rank())
      throw std::invalid_argument("segment coordinate count must equal the rank");
  TransportResult res = transport(evaluator_from_kzb(form), path, opt);
  j["model"] = model;
  j["tau"] = json_cplx(tau);
  j["transport"] = json_transport(res);
  emit(out, j);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{
      "exact and numeric checks for theta-kernel connection forms and the "
      "current-algebra realizations behind them"};
  app.require_subcommand(1);

  auto* c_roots = app.add_subcommand(
      "roots", "counts, dual Coxeter number and sum-pair classes");
  std::string ro_type;
  int ro_rank = 0;
  c_roots->add_option("--type", ro_type, "A, B, C, D, E, F or G")->required();
  c_roots->add_option("--rank", ro_rank, "rank")->required();

  auto* c_theta = app.add_subcommand(
      "theta-check", "transformation and heat-flow residuals of the kernel");
  std::string th_tau = "0.3+1.1i";
  int th_trials = 50;
  std::uint64_t th_seed = 12345;
  c_theta->add_option("--tau", th_tau, "modulus, upper half plane");
  c_theta->add_option("--trials", th_trials, "random sample count");
  c_theta->add_option("--seed", th_seed, "rng seed");

  auto* c_kc = app.add_subcommand(
      "k-coeffs", "kernel expansion coefficients and their trigonometric limit");
  std::string kc_tau = "20i";
  int kc_order = 8;
  c_kc->add_option("--tau", kc_tau, "modulus, upper half plane");
  c_kc->add_option("--order", kc_order, "highest expansion order, 1..24");

  auto* c_const = app.add_subcommand(
      "constant-c", "fourth-order invariant by three independent routes");
  std::string co_type;
  int co_rank = 0;
  c_const->add_option("--type", co_type, "A, B, C, D, E, F or G")->required();
  c_const->add_option("--rank", co_rank, "rank")->required();

  auto* c_verify = app.add_subcommand(
      "verify-ddca", "operator identity suites on the polynomial realization");
  std::string ve_suite;
  int ve_k = 2, ve_n = 4, ve_degree = 3;
  bool ve_serial = false;
  c_verify
      ->add_option("--suite", ve_suite,
                   "main-relation, prop41, dualpair, zn, lemmaQv or aell")
      ->required();
  c_verify->add_option("--k", ve_k, "matrix block count, >= 2");
  c_verify->add_option("--n", ve_n, "matrix size, >= 3");
  c_verify->add_option("--degree", ve_degree, "state family degree bound");
  c_verify->add_flag("--serial", ve_serial, "disable the parallel sweep");

  auto* c_dual = app.add_subcommand(
      "verify-duality", "component match between the two torus realizations");
  int du_k = 2, du_n = 4, du_degree = 2, du_ad = 2;
  bool du_serial = false;
  c_dual->add_option("--k", du_k, "matrix block count, >= 2");
  c_dual->add_option("--n", du_n, "matrix size, >= 3");
  c_dual->add_option("--degree", du_degree, "state family degree bound");
  c_dual->add_option("--ad-order", du_ad, "iterated bracket depth");
  c_dual->add_flag("--serial", du_serial, "disable the parallel sweep");

  auto* c_probe = app.add_subcommand(
      "sl2-probe", "exploratory bracket rows on rank-one directions");
  int pr_k = 2, pr_n = 4, pr_degree = 1;
  bool pr_serial = false;
  c_probe->add_option("--k", pr_k, "matrix block count, >= 2");
  c_probe->add_option("--n", pr_n, "matrix size, >= 4");
  c_probe->add_option("--degree", pr_degree, "state family degree bound");
  c_probe->add_flag("--serial", pr_serial, "disable the parallel sweep");

  auto* c_flat = app.add_subcommand(
      "flatness", "exact algebraic relations behind a model's connection form");
  std::string fl_model;
  c_flat
      ->add_option("--model", fl_model,
                   "cherednik-sl3, cherednik-sl4, smallrep-sl3, smallrep-sl4 "
                   "or zero")
      ->required();

  auto* c_mono = app.add_subcommand(
      "monodromy", "parallel transport of a connection form along paths");
  std::string mo_model, mo_oracle, mo_path, mo_tau = "0.3+1.1i";
  double mo_tol = 1e-10, mo_clear = 1e-5;
  c_mono->add_option("--model", mo_model, "form to transport");
  c_mono->add_option("--oracle", mo_oracle,
                     "period1, periodtau or divisor: scalar forms with "
                     "closed-form transport");
  c_mono->add_option("--path", mo_path, "json file with tau and segments");
  c_mono->add_option("--tau", mo_tau, "modulus for --oracle runs");
  c_mono->add_option("--tol", mo_tol, "local error per unit step");
  c_mono->add_option("--min-clearance", mo_clear, "singularity distance floor");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    if (app.got_subcommand(c_roots)) return cmd_roots(out, ro_type, ro_rank);
    if (app.got_subcommand(c_theta))
      return cmd_theta(out, th_tau, th_trials, th_seed);
    if (app.got_subcommand(c_kc)) return cmd_kcoeffs(out, kc_tau, kc_order);
    if (app.got_subcommand(c_const)) return cmd_constant(out, co_type, co_rank);
    if (app.got_subcommand(c_verify))
      return cmd_verify(out, ve_suite, ve_k, ve_n, ve_degree, ve_serial);
    if (app.got_subcommand(c_dual))
      return cmd_duality(out, du_k, du_n, du_degree, du_ad, du_serial);
    if (app.got_subcommand(c_probe))
      return cmd_sl2_probe(out, pr_k, pr_n, pr_degree, pr_serial);
    if (app.got_subcommand(c_flat)) return cmd_flatness(out, fl_model);
    if (app.got_subcommand(c_mono))
      return cmd_monodromy(out, mo_model, mo_oracle, mo_path, mo_tau, mo_tol,
                           mo_clear);
    out << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace ecl
