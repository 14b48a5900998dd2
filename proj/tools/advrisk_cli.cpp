// Command-line front end: exact empirical solves, closed-form families,
// mixture bounds, Wasserstein bounds, loss-bound arithmetic, classifier risk
// evaluation, and the self-check suite. Sweep tables use the fixed schema
// method,metric,eps,sigma,depsilon,risk,classifier,degenerate.

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "advrisk/advrisk.hpp"

using namespace advrisk;

namespace {

// ---------------------------------------------------------------------------
// sweep helpers
// ---------------------------------------------------------------------------

std::vector<double> parse_sweep(const std::string& spec) {
  double start = 0.0, stop = 0.0;
  long steps = 0;
  std::size_t c1 = spec.find(':');
  std::size_t c2 = spec.rfind(':');
  if (c1 == std::string::npos || c2 == c1) {
    throw CLI::ValidationError("--eps-sweep", "expected start:stop:steps");
  }
  auto num = [&spec](std::size_t from, std::size_t to, auto& out) {
    auto [ptr, ec] =
        std::from_chars(spec.data() + from, spec.data() + to, out);
    if (ec != std::errc{} || ptr != spec.data() + to) {
      throw CLI::ValidationError("--eps-sweep", "bad number in sweep spec");
    }
  };
  num(0, c1, start);
  num(c1 + 1, c2, stop);
  num(c2 + 1, spec.size(), steps);
  if (steps < 1) throw CLI::ValidationError("--eps-sweep", "steps must be >= 1");
  std::vector<double> eps;
  if (steps == 1) {
    eps.push_back(start);
  } else {
    for (long k = 0; k < steps; ++k) {
      eps.push_back(start + (stop - start) * static_cast<double>(k) /
                                static_cast<double>(steps - 1));
    }
  }
  return eps;
}

struct SweepFlags {
  std::optional<double> eps;
  std::string sweep;

  std::vector<double> values() const {
    if (eps && !sweep.empty()) {
      throw CLI::ValidationError("--eps", "give either --eps or --eps-sweep");
    }
    if (eps) return {*eps};
    if (!sweep.empty()) return parse_sweep(sweep);
    throw CLI::ValidationError("--eps", "one of --eps / --eps-sweep is required");
  }
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags) {
  cmd->add_option("--eps", flags.eps, "single adversary budget");
  cmd->add_option("--eps-sweep", flags.sweep,
                  "inclusive linear sweep start:stop:steps");
}

unsigned default_jobs() {
  if (const char* env = std::getenv("ADVRISK_JOBS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
  for (unsigned t = 0; t < count; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        fn(i);
      }
    });
  }
  for (auto& w : workers) w.join();
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

struct TableWriter {
  std::ofstream file;
  std::ostream* out = &std::cout;

  explicit TableWriter(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      out = &file;
    }
    *out << csv_header() << '\n';
  }
  void row(const RiskReport& r) { *out << to_csv_row(r) << '\n'; }
};

// ---------------------------------------------------------------------------
// data loading shared by exact / mixture / wp
// ---------------------------------------------------------------------------

struct DataFlags {
  std::string class_a, class_b;
  std::string data, idx_images, idx_labels;
  long label_col = -1;
  long label_a = 0, label_b = 0;
  bool header = false;
  std::string delimiter = ",";
  std::size_t n_per_class = 0;
  std::uint64_t seed = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--class-a", class_a, "delimited point file for class a");
    cmd->add_option("--class-b", class_b, "delimited point file for class b");
    cmd->add_option("--data", data, "labeled delimited dataset");
    cmd->add_option("--label-col", label_col, "0-based label column of --data");
    cmd->add_option("--idx-images", idx_images, "IDX image file");
    cmd->add_option("--idx-labels", idx_labels, "IDX label file");
    cmd->add_option("--label-a", label_a, "class-a label");
    cmd->add_option("--label-b", label_b, "class-b label");
    cmd->add_flag("--header", header, "skip the first row of delimited files");
    cmd->add_option("--delimiter", delimiter, "field delimiter (default ,)");
    cmd->add_option("--n-per-class", n_per_class,
                    "per-class subsample size (0 = all, balanced)");
    cmd->add_option("--seed", seed, "subsampling seed");
  }

  char delim() const {
    if (delimiter.size() != 1) {
      throw CLI::ValidationError("--delimiter", "must be a single character");
    }
    return delimiter[0];
  }

  std::pair<EmpiricalMeasure, EmpiricalMeasure> load(bool force_equal) const {
    if (!class_a.empty() || !class_b.empty()) {
      if (class_a.empty() || class_b.empty()) {
        throw CLI::ValidationError("--class-a", "need both --class-a and --class-b");
      }
      auto a = load_points(class_a, delim(), header);
      auto b = load_points(class_b, delim(), header);
      if (n_per_class > 0) {
        a = subsample(a, std::min(n_per_class, a.size()), seed);
        b = subsample(b, std::min(n_per_class, b.size()), seed + 1);
      }
      if (force_equal && a.size() != b.size()) {
        std::size_t n = std::min(a.size(), b.size());
        std::cerr << "note: subsampling classes to equal count " << n << "\n";
        a = subsample(a, n, seed);
        b = subsample(b, n, seed + 1);
      }
      return {std::move(a), std::move(b)};
    }
    LabeledDataset ds;
    if (!data.empty()) {
      if (label_col < 0) {
        throw CLI::ValidationError("--label-col", "required with --data");
      }
      ds = load_delimited(data, static_cast<std::size_t>(label_col), delim(),
                          header);
    } else if (!idx_images.empty()) {
      if (idx_labels.empty()) {
        throw CLI::ValidationError("--idx-labels", "required with --idx-images");
      }
      ds = load_idx_images(idx_images, idx_labels);
    } else {
      throw CLI::ValidationError(
          "--class-a", "no input given (point files, --data, or IDX pair)");
    }
    return class_pair(ds, label_a, label_b, n_per_class, seed);
  }
};

RiskReport report_from_certificate(const TransportCertificate& cert) {
  RiskReport r;
  r.method = "exact-empirical";
  r.metric = cert.metric;
  r.eps = cert.eps;
  r.depsilon = cert.cost;
  r.risk = risk_from_depsilon(cert.cost);
  if (cert.witness) {
    if (const auto* iv = std::get_if<IntervalSet>(&*cert.witness)) {
      r.classifier = iv->to_string();
    }
  }
  r.degenerate = false;
  return r;
}

// ---------------------------------------------------------------------------
// subcommand configs
// ---------------------------------------------------------------------------

struct ExactCmd {
  DataFlags data;
  SweepFlags sweep;
  std::string metric = "euclidean";
  std::string out;
  std::string certificate;
  bool no_prefilter = false;
  unsigned jobs = default_jobs();
};

struct AnalyticCmd {
  SweepFlags sweep;
  std::string out;
  double mu0 = 0.0, mu1 = 0.0, sigma = 1.0;       // gaussian-equal-var / iso
  std::vector<double> vmu0, vmu1;                 // gaussian-iso
  double sigma1 = 1.0, sigma2 = 0.5;              // same-mean / general
  double gmu1 = 0.0, gmu2 = 0.0;                  // general
  double ia = 0.0, ib = 1.0, ja = 0.0, jb = 1.0;  // uniform
  double c1 = 0.0, h1 = 1.0, c2 = 0.0, h2 = 1.0;  // triangular
};

struct MixtureCmd {
  DataFlags data;
  SweepFlags sweep;
  std::string metric = "euclidean";
  std::string out;
  std::string json_out;
  std::vector<double> sigmas;
  std::vector<double> sigma_star_mults;
  std::string matching = "tight";
  unsigned jobs = default_jobs();
};

struct WpCmd {
  DataFlags data;
  SweepFlags sweep;
  std::string metric = "euclidean";
  std::string out;
  double p = 1.0;
};

struct LossBoundsCmd {
  SweepFlags sweep;
  std::string out;
  double r0 = 0.0;
  std::optional<double> grad_dual_norm, lipschitz, hessian_min_eig;
};

struct RiskofCmd {
  SweepFlags sweep;
  std::string out;
  std::string class0, class1;
  std::string set;
};

UnivariateFamily parse_family(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw CLI::ValidationError("family", "expected kind:p1,p2 in '" + spec + "'");
  }
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  std::size_t comma = rest.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("family", "expected two parameters in '" + spec + "'");
  }
  double p1 = std::stod(rest.substr(0, comma));
  double p2 = std::stod(rest.substr(comma + 1));
  if (kind == "gaussian") return UnivariateFamily::gaussian(p1, p2);
  if (kind == "uniform") return UnivariateFamily::uniform(p1, p2);
  if (kind == "triangular") return UnivariateFamily::triangular(p1, p2);
  throw CLI::ValidationError("family", "unknown family kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

int run_exact(const ExactCmd& cfg) {
  auto [a, b] = cfg.data.load(/*force_equal=*/false);
  Metric metric = metric_from_name(cfg.metric);
  std::vector<double> eps = cfg.sweep.values();
  DepsilonOptions opts;
  opts.use_prefilter = !cfg.no_prefilter;

  std::vector<TransportCertificate> certs(eps.size());
  parallel_for(eps.size(), cfg.jobs, [&](std::size_t i) {
    certs[i] = depsilon_exact(a, b, metric, eps[i], opts);
  });

  TableWriter table(cfg.out);
  for (const auto& cert : certs) table.row(report_from_certificate(cert));

  if (!cfg.certificate.empty()) {
    if (certs.size() != 1) {
      throw std::runtime_error("--certificate requires a single --eps");
    }
    std::ofstream jf(cfg.certificate);
    if (!jf) throw std::runtime_error("cannot write " + cfg.certificate);
    jf << certificate_to_json(certs.front()) << '\n';
  }
  return 0;
}

RiskReport report_from_solution(const AnalyticSolution& sol, const std::string& family,
                                double eps) {
  RiskReport r;
  r.method = "analytic-" + family;
  r.metric = Metric::euclidean;
  r.eps = eps;
  r.depsilon = sol.depsilon;
  r.risk = sol.risk;
  r.classifier = sol.classifier_string();
  r.degenerate = sol.degenerate;
  r.diagnostics = sol.diagnostics;
  for (const auto& [k, v] : sol.boundaries) r.diagnostics["boundary_" + k] = v;
  return r;
}

int run_analytic(const AnalyticCmd& cfg, const std::string& family) {
  std::vector<double> eps = cfg.sweep.values();
  TableWriter table(cfg.out);
  for (double e : eps) {
    AnalyticSolution sol;
    if (family == "gaussian-equal-var") {
      sol = gaussian_equal_var(cfg.mu0, cfg.mu1, cfg.sigma, e);
    } else if (family == "gaussian-iso") {
      sol = gaussian_iso_ddim({cfg.vmu0, cfg.sigma}, {cfg.vmu1, cfg.sigma}, e);
    } else if (family == "gaussian-same-mean") {
      sol = gaussian_same_mean(cfg.sigma1, cfg.sigma2, e);
    } else if (family == "gaussian-general") {
      sol = gaussian_general(cfg.gmu1, cfg.sigma1, cfg.gmu2, cfg.sigma2, e);
    } else if (family == "uniform") {
      sol = uniform_pair({cfg.ia, cfg.ib}, {cfg.ja, cfg.jb}, e);
    } else {
      sol = triangular_pair({cfg.c1, cfg.h1}, {cfg.c2, cfg.h2}, e);
    }
    table.row(report_from_solution(sol, family, e));
  }
  return 0;
}

int run_mixture(const MixtureCmd& cfg) {
  auto [a, b] = cfg.data.load(/*force_equal=*/true);
  Metric metric = metric_from_name(cfg.metric);
  std::vector<double> eps = cfg.sweep.values();
  if (cfg.matching != "empirical" && cfg.matching != "tight") {
    throw CLI::ValidationError("--matching", "must be empirical or tight");
  }
  MatchingMode mode = cfg.matching == "empirical" ? MatchingMode::empirical
                                                  : MatchingMode::tight;

  std::vector<double> sigmas = cfg.sigmas;
  if (!cfg.sigma_star_mults.empty()) {
    double star = sigma_star(a, b, metric);
    std::cerr << "# sigma_star = " << format_double(star) << "\n";
    for (double m : cfg.sigma_star_mults) sigmas.push_back(m * star);
  }
  if (sigmas.empty()) {
    throw CLI::ValidationError("--sigma", "need --sigma or --sigma-star-mult");
  }

  std::vector<RiskReport> rows(eps.size() * sigmas.size());
  parallel_for(rows.size(), cfg.jobs, [&](std::size_t idx) {
    std::size_t ie = idx / sigmas.size(), is = idx % sigmas.size();
    double e = eps[ie], sigma = sigmas[is];
    if (sigma == 0.0) {
      // exact reduction: rows are byte-identical to the `exact` subcommand
      rows[idx] = report_from_certificate(depsilon_exact(a, b, metric, e));
      return;
    }
    auto rep = mixture_risk_lb({a, sigma}, {b, sigma}, metric, e, mode);
    RiskReport r;
    r.method = "mixture-bound";
    r.metric = metric;
    r.eps = e;
    r.sigma = sigma;
    r.depsilon = 1.0 - 2.0 * rep.risk_lb;  // mean per-pair coupling cost
    r.risk = rep.risk_lb;
    r.degenerate = false;
    r.diagnostics["n_pairs"] = static_cast<double>(rep.matching.size());
    r.diagnostics["mode"] = rep.mode == MatchingMode::tight ? 1.0 : 0.0;
    rows[idx] = std::move(r);
  });

  TableWriter table(cfg.out);
  for (const auto& r : rows) table.row(r);

  if (!cfg.json_out.empty()) {
    std::ofstream jf(cfg.json_out);
    if (!jf) throw std::runtime_error("cannot write " + cfg.json_out);
    jf << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      jf << report_to_json(rows[i]);
      jf << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    jf << "]\n";
  }
  return 0;
}

int run_wp(const WpCmd& cfg) {
  auto [a, b] = cfg.data.load(/*force_equal=*/false);
  Metric metric = metric_from_name(cfg.metric);
  double wp = wasserstein_p(a, b, metric, cfg.p);
  std::cerr << "# wp = " << format_double(wp) << "\n";
  TableWriter table(cfg.out);
  for (double e : cfg.sweep.values()) {
    RiskReport r;
    r.method = "wp-bound";
    r.metric = metric;
    r.eps = e;
    double ratio = e > 0.0 ? std::pow(wp / (2.0 * e), cfg.p) : 1.0;
    r.depsilon = std::min(1.0, ratio);
    r.risk = e > 0.0 ? wp_lower_bound(wp, e, cfg.p) : 0.0;
    r.diagnostics["wp"] = wp;
    table.row(r);
  }
  return 0;
}

int run_lossbounds(const LossBoundsCmd& cfg) {
  TableWriter table(cfg.out);
  for (double e : cfg.sweep.values()) {
    LossBoundInputs in;
    in.r0 = cfg.r0;
    in.grad_dual_norm_exp = cfg.grad_dual_norm;
    in.lipschitz = cfg.lipschitz;
    in.hessian_min_eig = cfg.hessian_min_eig;
    in.eps = e;
    auto emit = [&table, e](const char* which, double value, bool warn) {
      RiskReport r;
      r.method = "loss-bound";
      r.metric = Metric::euclidean;
      r.eps = e;
      r.depsilon = 0.0;
      r.risk = value;
      r.classifier = which;
      r.degenerate = warn;
      table.row(r);
    };
    if (cfg.grad_dual_norm) {
      emit("convex-lower", convex_lower_bound(in), false);
    }
    if (cfg.lipschitz) {
      emit("lipschitz-upper", lipschitz_upper_bound(in), false);
    }
    if (cfg.lipschitz && cfg.hessian_min_eig) {
      auto d = deviation_bound(in);
      emit("deviation", d.value, d.small_eps_warning);
    }
  }
  return 0;
}

int run_riskof(const RiskofCmd& cfg) {
  auto f0 = parse_family(cfg.class0);
  auto f1 = parse_family(cfg.class1);
  IntervalSet set = IntervalSet::parse(cfg.set);
  TableWriter table(cfg.out);
  for (double e : cfg.sweep.values()) {
    RiskReport r;
    r.method = "riskof";
    r.metric = Metric::euclidean;
    r.eps = e;
    r.risk = classifier_risk(f0, f1, set, e);
    r.depsilon = 1.0 - 2.0 * r.risk;  // gap this classifier certifies
    r.classifier = set.to_string();
    table.row(r);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Optimal adversarial risk for binary classification via the threshold "
      "transport cost D_eps: exact empirical solves, closed-form families, "
      "Gaussian-mixture lower bounds, and Wasserstein/loss-bound arithmetic."};
  app.require_subcommand(1);

  ExactCmd exact_cfg;
  auto* exact = app.add_subcommand(
      "exact", "exact adversarial risk between empirical classes");
  exact_cfg.data.add_to(exact);
  add_sweep_flags(exact, exact_cfg.sweep);
  exact->add_option("--metric", exact_cfg.metric, "euclidean | chebyshev");
  exact->add_option("--out", exact_cfg.out, "write the sweep table here");
  exact->add_option("--certificate", exact_cfg.certificate,
                    "write a JSON coupling/witness certificate (single eps)");
  exact->add_flag("--no-prefilter", exact_cfg.no_prefilter,
                  "disable the coordinate band prefilter");
  exact->add_option("--jobs", exact_cfg.jobs, "sweep worker threads");

  AnalyticCmd an_cfg;
  auto* analytic =
      app.add_subcommand("analytic", "closed-form families and their classifiers");
  analytic->require_subcommand(1);
  auto* gev = analytic->add_subcommand("gaussian-equal-var",
                                       "N(mu0, s^2) vs N(mu1, s^2)");
  gev->add_option("--mu0", an_cfg.mu0)->required();
  gev->add_option("--mu1", an_cfg.mu1)->required();
  gev->add_option("--sigma", an_cfg.sigma)->required();
  auto* giso = analytic->add_subcommand("gaussian-iso",
                                        "isotropic Gaussians in R^d (euclidean)");
  giso->add_option("--mu0", an_cfg.vmu0)->required()->delimiter(',');
  giso->add_option("--mu1", an_cfg.vmu1)->required()->delimiter(',');
  giso->add_option("--sigma", an_cfg.sigma)->required();
  auto* gsm = analytic->add_subcommand("gaussian-same-mean",
                                       "centered pair, sigma1 > sigma2");
  gsm->add_option("--sigma1", an_cfg.sigma1)->required();
  gsm->add_option("--sigma2", an_cfg.sigma2)->required();
  auto* gg = analytic->add_subcommand("gaussian-general",
                                      "arbitrary means and variances");
  gg->add_option("--mu1", an_cfg.gmu1)->required();
  gg->add_option("--sigma1", an_cfg.sigma1)->required();
  gg->add_option("--mu2", an_cfg.gmu2)->required();
  gg->add_option("--sigma2", an_cfg.sigma2)->required();
  auto* uni = analytic->add_subcommand("uniform", "uniform measures on I and J");
  uni->add_option("--i-lo", an_cfg.ia)->required();
  uni->add_option("--i-hi", an_cfg.ib)->required();
  uni->add_option("--j-lo", an_cfg.ja)->required();
  uni->add_option("--j-hi", an_cfg.jb)->required();
  auto* tri = analytic->add_subcommand("triangular",
                                       "triangular pair (center, halfwidth)");
  tri->add_option("--center1", an_cfg.c1)->required();
  tri->add_option("--halfwidth1", an_cfg.h1)->required();
  tri->add_option("--center2", an_cfg.c2)->required();
  tri->add_option("--halfwidth2", an_cfg.h2)->required();
  for (auto* sub : {gev, giso, gsm, gg, uni, tri}) {
    add_sweep_flags(sub, an_cfg.sweep);
    sub->add_option("--out", an_cfg.out, "write the sweep table here");
  }

  MixtureCmd mix_cfg;
  auto* mixture = app.add_subcommand(
      "mixture", "Gaussian-mixture adversarial risk lower bounds");
  mix_cfg.data.add_to(mixture);
  add_sweep_flags(mixture, mix_cfg.sweep);
  mixture->add_option("--metric", mix_cfg.metric, "euclidean | chebyshev");
  mixture->add_option("--sigma", mix_cfg.sigmas, "mixture sigmas (0 = empirical)")
      ->delimiter(',');
  mixture->add_option("--sigma-star-mult", mix_cfg.sigma_star_mults,
                      "multiples of the matched-pair sigma*")
      ->delimiter(',');
  mixture->add_option("--matching", mix_cfg.matching, "tight | empirical");
  mixture->add_option("--out", mix_cfg.out, "write the sweep table here");
  mixture->add_option("--json", mix_cfg.json_out,
                      "also write rows with diagnostics as JSON");
  mixture->add_option("--jobs", mix_cfg.jobs, "sweep worker threads");

  WpCmd wp_cfg;
  auto* wp = app.add_subcommand("wp", "p-Wasserstein distance and risk bound");
  wp_cfg.data.add_to(wp);
  add_sweep_flags(wp, wp_cfg.sweep);
  wp->add_option("--metric", wp_cfg.metric, "euclidean | chebyshev");
  wp->add_option("-p,--p", wp_cfg.p, "Wasserstein order (>= 1)");
  wp->add_option("--out", wp_cfg.out, "write the sweep table here");

  LossBoundsCmd lb_cfg;
  auto* lb = app.add_subcommand(
      "lossbounds", "continuous-loss bound arithmetic on scalar summaries");
  lb->add_option("--r0", lb_cfg.r0, "optimal standard risk")->required();
  lb->add_option("--grad-dual-norm", lb_cfg.grad_dual_norm,
                 "inf_w E||grad_x loss||_* (enables the lower bound)");
  lb->add_option("--lipschitz", lb_cfg.lipschitz,
                 "L_x at the standard optimum (enables the upper bound)");
  lb->add_option("--hessian-min-eig", lb_cfg.hessian_min_eig,
                 "lambda_min of the risk Hessian (enables the deviation bound)");
  add_sweep_flags(lb, lb_cfg.sweep);
  lb->add_option("--out", lb_cfg.out, "write the table here");

  RiskofCmd ro_cfg;
  auto* ro = app.add_subcommand(
      "riskof", "adversarial risk of a user-supplied interval classifier");
  ro->add_option("--class0", ro_cfg.class0, "family literal, e.g. gaussian:0,1")
      ->required();
  ro->add_option("--class1", ro_cfg.class1, "family literal for the decide-1 class")
      ->required();
  ro->add_option("--set", ro_cfg.set,
                 "decide-1 region, e.g. '-inf..-1.2,0.7..inf' or 'empty'")
      ->required();
  add_sweep_flags(ro, ro_cfg.sweep);
  ro->add_option("--out", ro_cfg.out, "write the table here");

  auto* verify =
      app.add_subcommand("verify", "run the oracle cross-check suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (exact->parsed()) return run_exact(exact_cfg);
    if (analytic->parsed()) {
      for (auto* sub : analytic->get_subcommands()) {
        return run_analytic(an_cfg, sub->get_name());
      }
    }
    if (mixture->parsed()) return run_mixture(mix_cfg);
    if (wp->parsed()) return run_wp(wp_cfg);
    if (lb->parsed()) return run_lossbounds(lb_cfg);
    if (ro->parsed()) return run_riskof(ro_cfg);
    if (verify->parsed()) {
      return run_verification(std::cout) ? 0 : 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
