// Command-line front end: exposure reports, netting comparisons, CCP
// advantage, Monte-Carlo checks and single Hilbert evaluations.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "netrisk/advantage.hpp"
#include "netrisk/errors.hpp"
#include "netrisk/exposure.hpp"
#include "netrisk/hilbert.hpp"
#include "netrisk/io.hpp"
#include "netrisk/mc_oracle.hpp"

using namespace netrisk;

namespace {

struct Globals {
  double tol = 1e-7;
  std::string method = "auto";
};

// "laplace", "laplace:2", "gamma:3,0.5"
DistributionSpec parse_dist_arg(const std::string& arg) {
  const auto colon = arg.find(':');
  const std::string type = arg.substr(0, colon);
  std::vector<double> p;
  if (colon != std::string::npos) {
    std::stringstream ss(arg.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        p.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ValidationError("bad distribution parameter '" + item + "'");
      }
    }
  }
  const auto at = [&p](std::size_t i) { return i < p.size() ? p[i] : 1.0; };
  DistributionSpec spec;
  if (type == "normal") {
    spec = NormalSym{at(0)};
  } else if (type == "laplace") {
    spec = LaplaceSym{at(0)};
  } else if (type == "uniform") {
    spec = UniformSym{at(0)};
  } else if (type == "gamma") {
    spec = GammaDist{at(0), at(1)};
  } else if (type == "exponential") {
    spec = ExponentialDist{at(0)};
  } else {
    throw ValidationError("unknown distribution '" + type + "'");
  }
  validate(spec);
  return spec;
}

DistributionSpec market_dist(const MarketDocument& doc, const std::string& override_arg) {
  if (!override_arg.empty()) return parse_dist_arg(override_arg);
  if (!doc.dist) throw ValidationError("market file has no 'dist' entry; pass --dist");
  return *doc.dist;
}

ExposureOptions options(const Globals& g) {
  ExposureOptions o;
  o.tol = g.tol;
  o.method = parse_hilbert_method(g.method);
  return o;
}

double z_score(double analytic, const McEstimate& e) {
  const double diff = analytic - e.mean;
  if (e.std_error == 0.0) return diff == 0.0 ? 0.0 : std::copysign(INFINITY, diff);
  return diff / e.std_error;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected counterparty exposure of financial networks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tol", g.tol, "Absolute tolerance for numeric routes")->capture_default_str();
  app.add_option("--method", g.method, "Hilbert route: auto|residue|dawson|onesided|pv")->capture_default_str();

  std::string market_path;
  std::string convention_arg;
  std::string dist_arg;
  std::string format = "both";
  int cls = 1;

  auto* analyze = app.add_subcommand("analyze", "Expected exposure report for one netting convention");
  analyze->add_option("--market", market_path, "Market JSON file")->required();
  analyze->add_option("--convention", convention_arg, "bilateral | multilateral:k (default: from file)");
  analyze->add_option("--dist", dist_arg, "Override distribution, e.g. laplace:1");
  analyze->add_option("--format", format, "table | json | both")->capture_default_str();

  auto* compare = app.add_subcommand("compare-netting", "Bilateral against multilateral netting of one class");
  compare->add_option("--market", market_path, "Market JSON file")->required();
  compare->add_option("--class", cls, "Centrally cleared class")->capture_default_str();
  compare->add_option("--dist", dist_arg, "Override distribution");

  auto* advantage = app.add_subcommand("advantage", "Does a CCP in one class lower expected exposure?");
  advantage->add_option("--market", market_path, "Market JSON file")->required();
  advantage->add_option("--class", cls, "Centrally cleared class")->capture_default_str();
  advantage->add_option("--dist", dist_arg, "Override distribution");

  int kmax = 10;
  std::string table_dist = "laplace";
  auto* table = app.add_subcommand("advantage-table", "Minimal participants on a complete graph per class count");
  table->add_option("--dist", table_dist, "Distribution, e.g. laplace or normal:2")->capture_default_str();
  table->add_option("--kmax", kmax, "Largest number of classes (<= 30)")->capture_default_str();

  McOptions mc;
  auto* mc_check = app.add_subcommand("mc-check", "Analytic values against a Monte-Carlo estimate");
  mc_check->add_option("--market", market_path, "Market JSON file")->required();
  mc_check->add_option("--convention", convention_arg, "bilateral | multilateral:k (default: from file)");
  mc_check->add_option("--dist", dist_arg, "Override distribution");
  mc_check->add_option("--samples", mc.samples, "Number of samples")->capture_default_str();
  mc_check->add_option("--seed", mc.seed, "Seed")->capture_default_str();
  mc_check->add_option("--threads", mc.threads, "Worker threads (0: all cores)")->capture_default_str();

  std::string hdist = "laplace";
  std::string side = "none";
  int power = 1;
  double omega = 0.0;
  auto* heval = app.add_subcommand("hilbert-eval", "Hilbert transform of a power of a catalog c.f.");
  heval->add_option("--dist", hdist, "Distribution, e.g. laplace:1")->capture_default_str();
  heval->add_option("--side", side, "none | pos | neg: use the law of X, |X| or -|X|")->capture_default_str();
  heval->add_option("--power", power, "Power of the c.f.")->capture_default_str();
  heval->add_option("--omega", omega, "Evaluation point")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const ExposureOptions opts = options(g);
    std::cout << std::setprecision(12);

    if (analyze->parsed()) {
      const MarketDocument doc = parse_market_file(market_path);
      const DistributionSpec dist = market_dist(doc, dist_arg);
      const NettingConvention conv =
          convention_arg.empty() ? doc.convention : parse_convention(convention_arg, doc.market);
      if (format != "table" && format != "json" && format != "both")
        throw ValidationError("unknown format '" + format + "'");
      const ExposureReport report = expected_market(doc.market, dist, conv, opts);
      if (format == "table" || format == "both") write_report(std::cout, report, doc.market, ReportFormat::Table);
      if (format == "both") std::cout << "\n";
      if (format == "json" || format == "both") write_report(std::cout, report, doc.market, ReportFormat::Json);
    } else if (compare->parsed() || advantage->parsed()) {
      const MarketDocument doc = parse_market_file(market_path);
      const DistributionSpec dist = market_dist(doc, dist_arg);
      const AdvantageReport r = ccp_advantage(doc.market, dist, cls, opts);
      if (compare->parsed()) {
        std::cout << "bilateral:            " << r.without << "\n"
                  << "multilateral class " << cls << ": " << r.with_ccp << "\n"
                  << "  class " << cls << " (CCP):        " << r.multilateral.multilateral_component << "\n"
                  << "  other classes:        " << r.multilateral.bilateral_component << "\n";
      } else {
        std::cout << to_json(r).dump(2) << "\n";
      }
    } else if (table->parsed()) {
      const DistributionSpec dist = parse_dist_arg(table_dist);
      const auto rows = min_participants_table(dist, kmax, opts);
      std::cout << "K  ";
      for (const auto& row : rows) std::cout << std::setw(4) << row.classes;
      std::cout << "\nN>=";
      for (const auto& row : rows) std::cout << std::setw(4) << row.min_participants;
      std::cout << "\n";
      for (const auto& row : rows)
        if (row.tie) std::cout << "K=" << row.classes << ": equality at N=" << row.min_participants << "\n";
    } else if (mc_check->parsed()) {
      const MarketDocument doc = parse_market_file(market_path);
      const DistributionSpec dist = market_dist(doc, dist_arg);
      const NettingConvention conv =
          convention_arg.empty() ? doc.convention : parse_convention(convention_arg, doc.market);
      const ExposureReport report = expected_market(doc.market, dist, conv, opts);
      const auto estimates = mc_expected_exposure(doc.market, conv, dist, mc);
      std::cout << std::left << std::setw(10) << "owner" << std::setw(22) << "set" << std::right << std::setw(16)
                << "analytic" << std::setw(18) << "mc" << std::setw(20) << "se" << std::setw(10) << "z" << "\n";
      for (std::size_t i = 0; i < estimates.size(); ++i) {
        const auto& e = estimates[i];
        const double a = report.per_netting_set.at(i).value.expected;
        std::cout << std::left << std::setw(10) << doc.market.name(e.owner) << std::setw(22) << e.descriptor
                  << std::right << std::setw(16) << a << std::setw(18) << e.estimate.mean << std::setw(20)
                  << e.estimate.std_error << std::setw(10) << std::setprecision(3) << z_score(a, e.estimate)
                  << std::setprecision(12) << "\n";
      }
      std::optional<int> ccp;
      if (const auto* ml = std::get_if<Multilateral>(&conv)) ccp = ml->cls;
      if (!std::holds_alternative<Custom>(conv)) {
        const McTotals t = mc_market_totals(doc.market, dist, ccp, mc);
        const McEstimate& total = ccp ? *t.multilateral : t.bilateral;
        std::cout << "\nmarket total: analytic " << report.market_total << ", mc " << total.mean << " +- "
                  << total.std_error << ", z " << std::setprecision(3) << z_score(report.market_total, total)
                  << "\n";
      }
    } else if (heval->parsed()) {
      const DistributionSpec dist = parse_dist_arg(hdist);
      CharFn base = charfn_of(dist);
      if (side == "pos") {
        base = is_two_sided(dist) ? pos_abs_cf(base) : base;
      } else if (side == "neg") {
        base = is_two_sided(dist) ? neg_abs_cf(base) : cf_negate(base);
      } else if (side != "none") {
        throw ValidationError("unknown side '" + side + "'");
      }
      if (power < 1) throw ValidationError("power must be at least 1");
      const CharFn f = cf_power(base, power);
      const HilbertValue h = hilbert(f, omega, opts.method, g.tol);
      std::cout << "H = " << h.value.real() << (h.value.imag() < 0 ? " - " : " + ") << std::fabs(h.value.imag())
                << "i\nmethod: " << to_string(h.method) << "\nerror estimate: " << h.error << "\n";
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what();
    if (e.achieved_error() >= 0) std::cerr << " (achieved error " << e.achieved_error() << ")";
    std::cerr << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
