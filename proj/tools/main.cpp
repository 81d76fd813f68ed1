#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "crn/json_io.hpp"

namespace {

using crn::json;

struct ConfigFlags {
  std::string configFile;
  std::optional<double> tol, tolLin, tolLoglin, posEps, logBoxLo, logBoxHi;
  std::optional<int> starts, iters, samples;
  std::optional<std::uint64_t> subsetCap, seed;
  std::optional<std::string> format;

  void attach(CLI::App* app) {
    app->add_option("--config", configFile, "Config JSON file (flags win)");
    app->add_option("--tol", tol, "Equivalence/balance residual bound");
    app->add_option("--tol-lin", tolLin, "Subspace residual bound");
    app->add_option("--tol-loglin", tolLoglin, "Log-linear residual bound");
    app->add_option("--pos-eps", posEps, "Positivity floor");
    app->add_option("--starts", starts, "Multistart count");
    app->add_option("--iters", iters, "Local iterations per start");
    app->add_option("--log-box-lo", logBoxLo, "Search box lower log-coordinate");
    app->add_option("--log-box-hi", logBoxHi, "Search box upper log-coordinate");
    app->add_option("--subset-cap", subsetCap, "Subgraph enumeration cap");
    app->add_option("--seed", seed, "RNG seed");
    app->add_option("--samples", samples, "Samples per path segment");
    app->add_option("--format", format, "Output format: json | table");
  }

  crn::RunConfig resolve() const {
    crn::RunConfig c;
    if (!configFile.empty()) c = crn::RunConfig::fromFile(configFile);
    if (tol) c.tols.tol = *tol;
    if (tolLin) c.tols.tolLin = *tolLin;
    if (tolLoglin) c.tols.tolLoglin = *tolLoglin;
    if (posEps) c.tols.posEps = *posEps;
    if (starts) c.budget.starts = *starts;
    if (iters) c.budget.iters = *iters;
    if (logBoxLo) c.budget.logBoxLo = *logBoxLo;
    if (logBoxHi) c.budget.logBoxHi = *logBoxHi;
    if (subsetCap) c.budget.subsetCap = *subsetCap;
    if (seed) c.budget.seed = *seed;
    if (samples) c.samples = *samples;
    if (format) c.format = *format;
    return c;
  }
};

void emit(const json& j, const crn::RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  // Flat key/value table for scalar fields; nested values stay as JSON.
  for (const auto& [key, val] : j.items()) {
    std::cout << key << "\t";
    if (val.is_string())
      std::cout << val.get<std::string>();
    else
      std::cout << val.dump();
    std::cout << "\n";
  }
}

void emitPath(const crn::PathResult& path, const crn::RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << crn::toJson(path).dump(2) << "\n";
    return;
  }
  std::cout << "segment\tkind\tlength\tmin_cert_margin\n";
  std::size_t ci = 0;
  for (std::size_t s = 0; s < path.segments.size(); ++s) {
    const crn::PathSegment& seg = path.segments[s];
    double len = 0.0;
    for (std::size_t i = 1; i < seg.samples.size(); ++i)
      len += (seg.samples[i].second.values() - seg.samples[i - 1].second.values())
                 .norm();
    double worst = 0.0;
    for (std::size_t i = 0; i < seg.samples.size(); ++i, ++ci)
      worst = std::max(worst,
                       std::max(path.certificates[ci].equivalenceResidual,
                                path.certificates[ci].balanceResidual));
    std::cout << s << "\t"
              << (seg.kind == crn::PathSegment::Kind::Fiber ? "fiber" : "line")
              << "\t" << len << "\t" << worst << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mass-action network analysis: complex balance, equivalence, "
               "realizability, disguised-locus membership and path building"};
  app.require_subcommand(1);

  ConfigFlags cf;

  std::string netFile, ratesFile, netFileB, ratesFileB, stateFile, targetFile;
  bool signedRates = false;
  bool useComplete = false;
  std::size_t maxEnum = 0;

  auto* cbCmd = app.add_subcommand("check-cb", "Complex-balance membership");
  cbCmd->add_option("network", netFile)->required();
  cbCmd->add_option("rates", ratesFile)->required();
  cbCmd->add_option("--state", stateFile, "Check balance at this state instead");
  cf.attach(cbCmd);

  auto* eqCmd = app.add_subcommand("equiv", "Dynamical equivalence of two systems");
  eqCmd->add_option("network_a", netFile)->required();
  eqCmd->add_option("rates_a", ratesFile)->required();
  eqCmd->add_option("network_b", netFileB)->required();
  eqCmd->add_option("rates_b", ratesFileB)->required();
  cf.attach(eqCmd);

  auto* reCmd = app.add_subcommand("realize", "Realize a system on another graph");
  reCmd->add_option("network_h", netFile)->required();
  reCmd->add_option("rates_h", ratesFile)->required();
  reCmd->add_option("network_g", netFileB)->required();
  reCmd->add_flag("--signed", signedRates, "Allow signed rates on the target");
  cf.attach(reCmd);

  auto* flCmd = app.add_subcommand("flux", "Complex-balanced flux membership");
  flCmd->add_option("network_h", netFile)->required();
  flCmd->add_option("flux_h", ratesFile)->required();
  flCmd->add_option("network_g", netFileB)->required();
  flCmd->add_flag("--signed", signedRates, "Allow signed flux on the target");
  cf.attach(flCmd);

  auto* dgCmd = app.add_subcommand("disguised", "Disguised toric locus membership");
  dgCmd->add_option("network", netFile)->required();
  dgCmd->add_option("rates", ratesFile)->required();
  dgCmd->add_option("--target", targetFile, "Fixed target graph (else search all)");
  dgCmd->add_flag("--signed", signedRates, "R-disguised variant (signed rates)");
  cf.attach(dgCmd);

  auto* paCmd = app.add_subcommand("path", "Connect two members by a certified path");
  paCmd->add_option("network", netFile)->required();
  paCmd->add_option("rates_a", ratesFile)->required();
  paCmd->add_option("rates_b", ratesFileB)->required();
  paCmd->add_option("--state", stateFile, "Anchor state x0 (default all-ones)");
  paCmd->add_flag("--signed", signedRates, "R-disguised variant (signed rates)");
  cf.attach(paCmd);

  auto* enCmd = app.add_subcommand("enum-wr", "Enumerate weakly reversible subgraphs");
  enCmd->add_option("network", netFile)->required();
  enCmd->add_flag("--complete", useComplete, "Enumerate over the complete graph");
  enCmd->add_option("--max", maxEnum, "Stop after this many subgraphs (0 = all)");
  cf.attach(enCmd);

  CLI11_PARSE(app, argc, argv);

  try {
    crn::RunConfig cfg = cf.resolve();

    if (cbCmd->parsed()) {
      crn::EGraph g = crn::loadNetworkFile(netFile);
      crn::RateVector k(g, crn::loadEdgeArrayFile(ratesFile, g));
      if (!stateFile.empty()) {
        std::ifstream in(stateFile);
        crn::State x = crn::parseState(json::parse(in), g.dimension());
        double r = crn::complexBalanceResidual(g, k, x);
        bool ok = r <= cfg.tols.tol;
        emit(json{{"member", ok}, {"residual", r},
                  {"state", crn::toJson(x.values())}}, cfg);
        return ok ? 0 : 1;
      }
      crn::ToricCertificate cert = crn::toricMembership(g, k, cfg.tols);
      emit(crn::toJson(cert), cfg);
      return cert.member ? 0 : 1;
    }

    if (eqCmd->parsed()) {
      crn::EGraph a = crn::loadNetworkFile(netFile);
      crn::EGraph b = crn::loadNetworkFile(netFileB);
      crn::RateVector ka(a, crn::loadEdgeArrayFile(ratesFile, a));
      crn::RateVector kb(b, crn::loadEdgeArrayFile(ratesFileB, b));
      double r = crn::equivalenceResidual(a, ka, b, kb);
      bool ok = r <= cfg.tols.tol;
      emit(json{{"equivalent", ok}, {"residual", r}}, cfg);
      return ok ? 0 : 1;
    }

    if (reCmd->parsed()) {
      crn::EGraph h = crn::loadNetworkFile(netFile);
      crn::EGraph g = crn::loadNetworkFile(netFileB);
      crn::RateVector kh(h, crn::loadEdgeArrayFile(ratesFile, h));
      auto k = crn::realizeOn(h, kh, g, !signedRates, cfg.tols);
      json out{{"realizable", k.has_value()}};
      if (k) out["rates"] = crn::toJson(k->values());
      emit(out, cfg);
      return k ? 0 : 1;
    }

    if (flCmd->parsed()) {
      crn::EGraph h = crn::loadNetworkFile(netFile);
      crn::EGraph g = crn::loadNetworkFile(netFileB);
      crn::FluxVector jh(h, crn::loadEdgeArrayFile(ratesFile, h));
      auto jg = crn::fluxMembership(h, jh, g, !signedRates, cfg.tols);
      json out{{"member", jg.has_value()},
               {"balance_residual", crn::fluxBalanceResidual(h, jh)}};
      if (jg) out["flux"] = crn::toJson(jg->values());
      emit(out, cfg);
      return jg ? 0 : 1;
    }

    if (dgCmd->parsed()) {
      crn::EGraph g = crn::loadNetworkFile(netFile);
      crn::RateVector k(g, crn::loadEdgeArrayFile(ratesFile, g));
      crn::DisguisedCertificate cert;
      if (!targetFile.empty()) {
        crn::EGraph target = crn::loadNetworkFile(targetFile);
        cert = crn::disguisedMembership(g, k, target, signedRates, cfg.budget, cfg.tols);
      } else {
        cert = crn::disguisedLocusMembership(g, k, signedRates, cfg.budget, cfg.tols);
      }
      emit(crn::toJson(cert), cfg);
      return cert.member ? 0 : 1;
    }

    if (paCmd->parsed()) {
      crn::EGraph g = crn::loadNetworkFile(netFile);
      crn::RateVector ka(g, crn::loadEdgeArrayFile(ratesFile, g));
      crn::RateVector kb(g, crn::loadEdgeArrayFile(ratesFileB, g));
      crn::State x0 = stateFile.empty()
                          ? crn::State(Eigen::VectorXd::Ones(g.dimension()))
                          : [&] {
                              std::ifstream in(stateFile);
                              return crn::parseState(json::parse(in), g.dimension());
                            }();
      try {
        crn::PathResult path = crn::connectMembers(g, ka, kb, signedRates, x0,
                                                   cfg.budget, cfg.samples, cfg.tols);
        emitPath(path, cfg);
        return 0;
      } catch (const crn::Error& e) {
        if (e.code() == crn::ErrorCode::MembershipFailure) {
          emit(json{{"member", false}, {"error", e.what()}}, cfg);
          return 1;
        }
        throw;
      }
    }

    if (enCmd->parsed()) {
      crn::EGraph g = crn::loadNetworkFile(netFile);
      crn::EGraph base = useComplete ? g.completeGraph() : g;
      json out = json::array();
      crn::forEachWeaklyReversibleSubgraph(
          base, maxEnum == 0 ? static_cast<std::size_t>(-1) : maxEnum,
          cfg.budget.subsetCap,
          [&](const crn::EGraph& sub, const std::vector<int>& edgeIds) {
            json edges = json::array();
            for (int e : edgeIds)
              edges.push_back(json::array(
                  {base.edges()[e].src, base.edges()[e].tgt}));
            out.push_back(json{{"edges", std::move(edges)},
                               {"vertex_count", sub.vertexCount()}});
            return true;
          });
      emit(json{{"count", out.size()}, {"subgraphs", std::move(out)}}, cfg);
      return 0;
    }
  } catch (const crn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
