// cartanqm: batch CLI for two-qubit Cartan-kernel metrology.
//
// Subcommands: qfim, optimal, frontier, sample, noise-scan, canonicalize.
// Single-shot queries print JSON; datasets go to CSV; figures to SVG.
// All outputs are deterministic for identical flags (seeds included) and
// carry a metadata header. Angle-valued flags accept radians or "Npi"
// literals, e.g. --lambda 0.25pi,0,0.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartanqm/cartan.hpp"
#include "cartanqm/metrology.hpp"
#include "cartanqm/noise.hpp"
#include "cartanqm/optimal.hpp"
#include "cartanqm/sampling.hpp"
#include "cartanqm/scan_io.hpp"
#include "cartanqm/svg.hpp"
#include "cartanqm/version.hpp"

namespace {

using nlohmann::json;
using namespace cartanqm;

constexpr double kPi = 3.14159265358979323846;

double parse_angle(const std::string& raw) {
  std::string s = raw;
  double factor = 1.0;
  if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
    factor = kPi;
    s = s.substr(0, s.size() - 2);
    if (s.empty() || s == "+") s = "1";
    if (s == "-") s = "-1";
  }
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v * factor;
  } catch (const std::exception&) {
    throw std::domain_error("malformed angle literal: '" + raw + "'");
  }
}

std::vector<double> parse_list(const std::string& raw, bool angles) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (angles) {
      out.push_back(parse_angle(tok));
    } else {
      try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        throw std::domain_error("malformed number: '" + tok + "'");
      }
    }
  }
  return out;
}

CartanParams parse_lambda(const std::string& raw) {
  std::vector<double> v = parse_list(raw, /*angles=*/true);
  if (v.size() != 3) throw std::domain_error("--lambda expects three comma-separated angles");
  return CartanParams{v[0], v[1], v[2]};
}

json number_or_inf(double x) {
  if (std::isinf(x)) return json(x > 0 ? "inf" : "-inf");
  return json(x);
}

json state_to_json(const TwoQubitPureState& psi) {
  json amps = json::array();
  for (const cxd& a : psi.amp) amps.push_back({a.real(), a.imag()});
  return json{{"amplitudes", amps},
              {"basis", psi.basis == Basis::Canonical ? "canonical" : "bell"}};
}

TwoQubitPureState state_from_json(const json& j) {
  if (!j.contains("amplitudes") || !j.contains("basis"))
    throw std::domain_error("state literal needs 'amplitudes' and 'basis' fields");
  const json& amps = j.at("amplitudes");
  if (!amps.is_array() || amps.size() != 4)
    throw std::domain_error("state literal needs exactly 4 [re, im] amplitude pairs");
  std::array<cxd, 4> a{};
  for (std::size_t i = 0; i < 4; ++i) {
    const json& pair = amps.at(i);
    if (!pair.is_array() || pair.size() != 2)
      throw std::domain_error("each amplitude must be an [re, im] pair");
    a[i] = cxd{pair.at(0).get<double>(), pair.at(1).get<double>()};
  }
  std::string basis = j.at("basis").get<std::string>();
  if (basis != "canonical" && basis != "bell")
    throw std::domain_error("basis must be 'canonical' or 'bell'");
  return TwoQubitPureState::make(a, basis == "canonical" ? Basis::Canonical : Basis::Bell);
}

json qfim_to_json(const Qfim& q) {
  json mat = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(q.q(r, c));
    mat.push_back(row);
  }
  return json{{"schema_version", schema_version}, {"version", version_string},
              {"p", number_or_inf(q.p)},          {"inv_s", q.det},
              {"s", number_or_inf(q.s)},          {"det", q.det},
              {"singular", q.singular},           {"q", mat}};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

MetaList base_meta(const std::string& command) {
  return MetaList{{"schema_version", std::to_string(schema_version)},
                  {"version", version_string},
                  {"command", command}};
}

// --- subcommand payloads -------------------------------------------------

struct QfimArgs {
  std::string state_canonical, state_bell, state_json, lambda = "0,0,0", out = "-";
};

int run_qfim(const QfimArgs& a) {
  int given = (!a.state_canonical.empty()) + (!a.state_bell.empty()) + (!a.state_json.empty());
  if (given != 1)
    throw std::domain_error("qfim needs exactly one of --state-canonical, --state-bell, --state-json");

  Qfim q;
  json extra;
  if (!a.state_canonical.empty()) {
    std::vector<double> v = parse_list(a.state_canonical, /*angles=*/true);
    if (v.size() != 7)
      throw std::domain_error("--state-canonical expects alpha,beta,gamma,delta,phi_b,phi_g,phi_d");
    CanonicalParams p{v[0], v[1], v[2], v[3], v[4], v[5], v[6]};
    from_canonical_params(p);  // validates normalization
    q = qfim_closed_canonical(p);
    extra["route"] = "closed_canonical";
  } else if (!a.state_bell.empty()) {
    std::vector<double> v = parse_list(a.state_bell, /*angles=*/false);
    double b, c, d;
    if (v.size() == 3) {
      b = v[0]; c = v[1]; d = v[2];
    } else if (v.size() == 4 || v.size() == 7) {
      // a,b,c,d[,phases]: the leading amplitude is redundant, checked for
      // consistency.
      double norm = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
      if (std::abs(norm - 1.0) > tol::param_norm)
        throw std::domain_error("--state-bell amplitudes are not normalized");
      b = v[1]; c = v[2]; d = v[3];
    } else if (v.size() == 6) {
      b = v[0]; c = v[1]; d = v[2];  // trailing phases do not affect the QFIM
    } else {
      throw std::domain_error("--state-bell expects b,c,d or a,b,c,d with optional phases");
    }
    q = qfim_closed_bell(b, c, d);
    extra["route"] = "closed_bell";
  } else {
    TwoQubitPureState psi = state_from_json(json::parse(a.state_json));
    CartanParams lam = parse_lambda(a.lambda);
    q = qfim_pure(psi, lam);
    extra["route"] = "pure";
    extra["lambda"] = {lam.l1, lam.l2, lam.l3};
  }

  json out = qfim_to_json(q);
  out.update(extra);
  write_output(a.out, out.dump(2) + "\n");
  return 0;
}

struct OptimalArgs {
  std::string spec, out = "-";
};

OptimalFamilySpec spec_from_json(const json& j) {
  OptimalFamilySpec spec;
  std::string family = j.at("family").get<std::string>();
  if (family == "factorized_sep") spec.family = OptimalFamily::FactorizedSep;
  else if (family == "entangled") spec.family = OptimalFamily::Entangled;
  else if (family == "bell_uniform") spec.family = OptimalFamily::BellUniform;
  else if (family == "suboptimal_at_p") spec.family = OptimalFamily::SubOptimalAtP;
  else throw std::domain_error("unknown family: '" + family + "'");

  if (j.contains("index")) spec.index = j.at("index").get<int>();
  if (j.contains("phi")) spec.phi = j.at("phi").get<double>();
  if (j.contains("alpha")) spec.alpha = j.at("alpha").get<double>();
  if (j.contains("beta")) spec.beta = j.at("beta").get<double>();
  if (j.contains("sign_gamma")) spec.sign_gamma = j.at("sign_gamma").get<int>();
  if (j.contains("sign_delta")) spec.sign_delta = j.at("sign_delta").get<int>();
  if (j.contains("p")) spec.p = j.at("p").get<double>();
  if (j.contains("position")) spec.position = j.at("position").get<int>();
  if (j.contains("phases")) {
    const json& ph = j.at("phases");
    if (!ph.is_array() || ph.size() != 3) throw std::domain_error("phases must be 3 numbers");
    for (std::size_t i = 0; i < 3; ++i) spec.phases[i] = ph.at(i).get<double>();
  }
  return spec;
}

int run_optimal(const OptimalArgs& a) {
  if (a.spec.empty()) throw std::domain_error("optimal requires --spec '<json>'");
  TwoQubitPureState psi = make_optimal(spec_from_json(json::parse(a.spec)));
  Qfim q = qfim_pure(psi, CartanParams{});
  json out{{"schema_version", schema_version},
           {"version", version_string},
           {"state", state_to_json(psi)},
           {"p", number_or_inf(q.p)},
           {"inv_s", q.det},
           {"concurrence", concurrence_pure(psi)}};
  write_output(a.out, out.dump(2) + "\n");
  return 0;
}

struct FrontierArgs {
  double p = 0.75;
  std::string out = "-";
};

int run_frontier(const FrontierArgs& a) {
  double inv_s = frontier(a.p);  // throws before any JSON is built
  json out{{"schema_version", schema_version},
           {"version", version_string},
           {"p", a.p},
           {"inv_s", inv_s}};
  write_output(a.out, out.dump(2) + "\n");
  return 0;
}

struct SampleArgs {
  std::uint64_t n = 10000;
  std::string kind = "haar";
  std::uint64_t seed = 0;
  std::string format = "csv", out = "-";
};

int run_sample(const SampleArgs& a) {
  if (a.n < 1) throw std::domain_error("--n must be at least 1");
  RngSpec rng{a.seed};
  ScanKind kind = scan_kind_from_name(a.kind);
  std::vector<ScanRecord> records = scan(a.n, kind, rng);

  MetaList meta = base_meta("sample");
  meta.emplace_back("kind", a.kind);
  meta.emplace_back("n", std::to_string(a.n));
  meta.emplace_back("seed", std::to_string(a.seed));
  meta.emplace_back("rng", rng.algorithm);

  if (a.format == "csv") {
    write_output(a.out, scan_to_csv(records, meta));
  } else if (a.format == "svg") {
    write_output(a.out, density_heatmap_svg(records));
  } else {
    throw std::domain_error("sample supports --format csv or svg");
  }
  return 0;
}

struct NoiseScanArgs {
  std::string probe = "psi1", family = "bitflip", scope = "single";
  int gamma_grid = 101, phi_grid = 64;
  std::string lambda = "0,0,0";
  std::string format = "csv", out = "-";
};

int run_noise_scan(const NoiseScanArgs& a) {
  NoiseScanGrid grid;
  grid.n_gamma = a.gamma_grid;
  grid.n_phi = a.phi_grid;
  if (a.probe == "psi1") grid.probe = ProbeClass::Psi1;
  else if (a.probe == "psi2") grid.probe = ProbeClass::Psi2;
  else if (a.probe == "psi3") grid.probe = ProbeClass::Psi3;
  else throw std::domain_error("--class must be psi1, psi2 or psi3");

  NoiseFamily family;
  if (a.family == "bitflip") family = NoiseFamily::BitFlip;
  else if (a.family == "depolarizing") family = NoiseFamily::Depolarizing;
  else throw std::domain_error("--family must be bitflip or depolarizing");

  NoiseScope scope;
  if (a.scope == "single") scope = NoiseScope::Single;
  else if (a.scope == "both") scope = NoiseScope::Both;
  else throw std::domain_error("--scope must be single or both");

  CartanParams lambda = parse_lambda(a.lambda);
  NoiseScanResult res = noise_scan(grid, family, scope, lambda);

  MetaList meta = base_meta("noise-scan");
  meta.emplace_back("class", a.probe);
  meta.emplace_back("family", a.family);
  meta.emplace_back("scope", a.scope);
  meta.emplace_back("gamma_grid", std::to_string(grid.n_gamma));
  meta.emplace_back("gamma_range", "0,1");
  meta.emplace_back("phi_grid", std::to_string(grid.n_phi));
  meta.emplace_back("phi_range", "0,2pi");
  meta.emplace_back("lambda", format_double(lambda.l1) + "," + format_double(lambda.l2) + "," +
                                  format_double(lambda.l3));

  if (a.format == "csv") {
    write_output(a.out, noise_scan_to_csv(res, meta));
  } else if (a.format == "svg") {
    write_output(a.out, noise_heatmap_svg(res));
  } else {
    throw std::domain_error("noise-scan supports --format csv or svg");
  }
  return 0;
}

struct CanonicalizeArgs {
  std::string lambda, out = "-";
};

int run_canonicalize(const CanonicalizeArgs& a) {
  if (a.lambda.empty()) throw std::domain_error("canonicalize requires --lambda");
  CartanParams p = parse_lambda(a.lambda);
  CanonicalizeResult res = canonicalize(p);

  json ops = json::array();
  for (const CartanMove& m : res.ops) {
    switch (m.kind) {
      case CartanMove::Kind::Shift:
        ops.push_back({{"kind", "shift"}, {"i", m.i}, {"n", m.n}});
        break;
      case CartanMove::Kind::Reverse:
        ops.push_back({{"kind", "reverse"}, {"i", m.i}, {"j", m.j}});
        break;
      case CartanMove::Kind::Swap:
        ops.push_back({{"kind", "swap"}, {"i", m.i}, {"j", m.j}});
        break;
    }
  }
  json out{{"schema_version", schema_version},
           {"version", version_string},
           {"input", {p.l1, p.l2, p.l3}},
           {"canonical", {res.canonical.l1, res.canonical.l2, res.canonical.l3}},
           {"in_domain", res.canonical.in_canonical_domain()},
           {"ops", ops}};
  write_output(a.out, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-qubit Cartan-kernel metrology toolbox"};
  app.require_subcommand(1);

  QfimArgs qfim_args;
  CLI::App* qfim_cmd = app.add_subcommand("qfim", "QFIM metrics of a probe state");
  qfim_cmd->add_option("--state-canonical", qfim_args.state_canonical,
                       "alpha,beta,gamma,delta,phi_b,phi_g,phi_d (angles accept Npi)");
  qfim_cmd->add_option("--state-bell", qfim_args.state_bell, "b,c,d or a,b,c,d[,3 phases]");
  qfim_cmd->add_option("--state-json", qfim_args.state_json,
                       "state literal {\"amplitudes\":[[re,im]x4],\"basis\":...}");
  qfim_cmd->add_option("--lambda", qfim_args.lambda, "Cartan angles for the pure route");
  qfim_cmd->add_option("--out", qfim_args.out, "output path ('-' = stdout)");

  OptimalArgs optimal_args;
  CLI::App* optimal_cmd = app.add_subcommand("optimal", "Generate optimal-family probes");
  optimal_cmd->add_option("--spec", optimal_args.spec, "family spec as a JSON object");
  optimal_cmd->add_option("--out", optimal_args.out, "output path");

  FrontierArgs frontier_args;
  CLI::App* frontier_cmd =
      app.add_subcommand("frontier", "Minimum sloppiness at fixed precision");
  frontier_cmd->add_option("--p", frontier_args.p, "precision bound, >= 0.75")->required();
  frontier_cmd->add_option("--out", frontier_args.out, "output path");

  SampleArgs sample_args;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Monte-Carlo probe scan");
  sample_cmd->add_option("--n", sample_args.n, "number of samples");
  sample_cmd->add_option("--kind", sample_args.kind, "haar | factorizable | optimal");
  sample_cmd->add_option("--seed", sample_args.seed, "RNG seed");
  sample_cmd->add_option("--format", sample_args.format, "csv | svg");
  sample_cmd->add_option("--out", sample_args.out, "output path");

  NoiseScanArgs noise_args;
  CLI::App* noise_cmd = app.add_subcommand("noise-scan", "Precision over a (gamma, phi) grid");
  noise_cmd->add_option("--class", noise_args.probe, "psi1 | psi2 | psi3");
  noise_cmd->add_option("--family", noise_args.family, "bitflip | depolarizing");
  noise_cmd->add_option("--scope", noise_args.scope, "single | both");
  noise_cmd->add_option("--gamma-grid", noise_args.gamma_grid, "gamma points on [0, 1]");
  noise_cmd->add_option("--phi-grid", noise_args.phi_grid, "phi points on [0, 2pi)");
  noise_cmd->add_option("--lambda", noise_args.lambda, "Cartan angles (recorded in metadata)");
  noise_cmd->add_option("--format", noise_args.format, "csv | svg");
  noise_cmd->add_option("--out", noise_args.out, "output path");

  CanonicalizeArgs canon_args;
  CLI::App* canon_cmd =
      app.add_subcommand("canonicalize", "Reduce Cartan angles into the canonical domain");
  canon_cmd->add_option("--lambda", canon_args.lambda, "three angles, radians or Npi")->required();
  canon_cmd->add_option("--out", canon_args.out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (qfim_cmd->parsed()) return run_qfim(qfim_args);
    if (optimal_cmd->parsed()) return run_optimal(optimal_args);
    if (frontier_cmd->parsed()) return run_frontier(frontier_args);
    if (sample_cmd->parsed()) return run_sample(sample_args);
    if (noise_cmd->parsed()) return run_noise_scan(noise_args);
    if (canon_cmd->parsed()) return run_canonicalize(canon_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
