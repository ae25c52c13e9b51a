// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion pins its tolerance and its runtime budget.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cartanqm/metrology.hpp"
#include "cartanqm/noise.hpp"
#include "cartanqm/optimal.hpp"
#include "cartanqm/parallel.hpp"
#include "cartanqm/sampling.hpp"

using namespace cartanqm;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

TwoQubitPureState random_state(std::mt19937_64& g) {
  std::normal_distribution<double> n;
  std::array<cxd, 4> a{};
  for (cxd& x : a) x = cxd{n(g), n(g)};
  return TwoQubitPureState::make_normalized(a, Basis::Canonical);
}

CartanParams random_lambda(std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(-kPi, kPi);
  return CartanParams{u(g), u(g), u(g)};
}

double max_abs3(const Mat3& m) {
  double r = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

// ---- criterion bodies ----------------------------------------------------

bool optimal_point(std::string& detail) {
  std::vector<TwoQubitPureState> members;
  OptimalFamilySpec spec;

  spec.family = OptimalFamily::FactorizedSep;
  for (int index = 1; index <= 4; ++index) {
    for (double phi : {0.0, 2.1}) {
      spec.index = index;
      spec.phi = phi;
      members.push_back(make_optimal(spec));
    }
  }
  spec.family = OptimalFamily::Entangled;
  int count = 0;
  for (int sg : {+1, -1})
    for (int sd : {+1, -1})
      for (int i = 0; i < 9 && count < 34; ++i, ++count) {
        spec.alpha = kInvSqrt2 * ((i * 7) % 10) / 10.0;
        spec.beta = kInvSqrt2 * ((i * 3 + 1) % 10) / 10.0;
        spec.sign_gamma = sg;
        spec.sign_delta = sd;
        spec.phi = 0.37 * i;
        members.push_back(make_optimal(spec));
      }
  spec.family = OptimalFamily::BellUniform;
  for (int i = 0; i < 8; ++i) {
    spec.phases = {0.3 * i, 1.1 * i, 2.43 * i};
    members.push_back(make_optimal(spec));
  }

  double worst_p = 0.0, worst_det = 0.0;
  CartanParams lambda{0.4, 0.25, 0.1};
  for (const TwoQubitPureState& psi : members) {
    Qfim q = qfim_pure(psi, lambda);
    worst_p = std::max(worst_p, std::abs(q.p - 0.75));
    worst_det = std::max(worst_det, std::abs(q.det - 64.0));
  }
  std::ostringstream ss;
  ss << members.size() << " members, max |p-3/4| = " << worst_p << ", max |Det-64| = "
     << worst_det;
  detail = ss.str();
  return members.size() >= 50 && worst_p <= 1e-9 && worst_det <= 1e-9;
}

bool covariance(std::string& detail) {
  auto g = make_rng(101);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    TwoQubitPureState psi = random_state(g);
    Qfim ref = qfim_pure(psi, random_lambda(g));
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, ref.q.max_abs_diff(qfim_pure(psi, random_lambda(g)).q));
  }
  std::ostringstream ss;
  ss << "max elementwise spread over lambda = " << worst;
  detail = ss.str();
  return worst <= 1e-10;
}

bool vanishing_incompatibility(std::string& detail) {
  auto g = make_rng(102);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial)
    worst = std::max(worst, max_abs3(uhlmann_pure(random_state(g), random_lambda(g)).d));
  std::ostringstream ss;
  ss << "max |D| = " << worst;
  detail = ss.str();
  return worst <= 1e-10;
}

bool route_agreement(std::string& detail) {
  auto g = make_rng(103);
  double worst_routes = 0.0, worst_mixed = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    TwoQubitPureState psi = random_state(g);
    CartanParams lam = random_lambda(g);
    Qfim pure = qfim_pure(psi, lam);
    Qfim canon = qfim_closed_canonical(canonical_params_of(psi));
    TwoQubitPureState bell = change_basis(psi, Basis::Bell);
    Qfim bellq =
        qfim_closed_bell(std::abs(bell.amp[1]), std::abs(bell.amp[2]), std::abs(bell.amp[3]));
    worst_routes = std::max(worst_routes, pure.q.max_abs_diff(canon.q));
    worst_routes = std::max(worst_routes, pure.q.max_abs_diff(bellq.q));

    DensityMatrix4 rho = evolve_density(lam, DensityMatrix4::from_pure(psi));
    Qfim mixed = qfim_mixed(rho, density_derivatives(rho));
    worst_mixed = std::max(worst_mixed, mixed.q.max_abs_diff(pure.q));
  }
  std::ostringstream ss;
  ss << "max route spread = " << worst_routes << ", max mixed-vs-pure = " << worst_mixed;
  detail = ss.str();
  return worst_routes <= 1e-9 && worst_mixed <= 1e-8;
}

bool monte_carlo_ranges(std::string& detail) {
  std::vector<ScanRecord> records = scan(100000, ScanKind::Haar, RngSpec{42});
  double min_p = std::numeric_limits<double>::infinity();
  double max_inv_s = 0.0;
  double worst_bound = std::numeric_limits<double>::infinity();
  for (const ScanRecord& r : records) {
    max_inv_s = std::max(max_inv_s, r.inv_s);
    if (!std::isfinite(r.p)) continue;
    min_p = std::min(min_p, r.p);
    worst_bound = std::min(worst_bound, r.p - 3.0 * std::cbrt(1.0 / r.inv_s));
  }
  std::ostringstream ss;
  ss << "min p = " << min_p << ", max Det = " << max_inv_s
     << ", min (p - 3 s^(1/3)) = " << worst_bound;
  detail = ss.str();
  return min_p >= 0.75 - 1e-6 && max_inv_s <= 64.0 + 1e-6 && worst_bound >= -1e-8;
}

// Grid maximization of Det[Q](b, c; p) followed by pattern-search refinement.
double grid_max_det(double p) {
  auto value = [&](double b, double c) -> double {
    double b2 = b * b, c2 = c * c;
    double rest = 1.0 - b2 - c2;
    if (b2 <= 0.0 || c2 <= 0.0 || rest <= 0.0) return -1.0;
    double denom = b2 * (64.0 * c2 * p - 3.0) - 3.0 * c2;
    if (denom <= 0.0) return -1.0;
    double t = denom / (3.0 * b2 * c2);
    if (rest * t < 4.0) return -1.0;
    return 49152.0 * b2 * b2 * c2 * c2 * rest / denom;
  };

  const int n = 600;
  double best = -1.0, bb = 0.0, bc = 0.0;
  for (int i = 1; i < n; ++i) {
    double b = static_cast<double>(i) / n;
    for (int j = 1; j < n; ++j) {
      double c = static_cast<double>(j) / n;
      double v = value(b, c);
      if (v > best) {
        best = v;
        bb = b;
        bc = c;
      }
    }
  }
  double step = 1.0 / n;
  while (step > 1e-10) {
    bool improved = false;
    for (int di = -1; di <= 1; ++di) {
      for (int dj = -1; dj <= 1; ++dj) {
        if (di == 0 && dj == 0) continue;
        double v = value(bb + di * step, bc + dj * step);
        if (v > best) {
          best = v;
          bb += di * step;
          bc += dj * step;
          improved = true;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

bool frontier_checks(std::string& detail) {
  double worst_rel = 0.0;
  for (double p : {0.76, 1.0, 2.5, 20.0}) {
    double grid = grid_max_det(p);
    double closed = frontier(p);
    worst_rel = std::max(worst_rel, std::abs(grid - closed) / closed);
  }
  double at_opt = std::abs(frontier(0.75) - 64.0);
  double h = 1e-8;
  double slope = (frontier(0.75 + h) - frontier(0.75)) / h;
  double slope_rel = std::abs(slope + 512.0 / 3.0) / (512.0 / 3.0);

  std::ostringstream ss;
  ss << "max grid-vs-closed rel = " << worst_rel << ", |frontier(3/4)-64| = " << at_opt
     << ", slope rel err = " << slope_rel;
  detail = ss.str();
  return worst_rel <= 1e-5 && at_opt <= 1e-9 && slope_rel <= 1e-3;
}

bool suboptimal_roundtrip(std::string& detail) {
  double worst = 0.0;
  for (double p : {0.8, 1.0, 2.0, 10.0}) {
    TwoQubitPureState psi = suboptimal_state(p, 1, {0.2, 0.9, 1.7});
    Qfim q = qfim_closed_bell(std::abs(psi.amp[1]), std::abs(psi.amp[2]), std::abs(psi.amp[3]));
    worst = std::max(worst, std::abs(q.p - p));
    worst = std::max(worst, std::abs(q.det - frontier(p)));
  }
  std::ostringstream ss;
  ss << "max |roundtrip - target| = " << worst;
  detail = ss.str();
  return worst <= 1e-8;
}

bool noise_limits(std::string& detail) {
  NoiseScanGrid grid;
  grid.n_gamma = 101;
  grid.n_phi = 64;
  grid.probe = ProbeClass::Psi1;
  NoiseScanResult res = noise_scan(grid, NoiseFamily::BitFlip, NoiseScope::Single);

  double worst_limit = 0.0, worst_sym = 0.0;
  for (int j = 0; j < grid.n_phi; ++j) {
    worst_limit = std::max(worst_limit, std::abs(res.p.front()[static_cast<std::size_t>(j)] - 0.75));
    worst_limit = std::max(worst_limit, std::abs(res.p.back()[static_cast<std::size_t>(j)] - 0.75));
  }
  for (int i = 0; i < grid.n_gamma; ++i)
    for (int j = 0; j < grid.n_phi; ++j) {
      double a = res.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      double b = res.p[static_cast<std::size_t>(grid.n_gamma - 1 - i)][static_cast<std::size_t>(j)];
      if (std::isinf(a) || std::isinf(b)) {
        if (std::isinf(a) != std::isinf(b)) return false;
        continue;
      }
      worst_sym = std::max(worst_sym, std::abs(a - b));
    }
  std::ostringstream ss;
  ss << "max |p(0|1) - 3/4| = " << worst_limit << ", max |p(g) - p(1-g)| = " << worst_sym;
  detail = ss.str();
  return worst_limit <= 1e-8 && worst_sym <= 1e-8;
}

bool channel_validity(std::string& detail) {
  double worst_complete = 0.0, worst_weight = 0.0;
  for (NoiseFamily family : {NoiseFamily::BitFlip, NoiseFamily::Depolarizing})
    for (NoiseScope scope : {NoiseScope::Single, NoiseScope::Both})
      for (int i = 0; i <= 20; ++i) {
        double g = static_cast<double>(i) / 20.0;
        worst_complete = std::max(
            worst_complete, kraus_completeness_defect(NoiseChannel::make(family, scope, g)));
        worst_weight = std::max(worst_weight, std::abs((1.0 - 2.0 * g * (1.0 - g) - g * g) -
                                                       (1.0 - g) * (1.0 - g)));
      }
  std::ostringstream ss;
  ss << "max completeness defect = " << worst_complete << ", max weight identity defect = "
     << worst_weight;
  detail = ss.str();
  return worst_complete <= 1e-12 && worst_weight <= 1e-12;
}

bool derivative_oracle(std::string& detail) {
  auto g = make_rng(104);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double h = tol::fd_step;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    NoiseFamily family = (g() & 1) ? NoiseFamily::BitFlip : NoiseFamily::Depolarizing;
    NoiseScope scope = (g() & 1) ? NoiseScope::Single : NoiseScope::Both;
    NoiseChannel ch = NoiseChannel::make(family, scope, u(g));
    DensityMatrix4 pre = apply_channel(ch, DensityMatrix4::from_pure(random_state(g)));
    CartanParams lam = random_lambda(g);
    DensityMatrix4 rho = evolve_density(lam, pre);
    auto analytic = density_derivatives(rho);
    for (int j = 0; j < 3; ++j) {
      CartanParams up = lam, dn = lam;
      (j == 0 ? up.l1 : j == 1 ? up.l2 : up.l3) += h;
      (j == 0 ? dn.l1 : j == 1 ? dn.l2 : dn.l3) -= h;
      ComplexMatrix fd =
          (evolve_density(up, pre).matrix() - evolve_density(dn, pre).matrix()) * (0.5 / h);
      worst = std::max(worst, fd.max_abs_diff(analytic[static_cast<std::size_t>(j)]));
    }
  }
  std::ostringstream ss;
  ss << "max |analytic - central difference| = " << worst;
  detail = ss.str();
  return worst <= 1e-6;
}

bool entanglement_irrelevance(std::string& detail) {
  // Near-optimal low-concurrence Haar states: (p, Det) within 1e-3 relative
  // of (3/4, 64) and concurrence < 0.05. Qualifying draws are rare (about
  // 3e-7 each), so when the 1e5 draw comes up empty the same deterministic
  // stream extends to 2e7.
  RngSpec rng{42};
  auto qualifies = [&rng](std::uint64_t id) {
    TwoQubitPureState psi = sample_haar(rng, id);
    Qfim q = qfim_closed_canonical(canonical_params_of(psi));
    return std::isfinite(q.p) && std::abs(q.p - 0.75) / 0.75 <= 1e-3 &&
           std::abs(q.det - 64.0) / 64.0 <= 1e-3 && concurrence_pure(psi) < 0.05;
  };
  // Streams one record at a time (stream id = probe id, identical to the
  // scan() dataset for the same seed) so the 2e7 draw needs no storage.
  auto count_hits = [&](std::uint64_t n) {
    std::atomic<std::uint64_t> hits{0};
    parallel_for(n, resolve_threads(0), [&](std::size_t i) {
      if (qualifies(static_cast<std::uint64_t>(i))) hits.fetch_add(1);
    });
    return hits.load();
  };

  std::uint64_t n_big = 100000;
  std::uint64_t hits_small = count_hits(n_big);
  std::uint64_t hits_big = hits_small;
  if (hits_small == 0) {
    n_big = 20000000;
    hits_big = count_hits(n_big);
  }

  // Entangled-family sweep: optimal states with concurrence above 0.95.
  OptimalFamilySpec spec;
  spec.family = OptimalFamily::Entangled;
  spec.sign_gamma = -1;
  spec.sign_delta = +1;
  std::uint64_t high_c = 0;
  for (int i = 0; i <= 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      spec.alpha = kInvSqrt2 * i / 40.0;
      spec.beta = kInvSqrt2 * j / 40.0;
      TwoQubitPureState psi = make_optimal(spec);
      if (concurrence_pure(psi) <= 0.95) continue;
      Qfim q = qfim_pure(psi, CartanParams{});
      if (std::abs(q.p - 0.75) <= 1e-9 && std::abs(q.det - 64.0) <= 1e-9) ++high_c;
    }
  }

  std::ostringstream ss;
  ss << "near-optimal C<0.05 hits: " << hits_small << " at 1e5";
  if (n_big > 100000) ss << ", " << hits_big << " at 2e7";
  ss << "; optimal C>0.95 sweep members: " << high_c;
  detail = ss.str();
  return hits_big > 0 && high_c > 0;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "optimal point: 50 family members at (p, Det) = (3/4, 64) +/- 1e-9", 1.0, optimal_point},
      {2, "covariance: Q independent of lambda within 1e-10", 5.0, covariance},
      {3, "vanishing incompatibility: max |D| <= 1e-10 over 1000 probes", 5.0,
       vanishing_incompatibility},
      {4, "route agreement: pure/canonical/Bell within 1e-9, mixed within 1e-8", 10.0,
       route_agreement},
      {5, "Monte-Carlo ranges at 1e5: p >= 3/4, Det <= 64, p >= 3 s^(1/3)", 60.0,
       monte_carlo_ranges},
      {6, "frontier: grid max within 1e-5 rel, value 64 at 3/4, slope -512/3", 30.0,
       frontier_checks},
      {7, "suboptimal states round-trip to (p, frontier(p)) within 1e-8", 1.0,
       suboptimal_roundtrip},
      {8, "noise limits: psi1 bit-flip p(0)=p(1)=3/4, gamma mirror, 101x64", 30.0, noise_limits},
      {9, "channel validity: Kraus completeness and weight identities, 1e-12", 1.0,
       channel_validity},
      {10, "derivative oracle: analytic vs central differences within 1e-6", 10.0,
       derivative_oracle},
      {11, "entanglement irrelevance: near-optimal C<0.05 and optimal C>0.95", 60.0,
       entanglement_irrelevance},
  };

  int failures = 0;
  for (Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_budget = elapsed < c.budget_seconds;
    bool pass = ok && in_budget;
    if (!pass) ++failures;
    std::printf("[%s] criterion %2d: %s (%.2f s%s) %s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                elapsed, in_budget ? "" : " OVER BUDGET", detail.c_str());
  }
  if (failures == 0) {
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  } else {
    std::printf("%d acceptance criteria FAILED\n", failures);
  }
  return failures;
}
