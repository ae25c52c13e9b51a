#include "cartanqm/sampling.hpp"

#include <cmath>

#include "cartanqm/optimal.hpp"
#include "cartanqm/parallel.hpp"

namespace cartanqm {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kTwoPi = 6.28318530717958647692;

std::array<cxd, 2> haar_qubit(CounterRng& rng) {
  std::array<cxd, 2> a = {cxd{rng.next_gaussian(), rng.next_gaussian()},
                          cxd{rng.next_gaussian(), rng.next_gaussian()}};
  double n = std::sqrt(std::norm(a[0]) + std::norm(a[1]));
  a[0] /= n;
  a[1] /= n;
  return a;
}

}  // namespace

TwoQubitPureState sample_haar(const RngSpec& rng, std::uint64_t stream) {
  CounterRng r(rng, stream);
  std::array<cxd, 4> a{};
  for (cxd& x : a) x = cxd{r.next_gaussian(), r.next_gaussian()};
  return TwoQubitPureState::make_normalized(a, Basis::Canonical);
}

TwoQubitPureState sample_factorizable(const RngSpec& rng, std::uint64_t stream) {
  CounterRng r(rng, stream);
  std::array<cxd, 2> qa = haar_qubit(r);
  std::array<cxd, 2> qb = haar_qubit(r);
  std::array<cxd, 4> a = {qa[0] * qb[0], qa[0] * qb[1], qa[1] * qb[0], qa[1] * qb[1]};
  return TwoQubitPureState::make_normalized(a, Basis::Canonical);
}

TwoQubitPureState sample_optimal_family(const RngSpec& rng, std::uint64_t stream) {
  CounterRng r(rng, stream);
  OptimalFamilySpec spec;
  spec.family = OptimalFamily::Entangled;
  spec.alpha = r.next_unit() * kInvSqrt2;
  spec.beta = r.next_unit() * kInvSqrt2;
  spec.sign_gamma = r.next_u64() & 1 ? +1 : -1;
  spec.sign_delta = r.next_u64() & 1 ? +1 : -1;
  spec.phi = r.next_unit() * kTwoPi;
  return make_optimal(spec);
}

std::vector<ScanRecord> scan(std::uint64_t n, ScanKind kind, const RngSpec& rng, int threads) {
  std::vector<ScanRecord> out(n);
  parallel_for(n, resolve_threads(threads), [&](std::size_t i) {
    std::uint64_t id = static_cast<std::uint64_t>(i);
    TwoQubitPureState psi;
    switch (kind) {
      case ScanKind::Haar: psi = sample_haar(rng, id); break;
      case ScanKind::Factorizable: psi = sample_factorizable(rng, id); break;
      case ScanKind::OptimalFamily: psi = sample_optimal_family(rng, id); break;
    }
    Qfim q = qfim_closed_canonical(canonical_params_of(psi));
    ScanRecord& rec = out[i];
    rec.probe_id = id;
    rec.kind = kind;
    rec.p = q.p;
    rec.inv_s = q.det;
    rec.concurrence = concurrence_pure(psi);
  });
  return out;
}

}  // namespace cartanqm
