#pragma once

#include <cstdint>
#include <vector>

#include "cartanqm/metrology.hpp"
#include "cartanqm/rng.hpp"
#include "cartanqm/states.hpp"

namespace cartanqm {

enum class ScanKind { Haar, Factorizable, OptimalFamily };

/// One row of a Monte-Carlo dataset: derived metrics of a sampled probe.
struct ScanRecord {
  std::uint64_t probe_id = 0;
  ScanKind kind = ScanKind::Haar;
  double p = 0.0;             // +inf when the QFIM is singular
  double inv_s = 0.0;         // Det[Q], always finite
  double concurrence = 0.0;
};

/// Haar-uniform two-qubit pure state: 4 complex standard Gaussians,
/// normalized. `stream` selects an independent substream of the spec.
TwoQubitPureState sample_haar(const RngSpec& rng, std::uint64_t stream = 0);

/// Tensor product of two independent single-qubit Haar states;
/// concurrence is zero by construction.
TwoQubitPureState sample_factorizable(const RngSpec& rng, std::uint64_t stream = 0);

/// Random member of the entangled optimal family (uniform alpha, beta,
/// signs and phase).
TwoQubitPureState sample_optimal_family(const RngSpec& rng, std::uint64_t stream = 0);

/// n records of (p, Det[Q], concurrence) for the chosen probe distribution,
/// computed through the closed-form canonical QFIM. Record i always uses RNG
/// stream i, so output is byte-identical for a given spec regardless of the
/// worker count.
std::vector<ScanRecord> scan(std::uint64_t n, ScanKind kind, const RngSpec& rng, int threads = 0);

}  // namespace cartanqm
