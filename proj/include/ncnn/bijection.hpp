#pragma once

#include "ncnn/family.hpp"
#include "ncnn/partition.hpp"
#include "ncnn/statistics.hpp"

namespace ncnn {

// Rebuild the unique partition of the given mode with these statistics, by
// the dot-by-dot algorithm: open blocks seeded from nu with fictive markers,
// a sweep over 1..n opening a block at each a-position and otherwise
// applying the mode's open-block policy, a mirror step, and the family's
// pairing of the incomplete switching halves.  Throws InvalidStatistics if
// validate_statistics rejects the bundle.
ClassicalPartition rebuild(const GroupFamily& g, Mode mode, int n,
                           const StatisticBundle& s);

enum class Direction { NNtoNC, NCtoNN };

// The type-preserving bijections: extract, transport (A, C: identity;
// B: sigma_B between the nu tuples; D: sigma_D between (nu,c) and
// (nu,xi,c)), rebuild in the target mode.
ClassicalPartition convert(const GroupFamily& g, Direction dir,
                           const ClassicalPartition& p);

// Transport of a source-mode bundle to the target mode without rebuilding.
StatisticBundle transport_statistics(const GroupFamily& g, Direction dir,
                                     const StatisticBundle& s);

// The central-theorem check for a nonnesting/noncrossing pair: equal Gamma
// and a bijection between the Omega sets satisfying the four bullets.  The
// canonical index-by-index pairing is tried first; if it fails every
// bijection is exhausted before returning false.
bool verify_central_theorem(const GroupFamily& g, const ClassicalPartition& nn,
                            const ClassicalPartition& nc);

// The per-vector data the theorem compares: #(u,1), #(u,-1),
// |downset(u) cap E|, |downset(u) cap Omega|.
struct OmegaRow {
  int ones = 0;
  int minus_ones = 0;
  int down_e = 0;
  int down_omega = 0;

  bool operator==(const OmegaRow&) const = default;
};

std::vector<OmegaRow> omega_rows(const FixedSpaceBasis& fb);

}  // namespace ncnn
