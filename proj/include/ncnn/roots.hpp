#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ncnn/family.hpp"

namespace ncnn {

// A root in standard coordinates: an integer vector of length ambient_dim.
// Every root here is of the form e_j - e_i under the labelling convention
// e_{-k} = -e_k, e_0 = 0, so at most two coordinates are nonzero and entries
// lie in {-2,...,2} (the entry 2 only for the long roots 2e_i of C).
struct Root {
  std::vector<int> coords;

  bool operator==(const Root&) const = default;
  auto operator<=>(const Root&) const = default;
};

// Simple roots exactly as printed, in the printed order:
//   A_r: e_2-e_1, ..., e_{r+1}-e_r
//   B_r: e_1, e_2-e_1, ..., e_r-e_{r-1}
//   C_r: 2e_1, e_2-e_1, ..., e_r-e_{r-1}
//   D_r: e_1+e_2, e_2-e_1, ..., e_r-e_{r-1}
std::vector<Root> simple_roots(const GroupFamily& g);

// All positive roots, in a fixed deterministic order (by poset height, then
// lexicographic on coordinates).  This order is also the linear extension
// used by antichain enumeration.
std::vector<Root> positive_roots(const GroupFamily& g);

bool is_positive_root(const GroupFamily& g, const Root& r);

// Root poset order: alpha <= beta iff beta - alpha is a nonnegative rational
// combination of the simple roots.  Both arguments must lie in Phi+.
bool root_leq(const GroupFamily& g, const Root& alpha, const Root& beta);

// Height of a positive root = sum of its coefficients in the simple basis.
int root_height(const GroupFamily& g, const Root& r);

// The integer-line labels (i, j) with alpha = e_j - e_i, e_{-k} = -e_k,
// e_0 = 0.  These are the bump-diagram edge endpoints.
std::pair<int, int> root_endpoints(const GroupFamily& g, const Root& alpha);

// Inverse of root_endpoints: the positive root with the given labels.
Root root_from_endpoints(const GroupFamily& g, int i, int j);

// An antichain of the root poset, kept sorted in the positive_roots order.
using Antichain = std::vector<Root>;

void for_each_antichain(const GroupFamily& g,
                        const std::function<void(const Antichain&)>& fn);
std::vector<Antichain> enumerate_antichains(const GroupFamily& g);
long long count_antichains(const GroupFamily& g);

void check_antichain(const GroupFamily& g, const Antichain& a);

// Degrees and Coxeter number.  These are standard background (not printed in
// the source material); every count they predict is independently
// cross-checked against exhaustive enumeration, so an error here cannot pass
// silently.
std::vector<int> degrees(const GroupFamily& g);
int coxeter_number(const GroupFamily& g);

// The W-Catalan number prod_i (h + d_i) / d_i.
long long coxeter_catalan_number(const GroupFamily& g);

}  // namespace ncnn
