#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ncnn/family.hpp"
#include "ncnn/partition.hpp"
#include "ncnn/roots.hpp"

namespace ncnn {

// A negation-equivariant bijection of {+-1..+-n}, stored as the images of
// 1..n.  For family A all images are positive; membership in D requires an
// even number of sign changes.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(int n);  // identity
  static SignedPermutation from_images(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int apply(int i) const {
    return i > 0 ? img_[i - 1] : -img_[-i - 1];
  }

  // (w.after(v))(i) = w(v(i))
  SignedPermutation after(const SignedPermutation& v) const;
  SignedPermutation inverse() const;
  bool is_identity() const;
  int sign_changes() const;

  const std::vector<int>& images() const { return img_; }
  std::uint64_t encode() const;

  // Orbits of the extended action on {+-1..+-n}; each orbit appears once,
  // starting from its minimum-absolute-value element (positive first).
  std::vector<std::vector<int>> orbits() const;

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> img_;
};

bool in_family(const GroupFamily& g, const SignedPermutation& w);
void check_membership(const GroupFamily& g, const SignedPermutation& w);

// The reflection with the given root: e_j-e_i -> (i j)(-i -j),
// e_j+e_i -> (i -j)(-i j), e_i and 2e_i -> (i -i).
SignedPermutation reflection_of_root(const GroupFamily& g, const Root& r);
std::vector<std::pair<Root, SignedPermutation>> reflections(const GroupFamily& g);

// The standard Coxeter elements:
//   A_{n-1}: (1 2 ... n)
//   B_n=C_n: (1 ... n (-1) ... (-n))
//   D_n:     (1 (-1))(2 ... n (-2) ... (-n))
SignedPermutation standard_coxeter_element(const GroupFamily& g);

// Fixed subspace of R^n in canonical form: one {-1,0,1} basis vector per
// balanced orbit (sign convention matching the canonical basis f of the
// associated classical partition, see statistics.hpp) ordered by the least
// absolute value of the orbit, plus the coordinates forced to zero.
struct FixedSpaceDescription {
  std::vector<std::vector<int>> basis;
  std::vector<int> zeroed;

  int dim(int n) const {
    return static_cast<int>(basis.size()) +
           (n - static_cast<int>(basis.size()) -
            static_cast<int>(zeroed.size()));
  }
  bool operator==(const FixedSpaceDescription&) const = default;
};

FixedSpaceDescription fixed_space(const GroupFamily& g,
                                  const SignedPermutation& w);

// Reflection length via Carter: rank minus dim(Fix(w) within the root span);
// the Cayley-graph BFS oracle lives in the test suite only.
int absolute_length(const GroupFamily& g, const SignedPermutation& w);

bool absolute_leq(const GroupFamily& g, const SignedPermutation& w,
                  const SignedPermutation& x);

void for_each_group_element(const GroupFamily& g,
                            const std::function<void(const SignedPermutation&)>& fn);
std::vector<SignedPermutation> enumerate_group(const GroupFamily& g);
long long group_order(const GroupFamily& g);

// The interval [1, c] in absolute order, c standard.  jobs > 1 filters the
// group with the OpenMP kernel; the result is identical to the serial path.
std::vector<SignedPermutation> uniform_noncrossing(const GroupFamily& g,
                                                   int jobs = 1);

// f_NC: blocks are the orbits of w, with every orbit meeting {i, -i} merged
// into the zero block.
ClassicalPartition partition_of_element(const GroupFamily& g,
                                        const SignedPermutation& w);

// f_NN: the partition whose bump edges are the root_endpoints pairs of the
// antichain (plus mirrors); components meeting 0 or both signs become the
// zero block.
ClassicalPartition partition_of_antichain(const GroupFamily& g,
                                          const Antichain& a);

// Fix of the product of the antichain's reflections, in any order.
FixedSpaceDescription fix_of_antichain(const GroupFamily& g, const Antichain& a);

}  // namespace ncnn
