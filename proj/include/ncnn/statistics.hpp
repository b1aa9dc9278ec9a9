#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncnn/family.hpp"
#include "ncnn/partition.hpp"

namespace ncnn {

enum class CSym { Plus, Minus, PlusMinus };

std::string csym_to_string(CSym s);
CSym csym_from_string(const std::string& s);

// The tuples of section-2 statistics.  a and mu run over positive
// nonswitching blocks in <_lp order, nu over switching blocks; c and xi are
// the type-D tags (for nonnesting partitions xi is the last |c| entries of
// nu, kept explicit for the wire format).
struct StatisticBundle {
  std::vector<int> a, mu, nu;
  std::vector<CSym> c;
  std::vector<int> xi;

  bool operator==(const StatisticBundle&) const = default;
};

// Block classification for the family's sign conventions.  In D the elements
// +-1 count as neither positive nor negative: they never contribute to
// positive counts, but their presence makes a block with positives
// switching.
struct BlockClassification {
  std::vector<std::vector<int>> m_blocks;   // all-positive blocks, <_lp order
  std::vector<std::vector<int>> switching;  // <_lp order, zero block included
  std::vector<int> r_indices;  // D: switching blocks meeting {1,-1}
};

BlockClassification classify_blocks(const GroupFamily& g,
                                    const ClassicalPartition& p);

int positive_cutoff(const GroupFamily& g);  // 2 for D, 1 otherwise
int count_positives(const GroupFamily& g, const std::vector<int>& block);

StatisticBundle extract_statistics(const GroupFamily& g, Mode mode,
                                   const ClassicalPartition& p);

// The type-B reordering of nu (k odd moves position (k+1)/2 to the end).
std::vector<int> sigma_B(const std::vector<int>& nu);
std::vector<int> sigma_B_inverse(const std::vector<int>& nu);

struct SigmaDResult {
  std::vector<int> nu_hat;
  std::vector<int> xi_inv;
  std::vector<CSym> c_inv;
};

// sigma_D carries the nonnesting tuples (nu, c) to the noncrossing tuples
// (nu_hat, xi, c); its inverse goes back.
SigmaDResult sigma_D(const std::vector<int>& nu, const std::vector<CSym>& c);
std::pair<std::vector<int>, std::vector<CSym>> sigma_D_inverse(
    const std::vector<int>& nu, const std::vector<int>& xi,
    const std::vector<CSym>& c);

// A noncrossing partition for B_{n-1} (stored on +-[n-1], i.e. relabelled
// down from the ground set {2..n}) together with the central-merging tags.
struct TaggedBPartition {
  int d_rank = 0;  // the n of the originating D_n
  ClassicalPartition base;
  std::vector<CSym> c;
  std::vector<int> xi;
};

void check_tags(const TaggedBPartition& t);  // the three tagged conditions

TaggedBPartition central_merge(const GroupFamily& g,
                               const ClassicalPartition& p);
ClassicalPartition central_unmerge(const GroupFamily& g,
                                   const TaggedBPartition& t);

// Relabelling helpers between +-{2..n} (inside +-[n], elements +-1 absent)
// and +-[n-1].
ClassicalPartition relabel_down(const ClassicalPartition& p);
ClassicalPartition relabel_up(const ClassicalPartition& p);

struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violations;
};

// The characterisation corollaries: A and B/C have three conditions, D-NN
// five; D-NC bundles are checked through the tagged-partition conditions on
// the central-merge side.
ValidationResult validate_statistics(const GroupFamily& g, int n,
                                     const StatisticBundle& s, Mode mode);

// Section-2.6 starred statistics: ordinary integer signs for every family.
struct StarredStatistics {
  std::vector<int> a_star, mu_star;
  std::vector<std::pair<int, int>> theta_star;  // (theta_+i, theta_-i)
  int eta_star = 0;

  bool operator==(const StarredStatistics&) const = default;
};

StarredStatistics starred_statistics(const GroupFamily& g,
                                     const ClassicalPartition& p);

// Omega/Gamma data: the ordered canonical basis of the partition's fixed
// space (one {-1,0,1} vector per nonzero block pair, ordered by least
// absolute value) and the count of coordinates forced to zero.
struct FixedSpaceBasis {
  std::vector<std::vector<int>> omega;
  int gamma = 0;

  bool operator==(const FixedSpaceBasis&) const = default;
};

// f-formula route: f(B) = sgn(B) sum_{b in B} (b/|b|) e_{|b|}, sign chosen so
// nonswitching blocks come out lex-nonnegative and switching blocks
// lex-nonpositive.
FixedSpaceBasis canonical_basis(const ClassicalPartition& p);

// Literal stepwise route: scan Psi^n intersected with the fixed space for the
// lex-minimal |e_i - u|, insert under the printed sign rule.  Agrees with
// canonical_basis; kept separate as the independent construction.
FixedSpaceBasis omega_of(const ClassicalPartition& p);

}  // namespace ncnn
