#include "ncnn/partition.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "ncnn/errors.hpp"

namespace ncnn {

void ClassicalPartition::canonicalise() {
  for (auto& b : blocks_) std::sort(b.begin(), b.end());
  std::sort(blocks_.begin(), blocks_.end());
  std::sort(zero_.begin(), zero_.end());
}

ClassicalPartition ClassicalPartition::make(int n,
                                            std::vector<std::vector<int>> blocks,
                                            std::vector<int> zero) {
  ClassicalPartition p;
  p.n_ = n;
  p.blocks_ = std::move(blocks);
  p.zero_ = std::move(zero);
  p.canonicalise();
  return p;
}

ClassicalPartition ClassicalPartition::from_positive_partition(
    int n, std::vector<std::vector<int>> blocks) {
  return make(n, std::move(blocks), {});
}

ClassicalPartition ClassicalPartition::from_representatives(
    const GroupFamily& g, std::vector<std::vector<int>> reps,
    std::vector<int> zero) {
  const int n = g.ambient_dim();
  std::vector<std::vector<int>> blocks;
  for (auto& b : reps) {
    blocks.push_back(b);
    if (g.family != Family::A) {
      std::vector<int> neg;
      for (int e : b) neg.push_back(-e);
      blocks.push_back(std::move(neg));
    }
  }
  if (g.family != Family::A)
    for (int e : std::vector<int>(zero))
      if (std::find(zero.begin(), zero.end(), -e) == zero.end())
        zero.push_back(-e);
  auto p = make(n, std::move(blocks), std::move(zero));
  p.validate(g);
  return p;
}

const std::vector<int>& ClassicalPartition::block_of(int e) const {
  for (const auto& b : blocks_)
    if (std::find(b.begin(), b.end(), e) != b.end()) return b;
  if (std::find(zero_.begin(), zero_.end(), e) != zero_.end()) return zero_;
  throw InvariantViolation("element not in partition: " + std::to_string(e));
}

bool ClassicalPartition::in_zero_block(int e) const {
  return std::find(zero_.begin(), zero_.end(), e) != zero_.end();
}

std::vector<std::vector<int>> ClassicalPartition::representatives() const {
  auto abs_less = [](int a, int b) {
    return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a > b;
  };
  std::vector<std::vector<int>> reps;
  for (const auto& b : blocks_) {
    int m = *std::min_element(b.begin(), b.end(), abs_less);
    if (m < 0) continue;  // mirror; keep the pair's min-abs-positive block
    auto r = b;
    std::sort(r.begin(), r.end(), abs_less);
    reps.push_back(std::move(r));
  }
  std::sort(reps.begin(), reps.end(),
            [&](const auto& x, const auto& y) { return abs_less(x[0], y[0]); });
  return reps;
}

ClassicalPartition ClassicalPartition::with_negated(
    const std::vector<int>& elems) const {
  auto flip = [&](std::vector<int> b) {
    for (int& e : b)
      for (int x : elems)
        if (e == x) { e = -e; break; }
    return b;
  };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : blocks_) blocks.push_back(flip(b));
  return make(n_, std::move(blocks), flip(zero_));
}

void ClassicalPartition::validate(const GroupFamily& g) const {
  const int n = g.ambient_dim();
  if (n_ != n) throw InvariantViolation("partition dimension mismatch");

  std::set<int> seen;
  for (const auto& b : blocks_) {
    if (b.empty()) throw InvariantViolation("empty block");
    for (int e : b) {
      if (e == 0 || std::abs(e) > n) throw InvariantViolation("element range");
      if (!seen.insert(e).second) throw InvariantViolation("duplicate element");
    }
  }
  for (int e : zero_) {
    if (e == 0 || std::abs(e) > n) throw InvariantViolation("element range");
    if (!seen.insert(e).second) throw InvariantViolation("duplicate element");
  }

  if (g.family == Family::A) {
    if (!zero_.empty()) throw InvariantViolation("type A has no zero block");
    if (static_cast<int>(seen.size()) != n ||
        std::any_of(seen.begin(), seen.end(), [](int e) { return e < 0; }))
      throw InvariantViolation("type A partitions cover [n] positively");
    return;
  }

  if (static_cast<int>(seen.size()) != 2 * n)
    throw InvariantViolation("partition must cover +-[n]");
  // negation of every block is a block; zero block negation-closed
  for (const auto& b : blocks_) {
    std::vector<int> neg;
    for (int e : b) neg.push_back(-e);
    std::sort(neg.begin(), neg.end());
    if (neg == b)
      throw InvariantViolation("negation-fixed nonzero block");
    if (std::find(blocks_.begin(), blocks_.end(), neg) == blocks_.end())
      throw InvariantViolation("missing mirror block");
  }
  for (int e : zero_)
    if (!in_zero_block(-e)) throw InvariantViolation("zero block not symmetric");
  if (g.family == Family::D && zero_.size() == 2)
    throw InvariantViolation("D zero block cannot have exactly two elements");
}

GroundOrder ground_order(const GroupFamily& g, Mode mode,
                         std::optional<int> d_cut, bool second_variant) {
  const int n = g.ambient_dim();
  const bool want_cut = (g.family == Family::D && mode == Mode::NC);
  if (d_cut.has_value() != want_cut)
    throw BadCut("d_cut is required exactly for (D, NC)");

  std::vector<std::vector<int>> levels;
  switch (g.family) {
    case Family::A:
      for (int i = 1; i <= n; ++i) levels.push_back({i});
      break;
    case Family::B:
      if (mode == Mode::NN) {
        for (int i = -n; i <= n; ++i) levels.push_back({i});  // includes 0
      } else {
        for (int i = 1; i <= n; ++i) levels.push_back({-i});
        for (int i = 1; i <= n; ++i) levels.push_back({i});
      }
      break;
    case Family::C:
      if (mode == Mode::NN) {
        for (int i = n; i >= 1; --i) levels.push_back({-i});
        for (int i = 1; i <= n; ++i) levels.push_back({i});
      } else {
        for (int i = 1; i <= n; ++i) levels.push_back({-i});
        for (int i = 1; i <= n; ++i) levels.push_back({i});
      }
      break;
    case Family::D:
      if (mode == Mode::NN) {
        for (int i = n; i >= 2; --i) levels.push_back({-i});
        levels.push_back({-1, 1});  // incomparable pair
        for (int i = 2; i <= n; ++i) levels.push_back({i});
      } else {
        int c = *d_cut;
        if (c < 2 || c > n) throw BadCut("d_cut must lie in {2..n}");
        int one = second_variant ? 1 : -1;
        for (int i = 2; i <= c; ++i) levels.push_back({-i});
        levels.push_back({one});
        for (int i = c + 1; i <= n; ++i) levels.push_back({-i});
        for (int i = 2; i <= c; ++i) levels.push_back({i});
        levels.push_back({-one});
        for (int i = c + 1; i <= n; ++i) levels.push_back({i});
      }
      break;
  }

  GroundOrder o;
  int r = 0;
  for (const auto& lvl : levels) {
    for (int e : lvl) {
      o.domain.push_back(e);
      o.rank[e] = r;
    }
    ++r;
  }
  return o;
}

GroundOrder rotate_order(const GroundOrder& o, int s0) {
  GroundOrder out;
  int pos = o.rank.at(s0);
  int m = static_cast<int>(o.domain.size());
  for (int t = 1; t <= m; ++t) {
    int e = o.domain[(pos + t) % m];
    out.domain.push_back(e);
    out.rank[e] = t - 1;
  }
  return out;
}

std::vector<Edge> bump_graph(const ClassicalPartition& p, const GroundOrder& o) {
  // Domain sanity: every partition element must be ordered.
  for (const auto& b : p.blocks())
    for (int e : b)
      if (!o.contains(e)) throw OrderMismatch("element outside ground order");
  for (int e : p.zero_block())
    if (!o.contains(e)) throw OrderMismatch("element outside ground order");

  std::vector<Edge> edges;
  auto add_block = [&](std::vector<int> b, bool zero) {
    if (zero && o.contains(0)) b.push_back(0);  // the dot 0 ties the zero block
    std::sort(b.begin(), b.end(),
              [&](int x, int y) { return o.rank.at(x) < o.rank.at(y); });
    // group by rank, connect consecutive groups completely
    size_t i = 0;
    std::vector<int> prev;
    while (i < b.size()) {
      size_t j = i;
      while (j < b.size() && o.rank.at(b[j]) == o.rank.at(b[i])) ++j;
      std::vector<int> cur(b.begin() + i, b.begin() + j);
      if (!prev.empty())
        for (int x : prev)
          for (int y : cur) edges.emplace_back(x, y);
      prev = std::move(cur);
      i = j;
    }
  };
  for (const auto& b : p.blocks()) add_block(b, false);
  if (p.has_zero_block()) add_block(p.zero_block(), true);
  std::sort(edges.begin(), edges.end());
  return edges;
}

namespace {

bool edges_cross(const GroundOrder& o, const Edge& e1, const Edge& e2) {
  int a = o.rank.at(e1.first), c = o.rank.at(e1.second);
  int b = o.rank.at(e2.first), d = o.rank.at(e2.second);
  return (a < b && b < c && c < d) || (b < a && a < d && d < c);
}

bool edges_nest(const GroundOrder& o, const Edge& e1, const Edge& e2) {
  int a = o.rank.at(e1.first), d = o.rank.at(e1.second);
  int b = o.rank.at(e2.first), c = o.rank.at(e2.second);
  return (a < b && c < d) || (b < a && d < c);
}

}  // namespace

bool is_noncrossing_wrt(const ClassicalPartition& p, const GroundOrder& o) {
  auto edges = bump_graph(p, o);
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (edges_cross(o, edges[i], edges[j])) return false;
  return true;
}

bool is_nonnesting_wrt(const ClassicalPartition& p, const GroundOrder& o) {
  auto edges = bump_graph(p, o);
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (edges_nest(o, edges[i], edges[j])) return false;
  return true;
}

namespace {

// In D the +-1 dots sit at the centre of the circular diagram; a zero block
// always wraps the centre, so it must own those dots.
bool d_zero_block_ok(const ClassicalPartition& p) {
  return !p.has_zero_block() || p.in_zero_block(1);
}

}  // namespace

bool is_classical_noncrossing(const GroupFamily& g,
                              const ClassicalPartition& p) {
  p.validate(g);
  if (g.family != Family::D)
    return is_noncrossing_wrt(p, ground_order(g, Mode::NC));
  if (!d_zero_block_ok(p)) return false;
  for (int c = 2; c <= g.rank; ++c) {
    if (is_noncrossing_wrt(p, ground_order(g, Mode::NC, c, false)) &&
        is_noncrossing_wrt(p, ground_order(g, Mode::NC, c, true)))
      return true;
  }
  return false;
}

bool is_classical_nonnesting(const GroupFamily& g,
                             const ClassicalPartition& p) {
  p.validate(g);
  if (g.family == Family::D && !d_zero_block_ok(p)) return false;
  return is_nonnesting_wrt(p, ground_order(g, Mode::NN));
}

bool satisfies_mode(const GroupFamily& g, Mode mode,
                    const ClassicalPartition& p) {
  return mode == Mode::NC ? is_classical_noncrossing(g, p)
                          : is_classical_nonnesting(g, p);
}

PartitionType partition_type(const ClassicalPartition& p) {
  PartitionType t;
  t.zero_size = static_cast<int>(p.zero_block().size());
  std::map<std::vector<int>, bool> seen;
  for (const auto& b : p.blocks()) {
    std::vector<int> neg;
    for (int e : b) neg.push_back(-e);
    std::sort(neg.begin(), neg.end());
    if (seen.count(neg)) continue;  // mirror already recorded
    seen[b] = true;
    t.pair_sizes.push_back(static_cast<int>(b.size()));
  }
  std::sort(t.pair_sizes.rbegin(), t.pair_sizes.rend());
  return t;
}

bool refines(const ClassicalPartition& q, const ClassicalPartition& p) {
  auto inside = [&](const std::vector<int>& small) {
    // the zero block of p absorbs anything touching it
    bool in_zero = true;
    for (int e : small)
      if (!p.in_zero_block(e)) { in_zero = false; break; }
    if (in_zero) return true;
    const std::vector<int>& host = p.block_of(small[0]);
    for (int e : small)
      if (std::find(host.begin(), host.end(), e) == host.end()) return false;
    return true;
  };
  for (const auto& b : q.blocks())
    if (!inside(b)) return false;
  // q's zero block (plus the implicit 0) must land inside p's zero block
  for (int e : q.zero_block())
    if (!p.in_zero_block(e)) return false;
  return true;
}

namespace {

// Set partitions of [m] via restricted growth strings.
void for_each_set_partition(
    int m, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<int> rgs(m, 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == m) {
      int nb = maxv;
      std::vector<std::vector<int>> blocks(nb);
      for (int t = 0; t < m; ++t) blocks[rgs[t]].push_back(t + 1);
      fn(blocks);
      return;
    }
    for (int v = 0; v <= maxv; ++v) {
      rgs[i] = v;
      rec(i + 1, std::max(maxv, v + 1));
    }
  };
  if (m == 0) {
    fn({});
    return;
  }
  rec(0, 0);
}

}  // namespace

void for_each_symmetric_partition(
    const GroupFamily& g,
    const std::function<void(const ClassicalPartition&)>& fn) {
  const int n = g.ambient_dim();

  if (g.family == Family::A) {
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
      fn(ClassicalPartition::from_positive_partition(n, blocks));
    });
    return;
  }

  // Choose the absolute support of the zero block, partition the rest of [n]
  // into pair supports, and assign signs with the minimum fixed positive.
  for (int zmask = 0; zmask < (1 << n); ++zmask) {
    std::vector<int> zero, rest;
    for (int i = 1; i <= n; ++i)
      (zmask >> (i - 1)) & 1 ? zero.push_back(i) : rest.push_back(i);
    if (g.family == Family::D && zero.size() == 1) continue;
    std::vector<int> zfull;
    for (int z : zero) { zfull.push_back(z); zfull.push_back(-z); }

    const int m = static_cast<int>(rest.size());
    for_each_set_partition(m, [&](const std::vector<std::vector<int>>& supp) {
      // sign patterns per support block, min element fixed +
      std::vector<int> signbits(supp.size(), 0);
      std::function<void(size_t)> rec = [&](size_t bi) {
        if (bi == supp.size()) {
          std::vector<std::vector<int>> blocks;
          for (size_t t = 0; t < supp.size(); ++t) {
            std::vector<int> b, nb;
            const auto& s = supp[t];
            for (size_t u = 0; u < s.size(); ++u) {
              int sign = (u == 0) ? 1 : ((signbits[t] >> (u - 1)) & 1 ? -1 : 1);
              b.push_back(sign * rest[s[u] - 1]);
              nb.push_back(-sign * rest[s[u] - 1]);
            }
            blocks.push_back(std::move(b));
            blocks.push_back(std::move(nb));
          }
          fn(ClassicalPartition::make(n, std::move(blocks), zfull));
          return;
        }
        int choices = 1 << (supp[bi].size() - 1);
        for (int sb = 0; sb < choices; ++sb) {
          signbits[bi] = sb;
          rec(bi + 1);
        }
      };
      rec(0);
    });
  }
}

void for_each_classical(
    const GroupFamily& g, Mode mode,
    const std::function<void(const ClassicalPartition&)>& fn) {
  for_each_symmetric_partition(g, [&](const ClassicalPartition& p) {
    if (satisfies_mode(g, mode, p)) fn(p);
  });
}

std::vector<ClassicalPartition> enumerate_classical(const GroupFamily& g,
                                                    Mode mode) {
  std::vector<ClassicalPartition> out;
  for_each_classical(g, mode, [&](const ClassicalPartition& p) {
    out.push_back(p);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ncnn
