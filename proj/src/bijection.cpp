#include "ncnn/bijection.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

// An open block of the dot-by-dot sweep.  Fictive markers stand for the
// still-unplaced negative side of the i-th switching chain and compare below
// every real dot; among themselves P_i^- > P_j^- iff i<j in the noncrossing
// sweep and iff i>j in the nonnesting sweep, so P_1^- is opened first either
// way.
struct OpenBlock {
  std::vector<int> elems;
  int marker = 0;     // 1-based switching index, 0 for an a-block
  int remaining = 0;
  int max_real = 0;   // 0 while only the fictive marker is present
};

struct SweepResult {
  std::vector<std::vector<int>> m_blocks;  // completed a-blocks, in a order
  std::vector<std::vector<int>> p_parts;   // positive parts by marker index
};

SweepResult dot_by_dot(Mode mode, int n, const std::vector<int>& a,
                       const std::vector<int>& mu, const std::vector<int>& nu) {
  const int k = static_cast<int>(nu.size());
  std::vector<OpenBlock> open;
  for (int i = 1; i <= k; ++i)
    open.push_back({{}, i, nu[i - 1], 0});

  SweepResult res;
  res.m_blocks.resize(a.size());
  res.p_parts.resize(k);

  auto key = [&](const OpenBlock& b) {
    // (has a real dot, value); fictive values ordered per mode
    if (b.max_real > 0) return std::pair<int, int>(1, b.max_real);
    return std::pair<int, int>(0, mode == Mode::NC ? -b.marker : b.marker);
  };

  size_t next_a = 0;
  std::vector<std::pair<int, std::vector<int>>> done_m;  // (a_i, elems)
  for (int j = 1; j <= n; ++j) {
    if (next_a < a.size() && j == a[next_a]) {
      OpenBlock nb{{j}, 0, mu[next_a] - 1, j};
      ++next_a;
      if (nb.remaining == 0)
        done_m.emplace_back(nb.elems[0], nb.elems);
      else
        open.push_back(std::move(nb));
      continue;
    }
    if (open.empty())
      throw InternalContradiction("no open block available for dot " +
                                  std::to_string(j));
    size_t pick = 0;
    for (size_t t = 1; t < open.size(); ++t) {
      bool better = mode == Mode::NC ? key(open[t]) > key(open[pick])
                                     : key(open[t]) < key(open[pick]);
      if (better) pick = t;
      else if (key(open[t]) == key(open[pick]))
        throw InternalContradiction("open block policy tie");
    }
    OpenBlock& b = open[pick];
    b.elems.push_back(j);
    b.max_real = j;
    if (--b.remaining == 0) {
      if (b.marker > 0)
        res.p_parts[b.marker - 1] = b.elems;
      else
        done_m.emplace_back(b.elems[0], b.elems);
      open.erase(open.begin() + pick);
    }
  }
  if (!open.empty() || next_a != a.size())
    throw InternalContradiction("dot-by-dot sweep left blocks incomplete");

  std::sort(done_m.begin(), done_m.end());
  for (size_t i = 0; i < done_m.size(); ++i) res.m_blocks[i] = done_m[i].second;
  return res;
}

// Pair the incomplete switching halves.  C-style: P_i* with -P_{k+1-i}*
// (middle self-pair becomes the zero block).  B nonnesting with k odd:
// P_k* with -P_k* and the dot 0, P_i* with -P_{k-i}* otherwise.
ClassicalPartition assemble(const GroupFamily& g, Mode mode, int n,
                            const SweepResult& sweep) {
  const int k = static_cast<int>(sweep.p_parts.size());
  std::vector<std::vector<int>> blocks;
  std::vector<int> zero;
  for (const auto& m : sweep.m_blocks) {
    blocks.push_back(m);
    std::vector<int> neg;
    for (int e : m) neg.push_back(-e);
    blocks.push_back(std::move(neg));
  }
  auto join = [&](int i, int j) {  // P_i* with -P_j*, 1-based
    if (i == j) {
      for (int e : sweep.p_parts[i - 1]) {
        zero.push_back(e);
        zero.push_back(-e);
      }
      return;
    }
    std::vector<int> b = sweep.p_parts[i - 1];
    for (int e : sweep.p_parts[j - 1]) b.push_back(-e);
    std::vector<int> nb;
    for (int e : b) nb.push_back(-e);
    blocks.push_back(std::move(b));
    blocks.push_back(std::move(nb));
  };

  const bool b_nn_zero =
      g.family == Family::B && mode == Mode::NN && k % 2 == 1;
  if (b_nn_zero) {
    join(k, k);
    for (int i = 1; 2 * i < k; ++i) join(i, k - i);
  } else {
    for (int i = 1; 2 * i <= k + 1; ++i) join(i, k + 1 - i);
  }
  return ClassicalPartition::make(n, std::move(blocks), std::move(zero));
}

ClassicalPartition rebuild_abc(const GroupFamily& g, Mode mode, int n,
                               const StatisticBundle& s) {
  SweepResult sweep = dot_by_dot(mode, n, s.a, s.mu, s.nu);
  if (g.family == Family::A)
    return ClassicalPartition::from_positive_partition(n, sweep.m_blocks);
  return assemble(g, mode, n, sweep);
}

std::vector<int> shifted(const std::vector<int>& a, int d) {
  std::vector<int> out(a);
  for (int& v : out) v += d;
  return out;
}

ClassicalPartition rebuild_d_nn(int n, const StatisticBundle& s) {
  const int k = static_cast<int>(s.nu.size());
  const int l = static_cast<int>(s.c.size());

  if (l == 0) {
    // +-1 are singletons; the rest is a C_{n-1} nonnesting partition
    GroupFamily cf(Family::C, n - 1);
    StatisticBundle cs{shifted(s.a, -1), s.mu, s.nu, {}, {}};
    ClassicalPartition core = relabel_up(rebuild(cf, Mode::NN, n - 1, cs));
    std::vector<std::vector<int>> blocks = core.blocks();
    blocks.push_back({1});
    blocks.push_back({-1});
    return ClassicalPartition::make(n, std::move(blocks), core.zero_block());
  }
  if (l == 1 && s.c[0] == CSym::PlusMinus) {
    // +-1 join the zero block of a B_{n-1} nonnesting partition
    GroupFamily bf(Family::B, n - 1);
    StatisticBundle bs{shifted(s.a, -1), s.mu, s.nu, {}, {}};
    ClassicalPartition core = relabel_up(rebuild(bf, Mode::NN, n - 1, bs));
    std::vector<int> zero = core.zero_block();
    zero.push_back(1);
    zero.push_back(-1);
    return ClassicalPartition::make(n, core.blocks(), std::move(zero));
  }

  // Cases (+), (-), (-,+), (+,-): the partition is its own C_n nonnesting
  // avatar after readmitting 1 as positive and -1 as negative.  The directly
  // handled cases are those whose block of 1 is the <_lp-last R block, i.e.
  // c ending in +; the others are their images under the exchange of +-1.
  bool mirrored = s.c.back() == CSym::Minus;
  GroupFamily cf(Family::C, n);
  StatisticBundle cs;
  if (l == 1) {
    // block of 1 becomes the nonswitching block (1, nu_k + 1)
    cs.a = s.a;
    cs.a.insert(cs.a.begin(), 1);
    cs.mu = s.mu;
    cs.mu.insert(cs.mu.begin(), s.nu[k - 1] + 1);
    cs.nu.assign(s.nu.begin(), s.nu.end() - 1);
  } else {
    // block of 1 becomes the first switching block with nu_k + 1 positives
    cs.a = s.a;
    cs.mu = s.mu;
    cs.nu.push_back(s.nu[k - 1] + 1);
    cs.nu.insert(cs.nu.end(), s.nu.begin(), s.nu.end() - 1);
  }
  ClassicalPartition out = rebuild(cf, Mode::NN, n, cs);
  if (mirrored) out = out.with_negated({1, -1});
  return out;
}

ClassicalPartition rebuild_d_nc(const GroupFamily& g, int n,
                                const StatisticBundle& s) {
  GroupFamily bf(Family::B, n - 1);
  StatisticBundle bs{shifted(s.a, -1), s.mu, s.nu, {}, {}};
  TaggedBPartition t;
  t.d_rank = n;
  t.base = rebuild(bf, Mode::NC, n - 1, bs);
  t.c = s.c;
  t.xi = s.xi;
  return central_unmerge(g, t);
}

}  // namespace

ClassicalPartition rebuild(const GroupFamily& g, Mode mode, int n,
                           const StatisticBundle& s) {
  if (n != g.ambient_dim())
    throw InvalidStatistics("n does not match the group");
  ValidationResult v = validate_statistics(g, n, s, mode);
  if (!v.ok) {
    std::string msg = "invalid statistics:";
    for (const auto& code : v.violations) msg += " " + code;
    throw InvalidStatistics(msg);
  }
  ClassicalPartition out =
      g.family == Family::D
          ? (mode == Mode::NN ? rebuild_d_nn(n, s) : rebuild_d_nc(g, n, s))
          : rebuild_abc(g, mode, n, s);
  out.validate(g);
  return out;
}

StatisticBundle transport_statistics(const GroupFamily& g, Direction dir,
                                     const StatisticBundle& s) {
  StatisticBundle out = s;
  switch (g.family) {
    case Family::A:
    case Family::C:
      break;
    case Family::B:
      out.nu = dir == Direction::NNtoNC ? sigma_B_inverse(s.nu) : sigma_B(s.nu);
      break;
    case Family::D:
      if (dir == Direction::NNtoNC) {
        SigmaDResult r = sigma_D(s.nu, s.c);
        out.nu = r.nu_hat;
        out.xi = r.xi_inv;
        out.c = r.c_inv;
      } else {
        auto [nu, c] = sigma_D_inverse(s.nu, s.xi, s.c);
        out.nu = nu;
        out.c = c;
        out.xi.assign(nu.end() - c.size(), nu.end());
      }
      break;
  }
  return out;
}

ClassicalPartition convert(const GroupFamily& g, Direction dir,
                           const ClassicalPartition& p) {
  const Mode from = dir == Direction::NNtoNC ? Mode::NN : Mode::NC;
  const Mode to = dir == Direction::NNtoNC ? Mode::NC : Mode::NN;
  StatisticBundle s = extract_statistics(g, from, p);
  StatisticBundle ts = transport_statistics(g, dir, s);
  ClassicalPartition out = rebuild(g, to, g.ambient_dim(), ts);
  if (!satisfies_mode(g, to, out) || partition_type(out) != partition_type(p))
    throw InternalContradiction("convert broke the target predicate or type");
  return out;
}

namespace {

bool lex_leq(const std::vector<int>& x, const std::vector<int>& y) {
  return x <= y;  // vector comparison is lexicographic
}

int first_two_product(const std::vector<int>& u) {
  int first = 0;
  for (int v : u) {
    if (v == 0) continue;
    if (first == 0) first = v;
    else return first * v;
  }
  return 0;
}

bool rows_match(const std::vector<int>& u, const OmegaRow& ru,
                const std::vector<int>& v, const OmegaRow& rv) {
  if (ru != rv) return false;
  // fourth bullet: first-two-nonzero products must differ when u has more
  // than one -1 and at least one +1
  if (ru.minus_ones > 1 && ru.ones > 0 &&
      first_two_product(u) == first_two_product(v))
    return false;
  return true;
}

}  // namespace

std::vector<OmegaRow> omega_rows(const FixedSpaceBasis& fb) {
  std::vector<OmegaRow> rows;
  for (const auto& u : fb.omega) {
    OmegaRow r;
    const int n = static_cast<int>(u.size());
    for (int v : u) {
      if (v == 1) ++r.ones;
      if (v == -1) ++r.minus_ones;
    }
    for (int j = 0; j < n; ++j) {
      std::vector<int> e(n, 0);
      e[j] = 1;
      if (lex_leq(e, u)) ++r.down_e;
    }
    for (const auto& w : fb.omega)
      if (lex_leq(w, u)) ++r.down_omega;
    rows.push_back(r);
  }
  return rows;
}

bool verify_central_theorem(const GroupFamily& g, const ClassicalPartition& nn,
                            const ClassicalPartition& nc) {
  if (!is_classical_nonnesting(g, nn) || !is_classical_noncrossing(g, nc))
    return false;
  FixedSpaceBasis ox = canonical_basis(nn);
  FixedSpaceBasis oy = canonical_basis(nc);
  if (ox.gamma != oy.gamma) return false;
  if (ox.omega.size() != oy.omega.size()) return false;
  const int m = static_cast<int>(ox.omega.size());
  std::vector<OmegaRow> rx = omega_rows(ox), ry = omega_rows(oy);

  auto ok_at = [&](int i, int j) {
    return rows_match(ox.omega[i], rx[i], oy.omega[j], ry[j]);
  };

  // canonical pairing first: i-th basis vector with i-th
  bool canonical = true;
  for (int i = 0; i < m && canonical; ++i) canonical = ok_at(i, i);
  if (canonical) return true;

  // exhaust all bijections before giving up (should not be reached)
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool all = true;
    for (int i = 0; i < m && all; ++i) all = ok_at(i, perm[i]);
    if (all) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace ncnn
