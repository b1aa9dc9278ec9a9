#include "ncnn/statistics.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ncnn/errors.hpp"

namespace ncnn {

std::string csym_to_string(CSym s) {
  switch (s) {
    case CSym::Plus: return "+";
    case CSym::Minus: return "-";
    case CSym::PlusMinus: return "pm";
  }
  return "?";
}

CSym csym_from_string(const std::string& s) {
  if (s == "+") return CSym::Plus;
  if (s == "-") return CSym::Minus;
  if (s == "pm" || s == "+-") return CSym::PlusMinus;
  throw ParseError("bad c symbol: " + s);
}

int positive_cutoff(const GroupFamily& g) {
  return g.family == Family::D ? 2 : 1;
}

int count_positives(const GroupFamily& g, const std::vector<int>& block) {
  const int cut = positive_cutoff(g);
  return static_cast<int>(
      std::count_if(block.begin(), block.end(), [&](int e) { return e >= cut; }));
}

namespace {

int least_positive(const GroupFamily& g, const std::vector<int>& b) {
  const int cut = positive_cutoff(g);
  int best = 0;
  for (int e : b)
    if (e >= cut && (best == 0 || e < best)) best = e;
  return best;  // 0 when no positive element
}

bool meets_one(const std::vector<int>& b) {
  return std::find(b.begin(), b.end(), 1) != b.end() ||
         std::find(b.begin(), b.end(), -1) != b.end();
}

CSym one_symbol(const std::vector<int>& b) {
  bool plus = std::find(b.begin(), b.end(), 1) != b.end();
  bool minus = std::find(b.begin(), b.end(), -1) != b.end();
  if (plus && minus) return CSym::PlusMinus;
  if (plus) return CSym::Plus;
  if (minus) return CSym::Minus;
  throw InternalContradiction("block does not meet {1,-1}");
}

}  // namespace

BlockClassification classify_blocks(const GroupFamily& g,
                                    const ClassicalPartition& p) {
  BlockClassification out;
  std::vector<std::vector<int>> all = p.blocks();
  if (p.has_zero_block()) all.push_back(p.zero_block());

  std::vector<std::pair<int, std::vector<int>>> sw;  // (least positive, block)
  for (const auto& b : all) {
    int pos = count_positives(g, b);
    if (pos == 0) continue;
    if (pos == static_cast<int>(b.size()))
      out.m_blocks.push_back(b);
    else
      sw.emplace_back(least_positive(g, b), b);
  }
  std::sort(out.m_blocks.begin(), out.m_blocks.end(),
            [&](const auto& x, const auto& y) {
              return least_positive(g, x) < least_positive(g, y);
            });
  std::sort(sw.begin(), sw.end());
  for (auto& [lp, b] : sw) {
    if (g.family == Family::D && meets_one(b))
      out.r_indices.push_back(static_cast<int>(out.switching.size()));
    out.switching.push_back(std::move(b));
  }
  return out;
}

StatisticBundle extract_statistics(const GroupFamily& g, Mode mode,
                                   const ClassicalPartition& p) {
  if (!satisfies_mode(g, mode, p))
    throw PredicateViolation("partition fails the " +
                             std::string(mode == Mode::NN ? "nonnesting"
                                                          : "noncrossing") +
                             " predicate for " + g.name());

  if (g.family == Family::D && mode == Mode::NC) {
    TaggedBPartition t = central_merge(g, p);
    GroupFamily b(Family::B, g.rank - 1);
    StatisticBundle s = extract_statistics(b, Mode::NC, t.base);
    for (int& ai : s.a) ++ai;  // acknowledge the {2..n} relabelling
    s.c = t.c;
    s.xi = t.xi;
    return s;
  }

  BlockClassification cls = classify_blocks(g, p);
  StatisticBundle s;
  for (const auto& b : cls.m_blocks) {
    s.a.push_back(least_positive(g, b));
    s.mu.push_back(static_cast<int>(b.size()));
  }
  for (const auto& b : cls.switching) s.nu.push_back(count_positives(g, b));

  if (g.family == Family::D) {
    const int k = static_cast<int>(cls.switching.size());
    const int l = static_cast<int>(cls.r_indices.size());
    for (int t = 0; t < l; ++t)
      if (cls.r_indices[t] != k - l + t)
        throw InternalContradiction(
            "blocks meeting {1,-1} are not the <_lp-last switching blocks");
    for (int idx : cls.r_indices) {
      s.c.push_back(one_symbol(cls.switching[idx]));
      s.xi.push_back(s.nu[idx]);
    }
  }
  return s;
}

std::vector<int> sigma_B(const std::vector<int>& nu) {
  const int k = static_cast<int>(nu.size());
  if (k % 2 == 0) return nu;
  std::vector<int> out;
  for (int i = 1; i <= (k - 1) / 2; ++i) out.push_back(nu[i - 1]);
  for (int i = (k + 3) / 2; i <= k; ++i) out.push_back(nu[i - 1]);
  out.push_back(nu[(k + 1) / 2 - 1]);
  return out;
}

std::vector<int> sigma_B_inverse(const std::vector<int>& nu) {
  const int k = static_cast<int>(nu.size());
  if (k % 2 == 0) return nu;
  std::vector<int> out;
  for (int i = 1; i <= (k - 1) / 2; ++i) out.push_back(nu[i - 1]);
  out.push_back(nu[k - 1]);
  for (int i = (k + 1) / 2; i <= k - 1; ++i) out.push_back(nu[i - 1]);
  return out;
}

SigmaDResult sigma_D(const std::vector<int>& nu, const std::vector<CSym>& c) {
  const int k = static_cast<int>(nu.size());
  const int l = static_cast<int>(c.size());
  if (l > 2) throw BadArity("c has more than two entries");
  if ((k - l) % 2 != 0)
    throw InvalidStatistics("k - l must be even for sigma_D");
  SigmaDResult r;
  if (l == 0) {
    r.nu_hat = nu;
    return r;
  }
  if (l == 1) {
    r.nu_hat = sigma_B_inverse(nu);
    r.xi_inv = {nu[k - 1]};
    r.c_inv = c;
    return r;
  }
  // l == 2, k even >= 2: merge the last two entries into position k/2
  for (int i = 1; i <= k / 2 - 1; ++i) r.nu_hat.push_back(nu[i - 1]);
  r.nu_hat.push_back(nu[k - 2] + nu[k - 1]);
  for (int i = k / 2; i <= k - 2; ++i) r.nu_hat.push_back(nu[i - 1]);
  r.xi_inv = {nu[k - 1], nu[k - 2]};
  r.c_inv = {c[1], c[0]};
  return r;
}

std::pair<std::vector<int>, std::vector<CSym>> sigma_D_inverse(
    const std::vector<int>& nu, const std::vector<int>& xi,
    const std::vector<CSym>& c) {
  const int l = static_cast<int>(c.size());
  if (static_cast<int>(xi.size()) != l)
    throw BadArity("xi and c must have equal length");
  if (l > 2) throw BadArity("c has more than two entries");
  if (l == 0) return {nu, c};
  const int kh = static_cast<int>(nu.size());
  if (l == 1) {
    if (kh % 2 == 0 || nu[(kh + 1) / 2 - 1] != xi[0])
      throw InvalidStatistics("xi inconsistent with nu for sigma_D inverse");
    return {sigma_B(nu), c};
  }
  const int k = kh + 1;
  if (k % 2 != 0 || nu[k / 2 - 1] != xi[0] + xi[1])
    throw InvalidStatistics("xi inconsistent with nu for sigma_D inverse");
  std::vector<int> out;
  for (int i = 1; i <= k / 2 - 1; ++i) out.push_back(nu[i - 1]);
  for (int i = k / 2 + 1; i <= k - 1; ++i) out.push_back(nu[i - 1]);
  out.push_back(xi[1]);
  out.push_back(xi[0]);
  return {out, {c[1], c[0]}};
}

ClassicalPartition relabel_down(const ClassicalPartition& p) {
  auto shift = [](std::vector<int> b) {
    for (int& e : b) e -= (e > 0 ? 1 : -1);
    return b;
  };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) blocks.push_back(shift(b));
  return ClassicalPartition::make(p.n() - 1, std::move(blocks),
                                  shift(p.zero_block()));
}

ClassicalPartition relabel_up(const ClassicalPartition& p) {
  auto shift = [](std::vector<int> b) {
    for (int& e : b) e += (e > 0 ? 1 : -1);
    return b;
  };
  std::vector<std::vector<int>> blocks;
  for (const auto& b : p.blocks()) blocks.push_back(shift(b));
  return ClassicalPartition::make(p.n() + 1, std::move(blocks),
                                  shift(p.zero_block()));
}

void check_tags(const TaggedBPartition& t) {
  const int l = static_cast<int>(t.c.size());
  if (l > 2) throw InvalidTags("more than two tags");
  if (l == 2) {
    auto as_set = [](CSym s) {
      return s == CSym::PlusMinus ? 3 : (s == CSym::Plus ? 1 : 2);
    };
    if (as_set(t.c[0]) & as_set(t.c[1]))
      throw InvalidTags("tag entries are not pairwise disjoint");
  }
  if (t.c.size() != t.xi.size())
    throw InvalidTags("c and xi must have equal length");
  for (int x : t.xi)
    if (x < 1) throw InvalidTags("xi entries must be positive");
  int zero_pos = static_cast<int>(
      std::count_if(t.base.zero_block().begin(), t.base.zero_block().end(),
                    [](int e) { return e > 0; }));
  if (std::accumulate(t.xi.begin(), t.xi.end(), 0) != zero_pos)
    throw InvalidTags("xi must sum to the zero block's positive count");
}

TaggedBPartition central_merge(const GroupFamily& g,
                               const ClassicalPartition& p) {
  if (g.family != Family::D)
    throw MembershipError("central merging applies to D only");
  if (!is_classical_noncrossing(g, p))
    throw NotNoncrossing("central merging needs a noncrossing partition");

  TaggedBPartition t;
  t.d_rank = g.rank;

  auto strip_ones = [](std::vector<int> b) {
    std::erase_if(b, [](int e) { return e == 1 || e == -1; });
    return b;
  };

  std::vector<std::vector<int>> blocks;
  std::vector<int> zero;
  if (p.in_zero_block(1)) {
    // c = (pm): the zero block survives, minus the centre dots
    zero = strip_ones(p.zero_block());
    for (const auto& b : p.blocks()) blocks.push_back(b);
    t.c = {CSym::PlusMinus};
    t.xi = {count_positives(g, p.zero_block())};
  } else {
    const auto& b1 = p.block_of(1);
    if (b1.size() == 1) {
      // c = (): both centre dots were singletons
      zero = p.zero_block();
      for (const auto& b : p.blocks())
        if (b.size() != 1 || (b[0] != 1 && b[0] != -1)) blocks.push_back(b);
    } else {
      if (p.has_zero_block())
        throw InternalContradiction("noncrossing D partition with both a zero "
                                    "block and a nonsingleton centre block");
      std::vector<int> merged;
      for (int e : b1)
        if (e != 1 && e != -1) { merged.push_back(e); merged.push_back(-e); }
      std::sort(merged.begin(), merged.end());
      merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
      zero = merged;
      std::vector<int> nb1;
      for (int e : b1) nb1.push_back(-e);
      std::sort(nb1.begin(), nb1.end());
      std::vector<int> sb1 = b1;
      std::sort(sb1.begin(), sb1.end());
      for (const auto& b : p.blocks())
        if (b != sb1 && b != nb1) blocks.push_back(b);
      // tags from the blocks meeting {1,-1} that hold a positive, <_lp order
      std::vector<std::pair<int, const std::vector<int>*>> rs;
      for (const auto* b : {&sb1, &nb1})
        if (count_positives(g, *b) > 0)
          rs.emplace_back(least_positive(g, *b), b);
      std::sort(rs.begin(), rs.end());
      for (auto& [lp, b] : rs) {
        t.c.push_back(one_symbol(*b));
        t.xi.push_back(count_positives(g, *b));
      }
    }
  }
  t.base = relabel_down(ClassicalPartition::make(p.n(), std::move(blocks),
                                                 std::move(zero)));
  t.base.validate(GroupFamily(Family::B, g.rank - 1));
  check_tags(t);
  return t;
}

ClassicalPartition central_unmerge(const GroupFamily& g,
                                   const TaggedBPartition& t) {
  if (g.family != Family::D || g.rank != t.d_rank)
    throw MembershipError("tagged partition does not match the group");
  GroupFamily bfam(Family::B, g.rank - 1);
  if (!is_classical_noncrossing(bfam, t.base))
    throw NotNoncrossing("tagged base must be noncrossing for B_{n-1}");
  check_tags(t);

  ClassicalPartition up = relabel_up(t.base);
  std::vector<std::vector<int>> blocks = up.blocks();
  std::vector<int> zero = up.zero_block();
  const int l = static_cast<int>(t.c.size());

  if (l == 0) {
    blocks.push_back({1});
    blocks.push_back({-1});
  } else if (l == 1 && t.c[0] == CSym::PlusMinus) {
    zero.push_back(1);
    zero.push_back(-1);
  } else {
    // split the zero block back into the pair of centre blocks
    std::vector<int> zpos;
    for (int e : zero)
      if (e > 0) zpos.push_back(e);
    std::sort(zpos.begin(), zpos.end());
    const int j = static_cast<int>(zpos.size());
    const int i = t.xi[0];
    if (i > j) throw InvalidTags("xi exceeds the zero block");
    int s = t.c[0] == CSym::Plus ? 1 : -1;
    std::vector<int> first(zpos.begin(), zpos.begin() + i);
    for (int u = i; u < j; ++u) first.push_back(-zpos[u]);
    first.push_back(s);
    std::vector<int> second;
    for (int e : first) second.push_back(-e);
    blocks.push_back(std::move(first));
    blocks.push_back(std::move(second));
    zero.clear();
  }

  auto out = ClassicalPartition::make(g.ambient_dim(), std::move(blocks),
                                      std::move(zero));
  if (!is_classical_noncrossing(g, out))
    throw InternalContradiction("central unmerge produced a crossing");
  return out;
}

ValidationResult validate_statistics(const GroupFamily& g, int n,
                                     const StatisticBundle& s, Mode mode) {
  ValidationResult res;
  auto fail = [&](const std::string& code) {
    res.ok = false;
    res.violations.push_back(code);
  };

  const int m1 = static_cast<int>(s.a.size());
  const int m2 = static_cast<int>(s.mu.size());
  const int k = static_cast<int>(s.nu.size());
  const int l = static_cast<int>(s.c.size());
  const bool d = g.family == Family::D;

  for (int v : s.mu)
    if (v < 1) fail("mu-positive");
  for (int v : s.nu)
    if (v < 1) fail("nu-positive");
  for (int v : s.a)
    if (v < 1) fail("a-positive");

  if (m1 != m2) fail("m1!=m2");

  long long total = std::accumulate(s.mu.begin(), s.mu.end(), 0LL) +
                    std::accumulate(s.nu.begin(), s.nu.end(), 0LL);
  if (g.family == Family::A) {
    if (!s.nu.empty()) fail("nu-empty-for-A");
    if (total != n) fail("sum");
  } else if (d) {
    if (total != n - 1) fail("sum");
  } else {
    if (total != n) fail("sum");
  }

  if (!d && (l != 0 || !s.xi.empty())) fail("c-xi-empty");

  // the a-chain: a_{i-1} < a_i <= mu_0 + mu_1 + ... + mu_{i-1} + sum(nu)
  if (m1 == m2) {
    long long a_prev = d ? 1 : 0;
    long long bound = (d ? 2 : 1) + std::accumulate(s.nu.begin(), s.nu.end(), 0LL);
    for (int i = 0; i < m1; ++i) {
      if (!(a_prev < s.a[i] && s.a[i] <= bound)) {
        fail("a-chain");
        break;
      }
      a_prev = s.a[i];
      bound += s.mu[i];
    }
  }

  if (d) {
    if (l > 2) fail("c-arity");
    if (l == 2) {
      auto as_set = [](CSym sym) {
        return sym == CSym::PlusMinus ? 3 : (sym == CSym::Plus ? 1 : 2);
      };
      if (as_set(s.c[0]) & as_set(s.c[1])) fail("c-disjoint");
    }
    if (mode == Mode::NN) {
      if ((k - l) % 2 != 0) fail("parity");
      if (!s.xi.empty()) {
        if (static_cast<int>(s.xi.size()) != l) fail("xi-arity");
        else
          for (int t = 0; t < l; ++t)
            if (k - l + t < 0 || s.xi[t] != s.nu[k - l + t]) {
              fail("xi-derived");
              break;
            }
      }
    } else {
      if (static_cast<int>(s.xi.size()) != l) fail("xi-arity");
      for (int v : s.xi)
        if (v < 1) fail("xi-positive");
      if (k % 2 == 1) {
        long long zsum = std::accumulate(s.xi.begin(), s.xi.end(), 0LL);
        if (l < 1 || l > 2) fail("xi-zero-block");
        else if (zsum != s.nu[(k + 1) / 2 - 1]) fail("xi-sum");
      } else {
        if (l != 0) fail("xi-zero-block");
      }
    }
  }

  return res;
}

StarredStatistics starred_statistics(const GroupFamily& g,
                                     const ClassicalPartition& p) {
  (void)g;  // ordinary integer signs for every family
  auto npos = [](const std::vector<int>& b) {
    return static_cast<int>(
        std::count_if(b.begin(), b.end(), [](int e) { return e > 0; }));
  };

  StarredStatistics out;
  out.eta_star = static_cast<int>(p.zero_block().size()) / 2;

  std::vector<std::pair<int, const std::vector<int>*>> ms, joints;
  for (const auto& b : p.blocks()) {
    int pos = npos(b);
    if (pos == static_cast<int>(b.size())) {
      ms.emplace_back(b[0], &b);  // sorted ascending, so b[0] is least
    } else if (pos > 0) {
      // switching; the joint block is the <_lp-least of the pair, i.e. the
      // one whose minimum absolute value occurs positively
      int least = 2 * p.n();
      for (int e : b) least = std::min(least, std::abs(e));
      if (std::find(b.begin(), b.end(), least) != b.end())
        joints.emplace_back(least, &b);
    }
  }
  std::sort(ms.begin(), ms.end());
  std::sort(joints.begin(), joints.end());
  for (auto& [lp, b] : ms) {
    out.a_star.push_back(lp);
    out.mu_star.push_back(static_cast<int>(b->size()));
  }
  for (auto& [lp, b] : joints) {
    int pos = npos(*b);
    out.theta_star.emplace_back(pos, static_cast<int>(b->size()) - pos);
  }
  return out;
}

namespace {

// One representative signed support per nonzero block pair, with the
// minimum-absolute-value element positive, ordered by that minimum.
std::vector<std::vector<int>> pair_reps(const ClassicalPartition& p) {
  return p.representatives();
}

std::vector<int> f_vector(int n, const std::vector<int>& rep) {
  std::vector<int> v(n, 0);
  bool has_negative = false;
  for (int e : rep) {
    v[std::abs(e) - 1] = e > 0 ? 1 : -1;
    if (e < 0) has_negative = true;
  }
  if (has_negative)
    for (int& x : v) x = -x;  // switching: lex-nonpositive
  return v;
}

}  // namespace

FixedSpaceBasis canonical_basis(const ClassicalPartition& p) {
  FixedSpaceBasis out;
  out.gamma = static_cast<int>(p.zero_block().size()) / 2;
  for (const auto& rep : pair_reps(p)) out.omega.push_back(f_vector(p.n(), rep));
  return out;
}

FixedSpaceBasis omega_of(const ClassicalPartition& p) {
  const int n = p.n();
  const auto reps = pair_reps(p);
  const int npairs = static_cast<int>(reps.size());

  // all of Psi^n intersected with Fix: one free scalar in {-1,0,1} per pair
  std::vector<std::vector<int>> members;
  std::vector<int> t(npairs, -1);
  while (true) {
    std::vector<int> v(n, 0);
    for (int r = 0; r < npairs; ++r)
      if (t[r] != 0)
        for (int e : reps[r]) v[std::abs(e) - 1] = t[r] * (e > 0 ? 1 : -1);
    members.push_back(std::move(v));
    int r = 0;
    while (r < npairs && t[r] == 1) t[r++] = -1;
    if (r == npairs) break;
    ++t[r];
  }

  FixedSpaceBasis out;
  for (int j = 0; j < n; ++j) {
    bool always_zero = true;
    for (const auto& v : members)
      if (v[j] != 0) { always_zero = false; break; }
    if (always_zero) ++out.gamma;
  }

  // Gaussian elimination state for the independence check
  std::vector<std::vector<double>> rows;
  auto independent = [&](const std::vector<int>& u) {
    std::vector<double> w(u.begin(), u.end());
    for (const auto& r : rows) {
      int lead = 0;
      while (lead < n && r[lead] == 0.0) ++lead;
      if (lead < n && w[lead] != 0.0) {
        double f = w[lead] / r[lead];
        for (int j2 = 0; j2 < n; ++j2) w[j2] -= f * r[j2];
      }
    }
    for (int j2 = 0; j2 < n; ++j2)
      if (std::abs(w[j2]) > 1e-9) { rows.push_back(w); return true; }
    return false;
  };

  for (int i = 1; i <= n; ++i) {
    const std::vector<int>* best = nullptr;
    std::vector<int> best_diff;
    for (const auto& v : members) {
      std::vector<int> diff(n);
      for (int j = 0; j < n; ++j) diff[j] = std::abs((j == i - 1 ? 1 : 0) - v[j]);
      if (!best || diff < best_diff) {
        best = &v;
        best_diff = std::move(diff);
      } else if (diff == best_diff && v != *best) {
        throw InternalContradiction("lex-minimal u_i is not unique");
      }
    }
    const std::vector<int>& u = *best;
    if (std::all_of(u.begin(), u.end(), [](int x) { return x == 0; })) continue;
    if (!independent(u)) continue;
    bool has_minus = std::any_of(u.begin(), u.end(), [](int x) { return x == -1; });
    std::vector<int> ins(u);
    if (has_minus)
      for (int& x : ins) x = -x;
    out.omega.push_back(std::move(ins));
  }
  return out;
}

}  // namespace ncnn
