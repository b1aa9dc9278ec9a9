#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ncnn/bijection.hpp"
#include "ncnn/signed_perm.hpp"
#include "ncnn/statistics.hpp"
#include "oracles.hpp"

using namespace ncnn;

namespace {

ClassicalPartition bc_part(int n, std::vector<std::vector<int>> reps,
                           std::vector<int> zero_pos) {
  std::vector<std::vector<int>> blocks;
  for (auto& b : reps) {
    std::vector<int> neg;
    for (int e : b) neg.push_back(-e);
    blocks.push_back(std::move(b));
    blocks.push_back(std::move(neg));
  }
  std::vector<int> zero;
  for (int e : zero_pos) {
    zero.push_back(e);
    zero.push_back(-e);
  }
  return ClassicalPartition::make(n, std::move(blocks), std::move(zero));
}

ClassicalPartition worked_x() {
  return ClassicalPartition::make(
      8, {{1, 5, -2, -6, -8}, {-1, -5, 2, 6, 8}, {3, 7}, {-3, -7}, {4}, {-4}},
      {});
}

ClassicalPartition worked_y() {
  return ClassicalPartition::make(
      8, {{1, 2, -6, -7, -8}, {-1, -2, 6, 7, 8}, {3, 5}, {-3, -5}, {4}, {-4}},
      {});
}

StatisticBundle bundle(std::vector<int> a, std::vector<int> mu,
                       std::vector<int> nu, std::vector<CSym> c = {},
                       std::vector<int> xi = {}) {
  return StatisticBundle{std::move(a), std::move(mu), std::move(nu),
                         std::move(c), std::move(xi)};
}

}  // namespace

TEST_CASE("block classification") {
  GroupFamily c2(Family::C, 2);
  auto cls = classify_blocks(c2, bc_part(2, {{1, 2}}, {}));
  CHECK(cls.m_blocks.size() == 1);
  CHECK(cls.switching.empty());

  auto zcls = classify_blocks(c2, bc_part(2, {}, {1, 2}));
  CHECK(zcls.m_blocks.empty());
  CHECK(zcls.switching.size() == 1);

  // In D the element 1 is neither positive nor negative, but its presence
  // beside the positive 3 makes {1,3} a switching block with one positive
  // and least positive element 3.
  GroupFamily d4(Family::D, 4);
  ClassicalPartition p = bc_part(4, {{1, 3}, {2}, {4}}, {});
  auto dcls = classify_blocks(d4, p);
  CHECK(dcls.m_blocks == std::vector<std::vector<int>>{{2}, {4}});
  CHECK(dcls.switching == std::vector<std::vector<int>>{{1, 3}});
  CHECK(dcls.r_indices == std::vector<int>{0});
  CHECK(count_positives(d4, dcls.switching[0]) == 1);
}

TEST_CASE("statistics of the figure partitions") {
  GroupFamily c8(Family::C, 8);
  StatisticBundle fig6 = extract_statistics(c8, Mode::NN, worked_x());
  CHECK(fig6.a == std::vector<int>{3, 4});
  CHECK(fig6.mu == std::vector<int>{2, 1});
  CHECK(fig6.nu == std::vector<int>{2, 3});
  CHECK(fig6.c.empty());

  StatisticBundle fig6nc = extract_statistics(c8, Mode::NC, worked_y());
  CHECK(fig6nc == fig6);
}

TEST_CASE("sigma_B") {
  CHECK(sigma_B({1, 1, 2}) == std::vector<int>{1, 2, 1});
  CHECK(sigma_B({4, 7}) == std::vector<int>{4, 7});
  CHECK(sigma_B({1, 2, 3, 4, 5}) == std::vector<int>{1, 2, 4, 5, 3});
  CHECK(sigma_B_inverse(sigma_B({1, 1, 2})) == std::vector<int>{1, 1, 2});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    int k = rng() % 9;
    std::vector<int> nu(k);
    for (int& v : nu) v = 1 + rng() % 5;
    CHECK(sigma_B_inverse(sigma_B(nu)) == nu);
    CHECK(sigma_B(sigma_B_inverse(nu)) == nu);
  }
}

TEST_CASE("sigma_D") {
  // the D_10 figure pair
  SigmaDResult r = sigma_D({1, 1, 2, 3}, {CSym::Plus, CSym::Minus});
  CHECK(r.nu_hat == std::vector<int>{1, 5, 1});
  CHECK(r.xi_inv == std::vector<int>{3, 2});
  CHECK(r.c_inv == std::vector<CSym>{CSym::Minus, CSym::Plus});
  auto [nu, c] = sigma_D_inverse(r.nu_hat, r.xi_inv, r.c_inv);
  CHECK(nu == std::vector<int>{1, 1, 2, 3});
  CHECK(c == std::vector<CSym>{CSym::Plus, CSym::Minus});

  SigmaDResult empty = sigma_D({2, 2}, {});
  CHECK(empty.nu_hat == std::vector<int>{2, 2});
  CHECK(empty.xi_inv.empty());
  CHECK(empty.c_inv.empty());

  SigmaDResult one = sigma_D({2, 2, 3}, {CSym::PlusMinus});
  CHECK(one.nu_hat == std::vector<int>{2, 3, 2});
  CHECK(one.xi_inv == std::vector<int>{3});
  auto rt = sigma_D_inverse(one.nu_hat, one.xi_inv, one.c_inv);
  CHECK(rt.first == std::vector<int>{2, 2, 3});

  CHECK_THROWS_AS(sigma_D_inverse({1, 2, 1}, {2}, {CSym::Plus, CSym::Minus}),
                  BadArity);
  CHECK_THROWS_AS(sigma_D_inverse({1, 3, 1}, {1, 1}, {CSym::Plus, CSym::Minus}),
                  InvalidStatistics);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    int l = rng() % 3;
    int k = l + 2 * (rng() % 4);
    if (l == 0 && k == 0) k = 2;
    std::vector<int> nu(k);
    for (int& v : nu) v = 1 + rng() % 4;
    std::vector<CSym> c;
    if (l == 1) c = {std::vector<CSym>{CSym::Plus, CSym::Minus,
                                       CSym::PlusMinus}[rng() % 3]};
    if (l == 2)
      c = rng() % 2 ? std::vector<CSym>{CSym::Plus, CSym::Minus}
                    : std::vector<CSym>{CSym::Minus, CSym::Plus};
    SigmaDResult fwd = sigma_D(nu, c);
    auto [nu2, c2] = sigma_D_inverse(fwd.nu_hat, fwd.xi_inv, fwd.c_inv);
    CHECK(nu2 == nu);
    CHECK(c2 == c);
  }
}

TEST_CASE("central merging") {
  GroupFamily d4(Family::D, 4);

  // singleton centre blocks just disappear
  ClassicalPartition p = bc_part(4, {{1}, {2, 3}, {4}}, {});
  TaggedBPartition t = central_merge(d4, p);
  CHECK(t.c.empty());
  CHECK(t.xi.empty());
  CHECK(t.base == bc_part(3, {{1, 2}, {3}}, {}));
  CHECK(central_unmerge(d4, t) == p);

  // a zero block keeps its tag
  ClassicalPartition z = bc_part(4, {{3, 4}}, {1, 2});
  TaggedBPartition tz = central_merge(d4, z);
  CHECK(tz.c == std::vector<CSym>{CSym::PlusMinus});
  CHECK(tz.xi == std::vector<int>{1});
  CHECK(central_unmerge(d4, tz) == z);

  // exhaustive round trips
  for (int r = 2; r <= 5; ++r) {
    GroupFamily g(Family::D, r);
    long long count = 0;
    for_each_classical(g, Mode::NC, [&](const ClassicalPartition& q) {
      ++count;
      TaggedBPartition tq = central_merge(g, q);
      CHECK_NOTHROW(check_tags(tq));
      CHECK(central_unmerge(g, tq) == q);
    });
    CHECK(count == coxeter_catalan_number(g));
  }

  CHECK_THROWS_AS(central_merge(d4, bc_part(4, {{1, 2}, {3, -4}}, {})),
                  NotNoncrossing);
}

TEST_CASE("tagged partition conditions") {
  TaggedBPartition t;
  t.d_rank = 4;
  t.base = bc_part(3, {{3}}, {1, 2});
  t.c = {CSym::Plus, CSym::Minus};
  t.xi = {1, 1};
  CHECK_NOTHROW(check_tags(t));
  t.xi = {1};
  CHECK_THROWS_AS(check_tags(t), InvalidTags);
  t.xi = {1, 2};
  CHECK_THROWS_AS(check_tags(t), InvalidTags);  // sum exceeds zero positives
  t.c = {CSym::Plus, CSym::PlusMinus};
  t.xi = {1, 1};
  CHECK_THROWS_AS(check_tags(t), InvalidTags);  // tags not disjoint
}

TEST_CASE("validator examples") {
  GroupFamily a8(Family::A, 8);
  CHECK(validate_statistics(a8, 8, bundle({1, 2, 4}, {2, 3, 3}, {}), Mode::NN)
            .ok);
  GroupFamily c8(Family::C, 8);
  CHECK(validate_statistics(c8, 8, bundle({3, 4}, {2, 1}, {2, 3}), Mode::NN)
            .ok);
  GroupFamily a5(Family::A, 5);
  ValidationResult bad =
      validate_statistics(a5, 5, bundle({2}, {5}, {}), Mode::NN);
  CHECK_FALSE(bad.ok);
  CHECK(std::find(bad.violations.begin(), bad.violations.end(), "a-chain") !=
        bad.violations.end());

  GroupFamily d10(Family::D, 10);
  CHECK(validate_statistics(d10, 10,
                            bundle({3}, {2}, {1, 1, 2, 3},
                                   {CSym::Plus, CSym::Minus}, {2, 3}),
                            Mode::NN)
            .ok);
  CHECK(validate_statistics(d10, 10,
                            bundle({3}, {2}, {1, 5, 1},
                                   {CSym::Minus, CSym::Plus}, {3, 2}),
                            Mode::NC)
            .ok);
  // parity violation: k - l must be even for nonnesting D
  CHECK_FALSE(validate_statistics(d10, 10,
                                  bundle({3}, {2}, {1, 5, 1},
                                         {CSym::Minus, CSym::Plus}, {3, 2}),
                                  Mode::NN)
                  .ok);
}

TEST_CASE("validators accept exactly the extracted image") {
  // candidate bundles from bounded tuples, compared against the image of
  // extraction over the exhaustive enumeration
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int r = (f == Family::D ? 2 : 1); r <= 4; ++r) {
      GroupFamily g(f, r);
      const int n = g.ambient_dim();
      for (Mode mode : {Mode::NN, Mode::NC}) {
        std::set<std::string> image;
        for_each_classical(g, mode, [&](const ClassicalPartition& p) {
          StatisticBundle s = extract_statistics(g, mode, p);
          image.insert(oracle::bundle_key(s));
        });
        long long accepted = 0;
        oracle::for_each_candidate_bundle(
            g, n, mode, [&](const StatisticBundle& s) {
              bool ok = validate_statistics(g, n, s, mode).ok;
              bool in_image = image.count(oracle::bundle_key(s)) != 0;
              CHECK(ok == in_image);
              if (ok) ++accepted;
            });
        CHECK(accepted == static_cast<long long>(image.size()));
      }
    }
  }
}

TEST_CASE("starred statistics") {
  GroupFamily c8(Family::C, 8);
  StarredStatistics sx = starred_statistics(c8, worked_x());
  CHECK(sx.eta_star == 0);
  CHECK(sx.theta_star == std::vector<std::pair<int, int>>{{2, 3}});
  CHECK(sx.a_star == std::vector<int>{3, 4});
  CHECK(sx.mu_star == std::vector<int>{2, 1});

  ClassicalPartition singles = bc_part(4, {{1}, {2}, {3}, {4}}, {});
  StarredStatistics ss = starred_statistics({Family::C, 4}, singles);
  CHECK(ss.a_star == std::vector<int>{1, 2, 3, 4});
  CHECK(ss.mu_star == std::vector<int>{1, 1, 1, 1});
  CHECK(ss.theta_star.empty());
  CHECK(ss.eta_star == 0);

  ClassicalPartition full = bc_part(4, {}, {1, 2, 3, 4});
  StarredStatistics sf = starred_statistics({Family::C, 4}, full);
  CHECK(sf.eta_star == 4);
  CHECK(sf.a_star.empty());
  CHECK(sf.theta_star.empty());
}

TEST_CASE("canonical basis") {
  FixedSpaceBasis bx = canonical_basis(worked_x());
  CHECK(bx.gamma == 0);
  CHECK(bx.omega ==
        std::vector<std::vector<int>>{{-1, 1, 0, 0, -1, 1, 0, 1},
                                      {0, 0, 1, 0, 0, 0, 1, 0},
                                      {0, 0, 0, 1, 0, 0, 0, 0}});
  FixedSpaceBasis by = canonical_basis(worked_y());
  CHECK(by.gamma == 0);
  CHECK(by.omega ==
        std::vector<std::vector<int>>{{-1, -1, 0, 0, 0, 1, 1, 1},
                                      {0, 0, 1, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 0, 0, 0}});

  // identity partition: the standard basis in reverse lex order
  ClassicalPartition singles = bc_part(4, {{1}, {2}, {3}, {4}}, {});
  FixedSpaceBasis bi = canonical_basis(singles);
  CHECK(bi.gamma == 0);
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 1;
    CHECK(bi.omega[i] == e);
    if (i > 0) CHECK(bi.omega[i] < bi.omega[i - 1]);  // descending lex
  }

  ClassicalPartition full = bc_part(3, {}, {1, 2, 3});
  FixedSpaceBasis bf = canonical_basis(full);
  CHECK(bf.gamma == 3);
  CHECK(bf.omega.empty());
}

TEST_CASE("the lex chain of the canonical basis") {
  // f(S_1) < ... < f(S_k') < 0 < f(C_m') < ... < f(C_1)
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    GroupFamily g(f, 4);
    for (Mode mode : {Mode::NN, Mode::NC}) {
      for_each_classical(g, mode, [&](const ClassicalPartition& p) {
        FixedSpaceBasis fb = canonical_basis(p);
        const std::vector<int> zero_vec(p.n(), 0);
        std::vector<std::vector<int>> sw, nsw;
        for (const auto& v : fb.omega)
          (v < zero_vec ? sw : nsw).push_back(v);
        for (size_t t = 1; t < sw.size(); ++t) CHECK(sw[t - 1] < sw[t]);
        for (size_t t = 1; t < nsw.size(); ++t) CHECK(nsw[t] < nsw[t - 1]);
      });
    }
  }
}

TEST_CASE("omega agrees with the canonical basis") {
  CHECK(omega_of(worked_x()) == canonical_basis(worked_x()));
  CHECK(omega_of(worked_y()) == canonical_basis(worked_y()));
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int r = (f == Family::D ? 2 : 1); r <= 4; ++r) {
      GroupFamily g(f, r);
      for (Mode mode : {Mode::NN, Mode::NC})
        for_each_classical(g, mode, [&](const ClassicalPartition& p) {
          CHECK(omega_of(p) == canonical_basis(p));
        });
    }
  }
}

TEST_CASE("fixed space descriptions agree with the canonical basis") {
  for (GroupFamily g : {GroupFamily(Family::A, 3), GroupFamily(Family::B, 3),
                        GroupFamily(Family::C, 3), GroupFamily(Family::D, 4)}) {
    for (const auto& w : uniform_noncrossing(g)) {
      FixedSpaceDescription fs = fixed_space(g, w);
      FixedSpaceBasis cb = canonical_basis(partition_of_element(g, w));
      CHECK(fs.basis == cb.omega);
      CHECK(static_cast<int>(fs.zeroed.size()) == cb.gamma);
    }
  }
}

TEST_CASE("the section 2.6 data equivalences") {
  // For nonswitching C_i: |down(f) cap E| = n+1-a*_i, #1 = mu*_i, #-1 = 0,
  // |down(f) cap beta| = (m'+1-i) + k'.  For joint S_j: (0, theta-_j,
  // theta+_j, j).  And gamma = eta*.
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    GroupFamily g(f, 4);
    for (Mode mode : {Mode::NN, Mode::NC}) {
      for_each_classical(g, mode, [&](const ClassicalPartition& p) {
        const int n = p.n();
        FixedSpaceBasis fb = canonical_basis(p);
        StarredStatistics st = starred_statistics(g, p);
        std::vector<OmegaRow> rows = omega_rows(fb);
        CHECK(fb.gamma == st.eta_star);
        const int kprime = static_cast<int>(st.theta_star.size());
        const int mprime = static_cast<int>(st.a_star.size());
        REQUIRE(static_cast<int>(rows.size()) == kprime + mprime);
        // omega is ordered by least absolute value; recover which rows are
        // joint blocks by their lex sign
        const std::vector<int> zero_vec(n, 0);
        int sj = 0, ci = 0;
        for (size_t t = 0; t < rows.size(); ++t) {
          if (fb.omega[t] < zero_vec) {
            CHECK(rows[t].down_e == 0);
            CHECK(rows[t].ones == st.theta_star[sj].second);
            CHECK(rows[t].minus_ones == st.theta_star[sj].first);
            CHECK(rows[t].down_omega == sj + 1);
            ++sj;
          } else {
            CHECK(rows[t].down_e == n + 1 - st.a_star[ci]);
            CHECK(rows[t].ones == st.mu_star[ci]);
            CHECK(rows[t].minus_ones == 0);
            CHECK(rows[t].down_omega == (mprime + 1 - (ci + 1)) + kprime);
            ++ci;
          }
        }
      });
    }
  }
}
