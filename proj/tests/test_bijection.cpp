#include <doctest.h>

#include <map>
#include <set>

#include "ncnn/bijection.hpp"
#include "oracles.hpp"

using namespace ncnn;

namespace {

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

std::vector<GroupFamily> families(int hi) {
  std::vector<GroupFamily> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D})
    for (int r = (f == Family::D ? 2 : 2); r <= hi; ++r)
      out.push_back({f, r});
  return out;
}

}  // namespace

TEST_CASE("type A rebuilds") {
  GroupFamily a8(Family::A, 8);
  StatisticBundle s = bundle({1, 2, 4}, {2, 3, 3}, {});
  ClassicalPartition nn = rebuild(a8, Mode::NN, 8, s);
  CHECK(nn == ClassicalPartition::from_positive_partition(
                  8, {{1, 3}, {2, 5, 7}, {4, 6, 8}}));
  ClassicalPartition nc = rebuild(a8, Mode::NC, 8, s);
  CHECK(nc == ClassicalPartition::from_positive_partition(
                  8, {{1, 8}, {2, 3, 7}, {4, 5, 6}}));
  // both agree with the exhaustive uniqueness oracle
  CHECK(nn == oracle::unique_partition_with_statistics(a8, Mode::NN, s));
  CHECK(nc == oracle::unique_partition_with_statistics(a8, Mode::NC, s));
  // and the noncrossing one with the chain-by-chain construction
  CHECK(nc == oracle::chain_by_chain_a_nc(8, s.a, s.mu));
}

TEST_CASE("chain-by-chain cross-check for type A noncrossing") {
  for (int n = 2; n <= 6; ++n) {
    GroupFamily g(Family::A, n - 1);
    for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
      StatisticBundle s = extract_statistics(g, Mode::NC, p);
      CHECK(oracle::chain_by_chain_a_nc(n, s.a, s.mu) == p);
      CHECK(rebuild(g, Mode::NC, n, s) == p);
    });
  }
}

TEST_CASE("type C rebuild reproduces the figure pair") {
  GroupFamily c8(Family::C, 8);
  StatisticBundle s = bundle({3, 4}, {2, 1}, {2, 3});
  CHECK(rebuild(c8, Mode::NN, 8, s) == worked_x());
  CHECK(rebuild(c8, Mode::NC, 8, s) == worked_y());
}

TEST_CASE("rebuild inverts extraction everywhere") {
  for (const auto& g : families(4)) {
    for (Mode mode : {Mode::NN, Mode::NC}) {
      for_each_classical(g, mode, [&](const ClassicalPartition& p) {
        StatisticBundle s = extract_statistics(g, mode, p);
        CHECK(rebuild(g, mode, g.ambient_dim(), s) == p);
      });
    }
  }
}

TEST_CASE("rebuild rejects invalid statistics") {
  GroupFamily a5(Family::A, 5);
  CHECK_THROWS_AS(rebuild(a5, Mode::NN, 5, bundle({2}, {5}, {})),
                  InvalidStatistics);
  GroupFamily c3(Family::C, 3);
  CHECK_THROWS_AS(rebuild(c3, Mode::NN, 3, bundle({1}, {2}, {2})),
                  InvalidStatistics);
  CHECK_THROWS_AS(rebuild(c3, Mode::NN, 4, bundle({1}, {1}, {2})),
                  InvalidStatistics);
}

TEST_CASE("the B figure pair converts across sigma_B") {
  GroupFamily b8(Family::B, 8);
  StatisticBundle nn = bundle({3, 5}, {3, 1}, {1, 2, 1});
  StatisticBundle nc = bundle({3, 5}, {3, 1}, {1, 1, 2});
  CHECK(sigma_B(nc.nu) == nn.nu);
  ClassicalPartition pn = rebuild(b8, Mode::NN, 8, nn);
  ClassicalPartition pc = rebuild(b8, Mode::NC, 8, nc);
  CHECK(convert(b8, Direction::NNtoNC, pn) == pc);
  CHECK(convert(b8, Direction::NCtoNN, pc) == pn);
  CHECK(extract_statistics(b8, Mode::NN, pn) == nn);
  CHECK(extract_statistics(b8, Mode::NC, pc) == nc);
}

TEST_CASE("the D10 figure pair converts across sigma_D") {
  GroupFamily d10(Family::D, 10);
  StatisticBundle nn =
      bundle({3}, {2}, {1, 1, 2, 3}, {CSym::Plus, CSym::Minus}, {2, 3});
  StatisticBundle nc =
      bundle({3}, {2}, {1, 5, 1}, {CSym::Minus, CSym::Plus}, {3, 2});
  ClassicalPartition pn = rebuild(d10, Mode::NN, 10, nn);
  ClassicalPartition pc = rebuild(d10, Mode::NC, 10, nc);
  CHECK(extract_statistics(d10, Mode::NN, pn) == nn);
  CHECK(extract_statistics(d10, Mode::NC, pc) == nc);
  CHECK(convert(d10, Direction::NNtoNC, pn) == pc);
  CHECK(convert(d10, Direction::NCtoNN, pc) == pn);
  CHECK(partition_type(pn) == partition_type(pc));
}

TEST_CASE("conversion round trips, type preservation, equidistribution") {
  for (const auto& g : families(4)) {
    std::map<PartitionType, int> nn_types, nc_types;
    std::set<ClassicalPartition> nc_image;
    long long nn_count = 0, nc_count = 0;
    for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
      ++nn_count;
      ++nn_types[partition_type(p)];
      ClassicalPartition q = convert(g, Direction::NNtoNC, p);
      CHECK(is_classical_noncrossing(g, q));
      CHECK(partition_type(q) == partition_type(p));
      nc_image.insert(q);
      CHECK(convert(g, Direction::NCtoNN, q) == p);
    });
    for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
      ++nc_count;
      ++nc_types[partition_type(p)];
    });
    CHECK(nn_count == nc_count);
    CHECK(static_cast<long long>(nc_image.size()) == nn_count);
    CHECK(nn_types == nc_types);
  }
}

TEST_CASE("statistic transport is exact") {
  for (const auto& g : families(4)) {
    for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
      StatisticBundle s = extract_statistics(g, Mode::NN, p);
      StatisticBundle t = transport_statistics(g, Direction::NNtoNC, s);
      ClassicalPartition q = convert(g, Direction::NNtoNC, p);
      CHECK(extract_statistics(g, Mode::NC, q) == t);
      CHECK(t.a == s.a);
      CHECK(t.mu == s.mu);
      if (g.family == Family::A || g.family == Family::C)
        CHECK(t.nu == s.nu);
      if (g.family == Family::B) CHECK(sigma_B(t.nu) == s.nu);
    });
  }
}

TEST_CASE("starred statistics are preserved") {
  for (const auto& g : families(4)) {
    for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
      ClassicalPartition q = convert(g, Direction::NNtoNC, p);
      CHECK(starred_statistics(g, p) == starred_statistics(g, q));
    });
  }
}

TEST_CASE("the central theorem on the worked example") {
  GroupFamily c8(Family::C, 8);
  CHECK(verify_central_theorem(c8, worked_x(), worked_y()));
  FixedSpaceBasis ox = canonical_basis(worked_x());
  std::vector<OmegaRow> rows = omega_rows(ox);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == OmegaRow{3, 2, 0, 1});
  CHECK(rows[1] == OmegaRow{2, 0, 6, 3});
  CHECK(rows[2] == OmegaRow{1, 0, 5, 2});
  std::vector<OmegaRow> yrows = omega_rows(canonical_basis(worked_y()));
  CHECK(rows == yrows);
}

TEST_CASE("the central theorem holds with a unique witness") {
  for (const auto& g : families(3)) {
    std::vector<ClassicalPartition> ncs;
    for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
      ncs.push_back(p);
    });
    for_each_classical(g, Mode::NN, [&](const ClassicalPartition& x) {
      ClassicalPartition y = convert(g, Direction::NNtoNC, x);
      CHECK(verify_central_theorem(g, x, y));
      int hits = 0;
      for (const auto& yy : ncs)
        if (verify_central_theorem(g, x, yy)) ++hits;
      CHECK(hits == 1);
    });
  }
}
