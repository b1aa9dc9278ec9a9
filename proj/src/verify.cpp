#include "ncnn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <unordered_map>

#include "ncnn/bijection.hpp"
#include "ncnn/parallel.hpp"
#include "ncnn/partition.hpp"
#include "ncnn/roots.hpp"
#include "ncnn/signed_perm.hpp"
#include "ncnn/statistics.hpp"

namespace ncnn {

using nlohmann::json;

const std::set<std::string> kAllChecks = {"counts", "roundtrip", "type",
                                          "uniform", "central", "carter"};

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

json VerificationReport::to_json() const {
  json arr = json::array();
  for (const CheckRecord& c : checks)
    arr.push_back(json{{"name", c.name},
                       {"family", c.family},
                       {"rank", c.rank},
                       {"expected", c.expected},
                       {"observed", c.observed},
                       {"pass", c.pass},
                       {"ms", c.ms}});
  return json{{"checks", arr}};
}

namespace {

struct Task {
  std::string check;
  GroupFamily g;
};

void add(std::vector<CheckRecord>& out, const Task& t, const std::string& sub,
         json expected, json observed) {
  out.push_back({t.check + "/" + sub, std::string(1, family_letter(t.g.family)),
                 t.g.rank, std::move(expected), std::move(observed), false,
                 0.0});
  out.back().pass = out.back().expected == out.back().observed;
}

void check_counts(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  long long cat = coxeter_catalan_number(g);
  long long nn = 0, nc = 0;
  for_each_classical(g, Mode::NN, [&](const ClassicalPartition&) { ++nn; });
  for_each_classical(g, Mode::NC, [&](const ClassicalPartition&) { ++nc; });
  add(out, t, "nn-classical", cat, nn);
  add(out, t, "nc-classical", cat, nc);
  add(out, t, "antichains", cat, count_antichains(g));
  add(out, t, "interval", cat,
      static_cast<long long>(uniform_noncrossing(g).size()));
}

void check_roundtrip(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  for (Mode from : {Mode::NN, Mode::NC}) {
    Direction fwd = from == Mode::NN ? Direction::NNtoNC : Direction::NCtoNN;
    Direction bwd = from == Mode::NN ? Direction::NCtoNN : Direction::NNtoNC;
    long long total = 0, good = 0;
    std::set<ClassicalPartition> image;
    for_each_classical(g, from, [&](const ClassicalPartition& p) {
      ++total;
      ClassicalPartition q = convert(g, fwd, p);
      image.insert(q);
      if (convert(g, bwd, q) == p) ++good;
    });
    std::string d = from == Mode::NN ? "nn-nc-nn" : "nc-nn-nc";
    add(out, t, d, total, good);
    add(out, t, d + "-injective", total,
        static_cast<long long>(image.size()));
  }
}

void check_type(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  long long total = 0, preserved = 0;
  std::map<PartitionType, long long> nn_types, nc_types;
  for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
    ++total;
    ++nn_types[partition_type(p)];
    if (partition_type(convert(g, Direction::NNtoNC, p)) == partition_type(p))
      ++preserved;
  });
  for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
    ++nc_types[partition_type(p)];
  });
  add(out, t, "preserved", total, preserved);
  add(out, t, "equidistributed", true, nn_types == nc_types);
}

void check_uniform(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  // f_NC: [1,c] -> NC^cl bijectively
  auto interval = uniform_noncrossing(g);
  std::set<ClassicalPartition> nc_image;
  for (const auto& w : interval) nc_image.insert(partition_of_element(g, w));
  std::set<ClassicalPartition> nc_all;
  for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
    nc_all.insert(p);
  });
  add(out, t, "nc-injective", static_cast<long long>(interval.size()),
      static_cast<long long>(nc_image.size()));
  add(out, t, "nc-image", true, nc_image == nc_all);

  // f_NN: antichains -> NN^cl bijectively
  std::set<ClassicalPartition> nn_image;
  long long nant = 0;
  for_each_antichain(g, [&](const Antichain& a) {
    ++nant;
    nn_image.insert(partition_of_antichain(g, a));
  });
  std::set<ClassicalPartition> nn_all;
  for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
    nn_all.insert(p);
  });
  add(out, t, "nn-injective", nant, static_cast<long long>(nn_image.size()));
  add(out, t, "nn-image", true, nn_image == nn_all);

  // absolute order vs reverse refinement, exhaustive at small rank
  if (g.rank <= 3) {
    long long pairs = 0, agree = 0;
    for (const auto& w : interval)
      for (const auto& x : interval) {
        ++pairs;
        bool lhs = absolute_leq(g, w, x);
        bool rhs = refines(partition_of_element(g, w),
                           partition_of_element(g, x));
        if (lhs == rhs) ++agree;
      }
    add(out, t, "poset-iso", pairs, agree);
  }
}

void check_central(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  long long total = 0, good = 0;
  std::vector<ClassicalPartition> nns, ncs;
  for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
    nns.push_back(p);
  });
  for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
    ncs.push_back(p);
  });
  for (const auto& x : nns) {
    ++total;
    if (verify_central_theorem(g, x, convert(g, Direction::NNtoNC, x))) ++good;
  }
  for (const auto& y : ncs) {
    ++total;
    if (verify_central_theorem(g, convert(g, Direction::NCtoNN, y), y)) ++good;
  }
  add(out, t, "holds", total, good);

  if (g.rank <= 3) {
    long long unique = 0;
    for (const auto& x : nns) {
      int hits = 0;
      for (const auto& y : ncs)
        if (verify_central_theorem(g, x, y)) ++hits;
      if (hits == 1) ++unique;
    }
    add(out, t, "unique", static_cast<long long>(nns.size()), unique);
  }
}

void check_carter(const Task& t, std::vector<CheckRecord>& out) {
  const GroupFamily& g = t.g;
  // BFS over the Cayley graph on the reflections
  if ((g.family == Family::A && g.rank == 3) ||
      ((g.family == Family::B || g.family == Family::C) && g.rank == 3) ||
      (g.family == Family::D && g.rank == 4)) {
    std::vector<SignedPermutation> refl;
    for (auto& [r, w] : reflections(g)) refl.push_back(w);
    std::unordered_map<std::uint64_t, int> dist;
    std::vector<SignedPermutation> frontier{SignedPermutation(g.ambient_dim())};
    dist[frontier[0].encode()] = 0;
    int level = 0;
    while (!frontier.empty()) {
      std::vector<SignedPermutation> next;
      ++level;
      for (const auto& w : frontier)
        for (const auto& s : refl) {
          SignedPermutation x = s.after(w);
          if (dist.emplace(x.encode(), level).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
    long long total = 0, agree = 0;
    for_each_group_element(g, [&](const SignedPermutation& w) {
      ++total;
      if (dist.at(w.encode()) == absolute_length(g, w)) ++agree;
    });
    add(out, t, "bfs", total, agree);
  }

  // fix_of_antichain must not depend on the factor order
  auto antichains = enumerate_antichains(g);
  std::mt19937 rng(20240000u + static_cast<unsigned>(g.rank) * 17u +
                   static_cast<unsigned>(g.family));
  std::shuffle(antichains.begin(), antichains.end(), rng);
  long long trials = 0, stable = 0;
  for (size_t i = 0; i < antichains.size() && i < 20; ++i) {
    const Antichain& a = antichains[i];
    FixedSpaceDescription ref = fix_of_antichain(g, a);
    for (int rep = 0; rep < 10; ++rep) {
      Antichain shuffled = a;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      SignedPermutation w(g.ambient_dim());
      for (const Root& r : shuffled) w = w.after(reflection_of_root(g, r));
      ++trials;
      if (fixed_space(g, w) == ref) ++stable;
    }
  }
  add(out, t, "order-independent", trials, stable);
}

}  // namespace

VerificationReport run_verification(int max_rank,
                                    const std::set<std::string>& checks,
                                    int jobs) {
  std::vector<Task> tasks;
  auto ranks_for = [&](const std::string& check, Family f) {
    int lo = 2;
    int hi = std::min(max_rank, f == Family::A ? 8 : 6);
    if (check == "central") hi = std::min(hi, 4);
    std::vector<int> rs;
    for (int r = lo; r <= hi; ++r) rs.push_back(r);
    return rs;
  };
  for (const std::string& check : checks) {
    if (!kAllChecks.count(check))
      throw Error("unknown check: " + check);
    for (Family f : {Family::A, Family::B, Family::C, Family::D})
      for (int r : ranks_for(check, f)) tasks.push_back({check, {f, r}});
  }

  std::vector<std::vector<CheckRecord>> results(tasks.size());
  parallel_for(static_cast<long long>(tasks.size()), jobs, [&](long long i) {
    const Task& t = tasks[i];
    auto start = std::chrono::steady_clock::now();
    std::vector<CheckRecord> recs;
    if (t.check == "counts") check_counts(t, recs);
    if (t.check == "roundtrip") check_roundtrip(t, recs);
    if (t.check == "type") check_type(t, recs);
    if (t.check == "uniform") check_uniform(t, recs);
    if (t.check == "central") check_central(t, recs);
    if (t.check == "carter") check_carter(t, recs);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count() /
                std::max<size_t>(1, recs.size());
    for (auto& r : recs) r.ms = ms;
    results[i] = std::move(recs);
  });

  VerificationReport report;
  for (auto& recs : results)
    for (auto& r : recs) report.checks.push_back(std::move(r));
  return report;
}

}  // namespace ncnn
