#include "ncnn/json_io.hpp"

#include <algorithm>

#include "ncnn/errors.hpp"

namespace ncnn {

GroupFamily group_from_json(const json& j) {
  if (!j.contains("family") || !j.contains("rank"))
    throw ParseError("object needs \"family\" and \"rank\"");
  std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw ParseError("bad family: " + fam);
  int rank = j.at("rank").get<int>();
  try {
    return GroupFamily(family_from_letter(fam[0]), rank);
  } catch (const RankError& e) {
    throw ParseError(e.what());
  }
}

json parse_json_line(const std::string& line) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

json antichain_to_json(const GroupFamily& g, const Antichain& a) {
  json roots = json::array();
  for (const Root& r : a) {
    auto [i, jj] = root_endpoints(g, r);
    roots.push_back(json::array({i, jj}));
  }
  return json{{"family", std::string(1, family_letter(g.family))},
              {"rank", g.rank},
              {"roots", roots}};
}

std::pair<GroupFamily, Antichain> antichain_from_json(const json& j) {
  GroupFamily g = group_from_json(j);
  Antichain a;
  for (const auto& pr : j.at("roots")) {
    if (!pr.is_array() || pr.size() != 2)
      throw ParseError("root endpoints must be pairs");
    try {
      a.push_back(root_from_endpoints(g, pr[0].get<int>(), pr[1].get<int>()));
    } catch (const NonRootArgument& e) {
      throw ParseError(e.what());
    }
  }
  std::sort(a.begin(), a.end());
  check_antichain(g, a);
  return {g, a};
}

json perm_to_json(const GroupFamily& g, const SignedPermutation& w) {
  return json{{"family", std::string(1, family_letter(g.family))},
              {"rank", g.rank},
              {"images", w.images()}};
}

std::pair<GroupFamily, SignedPermutation> perm_from_json(const json& j) {
  GroupFamily g = group_from_json(j);
  std::vector<int> img = j.at("images").get<std::vector<int>>();
  if (static_cast<int>(img.size()) != g.ambient_dim())
    throw ParseError("images length must equal the ambient dimension");
  SignedPermutation w;
  try {
    w = SignedPermutation::from_images(std::move(img));
    check_membership(g, w);
  } catch (const MembershipError& e) {
    throw ParseError(e.what());
  }
  return {g, w};
}

json partition_to_json(const GroupFamily& g, const ClassicalPartition& p) {
  json blocks = json::array();
  for (const auto& b : p.representatives()) blocks.push_back(b);
  std::vector<int> zero;
  for (int e : p.zero_block())
    if (e > 0) zero.push_back(e);
  std::sort(zero.begin(), zero.end());
  size_t npos = zero.size();
  for (size_t t = 0; t < npos; ++t) zero.push_back(-zero[t]);
  return json{{"family", std::string(1, family_letter(g.family))},
              {"rank", g.rank},
              {"blocks", blocks},
              {"zero", zero}};
}

std::pair<GroupFamily, ClassicalPartition> partition_from_json(const json& j) {
  GroupFamily g = group_from_json(j);
  std::vector<std::vector<int>> reps;
  for (const auto& b : j.at("blocks"))
    reps.push_back(b.get<std::vector<int>>());
  std::vector<int> zero;
  if (j.contains("zero")) zero = j.at("zero").get<std::vector<int>>();
  try {
    return {g, ClassicalPartition::from_representatives(g, std::move(reps),
                                                        std::move(zero))};
  } catch (const InvariantViolation& e) {
    throw ParseError(e.what());
  }
}

json bundle_to_json(const StatisticBundle& s) {
  json c = json::array();
  for (CSym sym : s.c) c.push_back(csym_to_string(sym));
  return json{{"a", s.a}, {"mu", s.mu}, {"nu", s.nu}, {"c", c}, {"xi", s.xi}};
}

StatisticBundle bundle_from_json(const json& j) {
  StatisticBundle s;
  if (j.contains("a")) s.a = j.at("a").get<std::vector<int>>();
  if (j.contains("mu")) s.mu = j.at("mu").get<std::vector<int>>();
  if (j.contains("nu")) s.nu = j.at("nu").get<std::vector<int>>();
  if (j.contains("xi")) s.xi = j.at("xi").get<std::vector<int>>();
  if (j.contains("c"))
    for (const auto& sym : j.at("c"))
      s.c.push_back(csym_from_string(sym.get<std::string>()));
  return s;
}

}  // namespace ncnn
