#include <doctest.h>

#include <fstream>
#include <sstream>

#include "ncnn/render.hpp"

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

std::string golden_path(const std::string& name) {
  return std::string(NCNN_GOLDEN_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("linear layouts put the greatest elements to the left") {
  GroupFamily a7(Family::A, 7);
  ClassicalPartition p = ClassicalPartition::from_positive_partition(
      8, {{1, 3}, {2, 5, 7}, {4, 6, 8}});
  DiagramSpec spec = layout_diagram(a7, Mode::NN, p);
  CHECK(spec.layout == DiagramLayout::Linear);
  CHECK(spec.slots.front() == std::vector<int>{8});
  CHECK(spec.slots.back() == std::vector<int>{1});
  CHECK(spec.arcs.size() == 5);  // sum of (block size - 1)

  GroupFamily b3(Family::B, 3);
  ClassicalPartition zb = bc_part(3, {{3}}, {1, 2});
  DiagramSpec bspec = layout_diagram(b3, Mode::NN, zb);
  bool has_zero_slot = false;
  for (const auto& s : bspec.slots)
    if (s == std::vector<int>{0}) has_zero_slot = true;
  CHECK(has_zero_slot);
  // zero block {1,2,-1,-2} plus the dot 0: five dots, four edges
  CHECK(bspec.arcs.size() == 4);

  GroupFamily d3(Family::D, 3);
  ClassicalPartition dp = bc_part(3, {{1, 3}, {2}}, {});
  DiagramSpec dspec = layout_diagram(d3, Mode::NN, dp);
  bool stacked = false;
  for (const auto& s : dspec.slots)
    if (s.size() == 2) {
      stacked = true;
      CHECK(((s[0] == 1 && s[1] == -1) || (s[0] == -1 && s[1] == 1)));
    }
  CHECK(stacked);
}

TEST_CASE("all-singleton diagrams have no arcs") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    GroupFamily g(f, 3);
    ClassicalPartition p =
        f == Family::A
            ? ClassicalPartition::from_positive_partition(4, {{1}, {2}, {3},
                                                              {4}})
            : bc_part(3, {{1}, {2}, {3}}, {});
    for (Mode m : {Mode::NN, Mode::NC}) {
      DiagramSpec spec = layout_diagram(g, m, p);
      CHECK(spec.arcs.empty());
    }
  }
}

TEST_CASE("emit is deterministic and ascii rejects circular layouts") {
  GroupFamily c4(Family::C, 4);
  ClassicalPartition p = bc_part(4, {{1, 2}, {3, -4}}, {});
  DiagramSpec lin = layout_diagram(c4, Mode::NN, p);
  CHECK(emit(lin, DiagramFormat::Ascii) == emit(lin, DiagramFormat::Ascii));
  CHECK(emit(lin, DiagramFormat::Svg) == emit(lin, DiagramFormat::Svg));

  DiagramSpec circ = layout_diagram(c4, Mode::NC, bc_part(4, {{1, 2}, {3},
                                                              {4}},
                                                          {}));
  CHECK(circ.layout == DiagramLayout::Circular);
  CHECK_THROWS_AS(emit(circ, DiagramFormat::Ascii), UnsupportedCombination);
  std::string svg = emit(circ, DiagramFormat::Svg);
  CHECK(svg.substr(0, 4) == "<svg");
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg arc count matches the bump edges") {
  GroupFamily c8(Family::C, 8);
  ClassicalPartition x = ClassicalPartition::make(
      8, {{1, 5, -2, -6, -8}, {-1, -5, 2, 6, 8}, {3, 7}, {-3, -7}, {4}, {-4}},
      {});
  DiagramSpec spec = layout_diagram(c8, Mode::NN, x);
  size_t expect = 0;
  for (const auto& b : x.blocks()) expect += b.size() - 1;
  CHECK(spec.arcs.size() == expect);
  std::string svg = emit(spec, DiagramFormat::Svg);
  size_t paths = 0;
  for (size_t pos = 0; (pos = svg.find("<path", pos)) != std::string::npos;
       ++pos)
    ++paths;
  CHECK(paths == expect);
}

TEST_CASE("noncrossing diagrams pass the geometric check") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int r = (f == Family::D ? 2 : 2); r <= 4; ++r) {
      GroupFamily g(f, r);
      for_each_classical(g, Mode::NC, [&](const ClassicalPartition& p) {
        CHECK(spec_noncrossing(layout_diagram(g, Mode::NC, p)));
      });
      for_each_classical(g, Mode::NN, [&](const ClassicalPartition& p) {
        CHECK(spec_nonnesting_linear(layout_diagram(g, Mode::NN, p)));
      });
    }
  }
}

TEST_CASE("crossing specs fail the geometric check") {
  DiagramSpec bad;
  bad.layout = DiagramLayout::Linear;
  bad.slots = {{4}, {3}, {2}, {1}};
  bad.arcs = {{1, 3}, {2, 4}};
  CHECK_FALSE(spec_noncrossing(bad));
  CHECK(spec_nonnesting_linear(bad));

  DiagramSpec nest;
  nest.layout = DiagramLayout::Linear;
  nest.slots = {{4}, {3}, {2}, {1}};
  nest.arcs = {{1, 4}, {2, 3}};
  CHECK(spec_noncrossing(nest));
  CHECK_FALSE(spec_nonnesting_linear(nest));

  // circular interleaving
  DiagramSpec circ;
  circ.layout = DiagramLayout::Circular;
  circ.slots = {{-1}, {-2}, {1}, {2}};
  circ.arcs = {{-1, 1}, {-2, 2}};
  CHECK_FALSE(spec_noncrossing(circ));

  // a D zero block that fails to own the centre dots
  DiagramSpec swallow;
  swallow.layout = DiagramLayout::Circular;
  swallow.slots = {{-2}, {-3}, {2}, {3}};
  swallow.center_pair = std::make_pair(1, -1);
  swallow.arcs = {{-2, -3}, {-3, 2}, {2, 3}, {3, -2}};
  CHECK_FALSE(spec_noncrossing(swallow));
}

TEST_CASE("golden files") {
  struct Golden {
    std::string file;
    GroupFamily g;
    Mode mode;
    ClassicalPartition p;
    DiagramFormat fmt;
  };
  std::vector<Golden> goldens = {
      {"a8_nn_fig4.txt", {Family::A, 7}, Mode::NN,
       ClassicalPartition::from_positive_partition(8, {{1, 3}, {2, 5, 7},
                                                       {4, 6, 8}}),
       DiagramFormat::Ascii},
      {"b8_nc_eq3.svg", {Family::B, 8}, Mode::NC,
       bc_part(8, {{1, 2}, {3, -7, -8}, {5}}, {4, 6}), DiagramFormat::Svg},
      {"c8_nn_fig6.svg", {Family::C, 8}, Mode::NN,
       ClassicalPartition::make(8,
                                {{1, 5, -2, -6, -8},
                                 {-1, -5, 2, 6, 8},
                                 {3, 7},
                                 {-3, -7},
                                 {4},
                                 {-4}},
                                {}),
       DiagramFormat::Svg},
      {"d4_nn_stack.txt", {Family::D, 4}, Mode::NN,
       bc_part(4, {{2, -3}, {1, 4}}, {}), DiagramFormat::Ascii},
      {"d4_nc_circ.svg", {Family::D, 4}, Mode::NC,
       bc_part(4, {{3, 4}}, {1, 2}), DiagramFormat::Svg},
  };
  for (const auto& gold : goldens) {
    CAPTURE(gold.file);
    DiagramSpec spec = layout_diagram(gold.g, gold.mode, gold.p);
    std::string doc = emit(spec, gold.fmt);
    CHECK(doc == read_file(golden_path(gold.file)));
    if (gold.mode == Mode::NC) CHECK(spec_noncrossing(spec));
  }
}
