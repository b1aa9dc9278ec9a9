#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncnn/family.hpp"
#include "ncnn/partition.hpp"

namespace ncnn {

enum class DiagramLayout { Linear, Circular };
enum class DiagramFormat { Ascii, Svg };

// A laid-out bump diagram.  Linear: slots run left to right with the
// greatest ground elements to the left; a slot holds two labels exactly for
// the D nonnesting pair +-1, drawn stacked.  Circular: slots are the circle
// dots clockwise from the top; center_pair holds the D labels drawn
// coincidently at the centre.  Arcs are label pairs: bump-graph edges for
// linear layouts, convex-hull boundary edges for circular ones.
struct DiagramSpec {
  DiagramLayout layout = DiagramLayout::Linear;
  std::vector<std::vector<int>> slots;
  std::vector<std::pair<int, int>> arcs;
  std::optional<std::pair<int, int>> center_pair;
};

DiagramSpec layout_diagram(const GroupFamily& g, Mode mode,
                           const ClassicalPartition& p);

// Deterministic text document: byte-identical output for identical inputs.
// ASCII is linear-only (box-drawing arcs); circular diagrams are SVG-only.
std::string emit(const DiagramSpec& spec, DiagramFormat format);

// Geometric checks on a laid-out spec (used by the verification suite):
// no two arcs cross (linear: interval crossings; circular: convex-hull
// disjointness of the arc components, with the D centre rules).
bool spec_noncrossing(const DiagramSpec& spec);

// Linear specs only: no arc strictly contains another (slot-index nesting);
// the D incomparable pair shares a slot and so never nests.
bool spec_nonnesting_linear(const DiagramSpec& spec);

}  // namespace ncnn
