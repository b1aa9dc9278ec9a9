#include "ncnn/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "ncnn/errors.hpp"

namespace ncnn {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v + 0.0);  // normalise -0
  return buf;
}

// Hull edges of one block on the circle: the polygon through its dots in
// cyclic position order, closed for three or more dots.
void hull_edges(const std::vector<int>& labels, const std::vector<int>& pos,
                std::vector<std::pair<int, int>>* arcs) {
  const size_t m = labels.size();
  if (m < 2) return;
  std::vector<size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return pos[a] < pos[b]; });
  if (m == 2) {
    arcs->emplace_back(labels[idx[0]], labels[idx[1]]);
    return;
  }
  for (size_t t = 0; t < m; ++t)
    arcs->emplace_back(labels[idx[t]], labels[idx[(t + 1) % m]]);
}

// Hull edges for a D block holding one centre label: the dots along their
// minimal covering arc plus the two spokes to the centre.
void cone_edges(int centre, const std::vector<int>& labels,
                const std::vector<int>& pos, int mcirc,
                std::vector<std::pair<int, int>>* arcs) {
  const size_t m = labels.size();
  if (m == 0) return;
  std::vector<size_t> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](size_t a, size_t b) { return pos[a] < pos[b]; });
  // rotate so the largest cyclic gap comes last
  size_t cut = 0;
  int best = -1;
  for (size_t t = 0; t < m; ++t) {
    int gap = pos[idx[(t + 1) % m]] - pos[idx[t]];
    if (gap <= 0) gap += mcirc;
    if (gap > best) {
      best = gap;
      cut = (t + 1) % m;
    }
  }
  std::vector<int> run;
  for (size_t t = 0; t < m; ++t) run.push_back(labels[idx[(cut + t) % m]]);
  arcs->emplace_back(centre, run.front());
  for (size_t t = 0; t + 1 < run.size(); ++t)
    arcs->emplace_back(run[t], run[t + 1]);
  if (run.size() > 1) arcs->emplace_back(centre, run.back());
}

}  // namespace

DiagramSpec layout_diagram(const GroupFamily& g, Mode mode,
                           const ClassicalPartition& p) {
  if (!satisfies_mode(g, mode, p))
    throw PredicateViolation("diagram layout needs a partition of the mode");

  DiagramSpec spec;
  const int n = g.ambient_dim();
  const bool circular = mode == Mode::NC && g.family != Family::A;

  if (!circular) {
    spec.layout = DiagramLayout::Linear;
    GroundOrder o = ground_order(g, mode);
    // greatest elements to the left; ties (the D pair) share a slot
    int prev_rank = -1;
    for (auto it = o.domain.rbegin(); it != o.domain.rend(); ++it) {
      if (prev_rank == o.rank.at(*it))
        spec.slots.back().push_back(*it);
      else
        spec.slots.push_back({*it});
      prev_rank = o.rank.at(*it);
    }
    spec.arcs = bump_graph(p, o);
    std::sort(spec.arcs.begin(), spec.arcs.end());
    return spec;
  }

  spec.layout = DiagramLayout::Circular;
  std::vector<int> cycle;
  if (g.family == Family::D) {
    for (int i = 2; i <= n; ++i) cycle.push_back(-i);
    for (int i = 2; i <= n; ++i) cycle.push_back(i);
    spec.center_pair = std::make_pair(1, -1);
  } else {
    for (int i = 1; i <= n; ++i) cycle.push_back(-i);
    for (int i = 1; i <= n; ++i) cycle.push_back(i);
  }
  for (int e : cycle) spec.slots.push_back({e});
  std::map<int, int> pos_of;
  for (size_t t = 0; t < cycle.size(); ++t) pos_of[cycle[t]] = static_cast<int>(t);
  const int mcirc = static_cast<int>(cycle.size());

  std::vector<std::vector<int>> all = p.blocks();
  if (p.has_zero_block()) all.push_back(p.zero_block());
  for (const auto& b : all) {
    std::vector<int> labels, pos;
    int centre = 0;
    bool both_centre = false;
    for (int e : b) {
      if (g.family == Family::D && (e == 1 || e == -1)) {
        both_centre = centre != 0;
        centre = e;
        continue;
      }
      labels.push_back(e);
      pos.push_back(pos_of.at(e));
    }
    if (centre != 0 && !both_centre)
      cone_edges(centre, labels, pos, mcirc, &spec.arcs);
    else
      hull_edges(labels, pos, &spec.arcs);
  }
  std::sort(spec.arcs.begin(), spec.arcs.end());
  spec.arcs.erase(std::unique(spec.arcs.begin(), spec.arcs.end()),
                  spec.arcs.end());
  return spec;
}

namespace {

// ---------------------------------------------------------------- ascii ---

struct Cell {
  bool horiz = false, vert = false, corner_l = false, corner_r = false;
};

std::string cell_glyph(const Cell& c) {
  if (c.corner_l && c.vert) return "├";  // |-
  if (c.corner_r && c.vert) return "┤";
  if (c.corner_l) return "╭";
  if (c.corner_r) return "╮";
  if (c.horiz && c.vert) return "┼";
  if (c.horiz) return "─";
  if (c.vert) return "│";
  return " ";
}

std::string emit_ascii(const DiagramSpec& spec) {
  const int ns = static_cast<int>(spec.slots.size());
  std::map<int, int> slot_of;
  std::vector<std::vector<std::string>> labels(ns);
  size_t label_rows = 1;
  int pitch = 2;
  for (int s = 0; s < ns; ++s) {
    for (int e : spec.slots[s]) {
      slot_of[e] = s;
      labels[s].push_back(std::to_string(e));
      pitch = std::max(pitch, static_cast<int>(labels[s].back().size()) + 1);
    }
    label_rows = std::max(label_rows, labels[s].size());
  }

  struct Arc {
    int lo, hi;  // slot indices, lo < hi
  };
  std::vector<Arc> arcs;
  for (auto [a, b] : spec.arcs) {
    int sa = slot_of.at(a), sb = slot_of.at(b);
    if (sa > sb) std::swap(sa, sb);
    arcs.push_back({sa, sb});
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    return x.lo != y.lo ? x.lo < y.lo : x.hi < y.hi;
  });

  // greedy height assignment; closed intervals at one height may not touch
  std::vector<int> height(arcs.size(), 0);
  int maxh = 0;
  for (size_t i = 0; i < arcs.size(); ++i) {
    int h = 1;
    for (bool moved = true; moved;) {
      moved = false;
      for (size_t j = 0; j < i; ++j)
        if (height[j] == h && arcs[j].hi >= arcs[i].lo &&
            arcs[i].hi >= arcs[j].lo) {
          ++h;
          moved = true;
        }
    }
    height[i] = h;
    maxh = std::max(maxh, h);
  }

  const int width = ns * pitch;
  auto col = [&](int slot) { return slot * pitch; };
  std::vector<std::vector<Cell>> grid(maxh, std::vector<Cell>(width));
  for (size_t i = 0; i < arcs.size(); ++i) {
    int row = maxh - height[i];  // row 0 is the top
    grid[row][col(arcs[i].lo)].corner_l = true;
    grid[row][col(arcs[i].hi)].corner_r = true;
    for (int x = col(arcs[i].lo) + 1; x < col(arcs[i].hi); ++x)
      grid[row][x].horiz = true;
    for (int r = row + 1; r < maxh; ++r) {
      grid[r][col(arcs[i].lo)].vert = true;
      grid[r][col(arcs[i].hi)].vert = true;
    }
  }

  std::string out;
  for (int r = 0; r < maxh; ++r) {
    std::string line;
    for (int x = 0; x < width; ++x) line += cell_glyph(grid[r][x]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  for (size_t lr = 0; lr < label_rows; ++lr) {
    std::string line(width, ' ');
    for (int s = 0; s < ns; ++s)
      if (lr < labels[s].size())
        line.replace(col(s), labels[s][lr].size(), labels[s][lr]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

// ------------------------------------------------------------------ svg ---

struct Point {
  double x, y;
};

std::string emit_svg_linear(const DiagramSpec& spec) {
  const int ns = static_cast<int>(spec.slots.size());
  const double pitch = 34.0, x0 = 30.0, base = 150.0, stack = 22.0;
  std::map<int, Point> at;
  for (int s = 0; s < ns; ++s)
    for (size_t t = 0; t < spec.slots[s].size(); ++t)
      at[spec.slots[s][t]] = {x0 + s * pitch, base + t * stack};

  double w = x0 * 2 + (ns - 1) * pitch, h = base + 60.0;
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                    "viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
  for (auto [a, b] : spec.arcs) {
    Point pa = at.at(a), pb = at.at(b);
    double span = std::abs(pb.x - pa.x);
    double cy = std::min(pa.y, pb.y) - 0.38 * span - 14.0;
    out += "  <path d=\"M " + fmt(pa.x) + " " + fmt(pa.y - 6) + " Q " +
           fmt((pa.x + pb.x) / 2) + " " + fmt(cy) + " " + fmt(pb.x) + " " +
           fmt(pb.y - 6) + "\" fill=\"none\" stroke=\"black\"/>\n";
  }
  for (const auto& [e, pt] : at) {
    out += "  <circle cx=\"" + fmt(pt.x) + "\" cy=\"" + fmt(pt.y) +
           "\" r=\"2.5\" fill=\"black\"/>\n";
    out += "  <text x=\"" + fmt(pt.x) + "\" y=\"" + fmt(pt.y + 16) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(e) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit_svg_circular(const DiagramSpec& spec) {
  const int m = static_cast<int>(spec.slots.size());
  const double cx = 150.0, cy = 150.0, r = 100.0, rl = 118.0;
  const double pi = 3.14159265358979323846;
  std::map<int, Point> at, lab;
  for (int s = 0; s < m; ++s) {
    double th = pi / 2 - 2 * pi * s / m;  // clockwise from the top
    at[spec.slots[s][0]] = {cx + r * std::cos(th), cy - r * std::sin(th)};
    lab[spec.slots[s][0]] = {cx + rl * std::cos(th), cy - rl * std::sin(th)};
  }
  if (spec.center_pair) {
    at[spec.center_pair->first] = {cx, cy};
    at[spec.center_pair->second] = {cx, cy};
    lab[spec.center_pair->first] = {cx + 10, cy - 8};
    lab[spec.center_pair->second] = {cx + 10, cy + 14};
  }

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                    "viewBox=\"0 0 300 300\">\n";
  out += "  <circle cx=\"" + fmt(cx) + "\" cy=\"" + fmt(cy) + "\" r=\"" +
         fmt(r) + "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
  for (auto [a, b] : spec.arcs) {
    Point pa = at.at(a), pb = at.at(b);
    out += "  <line x1=\"" + fmt(pa.x) + "\" y1=\"" + fmt(pa.y) + "\" x2=\"" +
           fmt(pb.x) + "\" y2=\"" + fmt(pb.y) + "\" stroke=\"black\"/>\n";
  }
  std::set<std::pair<double, double>> dotted;
  for (const auto& [e, pt] : at) {
    if (dotted.insert({pt.x, pt.y}).second)
      out += "  <circle cx=\"" + fmt(pt.x) + "\" cy=\"" + fmt(pt.y) +
             "\" r=\"2.5\" fill=\"black\"/>\n";
    Point lp = lab.at(e);
    out += "  <text x=\"" + fmt(lp.x) + "\" y=\"" + fmt(lp.y + 4) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + std::to_string(e) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string emit(const DiagramSpec& spec, DiagramFormat format) {
  if (format == DiagramFormat::Ascii) {
    if (spec.layout == DiagramLayout::Circular)
      throw UnsupportedCombination("circular diagrams are SVG-only");
    return emit_ascii(spec);
  }
  return spec.layout == DiagramLayout::Linear ? emit_svg_linear(spec)
                                              : emit_svg_circular(spec);
}

namespace {

struct Component {
  std::vector<int> pos;   // circle positions, sorted
  bool has_plus1 = false, has_minus1 = false;
};

// positions of S_X and S_Y strictly interleave around the circle
bool interleaved(const std::vector<int>& xs, const std::vector<int>& ys) {
  std::vector<std::pair<int, int>> tagged;  // (position, who)
  for (int p : xs) tagged.emplace_back(p, 0);
  for (int p : ys) tagged.emplace_back(p, 1);
  std::sort(tagged.begin(), tagged.end());
  std::vector<int> runs;
  for (auto& [p, who] : tagged)
    if (runs.empty() || runs.back() != who) runs.push_back(who);
  if (runs.size() > 1 && runs.front() == runs.back()) runs.pop_back();
  return runs.size() >= 4;
}

int max_cyclic_gap(const std::vector<int>& pos, int m) {
  if (pos.empty()) return 2 * m;
  if (pos.size() == 1) return m;
  int best = 0;
  for (size_t t = 0; t < pos.size(); ++t) {
    int next = pos[(t + 1) % pos.size()];
    int gap = next - pos[t];
    if (gap <= 0) gap += m;
    best = std::max(best, gap);
  }
  return best;
}

// minimal covering arc [start, start+len] (len in steps), valid when the
// dots fit in less than the full circle
std::pair<int, int> cover_arc(const std::vector<int>& pos, int m) {
  int best = 0;
  size_t cut = 0;
  for (size_t t = 0; t < pos.size(); ++t) {
    int next = pos[(t + 1) % pos.size()];
    int gap = next - pos[t];
    if (gap <= 0) gap += m;
    if (gap > best) {
      best = gap;
      cut = (t + 1) % pos.size();
    }
  }
  return {pos[cut], m - best};
}

bool arcs_overlap(std::pair<int, int> a, std::pair<int, int> b, int m) {
  for (int t = 0; t <= a.second; ++t) {
    int p = (a.first + t) % m;
    int rel = (p - b.first % m + 2 * m) % m;
    if (rel <= b.second) return true;
  }
  return false;
}

bool circular_noncrossing(const DiagramSpec& spec) {
  const int m = static_cast<int>(spec.slots.size());
  std::map<int, int> pos_of;
  for (int s = 0; s < m; ++s) pos_of[spec.slots[s][0]] = s;

  // components of the arc graph, plus singleton centre labels
  std::map<int, int> comp;
  int nc = 0;
  std::function<int(int)> find = [&](int e) -> int {
    if (!comp.count(e)) comp[e] = nc++;
    return comp[e];
  };
  std::vector<int> parent;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : spec.slots) find(s[0]);
  if (spec.center_pair) {
    find(spec.center_pair->first);
    find(spec.center_pair->second);
  }
  parent.resize(nc);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : spec.arcs) parent[root(find(a))] = root(find(b));

  std::map<int, Component> comps;
  for (auto [e, id] : comp) {
    Component& c = comps[root(id)];
    if (spec.center_pair && e == spec.center_pair->first)
      c.has_plus1 = true;
    else if (spec.center_pair && e == spec.center_pair->second)
      c.has_minus1 = true;
    else
      c.pos.push_back(pos_of.at(e));
  }
  for (auto& [id, c] : comps) std::sort(c.pos.begin(), c.pos.end());

  std::vector<const Component*> list;
  for (auto& [id, c] : comps)
    if (c.pos.size() >= 2 || c.has_plus1 || c.has_minus1)
      list.push_back(&c);

  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = i + 1; j < list.size(); ++j) {
      const Component &x = *list[i], &y = *list[j];
      if (interleaved(x.pos, y.pos)) return false;
      const bool cx = x.has_plus1 || x.has_minus1;
      const bool cy = y.has_plus1 || y.has_minus1;
      if (!cx && !cy) continue;
      auto centred_pair = [&](const Component& a, const Component& b) {
        // both hulls own the centre; legal only when each stays a cone on
        // its own side
        if (a.pos.empty() && b.pos.empty()) return true;  // the +-1 singletons
        if (a.pos.empty() || b.pos.empty()) return false;  // point in a cone
        if (max_cyclic_gap(a.pos, m) * 2 <= m ||
            max_cyclic_gap(b.pos, m) * 2 <= m)
          return false;  // some hull wraps the centre strictly or on edge
        return !arcs_overlap(cover_arc(a.pos, m), cover_arc(b.pos, m), m);
      };
      if (cx && cy) {
        if (!centred_pair(x, y)) return false;
        continue;
      }
      const Component& cone = cx ? x : y;
      const Component& chord = cx ? y : x;
      if (chord.pos.size() < 2) continue;
      if (cone.pos.empty()) {
        // a bare centre point: inside the chordal hull iff no gap exceeds
        // half the circle
        if (max_cyclic_gap(chord.pos, m) * 2 <= m) return false;
        continue;
      }
      if (max_cyclic_gap(cone.pos, m) * 2 <= m) continue;  // wraps; safe
      // the cone sits inside one gap of the chordal hull; it pierces the
      // closing chord exactly when that gap is at most half the circle
      auto [start, len] = cover_arc(cone.pos, m);
      for (size_t t = 0; t < chord.pos.size(); ++t) {
        int g1 = chord.pos[t];
        int g2 = chord.pos[(t + 1) % chord.pos.size()];
        int gap = g2 - g1;
        if (gap <= 0) gap += m;
        int rel = (start - g1 + 2 * m) % m;
        if (rel > 0 && rel + len < gap) {
          if (gap * 2 <= m) return false;
          break;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool spec_noncrossing(const DiagramSpec& spec) {
  if (spec.layout == DiagramLayout::Circular)
    return circular_noncrossing(spec);
  std::map<int, int> slot_of;
  for (size_t s = 0; s < spec.slots.size(); ++s)
    for (int e : spec.slots[s]) slot_of[e] = static_cast<int>(s);
  for (size_t i = 0; i < spec.arcs.size(); ++i) {
    for (size_t j = i + 1; j < spec.arcs.size(); ++j) {
      int a = slot_of.at(spec.arcs[i].first), c = slot_of.at(spec.arcs[i].second);
      int b = slot_of.at(spec.arcs[j].first), d = slot_of.at(spec.arcs[j].second);
      if (a > c) std::swap(a, c);
      if (b > d) std::swap(b, d);
      if ((a < b && b < c && c < d) || (b < a && a < d && d < c)) return false;
    }
  }
  return true;
}

bool spec_nonnesting_linear(const DiagramSpec& spec) {
  if (spec.layout != DiagramLayout::Linear)
    throw UnsupportedCombination("nesting check applies to linear layouts");
  std::map<int, int> slot_of;
  for (size_t s = 0; s < spec.slots.size(); ++s)
    for (int e : spec.slots[s]) slot_of[e] = static_cast<int>(s);
  for (size_t i = 0; i < spec.arcs.size(); ++i) {
    for (size_t j = i + 1; j < spec.arcs.size(); ++j) {
      int a = slot_of.at(spec.arcs[i].first), d = slot_of.at(spec.arcs[i].second);
      int b = slot_of.at(spec.arcs[j].first), c = slot_of.at(spec.arcs[j].second);
      if (a > d) std::swap(a, d);
      if (b > c) std::swap(b, c);
      if ((a < b && c < d) || (b < a && d < c)) return false;
    }
  }
  return true;
}

}  // namespace ncnn
