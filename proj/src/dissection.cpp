#include "ggk/dissection.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ggk {

namespace {

struct CornerScan {
  // Corner list per polygon: (index of first side, index of second side).
  std::vector<std::vector<std::pair<int, int>>> corners;
  int total = 0;
};

CornerScan scan_corners(const Dissection& d) {
  CornerScan out;
  for (const DissectionPolygon& poly : d.polygons) {
    std::vector<std::pair<int, int>> cs;
    int n = (int)poly.sides.size();
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      if (!poly.sides[(size_t)i].marked && !poly.sides[(size_t)j].marked)
        cs.push_back({i, j});
    }
    out.total += (int)cs.size();
    out.corners.push_back(std::move(cs));
  }
  return out;
}

}  // namespace

void validate_dissection(const Dissection& d) {
  if (d.polygons.empty()) throw InputError("dissection has no polygons");
  std::set<std::string> arc_set(d.arcs.begin(), d.arcs.end());
  if (arc_set.size() != d.arcs.size())
    throw InputError("duplicate arc name in arc list");
  std::map<std::pair<std::string, int>, int> slot_uses;
  for (size_t pi = 0; pi < d.polygons.size(); ++pi) {
    const DissectionPolygon& poly = d.polygons[pi];
    std::string where = "polygon " + std::to_string(pi);
    int marked = 0, arcs_here = 0;
    for (const DissectionSide& s : poly.sides) {
      if (s.marked) {
        ++marked;
        continue;
      }
      ++arcs_here;
      if (!arc_set.count(s.arc))
        throw InputError(where + " uses undeclared arc '" + s.arc + "'");
      if (s.end != 0 && s.end != 1)
        throw InputError(where + ": arc end must be 0 or 1");
      slot_uses[{s.arc, s.end}]++;
    }
    if (marked != 1)
      throw InputError(where + " must have exactly one marked boundary side");
    if (arcs_here < 1) throw InputError(where + " has no arc sides");
  }
  for (const std::string& a : d.arcs)
    for (int e = 0; e < 2; ++e) {
      auto it = slot_uses.find({a, e});
      int uses = it == slot_uses.end() ? 0 : it->second;
      if (uses != 1)
        throw InputError("arc '" + a + "' end " + std::to_string(e) + " is used " +
                         std::to_string(uses) + " times (expected exactly once)");
    }
  CornerScan cs = scan_corners(d);
  std::set<std::string> ids;
  for (size_t pi = 0; pi < d.polygons.size(); ++pi) {
    const DissectionPolygon& poly = d.polygons[pi];
    if (poly.angles.size() != cs.corners[pi].size())
      throw InputError("polygon " + std::to_string(pi) + " lists " +
                       std::to_string(poly.angles.size()) + " angles for " +
                       std::to_string(cs.corners[pi].size()) + " corners");
    for (const AngleSpec& a : poly.angles) {
      if (a.id.empty()) continue;
      if (!ids.insert(a.id).second)
        throw InputError("duplicate angle id '" + a.id + "'");
    }
  }
}

GentlePair algebra_from_dissection(const Dissection& d) {
  validate_dissection(d);
  GradedQuiver q;
  q.vertices = d.arcs;
  std::sort(q.vertices.begin(), q.vertices.end());

  CornerScan cs = scan_corners(d);
  std::set<std::string> taken;
  for (const DissectionPolygon& poly : d.polygons)
    for (const AngleSpec& a : poly.angles)
      if (!a.id.empty()) taken.insert(a.id);
  int auto_counter = 0;
  auto next_auto = [&]() {
    while (true) {
      std::string id = "x" + std::to_string(++auto_counter);
      if (!taken.count(id)) return id;
    }
  };

  // Arrows in scan order; remember each corner's arrow id for the relations.
  std::vector<std::vector<std::string>> corner_arrow(d.polygons.size());
  std::vector<Arrow> arrows;
  for (size_t pi = 0; pi < d.polygons.size(); ++pi) {
    const DissectionPolygon& poly = d.polygons[pi];
    for (size_t ci = 0; ci < cs.corners[pi].size(); ++ci) {
      auto [i, j] = cs.corners[pi][ci];
      const AngleSpec& spec = poly.angles[ci];
      Arrow a;
      a.id = spec.id.empty() ? next_auto() : spec.id;
      a.src = q.vertex_index(poly.sides[(size_t)i].arc);
      a.tgt = q.vertex_index(poly.sides[(size_t)j].arc);
      a.degree = spec.degree;
      corner_arrow[pi].push_back(a.id);
      arrows.push_back(std::move(a));
    }
  }
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  q.arrows = std::move(arrows);

  // Two corners of one polygon sharing their middle side give a relation.
  std::vector<std::pair<int, int>> rels;
  for (size_t pi = 0; pi < d.polygons.size(); ++pi) {
    const auto& corners = cs.corners[pi];
    for (size_t ci = 0; ci < corners.size(); ++ci)
      for (size_t cj = 0; cj < corners.size(); ++cj) {
        if (ci == cj) continue;
        if (corners[ci].second == corners[cj].first)
          rels.push_back({q.arrow_index(corner_arrow[pi][ci]),
                          q.arrow_index(corner_arrow[pi][cj])});
      }
  }
  GentlePair pair = make_gentle_pair(std::move(q), std::move(rels));
  finalize(pair);
  return pair;
}

SurfaceReport surface_report(const Dissection& d) {
  GentlePair pair = algebra_from_dissection(d);
  FanSystem sys = fan_system(pair);

  SurfaceReport rep;
  rep.polygons = (int)d.polygons.size();
  rep.arcs = (int)d.arcs.size();
  rep.arrows = pair.n_arrows();
  rep.euler_characteristic = rep.polygons - rep.arcs;
  rep.marked_open = (int)sys.fans.size();
  rep.marked_closed = rep.polygons;
  if ((int)sys.fans.size() != rep.polygons)
    throw CheckError("surface_report: marked point count mismatch");

  // Geometric end of each arc -> its fan occurrence.  Ends that meet a corner
  // are pinned by the corner's arrow; leftover ends take the unused slots.
  std::map<std::pair<int, int>, std::pair<int, int>> end_occ;  // (vertex,end)->(fan,pos)
  CornerScan cs = scan_corners(d);
  // Recompute corner arrow ids the same way as algebra_from_dissection.
  std::set<std::string> taken;
  for (const DissectionPolygon& poly : d.polygons)
    for (const AngleSpec& a : poly.angles)
      if (!a.id.empty()) taken.insert(a.id);
  int auto_counter = 0;
  auto next_auto = [&]() {
    while (true) {
      std::string id = "x" + std::to_string(++auto_counter);
      if (!taken.count(id)) return id;
    }
  };
  auto pin = [&end_occ](std::pair<int, int> key, std::pair<int, int> slot) {
    auto [it, fresh] = end_occ.emplace(key, slot);
    if (!fresh && it->second != slot)
      throw CheckError("surface_report: corner pinning disagrees");
  };
  for (size_t pi = 0; pi < d.polygons.size(); ++pi) {
    const DissectionPolygon& poly = d.polygons[pi];
    for (size_t ci = 0; ci < cs.corners[pi].size(); ++ci) {
      auto [i, j] = cs.corners[pi][ci];
      const AngleSpec& spec = poly.angles[ci];
      std::string id = spec.id.empty() ? next_auto() : spec.id;
      int a = pair.quiver.arrow_index(id);
      auto [f, c] = sys.arrow_pos[(size_t)a];
      const DissectionSide& first = poly.sides[(size_t)i];
      const DissectionSide& second = poly.sides[(size_t)j];
      pin({pair.quiver.vertex_index(first.arc), first.end}, {f, c});
      pin({pair.quiver.vertex_index(second.arc), 1 - second.end}, {f, c + 1});
    }
  }
  for (int v = 0; v < pair.n_vertices(); ++v) {
    std::vector<std::pair<int, int>> free_slots;
    for (const auto& slot : sys.occ[(size_t)v]) {
      bool used = false;
      for (int e = 0; e < 2; ++e) {
        auto it = end_occ.find({v, e});
        if (it != end_occ.end() && it->second == slot) used = true;
      }
      if (!used) free_slots.push_back(slot);
    }
    size_t k = 0;
    for (int e = 0; e < 2; ++e)
      if (!end_occ.count({v, e})) {
        if (k >= free_slots.size())
          throw CheckError("surface_report: occurrence bookkeeping failed");
        end_occ[{v, e}] = free_slots[k++];
      }
  }

  // Boundary walk: the marked side of each polygon joins the fan of the arc
  // end before it (at its last chain position) to the fan of the arc end
  // after it (at position 0).  Cycles of that permutation are the boundary
  // components.
  std::vector<int> next_fan((size_t)sys.fans.size(), -1);
  for (const DissectionPolygon& poly : d.polygons) {
    int n = (int)poly.sides.size();
    int token = -1;
    for (int i = 0; i < n; ++i)
      if (poly.sides[(size_t)i].marked) token = i;
    const DissectionSide& before = poly.sides[(size_t)((token + n - 1) % n)];
    const DissectionSide& after = poly.sides[(size_t)((token + 1) % n)];
    auto u = end_occ.at({pair.quiver.vertex_index(before.arc), before.end});
    auto v = end_occ.at({pair.quiver.vertex_index(after.arc), 1 - after.end});
    if (u.second != sys.fan_size(u.first) - 1)
      throw CheckError("surface_report: boundary walk left a fan mid-chain");
    if (v.second != 0)
      throw CheckError("surface_report: boundary walk entered a fan mid-chain");
    if (next_fan[(size_t)u.first] != -1)
      throw CheckError("surface_report: boundary walk is not a permutation");
    next_fan[(size_t)u.first] = v.first;
  }
  std::vector<bool> seen(next_fan.size(), false);
  int cycles = 0;
  for (size_t f = 0; f < next_fan.size(); ++f) {
    if (seen[f]) continue;
    ++cycles;
    int cur = (int)f;
    while (!seen[(size_t)cur]) {
      seen[(size_t)cur] = true;
      cur = next_fan[(size_t)cur];
      if (cur < 0) throw CheckError("surface_report: broken boundary walk");
    }
  }
  rep.boundary_components = cycles;
  int two_g = 2 - cycles - rep.euler_characteristic;
  if (two_g < 0 || two_g % 2 != 0)
    throw CheckError("surface_report: inconsistent genus");
  rep.genus = two_g / 2;
  return rep;
}

GentlePair dual_pair_of(const Dissection& d) {
  return quadratic_dual(algebra_from_dissection(d));
}

}  // namespace ggk
