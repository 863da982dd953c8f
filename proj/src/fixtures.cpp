#include "ggk/fixtures.hpp"

namespace ggk {

namespace {

Arrow arrow(const char* id, int src, int tgt) {
  Arrow a;
  a.id = id;
  a.src = src;
  a.tgt = tgt;
  return a;
}

DissectionSide arc_side(const char* arc, int end) {
  DissectionSide s;
  s.arc = arc;
  s.end = end;
  return s;
}

DissectionSide marked_side() {
  DissectionSide s;
  s.marked = true;
  return s;
}

DissectionPolygon polygon(std::vector<DissectionSide> sides,
                          std::vector<const char*> angle_ids) {
  DissectionPolygon p;
  p.sides = std::move(sides);
  for (const char* id : angle_ids) {
    AngleSpec a;
    a.id = id;
    p.angles.push_back(std::move(a));
  }
  return p;
}

}  // namespace

GentlePair fixture_pair() {
  GradedQuiver q;
  q.vertices = {"g1", "g2", "g3", "g4", "g5", "g6", "g7"};
  q.arrows = {
      arrow("a1", 0, 1), arrow("a2", 1, 2), arrow("a3", 3, 2),
      arrow("a4", 3, 5), arrow("a5", 4, 1), arrow("a6", 5, 4),
      arrow("a7", 5, 6), arrow("a8", 0, 6),
  };
  GentlePair pair = make_gentle_pair(std::move(q), {{3, 5}, {4, 1}});
  finalize(pair);
  return pair;
}

Dissection fixture_dissection() {
  Dissection d;
  d.arcs = {"g1", "g2", "g3", "g4", "g5", "g6", "g7"};
  d.polygons.push_back(polygon(
      {arc_side("g1", 1), arc_side("g7", 0), marked_side()}, {"a8"}));
  d.polygons.push_back(polygon(
      {marked_side(), arc_side("g4", 1), arc_side("g3", 0)}, {"a3"}));
  d.polygons.push_back(
      polygon({arc_side("g3", 1), marked_side(), arc_side("g5", 0),
               arc_side("g2", 0)},
              {"a5", "a2"}));
  d.polygons.push_back(polygon(
      {arc_side("g1", 0), arc_side("g2", 1), marked_side()}, {"a1"}));
  d.polygons.push_back(polygon(
      {marked_side(), arc_side("g6", 0), arc_side("g7", 1)}, {"a7"}));
  d.polygons.push_back(
      polygon({arc_side("g5", 1), marked_side(), arc_side("g4", 0),
               arc_side("g6", 1)},
              {"a4", "a6"}));
  return d;
}

}  // namespace ggk
