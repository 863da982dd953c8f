#pragma once

#include <string>
#include <vector>

#include "ggk/gentle.hpp"

namespace ggk {

/* A corner between two consecutive arc sides of a polygon.  The id names the
   arrow the corner induces; an empty id asks for an auto-generated one. */
struct AngleSpec {
  std::string id;
  int degree = 0;
};

/* One side of a polygon: either the marked boundary stretch (exactly one per
   polygon) or an arc side.  `end` is the end of the arc at which a clockwise
   traversal of the polygon boundary leaves the arc. */
struct DissectionSide {
  bool marked = false;
  std::string arc;
  int end = 0;
};

struct DissectionPolygon {
  std::vector<DissectionSide> sides;  // clockwise, as seen from the interior
  std::vector<AngleSpec> angles;      // one per corner, scan order from side 0
};

/* A polygon dissection of a marked surface.  Arcs are the dissection arcs;
   every (arc, end) slot appears exactly once among all polygon sides, which
   makes the gluing well defined and orientable. */
struct Dissection {
  std::vector<std::string> arcs;
  std::vector<DissectionPolygon> polygons;
};

struct SurfaceReport {
  int polygons = 0;
  int arcs = 0;
  int arrows = 0;
  int euler_characteristic = 0;
  int boundary_components = 0;
  int genus = 0;
  int marked_open = 0;    // marked points met by arcs
  int marked_closed = 0;  // one interior marked point per polygon
};

/* Checks the combinatorial validity of the dissection; throws InputError with
   a description of the first problem found. */
void validate_dissection(const Dissection& d);

/* The graded gentle pair presented by the dissection: vertices are arcs,
   corners give arrows (first side to second side in clockwise order), and two
   corners sharing a side inside one polygon give a relation.  The result is
   finalized. */
GentlePair algebra_from_dissection(const Dissection& d);

/* Topology of the glued surface (reported, never enforced). */
SurfaceReport surface_report(const Dissection& d);

/* The pair presented by the dual dissection of the same surface; equals the
   quadratic dual of the primal pair. */
GentlePair dual_pair_of(const Dissection& d);

}  // namespace ggk
