#pragma once

#include "ggk/dissection.hpp"
#include "ggk/gentle.hpp"

namespace ggk {

/* The built-in example pair: vertices g1..g7, arrows
   a1:g1→g2, a2:g2→g3, a3:g4→g3, a4:g4→g6, a5:g5→g2, a6:g6→g5, a7:g6→g7,
   a8:g1→g7, relations a4a6 and a5a2, all degrees 0.  Finalized. */
GentlePair fixture_pair();

/* A disk dissection with seven arcs whose algebra is exactly
   fixture_pair(): six polygons, one marked boundary stretch each, explicit
   angle ids a1..a8, all angle degrees 0. */
Dissection fixture_dissection();

}  // namespace ggk
