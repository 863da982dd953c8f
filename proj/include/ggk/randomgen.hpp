#pragma once

#include <random>

#include "ggk/dissection.hpp"
#include "ggk/gentle.hpp"
#include "ggk/strings.hpp"

namespace ggk {

using Rng = std::mt19937_64;

/* Random polygon dissection: a few polygons, one marked boundary stretch
   each, arc sides glued by a random perfect matching.  Resampled until the
   resulting pair is gentle, finite dimensional, and fan-consistent, so the
   returned dissection always presents a usable algebra.  `max_arcs` bounds
   the number of arcs (hence vertices). */
Dissection random_dissection(Rng& rng, int max_arcs);

/* algebra_from_dissection of random_dissection, finalized, with random angle
   degrees in [-3, 3]. */
GentlePair random_pair(Rng& rng, int max_arcs);

/* Random valid string over the pair: a walk through the arrow adjacencies
   with single-arrow letters, graded by the shift recursion from a random
   initial shift.  May have no letters at all. */
GradedString random_string(const GentlePair& pair, Rng& rng, int max_letters);

}  // namespace ggk
