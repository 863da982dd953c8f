#pragma once

#include <vector>

#include "ggk/gentle.hpp"
#include "ggk/intersect.hpp"
#include "ggk/module.hpp"
#include "ggk/strings.hpp"

namespace ggk {

/* A chain of strings pairwise linked by index-one boundary records.  Record i
   was produced between strings[i] and strings[i+1]; its from_second flag
   gives the direction of the associated morphism. */
struct ThreadSpec {
  std::vector<GradedString> strings;
  std::vector<IntersectionRecord> records;
};

/* Checks the thread shape: every record matches its two strings, has index
   one, consecutive records use different ends of the middle string, and
   same-direction consecutive morphisms compose to zero.  Throws InputError
   for malformed data, CheckError for broken invariants. */
void validate_thread(const GentlePair& pair, const ThreadSpec& spec);

/* The total dg module of the thread: the direct sum of the string modules
   with the record morphisms added to the differential. */
DgModule thread_module(const GentlePair& pair, const ThreadSpec& spec,
                       std::vector<int>* gen_offsets = nullptr);

/* The smoothing of two strings at a boundary record: the common prefix at
   the shared marked point is cancelled and the remainders joined.  Parallel
   strings (case 6) have a contractible smoothing and are an error.  For a
   record of index other than one the target-side grading is tilted by
   index - 1 so the junction stays a graded string. */
GradedString smooth(const GentlePair& pair, const GradedString& a,
                    const GradedString& b, const IntersectionRecord& rec);

/* Left fold of smooth over a thread, re-deriving at each step the unique
   index-one record between the partial smoothing and the next string that
   matches the original record. */
GradedString smooth_thread(const GentlePair& pair, const ThreadSpec& spec);

/* The two-sided degree-zero homotopy equivalence between the two-term
   thread module of an index-one record (the cone of its morphism) and the
   module of the smoothed string. */
struct SmoothingEquivalence {
  GradedString smoothed;
  DgModule cone;             // X(source) + X(target) with the record morphism
  DgModule smoothed_module;  // X(smoothed)
  DgMorphism chi;            // cone -> smoothed module
  DgMorphism psi;            // smoothed module -> cone
  int overlap = 0;
  int source_size = 0, target_size = 0;
  int source_offset = 0, target_offset = 0;
};

SmoothingEquivalence smoothing_equivalence(const GentlePair& pair,
                                           const GradedString& a,
                                           const GradedString& b,
                                           const IntersectionRecord& rec);

/* Block embedding into / projection out of the cone of a smoothing
   equivalence; part 0 is the source block, part 1 the target block scaled
   by (-1)^overlap. */
DgMorphism cone_embedding(const SmoothingEquivalence& eq, int part);
DgMorphism cone_projection(const SmoothingEquivalence& eq, int part);

/* The resolution string of the simple module at a vertex: the two maximal
   relation branches out of the vertex glued at the center, in canonical
   form.  A vertex with no outgoing arrows resolves to itself. */
GradedString simple_resolution(const GentlePair& pair, int vertex);

/* Transport of a string over the quadratic dual to a string over the base
   pair: every dual position becomes the shifted resolution string of its
   vertex, every dual letter the matching index-one record between
   consecutive resolutions, and the whole thread is smoothed. */
GradedString half_rotate(const GentlePair& pair, const GradedString& eta);

/* The dg module of the transported string. */
DgModule koszul_object(const GentlePair& pair, const GradedString& eta);

/* The transport taken from the base side: strings over the pair map to
   strings over the quadratic dual, up to a fixed global shift. */
GradedString half_rotate_open(const GentlePair& pair, const GradedString& s);

/* A corner pair: rec_ab between strings[a] and strings[b] oriented a -> b,
   rec_bc between strings[b] and strings[c] oriented b -> c, meeting at the
   same end of strings[b]. */
struct AnglePair {
  int a = 0, b = 0, c = 0;
  IntersectionRecord ab, bc;
};

/* Whether every listed composite of corner morphisms vanishes on the nose.
   Non-composable listed pairs are an error; an empty list holds vacuously. */
bool strong_formality_check(const GentlePair& pair,
                            const std::vector<GradedString>& strings,
                            const std::vector<AnglePair>& angles);

}  // namespace ggk
