#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ggk/gentle.hpp"
#include "ggk/module.hpp"
#include "ggk/strings.hpp"

namespace ggk {

enum class IntKind { Boundary, Interior };

/* One oriented intersection between two graded strings.
   Boundary records sit at a shared marked point (both strings have an end
   parked at the same fan); `overlap` is the length of the maximal common
   aligned prefix of the two strings oriented out of that point, and
   `case_id` records how they separate afterwards:
     0  identity-like placeholder (composition unit)
     1  ends at the same fan but different chain slots (no overlap)
     2  the source string is exhausted by the overlap
     3  the target string is exhausted by the overlap
     4  both continue with opposite-direction letters
     5  both continue with same-direction letters (divergence path stored)
     6  full overlap on both sides: parallel strings
   Interior records mark a transversal crossing over a maximal common
   substring; they always come in pairs with indices (rho, 1 - rho). */
struct IntersectionRecord {
  bool from_second = false;  // false: first -> second, true: second -> first
  int index = 0;
  IntKind kind = IntKind::Boundary;
  int case_id = 0;
  int fan = -1;       // marked point of the intersection (boundary records)
  int end_first = -1;   // which end of the first string (0 head, 1 tail)
  int end_second = -1;  // which end of the second string
  int overlap = 0;      // aligned prefix length k
  std::optional<Path> div_path;  // divergence path (cases 1 and 5)
  // Interior site: aligned ranges start at pos_first / pos_second (1-based,
  // each in its own string's stored numbering) and have length substring_len;
  // `reversed` marks that the second string is traversed backwards.
  int pos_first = 0;
  int pos_second = 0;
  int substring_len = 0;
  bool reversed = false;
};

/* The unique oriented intersection attached to the pair of ends (ea of a,
   eb of b), or nullopt when those ends do not meet at a marked point. */
std::optional<IntersectionRecord> record_at_end_pair(const GentlePair& pair,
                                                     const FanSystem& sys,
                                                     const GradedString& a,
                                                     int ea,
                                                     const GradedString& b,
                                                     int eb);

/* All boundary records between distinct strings (both directions).
   Equal canonical forms are refused: self-pairings are not supported. */
std::vector<IntersectionRecord> boundary_intersections(const GentlePair& pair,
                                                       const GradedString& a,
                                                       const GradedString& b);

/* All interior records (both directions; two per crossing site). */
std::vector<IntersectionRecord> interior_intersections(const GentlePair& pair,
                                                       const GradedString& a,
                                                       const GradedString& b);

/* Counts of oriented intersections from a to b, keyed by index. */
std::map<int, int> int_table(const GentlePair& pair, const GradedString& a,
                             const GradedString& b);

/* Counts of positions of s at `vertex`, keyed by the position shift: the
   intersection table of s with the transversal dual arc at that vertex. */
std::map<int, int> int_with_dual_simple(const GradedString& s, int vertex);

/* The dg morphism X(source) -> X(target) attached to a boundary record
   between a and b (source/target per rec.from_second).  Interior records
   carry no canonical representative here and are rejected. */
DgMorphism morphism_from_intersection(const GentlePair& pair,
                                      const IntersectionRecord& rec,
                                      const GradedString& a,
                                      const GradedString& b);

/* Composition unit at an end of s. */
IntersectionRecord identity_record(const GradedString& s, int end);

/* Composite of a: s1 -> s2 (at a shared marked point) with b: s2 -> s3 at
   the same point and the same end of s2.  Throws CheckError when the records
   are not composable; asserts index additivity. */
IntersectionRecord compose_intersections(const GentlePair& pair,
                                         const GradedString& s1,
                                         const GradedString& s2,
                                         const GradedString& s3,
                                         const IntersectionRecord& a,
                                         const IntersectionRecord& b);

}  // namespace ggk
