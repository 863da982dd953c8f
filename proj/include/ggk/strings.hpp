#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ggk/gentle.hpp"

namespace ggk {

enum class Dir { L, R };

/* One letter of a graded string.  An L letter at slot i carries a nonzero
   path from vertex i to vertex i+1 (the component map goes i+1 -> i); an R
   letter carries a path from vertex i+1 to vertex i (the map goes i -> i+1).
   Degrees follow: L forces shift[i] = shift[i+1] + |path| - 1, R forces
   shift[i+1] = shift[i] + |path| - 1. */
struct Letter {
  Dir dir = Dir::L;
  Path path;

  friend bool operator==(const Letter& a, const Letter& b) {
    return a.dir == b.dir && a.path == b.path;
  }
  friend bool operator!=(const Letter& a, const Letter& b) { return !(a == b); }
  friend bool operator<(const Letter& a, const Letter& b) {
    if (a.dir != b.dir) return a.dir < b.dir;
    return a.path < b.path;
  }
};

struct GradedString {
  std::vector<int> vertices;  // size r >= 1
  std::vector<int> shifts;    // size r
  std::vector<Letter> letters;  // size r - 1

  int size() const { return (int)vertices.size(); }

  friend bool operator==(const GradedString& a, const GradedString& b) {
    return a.vertices == b.vertices && a.shifts == b.shifts &&
           a.letters == b.letters;
  }
  friend bool operator!=(const GradedString& a, const GradedString& b) {
    return !(a == b);
  }
  friend bool operator<(const GradedString& a, const GradedString& b) {
    if (a.vertices != b.vertices) return a.vertices < b.vertices;
    if (a.shifts != b.shifts) return a.shifts < b.shifts;
    return a.letters < b.letters;
  }
};

GradedString single_string(int vertex, int shift);

/* Description of the first defect of the string, or nullopt if valid. */
std::optional<std::string> string_problem(const GentlePair& pair,
                                          const GradedString& s);

/* Throws InputError if invalid. */
void validate_string(const GentlePair& pair, const GradedString& s);

/* Same walk in the opposite direction: reverses vertices and shifts, flips
   every letter's direction (paths are kept as they are). */
GradedString reverse_string(const GradedString& s);

/* Shifts the whole string: adds n to every grading entry. */
GradedString shift_string(const GradedString& s, int n);

/* The smaller of s and its reversal in the total order above; reversal
   never changes the canonical form. */
GradedString canonical_form(const GradedString& s);

std::string string_repr(const GentlePair& pair, const GradedString& s);

/* ------------------------------------------------------------------ *
 *  Fan-located geometry of a string                                   *
 * ------------------------------------------------------------------ */

/* The (fan, lo, hi) span of a letter's path: the path runs along consecutive
   chain positions lo..hi of one fan. */
struct LetterSpan {
  int fan = -1;
  int lo = -1;
  int hi = -1;
};

LetterSpan letter_span(const GentlePair& pair, const FanSystem& sys,
                       const Letter& letter);

/* The set of candidate fan slots for an end of the string.  Strings with at
   least one letter have a unique slot per end; a bare one-vertex string has
   both occurrences of its vertex as candidates. */
std::vector<std::pair<int, int>> end_descriptor(const GentlePair& pair,
                                                const FanSystem& sys,
                                                const GradedString& s,
                                                int which_end /* 0 head, 1 tail */);

/* A string together with a fixed traversal direction, located in the fan
   system: `near` is the slot of the end the traversal starts from, `far` the
   slot of the other end.  For one-vertex strings head = smaller slot. */
struct OView {
  GradedString s;
  std::pair<int, int> near;
  std::pair<int, int> far;
};

OView orient_out_of(const GentlePair& pair, const FanSystem& sys,
                    const GradedString& s, int which_end);

/* Sides of a traversal position: the polygon the string enters after / before
   crossing the position's arc, as (fan, entry side, exit side).  The exit is
   kCornerExit when the string terminates in that polygon. */
constexpr int kCornerExit = -1;

struct Flank {
  int fan = -1;
  int side = -1;
  int exit = -1;
};

Flank flank_after(const GentlePair& pair, const FanSystem& sys, const OView& v,
                  int pos /* 1-based */);
Flank flank_before(const GentlePair& pair, const FanSystem& sys, const OView& v,
                   int pos /* 1-based */);

}  // namespace ggk
