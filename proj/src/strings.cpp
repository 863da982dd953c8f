#include "ggk/strings.hpp"

#include <algorithm>

namespace ggk {

GradedString single_string(int vertex, int shift) {
  GradedString s;
  s.vertices = {vertex};
  s.shifts = {shift};
  return s;
}

std::optional<std::string> string_problem(const GentlePair& pair,
                                          const GradedString& s) {
  int r = s.size();
  if (r == 0) return "empty string";
  if ((int)s.shifts.size() != r) return "shift list length mismatch";
  if ((int)s.letters.size() != r - 1) return "letter list length mismatch";
  for (int v : s.vertices)
    if (v < 0 || v >= pair.n_vertices()) return "vertex out of range";
  for (int i = 0; i + 1 < r; ++i) {
    const Letter& l = s.letters[(size_t)i];
    if (l.path.trivial()) return "letter " + std::to_string(i + 1) + " has a trivial path";
    if (!path_is_nonzero(pair, l.path))
      return "letter " + std::to_string(i + 1) + " path is zero";
    int from = l.dir == Dir::L ? s.vertices[(size_t)i] : s.vertices[(size_t)i + 1];
    int to = l.dir == Dir::L ? s.vertices[(size_t)i + 1] : s.vertices[(size_t)i];
    if (l.path.source != from || l.path.target(pair) != to)
      return "letter " + std::to_string(i + 1) + " endpoints mismatch";
    int deg = l.path.degree(pair);
    bool graded_ok =
        l.dir == Dir::L
            ? s.shifts[(size_t)i] == s.shifts[(size_t)i + 1] + deg - 1
            : s.shifts[(size_t)i + 1] == s.shifts[(size_t)i] + deg - 1;
    if (!graded_ok)
      return "letter " + std::to_string(i + 1) + " grading mismatch";
  }
  for (int i = 0; i + 2 < r; ++i) {
    const Letter& a = s.letters[(size_t)i];
    const Letter& b = s.letters[(size_t)i + 1];
    if (a.dir == Dir::L && b.dir == Dir::L) {
      if (!pair.has_relation(a.path.arrows.back(), b.path.arrows.front()))
        return "letters " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
               ": same-direction junction is not a relation";
    } else if (a.dir == Dir::R && b.dir == Dir::R) {
      if (!pair.has_relation(b.path.arrows.back(), a.path.arrows.front()))
        return "letters " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
               ": same-direction junction is not a relation";
    } else if (a.dir == Dir::L && b.dir == Dir::R) {
      if (a.path.arrows.back() == b.path.arrows.back())
        return "letters " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
               ": repeated incoming arrow at the junction";
    } else {
      if (a.path.arrows.front() == b.path.arrows.front())
        return "letters " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
               ": repeated outgoing arrow at the junction";
    }
  }
  return std::nullopt;
}

void validate_string(const GentlePair& pair, const GradedString& s) {
  if (auto p = string_problem(pair, s)) throw InputError("invalid string: " + *p);
}

GradedString reverse_string(const GradedString& s) {
  GradedString r;
  r.vertices.assign(s.vertices.rbegin(), s.vertices.rend());
  r.shifts.assign(s.shifts.rbegin(), s.shifts.rend());
  for (auto it = s.letters.rbegin(); it != s.letters.rend(); ++it) {
    Letter l = *it;
    l.dir = l.dir == Dir::L ? Dir::R : Dir::L;
    r.letters.push_back(std::move(l));
  }
  return r;
}

GradedString shift_string(const GradedString& s, int n) {
  GradedString r = s;
  for (int& m : r.shifts) m += n;
  return r;
}

GradedString canonical_form(const GradedString& s) {
  GradedString rev = reverse_string(s);
  return rev < s ? rev : s;
}

std::string string_repr(const GentlePair& pair, const GradedString& s) {
  std::string out = "(";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += pair.quiver.vertices[(size_t)s.vertices[(size_t)i]];
  }
  out += ")/(";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.shifts[(size_t)i]);
  }
  out += ")";
  if (!s.letters.empty()) {
    out += " via ";
    for (size_t i = 0; i < s.letters.size(); ++i) {
      if (i) out += ",";
      out += s.letters[i].dir == Dir::L ? "L:" : "R:";
      out += s.letters[i].path.str(pair);
    }
  }
  return out;
}

LetterSpan letter_span(const GentlePair& pair, const FanSystem& sys,
                       const Letter& letter) {
  if (letter.path.trivial()) throw CheckError("letter_span: trivial path");
  LetterSpan span;
  auto [f, c] = sys.arrow_pos[(size_t)letter.path.arrows.front()];
  span.fan = f;
  span.lo = c;
  span.hi = c + (int)letter.path.arrows.size();
  const Fan& fan = sys.fans[(size_t)f];
  for (size_t k = 0; k < letter.path.arrows.size(); ++k) {
    size_t at = (size_t)span.lo + k;
    if (at >= fan.arrows.size() ||
        fan.arrows[at] != letter.path.arrows[k])
      throw CheckError("letter_span: path is not a fan run");
  }
  return span;
}

namespace {

/* Slot of position `pos` (1-based) of the string inside letter `li`'s fan. */
std::pair<int, int> position_slot(const GentlePair& pair, const FanSystem& sys,
                                  const GradedString& s, int li, int pos) {
  LetterSpan span = letter_span(pair, sys, s.letters[(size_t)li]);
  const Letter& l = s.letters[(size_t)li];
  bool lower;  // whether the position sits at span.lo
  if (l.dir == Dir::L)
    lower = pos == li + 1;  // path runs k_pos -> k_pos+1
  else
    lower = pos == li + 2;  // path runs k_pos+1 -> k_pos
  return {span.fan, lower ? span.lo : span.hi};
}

}  // namespace

std::vector<std::pair<int, int>> end_descriptor(const GentlePair& pair,
                                                const FanSystem& sys,
                                                const GradedString& s,
                                                int which_end) {
  int r = s.size();
  if (r == 1) {
    auto both = sys.occ[(size_t)s.vertices[0]];
    std::vector<std::pair<int, int>> out{both[0], both[1]};
    std::sort(out.begin(), out.end());
    return out;
  }
  int pos = which_end == 0 ? 1 : r;
  int li = which_end == 0 ? 0 : r - 2;
  auto inner = position_slot(pair, sys, s, li, pos);
  return {sys.other_occ(s.vertices[(size_t)(pos - 1)], inner)};
}

OView orient_out_of(const GentlePair& pair, const FanSystem& sys,
                    const GradedString& s, int which_end) {
  OView v;
  auto head = end_descriptor(pair, sys, s, 0);
  auto tail = end_descriptor(pair, sys, s, 1);
  std::pair<int, int> h, t;
  if (s.size() == 1) {
    h = head[0];
    t = head[1];
  } else {
    h = head[0];
    t = tail[0];
  }
  if (which_end == 0) {
    v.s = s;
    v.near = h;
    v.far = t;
  } else {
    v.s = reverse_string(s);
    v.near = t;
    v.far = h;
  }
  return v;
}

Flank flank_after(const GentlePair& pair, const FanSystem& sys, const OView& v,
                  int pos) {
  int r = v.s.size();
  if (pos < 1 || pos > r) throw CheckError("flank_after: position out of range");
  if (pos == r) return {v.far.first, v.far.second, kCornerExit};
  LetterSpan span = letter_span(pair, sys, v.s.letters[(size_t)(pos - 1)]);
  if (v.s.letters[(size_t)(pos - 1)].dir == Dir::L)
    return {span.fan, span.lo, span.hi};
  return {span.fan, span.hi, span.lo};
}

Flank flank_before(const GentlePair& pair, const FanSystem& sys, const OView& v,
                   int pos) {
  int r = v.s.size();
  if (pos < 1 || pos > r) throw CheckError("flank_before: position out of range");
  if (pos == 1) return {v.near.first, v.near.second, kCornerExit};
  LetterSpan span = letter_span(pair, sys, v.s.letters[(size_t)(pos - 2)]);
  if (v.s.letters[(size_t)(pos - 2)].dir == Dir::L)
    return {span.fan, span.hi, span.lo};
  return {span.fan, span.lo, span.hi};
}

}  // namespace ggk
