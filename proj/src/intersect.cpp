#include "ggk/intersect.hpp"

#include <algorithm>
#include <tuple>

namespace ggk {

namespace {

/* Anticlockwise rank of an exit around a marked point, measured from the
   chain position `side` shared by both strands.  The corner sector counts as
   one past the last chain position. */
int fan_rank(const FanSystem& sys, int fan, int side, int exit) {
  int s = sys.fan_size(fan);
  int item = exit == kCornerExit ? s : exit;
  int r = (item - side) % (s + 1);
  return r < 0 ? r + s + 1 : r;
}

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

std::optional<IntersectionRecord> record_at_end_pair(const GentlePair& pair,
                                                     const FanSystem& sys,
                                                     const GradedString& a,
                                                     int ea,
                                                     const GradedString& b,
                                                     int eb) {
  OView A = orient_out_of(pair, sys, a, ea);
  OView B = orient_out_of(pair, sys, b, eb);
  IntersectionRecord rec;
  rec.kind = IntKind::Boundary;
  rec.end_first = ea;
  rec.end_second = eb;

  if (A.near != B.near) {
    if (A.near.first != B.near.first) return std::nullopt;
    // Same marked point, different chain slots: the strings leave the point
    // through distinct sectors with no common prefix.
    int f = A.near.first;
    int ca = A.near.second;
    int cb = B.near.second;
    rec.case_id = 1;
    rec.fan = f;
    rec.overlap = 0;
    bool a_src = ca > cb;
    rec.from_second = !a_src;
    const OView& src = a_src ? A : B;
    const OView& tgt = a_src ? B : A;
    Path p = sys.run(pair, f, std::min(ca, cb), std::max(ca, cb));
    rec.index = p.degree(pair) + src.s.shifts[0] - tgt.s.shifts[0];
    rec.div_path = std::move(p);
    return rec;
  }

  // Co-located ends: walk the common prefix.
  rec.fan = A.near.first;
  int ra = A.s.size(), rb = B.s.size();
  int k = 1;
  while (k < ra && k < rb && A.s.letters[k - 1] == B.s.letters[k - 1]) ++k;
  rec.overlap = k;
  bool a_done = k == ra;
  bool b_done = k == rb;

  if (a_done && b_done) {
    rec.case_id = 6;
    rec.from_second = ea == 1;
    const OView& src = rec.from_second ? B : A;
    const OView& tgt = rec.from_second ? A : B;
    rec.index = src.s.shifts[0] - tgt.s.shifts[0];
    return rec;
  }

  if (a_done || b_done) {
    const OView& cont = a_done ? B : A;
    if (cont.s.letters[k - 1].dir == Dir::L) {
      rec.case_id = 2;  // the exhausted string maps to the continuing one
      rec.from_second = !a_done;
    } else {
      rec.case_id = 3;  // the continuing string maps to the exhausted one
      rec.from_second = a_done;
    }
    const OView& src = rec.from_second ? B : A;
    const OView& tgt = rec.from_second ? A : B;
    rec.index = src.s.shifts[0] - tgt.s.shifts[0];
    return rec;
  }

  // Both continue: they separate inside the polygon after position k.
  Flank fa = flank_after(pair, sys, A, k);
  Flank fb = flank_after(pair, sys, B, k);
  if (fa.fan != fb.fan || fa.side != fb.side)
    throw CheckError("record_at_end_pair: divergence flanks disagree");
  if (fa.exit == fb.exit)
    throw CheckError("record_at_end_pair: divergence exits coincide");
  int rka = fan_rank(sys, fa.fan, fa.side, fa.exit);
  int rkb = fan_rank(sys, fb.fan, fb.side, fb.exit);
  bool a_src = rka > rkb;
  rec.from_second = !a_src;
  Dir da = A.s.letters[k - 1].dir;
  Dir db = B.s.letters[k - 1].dir;
  rec.case_id = da == db ? 5 : 4;
  if (rec.case_id == 5) {
    int x_src = a_src ? fa.exit : fb.exit;
    int x_tgt = a_src ? fb.exit : fa.exit;
    rec.div_path = sys.run(pair, fa.fan, x_tgt, x_src);
  }
  const OView& src = a_src ? A : B;
  const OView& tgt = a_src ? B : A;
  rec.index = src.s.shifts[0] - tgt.s.shifts[0];
  return rec;
}

std::vector<IntersectionRecord> boundary_intersections(const GentlePair& pair,
                                                       const GradedString& a,
                                                       const GradedString& b) {
  validate_string(pair, a);
  validate_string(pair, b);
  if (canonical_form(a) == canonical_form(b))
    throw CheckError("boundary_intersections: the strings coincide");
  FanSystem sys = fan_system(pair);
  std::vector<IntersectionRecord> out;
  for (int ea : {0, 1})
    for (int eb : {0, 1})
      if (auto rec = record_at_end_pair(pair, sys, a, ea, b, eb))
        out.push_back(*rec);
  return out;
}

std::vector<IntersectionRecord> interior_intersections(const GentlePair& pair,
                                                       const GradedString& a,
                                                       const GradedString& b) {
  validate_string(pair, a);
  validate_string(pair, b);
  FanSystem sys = fan_system(pair);
  std::vector<IntersectionRecord> out;
  OView A = orient_out_of(pair, sys, a, 0);
  int ra = a.size(), rb = b.size();
  GradedString brev = reverse_string(b);

  for (int eb : {0, 1}) {
    // The two sweeps of b differ only at its ends; a palindromic string of
    // two or more positions yields the same sweep twice.
    if (eb == 1 && rb >= 2 && brev == b) continue;
    OView B = orient_out_of(pair, sys, b, eb);
    bool reversed = eb == 1;

    for (int u0 = 1; u0 <= ra; ++u0) {
      for (int v0 = 1; v0 <= rb; ++v0) {
        if (A.s.vertices[u0 - 1] != B.s.vertices[v0 - 1]) continue;
        // Only maximal common runs: never start inside a longer one.
        if (u0 > 1 && v0 > 1 &&
            A.s.letters[u0 - 2] == B.s.letters[v0 - 2])
          continue;
        int h = 1;
        while (u0 - 1 + h < ra && v0 - 1 + h < rb &&
               A.s.letters[u0 - 2 + h] == B.s.letters[v0 - 2 + h])
          ++h;

        // The two strands must run through the same sectors: their flanks
        // at the front of the run agree in (fan, side) or the curves are
        // elsewhere on the surface.
        Flank ff_a = flank_before(pair, sys, A, u0);
        Flank ff_b = flank_before(pair, sys, B, v0);
        if (ff_a.fan != ff_b.fan || ff_a.side != ff_b.side) continue;
        Flank fb_a = flank_after(pair, sys, A, u0 + h - 1);
        Flank fb_b = flank_after(pair, sys, B, v0 + h - 1);
        if (fb_a.fan != fb_b.fan || fb_a.side != fb_b.side)
          throw CheckError("interior_intersections: back flanks disagree");

        int rf_a = fan_rank(sys, ff_a.fan, ff_a.side, ff_a.exit);
        int rf_b = fan_rank(sys, ff_b.fan, ff_b.side, ff_b.exit);
        int rb_a = fan_rank(sys, fb_a.fan, fb_a.side, fb_a.exit);
        int rb_b = fan_rank(sys, fb_b.fan, fb_b.side, fb_b.exit);
        if (rf_a == rf_b) {
          if (ff_a.exit != kCornerExit || ff_b.exit != kCornerExit)
            throw CheckError("interior_intersections: equal front ranks");
          continue;  // co-located ends: a boundary configuration
        }
        if (rb_a == rb_b) {
          if (fb_a.exit != kCornerExit || fb_b.exit != kCornerExit)
            throw CheckError("interior_intersections: equal back ranks");
          continue;
        }

        // Transversality: the strands change radial order once per shared
        // position, so they cross exactly when the end orders compare this
        // way against the parity of the run length.
        bool crossing =
            ((rf_a < rf_b) == (rb_a < rb_b)) == (h % 2 == 1);
        if (!crossing) continue;

        // Grade the crossing from its canonical end (the lexicographically
        // smaller flank data), so both orderings of the arguments and both
        // sweeps of b grade the same site consistently.
        auto front_key = std::make_tuple(ff_a.fan, ff_a.side,
                                         std::min(rf_a, rf_b),
                                         std::max(rf_a, rf_b));
        auto back_key = std::make_tuple(fb_a.fan, fb_a.side,
                                        std::min(rb_a, rb_b),
                                        std::max(rb_a, rb_b));
        bool use_front = front_key <= back_key;
        int rk_a = use_front ? rf_a : rb_a;
        int rk_b = use_front ? rf_b : rb_b;
        int delta = A.s.shifts[u0 - 1] - B.s.shifts[v0 - 1];
        int ind = delta + (rk_a > rk_b ? 0 : 1);

        IntersectionRecord site;
        site.kind = IntKind::Interior;
        site.fan = use_front ? ff_a.fan : fb_a.fan;
        site.overlap = 0;
        site.pos_first = u0;
        site.pos_second = reversed ? rb - (v0 + h - 1) + 1 : v0;
        site.substring_len = h;
        site.reversed = reversed;

        IntersectionRecord fwd = site;
        fwd.from_second = false;
        fwd.index = ind;
        out.push_back(fwd);
        IntersectionRecord bwd = site;
        bwd.from_second = true;
        bwd.index = 1 - ind;
        out.push_back(bwd);
      }
    }
  }
  return out;
}

std::map<int, int> int_table(const GentlePair& pair, const GradedString& a,
                             const GradedString& b) {
  if (canonical_form(a) == canonical_form(b))
    throw CheckError("int_table: the strings coincide");
  std::map<int, int> table;
  for (const auto& rec : boundary_intersections(pair, a, b))
    if (!rec.from_second) ++table[rec.index];
  for (const auto& rec : interior_intersections(pair, a, b))
    if (!rec.from_second) ++table[rec.index];
  return table;
}

std::map<int, int> int_with_dual_simple(const GradedString& s, int vertex) {
  std::map<int, int> table;
  for (int u = 0; u < s.size(); ++u)
    if (s.vertices[u] == vertex) ++table[s.shifts[u]];
  return table;
}

DgMorphism morphism_from_intersection(const GentlePair& pair,
                                      const IntersectionRecord& rec,
                                      const GradedString& a,
                                      const GradedString& b) {
  if (rec.kind != IntKind::Boundary)
    throw CheckError(
        "morphism_from_intersection: interior records have no canonical "
        "representative");
  if (rec.case_id == 0) return identity_morphism(build_x_module(pair, a));

  const GradedString& src = rec.from_second ? b : a;
  const GradedString& tgt = rec.from_second ? a : b;
  int es = rec.from_second ? rec.end_second : rec.end_first;
  int et = rec.from_second ? rec.end_first : rec.end_second;
  FanSystem sys = fan_system(pair);
  OView sv = orient_out_of(pair, sys, src, es);
  OView tv = orient_out_of(pair, sys, tgt, et);
  int rs = src.size(), rt = tgt.size();
  int rho = rec.index;

  DgMorphism f;
  f.degree = rho;
  auto sgen = [&](int u) { return es == 0 ? u - 1 : rs - u; };
  auto tgen = [&](int u) { return et == 0 ? u - 1 : rt - u; };
  auto put = [&](int u, int v, const Rational& c, const Path& p) {
    add_entry(f.comps, sgen(u), tgen(v), c, p, false);
  };

  switch (rec.case_id) {
    case 1:
      put(1, 1, Rational(1), *rec.div_path);
      break;
    case 6:
      for (int u = 1; u <= rs; ++u)
        put(u, u, sign_pow(rho * (u - 1)), trivial_path(sv.s.vertices[u - 1]));
      break;
    default:
      for (int u = 1; u <= rec.overlap; ++u)
        put(u, u, sign_pow(rho * (u - 1)), trivial_path(sv.s.vertices[u - 1]));
      if (rec.case_id == 5)
        put(rec.overlap + 1, rec.overlap + 1, sign_pow(rho * rec.overlap),
            *rec.div_path);
      break;
  }
  return f;
}

IntersectionRecord identity_record(const GradedString& s, int end) {
  IntersectionRecord rec;
  rec.case_id = 0;
  rec.kind = IntKind::Boundary;
  rec.index = 0;
  rec.end_first = end;
  rec.end_second = end;
  rec.overlap = s.size();
  return rec;
}

IntersectionRecord compose_intersections(const GentlePair& pair,
                                         const GradedString& s1,
                                         const GradedString& s2,
                                         const GradedString& s3,
                                         const IntersectionRecord& a,
                                         const IntersectionRecord& b) {
  if (a.kind != IntKind::Boundary || b.kind != IntKind::Boundary)
    throw CheckError("compose_intersections: only boundary records compose");
  if (a.from_second || b.from_second)
    throw CheckError(
        "compose_intersections: records must be oriented first to second");
  if (a.end_second != b.end_first)
    throw CheckError("compose_intersections: records meet at different ends");
  if (a.case_id == 0) return b;
  if (b.case_id == 0) return a;
  if (a.fan != b.fan)
    throw CheckError("compose_intersections: records sit at different points");
  FanSystem sys = fan_system(pair);
  auto rec = record_at_end_pair(pair, sys, s1, a.end_first, s3, b.end_second);
  if (!rec || rec->from_second)
    throw CheckError(
        "compose_intersections: no record from the first string to the third");
  if (rec->index != a.index + b.index)
    throw CheckError("compose_intersections: composite index is not additive");
  return *rec;
}

}  // namespace ggk
