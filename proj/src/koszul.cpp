#include "ggk/koszul.hpp"

#include <algorithm>
#include <string>

namespace ggk {

namespace {

/* Global shift of the base-side transport, fixed by the duality of the two
   transports on the reference surface. */
constexpr int kOpenShift = 0;

Rational sign_pow(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Dir flip(Dir d) { return d == Dir::L ? Dir::R : Dir::L; }

struct OrientedEnds {
  const GradedString& src;
  const GradedString& tgt;
  int es, et;
};

OrientedEnds split_record(const GradedString& a, const GradedString& b,
                          const IntersectionRecord& rec) {
  if (rec.from_second)
    return {b, a, rec.end_second, rec.end_first};
  return {a, b, rec.end_first, rec.end_second};
}

bool same_record(const IntersectionRecord& x, const IntersectionRecord& y) {
  return x.from_second == y.from_second && x.index == y.index &&
         x.case_id == y.case_id && x.overlap == y.overlap &&
         x.end_first == y.end_first && x.end_second == y.end_second &&
         x.div_path == y.div_path;
}

std::string toggle_star(const std::string& id) {
  if (!id.empty() && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

}  // namespace

void validate_thread(const GentlePair& pair, const ThreadSpec& spec) {
  if (spec.strings.empty())
    throw InputError("thread: needs at least one string");
  if (spec.records.size() + 1 != spec.strings.size())
    throw InputError("thread: one record per consecutive pair of strings");
  for (const GradedString& s : spec.strings) validate_string(pair, s);
  FanSystem sys = fan_system(pair);
  for (size_t i = 0; i < spec.records.size(); ++i) {
    const IntersectionRecord& r = spec.records[i];
    if (r.kind != IntKind::Boundary || r.case_id == 0)
      throw InputError("thread: records must be boundary intersections");
    if (r.index != 1) throw InputError("thread: records must have index one");
    auto rec = record_at_end_pair(pair, sys, spec.strings[i], r.end_first,
                                  spec.strings[i + 1], r.end_second);
    if (!rec || !same_record(*rec, r))
      throw InputError("thread: record does not match its strings");
    if (i > 0 && spec.records[i - 1].end_second == r.end_first)
      throw InputError("thread: consecutive records use the same end");
  }
  thread_module(pair, spec);  // enforces composition-to-zero
}

DgModule thread_module(const GentlePair& pair, const ThreadSpec& spec,
                       std::vector<int>* gen_offsets) {
  std::vector<DgModule> mods;
  mods.reserve(spec.strings.size());
  for (const GradedString& s : spec.strings)
    mods.push_back(build_x_module(pair, s));
  std::vector<ThreadLink> links;
  links.reserve(spec.records.size());
  for (size_t i = 0; i < spec.records.size(); ++i) {
    ThreadLink ln;
    ln.forward = !spec.records[i].from_second;
    ln.map = morphism_from_intersection(pair, spec.records[i], spec.strings[i],
                                        spec.strings[i + 1]);
    links.push_back(std::move(ln));
  }
  return thread_total_module(pair, mods, links, gen_offsets);
}

GradedString smooth(const GentlePair& pair, const GradedString& a,
                    const GradedString& b, const IntersectionRecord& rec) {
  if (rec.kind != IntKind::Boundary || rec.case_id == 0)
    throw CheckError("smooth: needs a genuine boundary record");
  if (rec.case_id == 6)
    throw CheckError("smooth: parallel strings smooth to a contractible curve");
  OrientedEnds oe = split_record(a, b, rec);
  FanSystem sys = fan_system(pair);
  OView sv = orient_out_of(pair, sys, oe.src, oe.es);
  OView tv = orient_out_of(pair, sys, oe.tgt, oe.et);
  int k = rec.overlap;
  int rs = oe.src.size(), rt = oe.tgt.size();
  int tilt = rec.index - 1;

  GradedString out;
  for (int u = rs; u >= k + 1; --u) {
    out.vertices.push_back(sv.s.vertices[u - 1]);
    out.shifts.push_back(sv.s.shifts[u - 1]);
    if (u > k + 1) {
      Letter l = sv.s.letters[u - 2];
      l.dir = flip(l.dir);
      out.letters.push_back(l);
    }
  }
  switch (rec.case_id) {
    case 1:
    case 5:
      out.letters.push_back({Dir::R, *rec.div_path});
      break;
    case 4: {
      if (sv.s.letters[k - 1].dir != Dir::R || tv.s.letters[k - 1].dir != Dir::L)
        throw CheckError("smooth: malformed opposite-direction junction");
      auto q = compose_paths(pair, sv.s.letters[k - 1].path,
                             tv.s.letters[k - 1].path);
      if (!q) throw CheckError("smooth: junction path vanishes");
      out.letters.push_back({Dir::L, *q});
      break;
    }
    default:
      break;  // cases 2 and 3 cancel completely
  }
  for (int v = k + 1; v <= rt; ++v) {
    out.vertices.push_back(tv.s.vertices[v - 1]);
    out.shifts.push_back(tv.s.shifts[v - 1] + tilt);
    if (v > k + 1) out.letters.push_back(tv.s.letters[v - 2]);
  }
  validate_string(pair, out);
  return out;
}

namespace {

/* The record between the partial smoothing and the next thread string that
   plays the role of the original record. */
IntersectionRecord induced_record(const GentlePair& pair, const GradedString& t,
                                  const GradedString& next,
                                  const IntersectionRecord& orig) {
  std::vector<IntersectionRecord> cands;
  for (const IntersectionRecord& r : boundary_intersections(pair, t, next))
    if (r.from_second == orig.from_second && r.index == orig.index &&
        r.end_second == orig.end_second)
      cands.push_back(r);
  if (cands.size() > 1) {
    std::vector<IntersectionRecord> narrowed;
    for (const IntersectionRecord& r : cands)
      if (r.case_id == orig.case_id && r.div_path == orig.div_path)
        narrowed.push_back(r);
    cands = narrowed;
  }
  if (cands.empty())
    throw CheckError("smooth_thread: no induced record at this step");
  if (cands.size() > 1)
    throw CheckError("smooth_thread: induced record is not unique");
  return cands.front();
}

}  // namespace

GradedString smooth_thread(const GentlePair& pair, const ThreadSpec& spec) {
  validate_thread(pair, spec);
  GradedString t = spec.strings[0];
  for (size_t i = 0; i < spec.records.size(); ++i) {
    const GradedString& next = spec.strings[i + 1];
    IntersectionRecord rec =
        i == 0 ? spec.records[0] : induced_record(pair, t, next, spec.records[i]);
    t = smooth(pair, t, next, rec);
  }
  return t;
}

SmoothingEquivalence smoothing_equivalence(const GentlePair& pair,
                                           const GradedString& a,
                                           const GradedString& b,
                                           const IntersectionRecord& rec) {
  if (rec.kind != IntKind::Boundary || rec.case_id == 0 || rec.case_id == 6)
    throw CheckError("smoothing_equivalence: needs a smoothable record");
  if (rec.index != 1)
    throw CheckError("smoothing_equivalence: needs an index-one record");
  OrientedEnds oe = split_record(a, b, rec);
  FanSystem sys = fan_system(pair);
  OView sv = orient_out_of(pair, sys, oe.src, oe.es);
  OView tv = orient_out_of(pair, sys, oe.tgt, oe.et);
  int k = rec.overlap;
  int rs = oe.src.size(), rt = oe.tgt.size();

  SmoothingEquivalence eq;
  eq.overlap = k;
  eq.source_size = rs;
  eq.target_size = rt;
  eq.smoothed = smooth(pair, a, b, rec);
  eq.smoothed_module = build_x_module(pair, eq.smoothed);

  ThreadLink link;
  link.forward = true;
  link.map = morphism_from_intersection(pair, rec, a, b);
  std::vector<int> offsets;
  eq.cone = thread_total_module(
      pair, {build_x_module(pair, oe.src), build_x_module(pair, oe.tgt)},
      {link}, &offsets);
  eq.source_offset = offsets[0];
  eq.target_offset = offsets[1];

  auto sgen = [&](int u) { return oe.es == 0 ? u - 1 : rs - u; };
  auto tgen = [&](int u) { return oe.et == 0 ? u - 1 : rt - u; };

  eq.chi.degree = 0;
  for (int u = k + 1; u <= rs; ++u)
    add_entry(eq.chi.comps, eq.source_offset + sgen(u), rs - u, Rational(1),
              trivial_path(sv.s.vertices[u - 1]), false);
  for (int v = k + 1; v <= rt; ++v)
    add_entry(eq.chi.comps, eq.target_offset + tgen(v),
              (rs - k) + (v - k) - 1, sign_pow(k),
              trivial_path(tv.s.vertices[v - 1]), false);
  if (k >= 1 && k < rs && sv.s.letters[k - 1].dir == Dir::R)
    add_entry(eq.chi.comps, eq.target_offset + tgen(k), rs - k - 1,
              sign_pow(k), sv.s.letters[k - 1].path, false);

  eq.psi.degree = 0;
  for (int u = k + 1; u <= rs; ++u)
    add_entry(eq.psi.comps, rs - u, eq.source_offset + sgen(u), Rational(1),
              trivial_path(sv.s.vertices[u - 1]), false);
  for (int v = k + 1; v <= rt; ++v)
    add_entry(eq.psi.comps, (rs - k) + (v - k) - 1,
              eq.target_offset + tgen(v), sign_pow(k),
              trivial_path(tv.s.vertices[v - 1]), false);
  if (k >= 1 && k < rt && tv.s.letters[k - 1].dir == Dir::L)
    add_entry(eq.psi.comps, rs - k, eq.source_offset + sgen(k), Rational(1),
              tv.s.letters[k - 1].path, false);

  return eq;
}

DgMorphism cone_embedding(const SmoothingEquivalence& eq, int part) {
  if (part != 0 && part != 1)
    throw CheckError("cone_embedding: part must be 0 or 1");
  int off = part == 0 ? eq.source_offset : eq.target_offset;
  int n = part == 0 ? eq.source_size : eq.target_size;
  Rational c = part == 1 ? sign_pow(eq.overlap) : Rational(1);
  DgMorphism f;
  f.degree = 0;
  for (int g = 0; g < n; ++g)
    add_entry(f.comps, g, off + g, c,
              trivial_path(eq.cone.gens[(size_t)(off + g)].vertex), false);
  return f;
}

DgMorphism cone_projection(const SmoothingEquivalence& eq, int part) {
  if (part != 0 && part != 1)
    throw CheckError("cone_projection: part must be 0 or 1");
  int off = part == 0 ? eq.source_offset : eq.target_offset;
  int n = part == 0 ? eq.source_size : eq.target_size;
  Rational c = part == 1 ? sign_pow(eq.overlap) : Rational(1);
  DgMorphism f;
  f.degree = 0;
  for (int g = 0; g < n; ++g)
    add_entry(f.comps, off + g, g, c,
              trivial_path(eq.cone.gens[(size_t)(off + g)].vertex), false);
  return f;
}

GradedString simple_resolution(const GentlePair& pair, int vertex) {
  if (vertex < 0 || vertex >= pair.n_vertices())
    throw InputError("simple_resolution: no such vertex");
  std::vector<Path> branches = maximal_relation_paths(pair, vertex);
  if (branches.empty()) return single_string(vertex, 0);

  GradedString out;
  auto push_left = [&](const Path& br) {
    int l = br.length();
    for (int j = l; j >= 1; --j) {
      int sum = 0;
      for (int t = 0; t < j; ++t) sum += pair.arrow(br.arrows[(size_t)t]).degree;
      out.vertices.push_back(pair.arrow(br.arrows[(size_t)(j - 1)]).tgt);
      out.shifts.push_back(j - sum);
      if (j > 1)
        out.letters.push_back({Dir::R, arrow_path(pair, br.arrows[(size_t)(j - 1)])});
    }
    out.letters.push_back({Dir::R, arrow_path(pair, br.arrows[0])});
  };
  auto push_right = [&](const Path& br) {
    int m = br.length();
    for (int j = 1; j <= m; ++j) {
      out.letters.push_back({Dir::L, arrow_path(pair, br.arrows[(size_t)(j - 1)])});
      int sum = 0;
      for (int t = 0; t < j; ++t) sum += pair.arrow(br.arrows[(size_t)t]).degree;
      out.vertices.push_back(pair.arrow(br.arrows[(size_t)(j - 1)]).tgt);
      out.shifts.push_back(j - sum);
    }
  };

  if (branches.size() == 2) push_left(branches[0]);
  out.vertices.push_back(vertex);
  out.shifts.push_back(0);
  if (branches.size() == 2) {
    push_right(branches[1]);
  } else {
    push_right(branches[0]);
  }
  out = canonical_form(out);
  validate_string(pair, out);
  return out;
}

namespace {

/* Base-side data of one dual letter: the reversed, unstarred relation path
   and the branch of the source resolution it opens. */
struct LetterTransport {
  Path pbar;        // relation path in the base pair
  int overlap = 0;  // expected overlap of the induced record
  bool from_next = false;  // true: the morphism runs S_{v+1} -> S_v
};

LetterTransport transport_letter(const GentlePair& pair,
                                 const GentlePair& dual, const Letter& lt) {
  LetterTransport tr;
  tr.from_next = lt.dir == Dir::L;
  Path pbar;
  pbar.arrows.reserve(lt.path.arrows.size());
  for (auto it = lt.path.arrows.rbegin(); it != lt.path.arrows.rend(); ++it) {
    int base = pair.quiver.arrow_index(toggle_star(dual.arrow(*it).id));
    if (base < 0)
      throw CheckError("half_rotate: dual arrow has no base counterpart");
    pbar.arrows.push_back(base);
  }
  pbar.source = pair.arrow(pbar.arrows[0]).src;
  for (size_t t = 0; t + 1 < pbar.arrows.size(); ++t)
    if (!pair.has_relation(pbar.arrows[t], pbar.arrows[t + 1]))
      throw CheckError("half_rotate: dual letter is not a relation path");
  const std::vector<Path> branches = maximal_relation_paths(pair, pbar.source);
  const Path* host = nullptr;
  for (const Path& br : branches) {
    if (br.length() >= pbar.length() &&
        std::equal(pbar.arrows.begin(), pbar.arrows.end(), br.arrows.begin())) {
      host = &br;
      break;
    }
  }
  if (!host)
    throw CheckError("half_rotate: dual letter does not open a branch");
  tr.overlap = host->length() - pbar.length() + 1;
  tr.pbar = std::move(pbar);
  return tr;
}

}  // namespace

GradedString half_rotate(const GentlePair& pair, const GradedString& eta) {
  GentlePair dual = quadratic_dual(pair);
  validate_string(dual, eta);
  FanSystem sys = fan_system(pair);

  ThreadSpec spec;
  spec.strings.reserve((size_t)eta.size());
  for (int v = 0; v < eta.size(); ++v)
    spec.strings.push_back(
        shift_string(simple_resolution(pair, eta.vertices[(size_t)v]),
                     eta.shifts[(size_t)v]));

  for (int v = 0; v + 1 < eta.size(); ++v) {
    LetterTransport tr = transport_letter(pair, dual, eta.letters[(size_t)v]);
    const GradedString& sv_str = spec.strings[(size_t)v];
    const GradedString& sn_str = spec.strings[(size_t)(v + 1)];
    Letter junction{Dir::R, arrow_path(pair, tr.pbar.arrows.back())};

    std::vector<IntersectionRecord> cands;
    for (const IntersectionRecord& r :
         boundary_intersections(pair, sv_str, sn_str)) {
      if (r.from_second != tr.from_next || r.index != 1) continue;
      if (r.overlap != tr.overlap) continue;
      OrientedEnds oe = split_record(sv_str, sn_str, r);
      OView sview = orient_out_of(pair, sys, oe.src, oe.es);
      if (r.overlap < oe.src.size() &&
          sview.s.letters[(size_t)(r.overlap - 1)] == junction)
        cands.push_back(r);
    }
    if (cands.empty())
      throw CheckError("half_rotate: no record matches a dual letter");
    if (cands.size() > 1)
      throw CheckError("half_rotate: ambiguous record for a dual letter");
    spec.records.push_back(cands.front());
  }
  return smooth_thread(pair, spec);
}

DgModule koszul_object(const GentlePair& pair, const GradedString& eta) {
  return build_x_module(pair, half_rotate(pair, eta));
}

GradedString half_rotate_open(const GentlePair& pair, const GradedString& s) {
  return shift_string(half_rotate(quadratic_dual(pair), s), kOpenShift);
}

bool strong_formality_check(const GentlePair& pair,
                            const std::vector<GradedString>& strings,
                            const std::vector<AnglePair>& angles) {
  for (const GradedString& s : strings) validate_string(pair, s);
  std::vector<DgModule> mods;
  mods.reserve(strings.size());
  for (const GradedString& s : strings) mods.push_back(build_x_module(pair, s));
  FanSystem sys = fan_system(pair);
  int n = (int)strings.size();
  for (const AnglePair& ap : angles) {
    if (ap.a < 0 || ap.a >= n || ap.b < 0 || ap.b >= n || ap.c < 0 || ap.c >= n)
      throw InputError("strong_formality_check: string index out of range");
    if (ap.ab.from_second || ap.bc.from_second)
      throw InputError("strong_formality_check: records must point forward");
    auto rab = record_at_end_pair(pair, sys, strings[(size_t)ap.a],
                                  ap.ab.end_first, strings[(size_t)ap.b],
                                  ap.ab.end_second);
    auto rbc = record_at_end_pair(pair, sys, strings[(size_t)ap.b],
                                  ap.bc.end_first, strings[(size_t)ap.c],
                                  ap.bc.end_second);
    if (!rab || !same_record(*rab, ap.ab) || !rbc || !same_record(*rbc, ap.bc))
      throw InputError("strong_formality_check: record does not match");
    if (ap.ab.end_second != ap.bc.end_first)
      throw InputError("strong_formality_check: angle pair is not composable");
    DgMorphism f1 = morphism_from_intersection(pair, ap.ab, strings[(size_t)ap.a],
                                               strings[(size_t)ap.b]);
    DgMorphism f2 = morphism_from_intersection(pair, ap.bc, strings[(size_t)ap.b],
                                               strings[(size_t)ap.c]);
    DgMorphism comp =
        compose_morphisms(pair, mods[(size_t)ap.a], mods[(size_t)ap.b],
                          mods[(size_t)ap.c], f2, f1);
    if (!comp.is_zero()) return false;
  }
  return true;
}

}  // namespace ggk
