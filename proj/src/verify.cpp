#include "ggk/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "ggk/fixtures.hpp"
#include "ggk/homalg.hpp"
#include "ggk/intersect.hpp"
#include "ggk/koszul.hpp"
#include "ggk/randomgen.hpp"
#include "ggk/scalars.hpp"

namespace ggk {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void fail(CriterionResult& c, const std::string& note) {
  c.pass = false;
  if (c.mismatches.size() < 8) c.mismatches.push_back(note);
}

Rng seeded(std::uint64_t seed, std::uint64_t salt) {
  return Rng(seed * 0x9e3779b97f4a7c15ULL + 0x85ebca6b * salt + salt);
}

std::string arc_repr(const GentlePair& pair, const GradedString& s,
                     bool over_dual = false) {
  return arc_to_json(pair, s, over_dual).dump();
}

std::string pair_repr(const GentlePair& pair) {
  return algebra_to_json(pair).dump();
}

std::string table_repr(const std::map<int, int>& t) {
  return table_to_json(t).dump();
}

/* Distinct canonical strings: the seed list first, then random walks. */
std::vector<GradedString> distinct_strings(const GentlePair& pair, Rng& rng,
                                           int count, int max_letters,
                                           std::vector<GradedString> seedlist) {
  std::set<GradedString> seen;
  std::vector<GradedString> out;
  auto push = [&](const GradedString& s) {
    GradedString c = canonical_form(s);
    if (seen.insert(c).second) out.push_back(std::move(c));
  };
  for (const GradedString& s : seedlist) push(s);
  for (int attempts = 0; (int)out.size() < count && attempts < 60 * count;
       ++attempts)
    push(random_string(pair, rng, max_letters));
  return out;
}

std::string unstar(const std::string& id) {
  if (!id.empty() && id.back() == '*') return id.substr(0, id.size() - 1);
  return id + "*";
}

/* The boundary record carrying the corner morphism of a base arrow `a`
   between the resolutions of its endpoints' simples: the unique forward
   index-one record from res[src(a)] to res[tgt(a)] whose source view
   continues with (R, a) right after the overlap. */
std::optional<IntersectionRecord> corner_record(
    const GentlePair& pair, const FanSystem& sys,
    const std::vector<GradedString>& res, int base_arrow) {
  const Arrow& ar = pair.arrow(base_arrow);
  const GradedString& from = res[(size_t)ar.src];
  const GradedString& to = res[(size_t)ar.tgt];
  int want = -1;
  for (const Path& br : maximal_relation_paths(pair, ar.src))
    if (!br.arrows.empty() && br.arrows.front() == base_arrow)
      want = br.length();
  if (want < 0) return std::nullopt;
  Letter junction{Dir::R, arrow_path(pair, base_arrow)};
  std::optional<IntersectionRecord> found;
  for (const IntersectionRecord& r : boundary_intersections(pair, from, to)) {
    if (r.from_second || r.index != 1 || r.overlap != want) continue;
    OView sv = orient_out_of(pair, sys, from, r.end_first);
    if (r.overlap < from.size() &&
        sv.s.letters[(size_t)(r.overlap - 1)] == junction) {
      if (found) return std::nullopt;  // ambiguous
      found = r;
    }
  }
  return found;
}

/* The thread of one-vertex strings underlying a string: position i becomes
   the generator string at (vertex_i, shift_i), letter i the index-one record
   joining consecutive generators with that divergence path. */
std::optional<ThreadSpec> decomposition_thread(const GentlePair& pair,
                                               const FanSystem& sys,
                                               const GradedString& s) {
  ThreadSpec t;
  for (size_t i = 0; i < s.vertices.size(); ++i)
    t.strings.push_back(single_string(s.vertices[i], s.shifts[i]));
  for (size_t i = 0; i < s.letters.size(); ++i) {
    const Letter& lt = s.letters[i];
    std::optional<IntersectionRecord> found;
    for (int ea = 0; ea <= 1; ++ea)
      for (int eb = 0; eb <= 1; ++eb) {
        auto r = record_at_end_pair(pair, sys, t.strings[i], ea,
                                    t.strings[i + 1], eb);
        if (!r || r->index != 1 || r->case_id != 1 || !r->div_path) continue;
        if (!(*r->div_path == lt.path)) continue;
        if (r->from_second != (lt.dir == Dir::L)) continue;
        if (found) return std::nullopt;  // ambiguous
        found = *r;
      }
    if (!found) return std::nullopt;
    t.records.push_back(*found);
  }
  return t;
}

/* ---- criterion: the built-in dissection reproduces the example pair ---- */

CriterionResult crit_fixture() {
  CriterionResult c;
  c.name = "fixture-reconstruction";
  auto t0 = Clock::now();
  GentlePair f = fixture_pair();
  GentlePair built = algebra_from_dissection(fixture_dissection());
  ++c.cases;
  if (!same_presentation(built, f))
    fail(c, "dissection output differs: " + pair_repr(built));
  GentlePair dual = quadratic_dual(f);
  std::set<std::pair<std::string, std::string>> got, want = {
      {"a2*", "a1*"}, {"a5*", "a6*"}, {"a7*", "a4*"}};
  for (auto [a, b] : dual.relations)
    got.insert({dual.quiver.arrows[(size_t)a].id,
                dual.quiver.arrows[(size_t)b].id});
  ++c.cases;
  if (got != want) fail(c, "dual relations differ: " + pair_repr(dual));
  ++c.cases;
  for (const Arrow& a : dual.quiver.arrows)
    if (a.degree != 1) fail(c, "dual degree of " + a.id + " is not 1");
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: quadratic duality is an involution on presentations ---- */

CriterionResult crit_involution(std::uint64_t seed) {
  CriterionResult c;
  c.name = "dual-involution";
  auto t0 = Clock::now();
  Rng rng = seeded(seed, 2);
  for (int k = 0; k < 100; ++k) {
    GentlePair p = random_pair(rng, 12);
    GentlePair dd = quadratic_dual(quadratic_dual(p));
    ++c.cases;
    if (!same_presentation(dd, p))
      fail(c, "double dual differs: " + pair_repr(p));
  }
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: resolution strings resolve the simples ---- */

CriterionResult crit_resolutions(std::uint64_t seed) {
  CriterionResult c;
  c.name = "simple-resolutions";
  auto t0 = Clock::now();
  Rng rng = seeded(seed, 3);
  std::vector<GentlePair> pairs;
  pairs.push_back(fixture_pair());
  for (int k = 0; k < 50; ++k) pairs.push_back(random_pair(rng, 8));
  for (const GentlePair& pair : pairs) {
    for (int v = 0; v < pair.n_vertices(); ++v) {
      GradedString s = simple_resolution(pair, v);
      DgModule m = build_x_module(pair, s);
      std::map<std::pair<int, int>, int> want{{{v, 0}, 1}};
      ++c.cases;
      if (underlying_cohomology(pair, m) != want)
        fail(c, "resolution not concentrated at the simple: vertex " +
                    pair.quiver.vertices[(size_t)v] + " of " + pair_repr(pair));
    }
  }
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: adjacent corner composites between resolutions vanish ---- */

void formality_instance(const GentlePair& pair, CriterionResult& c) {
  GentlePair dual = quadratic_dual(pair);
  FanSystem sys = fan_system(pair);
  FanSystem dsys = fan_system(dual);
  std::vector<GradedString> res;
  for (int v = 0; v < pair.n_vertices(); ++v)
    res.push_back(simple_resolution(pair, v));
  std::vector<AnglePair> angles;
  for (const Fan& f : dsys.fans) {
    for (size_t k = 0; k + 1 < f.arrows.size(); ++k) {
      int alpha = f.arrows[k], beta = f.arrows[k + 1];
      int a_base = pair.quiver.arrow_index(unstar(dual.arrow(alpha).id));
      int b_base = pair.quiver.arrow_index(unstar(dual.arrow(beta).id));
      AnglePair ap;
      ap.a = pair.arrow(b_base).src;
      ap.b = pair.arrow(b_base).tgt;
      ap.c = pair.arrow(a_base).tgt;
      if (res[(size_t)ap.a] == res[(size_t)ap.b] ||
          res[(size_t)ap.b] == res[(size_t)ap.c] ||
          res[(size_t)ap.a] == res[(size_t)ap.c]) {
        fail(c, "coincident resolutions at a corner pair: " + pair_repr(pair));
        continue;
      }
      auto r1 = corner_record(pair, sys, res, b_base);
      auto r2 = corner_record(pair, sys, res, a_base);
      if (!r1 || !r2) {
        fail(c, "no unique corner record for arrows " +
                    pair.arrow(b_base).id + "/" + pair.arrow(a_base).id +
                    " of " + pair_repr(pair));
        continue;
      }
      ap.ab = *r1;
      ap.bc = *r2;
      if (ap.ab.end_second != ap.bc.end_first) {
        fail(c, "corner records not composable for " + pair.arrow(b_base).id +
                    "/" + pair.arrow(a_base).id + " of " + pair_repr(pair));
        continue;
      }
      angles.push_back(std::move(ap));
      ++c.cases;
    }
  }
  try {
    if (!strong_formality_check(pair, res, angles))
      fail(c, "nonzero corner composite on " + pair_repr(pair));
  } catch (const std::exception& e) {
    fail(c, std::string("formality check error: ") + e.what() + " on " +
                pair_repr(pair));
  }
}

CriterionResult crit_formality(std::uint64_t seed) {
  CriterionResult c;
  c.name = "strong-formality";
  auto t0 = Clock::now();
  Rng rng = seeded(seed, 4);
  formality_instance(fixture_pair(), c);
  for (int k = 0; k < 50; ++k) formality_instance(random_pair(rng, 8), c);
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: intersection tables equal morphism cohomology ---- */

template <class K>
void int_dim_case(const GentlePair& pair, const GradedString& a,
                  const GradedString& b, CriterionResult& c, bool with_algebra) {
  std::map<int, int> ti = int_table(pair, a, b);
  std::map<int, int> th =
      hom_cohomology<K>(pair, build_x_module(pair, a), build_x_module(pair, b));
  ++c.cases;
  if (ti != th) {
    ojson j = ojson::object();
    if (with_algebra) j["algebra"] = algebra_to_json(pair);
    j["from"] = arc_to_json(pair, a, false);
    j["to"] = arc_to_json(pair, b, false);
    j["int_table"] = table_to_json(ti);
    j["hom"] = table_to_json(th);
    fail(c, j.dump());
  }
}

template <class K>
CriterionResult crit_int_dim(std::uint64_t seed) {
  CriterionResult c;
  c.name = "intersection-dimension";
  auto t0 = Clock::now();
  GentlePair pair = fixture_pair();
  Rng rng = seeded(seed, 5);
  std::vector<GradedString> base;
  for (int v = 0; v < pair.n_vertices(); ++v)
    base.push_back(single_string(v, 0));
  for (int v = 0; v < pair.n_vertices(); ++v)
    base.push_back(simple_resolution(pair, v));
  std::vector<GradedString> corpus = distinct_strings(pair, rng, 18, 3, base);
  int fixture_cases = 0;
  for (size_t i = 0; i < corpus.size() && fixture_cases < 30; ++i)
    for (size_t j = 0; j < corpus.size() && fixture_cases < 30; ++j) {
      if (i == j) continue;
      int_dim_case<K>(pair, corpus[i], corpus[j], c, false);
      ++fixture_cases;
    }
  if (fixture_cases < 20)
    fail(c, "fixture corpus too small: " + std::to_string(fixture_cases));

  int random_cases = 0;
  Rng arng = seeded(seed, 55);
  for (int ai = 0; ai < 40 && random_cases < 100; ++ai) {
    GentlePair rp = random_pair(arng, 8);
    std::vector<GradedString> strs = distinct_strings(rp, arng, 4, 3, {});
    int here = 0;
    for (size_t i = 0; i < strs.size() && here < 6; ++i)
      for (size_t j = 0; j < strs.size() && here < 6; ++j) {
        if (i == j) continue;
        int_dim_case<K>(rp, strs[i], strs[j], c, true);
        ++here;
        ++random_cases;
      }
  }
  if (random_cases < 100)
    fail(c, "random corpus too small: " + std::to_string(random_cases));
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: thread totals match their smoothed strings ---- */

template <class K>
CriterionResult crit_smoothing(std::uint64_t seed) {
  CriterionResult c;
  c.name = "smoothing";
  auto t0 = Clock::now();
  GentlePair pair = fixture_pair();
  FanSystem sys = fan_system(pair);

  std::vector<DgModule> probes;
  for (int v = 0; v < pair.n_vertices(); ++v)
    probes.push_back(build_x_module(pair, single_string(v, 0)));
  Rng prng = seeded(seed, 66);
  for (const GradedString& s : distinct_strings(pair, prng, 5, 3, {}))
    probes.push_back(build_x_module(pair, s));

  struct ThreadCase {
    ThreadSpec spec;
    GradedString origin;
  };
  std::vector<ThreadCase> threads;
  Rng rng = seeded(seed, 6);
  int wanted[3] = {4, 4, 4};  // thread lengths 2, 3, 4
  std::set<GradedString> seen;
  for (int attempts = 0;
       attempts < 4000 && wanted[0] + wanted[1] + wanted[2] > 0; ++attempts) {
    GradedString s = random_string(pair, rng, 3);
    int r = (int)s.vertices.size();
    if (r < 2 || wanted[r - 2] <= 0) continue;
    if (!seen.insert(canonical_form(s)).second) continue;
    auto spec = decomposition_thread(pair, sys, s);
    if (!spec) {
      fail(c, "no decomposition record for " + arc_repr(pair, s));
      continue;
    }
    try {
      validate_thread(pair, *spec);
    } catch (const std::exception& e) {
      fail(c, std::string("decomposition thread rejected: ") + e.what() +
                  " for " + arc_repr(pair, s));
      continue;
    }
    threads.push_back({std::move(*spec), std::move(s)});
    --wanted[r - 2];
  }
  if ((int)threads.size() < 10)
    fail(c, "thread corpus too small: " + std::to_string(threads.size()));

  for (const ThreadCase& tc : threads) {
    DgModule total = thread_module(pair, tc.spec);
    GradedString sm = smooth_thread(pair, tc.spec);
    if (canonical_form(sm) != canonical_form(tc.origin))
      fail(c, "smoothing round trip differs: " + arc_repr(pair, tc.origin) +
                  " vs " + arc_repr(pair, sm));
    DgModule smod = build_x_module(pair, sm);
    if (underlying_cohomology(pair, total) != underlying_cohomology(pair, smod))
      fail(c, "underlying cohomology differs for " + arc_repr(pair, tc.origin));
    for (const DgModule& pm : probes)
      if (hom_cohomology<K>(pair, pm, total) != hom_cohomology<K>(pair, pm, smod))
        fail(c, "probe table differs for " + arc_repr(pair, tc.origin));
    ++c.cases;
    if (tc.spec.strings.size() == 2) {
      SmoothingEquivalence eq = smoothing_equivalence(
          pair, tc.spec.strings[0], tc.spec.strings[1], tc.spec.records[0]);
      if (!is_closed_morphism(pair, eq.cone, eq.smoothed_module, eq.chi) ||
          !is_closed_morphism(pair, eq.smoothed_module, eq.cone, eq.psi))
        fail(c, "equivalence maps not closed for " + arc_repr(pair, tc.origin));
      else if (!is_quasi_iso<K>(pair, eq.cone, eq.smoothed_module, eq.chi) ||
               !is_quasi_iso<K>(pair, eq.smoothed_module, eq.cone, eq.psi))
        fail(c, "equivalence maps not quasi-isomorphisms for " +
                    arc_repr(pair, tc.origin));
      ++c.cases;
    }
  }
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criteria: transported intersection tables and cross duality ---- */

struct KoszulCase {
  GradedString sigma, eta;
};

std::vector<KoszulCase> koszul_cases(const GentlePair& pair,
                                     const GentlePair& dual, Rng& rng) {
  std::vector<GradedString> sseed;
  for (int v = 0; v < std::min(3, pair.n_vertices()); ++v)
    sseed.push_back(single_string(v, 0));
  std::vector<GradedString> sigmas = distinct_strings(pair, rng, 8, 3, sseed);
  std::vector<GradedString> eseed;
  for (int v = 0; v < dual.n_vertices(); ++v)
    eseed.push_back(single_string(v, 0));
  std::vector<GradedString> etas =
      distinct_strings(dual, rng, dual.n_vertices() + 5, 3, eseed);
  std::vector<KoszulCase> out;
  for (size_t ei = 0; ei < etas.size(); ++ei)
    for (size_t t = 0; t < 2 && !sigmas.empty(); ++t)
      out.push_back({sigmas[(ei + t) % sigmas.size()], etas[ei]});
  return out;
}

template <class K>
void koszul_main_case(const GentlePair& pair, const GentlePair& dual,
                      const GradedString& sigma, const GradedString& eta,
                      CriterionResult& c, bool with_algebra) {
  GradedString rot;
  try {
    rot = half_rotate(pair, eta);
  } catch (const std::exception& e) {
    fail(c, std::string("transport failed: ") + e.what() + " for " +
                arc_repr(dual, eta, true));
    return;
  }
  if (canonical_form(rot) == sigma) return;  // self pairing unsupported
  std::map<int, int> ti = int_table(pair, sigma, rot);
  std::map<int, int> th = hom_cohomology<K>(
      pair, build_x_module(pair, sigma), build_x_module(pair, rot));
  ++c.cases;
  if (ti != th) {
    ojson j = ojson::object();
    if (with_algebra) j["algebra"] = algebra_to_json(pair);
    j["open"] = arc_to_json(pair, sigma, false);
    j["closed"] = arc_to_json(dual, eta, true);
    j["transported"] = arc_to_json(pair, rot, false);
    j["int_table"] = table_to_json(ti);
    j["hom"] = table_to_json(th);
    fail(c, j.dump());
    return;
  }
  if (eta.size() == 1 && eta.shifts[0] == 0 &&
      ti != int_with_dual_simple(sigma, eta.vertices[0]))
    fail(c, "direct generator count differs for " + arc_repr(pair, sigma) +
                " against " + arc_repr(dual, eta, true));
}

template <class K>
CriterionResult crit_koszul_main(std::uint64_t seed) {
  CriterionResult c;
  c.name = "koszul-intersection-dimension";
  auto t0 = Clock::now();
  GentlePair pair = fixture_pair();
  GentlePair dual = quadratic_dual(pair);
  Rng rng = seeded(seed, 7);
  for (const KoszulCase& kc : koszul_cases(pair, dual, rng))
    koszul_main_case<K>(pair, dual, kc.sigma, kc.eta, c, false);
  if (c.cases < 20)
    fail(c, "corpus too small: " + std::to_string(c.cases));
  Rng arng = seeded(seed, 77);
  for (int k = 0; k < 3; ++k) {
    GentlePair rp = random_pair(arng, 6);
    GentlePair rd = quadratic_dual(rp);
    std::vector<GradedString> ss = distinct_strings(rp, arng, 2, 2, {});
    std::vector<GradedString> es = distinct_strings(rd, arng, 2, 2, {});
    for (const GradedString& s : ss)
      for (const GradedString& e : es)
        koszul_main_case<K>(rp, rd, s, e, c, true);
  }
  c.wall_ms = ms_since(t0);
  return c;
}

template <class K>
void cross_duality_case(const GentlePair& pair, const GentlePair& dual,
                        const GradedString& sigma, const GradedString& eta,
                        CriterionResult& c, bool with_algebra) {
  GradedString rot, rot_open;
  try {
    rot = half_rotate(pair, eta);
    rot_open = half_rotate_open(pair, sigma);
  } catch (const std::exception& e) {
    fail(c, std::string("transport failed: ") + e.what());
    return;
  }
  std::map<int, int> primal = hom_cohomology<K>(
      pair, build_x_module(pair, sigma), build_x_module(pair, rot));
  std::map<int, int> dualside = hom_cohomology<K>(
      dual, build_x_module(dual, eta), build_x_module(dual, rot_open));
  int a0 = primal.count(0) ? primal.at(0) : 0;
  int b1 = dualside.count(1) ? dualside.at(1) : 0;
  ++c.cases;
  if (a0 != b1) {
    ojson j = ojson::object();
    if (with_algebra) j["algebra"] = algebra_to_json(pair);
    j["open"] = arc_to_json(pair, sigma, false);
    j["closed"] = arc_to_json(dual, eta, true);
    j["primal_dim0"] = a0;
    j["dual_dim1"] = b1;
    fail(c, j.dump());
  }
}

template <class K>
CriterionResult crit_cross_duality(std::uint64_t seed) {
  CriterionResult c;
  c.name = "cross-duality";
  auto t0 = Clock::now();
  GentlePair pair = fixture_pair();
  GentlePair dual = quadratic_dual(pair);
  Rng rng = seeded(seed, 7);  // same corpus as the main transport criterion
  for (const KoszulCase& kc : koszul_cases(pair, dual, rng))
    cross_duality_case<K>(pair, dual, kc.sigma, kc.eta, c, false);
  if (c.cases < 20)
    fail(c, "corpus too small: " + std::to_string(c.cases));
  Rng arng = seeded(seed, 77);
  for (int k = 0; k < 3; ++k) {
    GentlePair rp = random_pair(arng, 6);
    GentlePair rd = quadratic_dual(rp);
    std::vector<GradedString> ss = distinct_strings(rp, arng, 2, 2, {});
    std::vector<GradedString> es = distinct_strings(rd, arng, 2, 2, {});
    for (const GradedString& s : ss)
      for (const GradedString& e : es)
        cross_duality_case<K>(rp, rd, s, e, c, true);
  }
  c.wall_ms = ms_since(t0);
  return c;
}

/* ---- criterion: morphism representatives compose exactly ---- */

CriterionResult crit_morphisms(std::uint64_t seed) {
  CriterionResult c;
  c.name = "morphism-algebra";
  auto t0 = Clock::now();
  GentlePair pair = fixture_pair();
  Rng rng = seeded(seed, 9);
  std::vector<GradedString> base;
  for (int v = 0; v < pair.n_vertices(); ++v)
    base.push_back(single_string(v, 0));
  for (int v = 0; v < pair.n_vertices(); ++v)
    base.push_back(simple_resolution(pair, v));
  std::vector<GradedString> corpus = distinct_strings(pair, rng, 16, 3, base);
  std::vector<DgModule> mods;
  for (const GradedString& s : corpus) mods.push_back(build_x_module(pair, s));
  int n = (int)corpus.size();

  // Closedness of every boundary representative.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (const IntersectionRecord& rec :
           boundary_intersections(pair, corpus[(size_t)i], corpus[(size_t)j])) {
        DgMorphism f = morphism_from_intersection(pair, rec, corpus[(size_t)i],
                                                  corpus[(size_t)j]);
        const DgModule& msrc = rec.from_second ? mods[(size_t)j] : mods[(size_t)i];
        const DgModule& mtgt = rec.from_second ? mods[(size_t)i] : mods[(size_t)j];
        ++c.cases;
        if (!is_closed_morphism(pair, msrc, mtgt, f))
          fail(c, "representative not closed between " +
                      arc_repr(pair, corpus[(size_t)i]) + " and " +
                      arc_repr(pair, corpus[(size_t)j]));
      }
    }

  // Composition against the record calculus.
  int good = 0;
  for (int i = 0; i < n && good < 80; ++i)
    for (int j = 0; j < n && good < 80; ++j)
      for (int k = 0; k < n && good < 80; ++k) {
        if (i == j || j == k || i == k) continue;
        const GradedString &s1 = corpus[(size_t)i], &s2 = corpus[(size_t)j],
                           &s3 = corpus[(size_t)k];
        for (const IntersectionRecord& r1 :
             boundary_intersections(pair, s1, s2)) {
          if (r1.from_second) continue;
          for (const IntersectionRecord& r2 :
               boundary_intersections(pair, s2, s3)) {
            if (r2.from_second || r1.end_second != r2.end_first) continue;
            DgMorphism f1 = morphism_from_intersection(pair, r1, s1, s2);
            DgMorphism f2 = morphism_from_intersection(pair, r2, s2, s3);
            DgMorphism comp =
                compose_morphisms(pair, mods[(size_t)i], mods[(size_t)j],
                                  mods[(size_t)k], f2, f1);
            IntersectionRecord r3;
            bool composed = true;
            try {
              r3 = compose_intersections(pair, s1, s2, s3, r1, r2);
            } catch (const CheckError&) {
              composed = false;
            }
            ++c.cases;
            if (!composed) {
              if (!comp.is_zero())
                fail(c, "nonzero composite without a record: " +
                            arc_repr(pair, s1) + " -> " + arc_repr(pair, s2) +
                            " -> " + arc_repr(pair, s3));
              continue;
            }
            DgMorphism f3 = morphism_from_intersection(pair, r3, s1, s3);
            if (!same_morphism(comp, f3))
              fail(c, "composite differs from the record representative: " +
                          arc_repr(pair, s1) + " -> " + arc_repr(pair, s2) +
                          " -> " + arc_repr(pair, s3));
            else
              ++good;
          }
        }
      }
  if (good < 10)
    fail(c, "too few composable triples: " + std::to_string(good));

  // Interior sites pair up with indices summing to one.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::map<std::tuple<int, int, int, bool>, std::vector<int>> sites;
      for (const IntersectionRecord& rec : interior_intersections(
               pair, corpus[(size_t)i], corpus[(size_t)j]))
        sites[{rec.pos_first, rec.pos_second, rec.substring_len, rec.reversed}]
            .push_back(rec.from_second ? 1 - rec.index : rec.index);
      for (const auto& [key, inds] : sites) {
        ++c.cases;
        if (inds.size() != 2 || inds[0] != inds[1])
          fail(c, "interior site indices do not pair to one between " +
                      arc_repr(pair, corpus[(size_t)i]) + " and " +
                      arc_repr(pair, corpus[(size_t)j]));
      }
    }
  c.wall_ms = ms_since(t0);
  return c;
}

}  // namespace

bool VerifyReport::pass() const {
  for (const CriterionResult& c : criteria)
    if (!c.pass) return false;
  return true;
}

VerifyReport run_verify(const std::string& suite, std::uint64_t seed,
                        const std::string& field) {
  if (field != "q" && field != "p")
    throw InputError("unknown field '" + field + "' (expected q or p)");
  bool fq = field == "q";
  VerifyReport r;
  r.suite = suite;
  r.seed = seed;
  r.field = field;
  auto t0 = Clock::now();
  auto add = [&](CriterionResult c) { r.criteria.push_back(std::move(c)); };
  if (suite == "all") {
    add(crit_fixture());
    add(crit_involution(seed));
    add(crit_resolutions(seed));
    add(crit_formality(seed));
    add(fq ? crit_int_dim<Rational>(seed) : crit_int_dim<F32003>(seed));
    add(fq ? crit_smoothing<Rational>(seed) : crit_smoothing<F32003>(seed));
    add(fq ? crit_koszul_main<Rational>(seed) : crit_koszul_main<F32003>(seed));
    add(fq ? crit_cross_duality<Rational>(seed)
           : crit_cross_duality<F32003>(seed));
    add(crit_morphisms(seed));
  } else if (suite == "int-dim") {
    add(fq ? crit_int_dim<Rational>(seed) : crit_int_dim<F32003>(seed));
  } else if (suite == "smoothing") {
    add(fq ? crit_smoothing<Rational>(seed) : crit_smoothing<F32003>(seed));
  } else if (suite == "koszul") {
    add(fq ? crit_koszul_main<Rational>(seed) : crit_koszul_main<F32003>(seed));
    add(fq ? crit_cross_duality<Rational>(seed)
           : crit_cross_duality<F32003>(seed));
  } else {
    throw InputError("unknown suite '" + suite +
                     "' (expected all, int-dim, smoothing, or koszul)");
  }
  r.wall_ms = ms_since(t0);
  return r;
}

ojson report_to_json(const VerifyReport& r) {
  ojson j = ojson::object();
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["field"] = r.field;
  j["pass"] = r.pass();
  j["wall_ms"] = r.wall_ms;
  ojson crits = ojson::array();
  for (const CriterionResult& c : r.criteria) {
    ojson cj = ojson::object();
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["cases"] = c.cases;
    cj["wall_ms"] = c.wall_ms;
    ojson mm = ojson::array();
    for (const std::string& m : c.mismatches) mm.push_back(m);
    cj["mismatches"] = std::move(mm);
    crits.push_back(std::move(cj));
  }
  j["criteria"] = std::move(crits);
  return j;
}

std::string report_to_text(const VerifyReport& r) {
  std::string out;
  for (const CriterionResult& c : r.criteria) {
    out += (c.pass ? "[PASS] " : "[FAIL] ") + c.name + " (" +
           std::to_string(c.cases) + " cases, " +
           std::to_string((long long)c.wall_ms) + " ms)\n";
    for (const std::string& m : c.mismatches) out += "       " + m + "\n";
  }
  out += std::string(r.pass() ? "OK" : "FAILED") + " suite=" + r.suite +
         " seed=" + std::to_string(r.seed) + " field=" + r.field + " (" +
         std::to_string((long long)r.wall_ms) + " ms)\n";
  return out;
}

}  // namespace ggk
