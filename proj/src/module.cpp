#include "ggk/module.hpp"

#include <algorithm>

namespace ggk {

void normalize(PathComb& comb) {
  std::sort(comb.begin(), comb.end(),
            [](const PathTerm& a, const PathTerm& b) { return a.path < b.path; });
  PathComb out;
  for (const PathTerm& t : comb) {
    if (!out.empty() && out.back().path == t.path)
      out.back().coeff += t.coeff;
    else
      out.push_back(t);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const PathTerm& t) { return t.coeff.is_zero(); }),
            out.end());
  comb = std::move(out);
}

PathComb comb_add(const PathComb& a, const PathComb& b) {
  PathComb out = a;
  out.insert(out.end(), b.begin(), b.end());
  normalize(out);
  return out;
}

PathComb comb_scale(const Rational& c, const PathComb& a) {
  PathComb out;
  if (c.is_zero()) return out;
  for (const PathTerm& t : a) out.push_back({c * t.coeff, t.path});
  return out;
}

void add_entry(std::map<std::pair<int, int>, PathComb>& table, int u, int v,
               const Rational& coeff, const Path& path, bool target_simple) {
  if (coeff.is_zero()) return;
  if (target_simple && !path.trivial()) return;
  PathComb& comb = table[{u, v}];
  comb.push_back({coeff, path});
  normalize(comb);
  if (comb.empty()) table.erase({u, v});
}

DgModule build_x_module(const GentlePair& pair, const GradedString& s) {
  validate_string(pair, s);
  DgModule m;
  for (int i = 0; i < s.size(); ++i)
    m.gens.push_back({s.vertices[(size_t)i], s.shifts[(size_t)i], false});
  for (int i = 0; i + 1 < s.size(); ++i) {
    const Letter& l = s.letters[(size_t)i];
    if (l.dir == Dir::L)
      add_entry(m.diff, i + 1, i, Rational(1), l.path, false);
    else
      add_entry(m.diff, i, i + 1, Rational(1), l.path, false);
  }
  return m;
}

DgModule simple_module(int vertex, int shift) {
  DgModule m;
  m.gens.push_back({vertex, shift, true});
  return m;
}

DgModule shift_module(const DgModule& m, int n) {
  DgModule out = m;
  for (Generator& g : out.gens) g.shift += n;
  return out;
}

namespace {

void check_table(const GentlePair& pair, const DgModule& m, const DgModule& n,
                 const std::map<std::pair<int, int>, PathComb>& table,
                 int degree, const char* what) {
  for (const auto& [key, comb] : table) {
    auto [u, v] = key;
    if (u < 0 || u >= m.size() || v < 0 || v >= n.size())
      throw CheckError(std::string(what) + ": entry index out of range");
    const Generator& gu = m.gens[(size_t)u];
    const Generator& gv = n.gens[(size_t)v];
    for (const PathTerm& t : comb) {
      if (!path_is_nonzero(pair, t.path))
        throw CheckError(std::string(what) + ": zero path in entry");
      if (t.path.source != gv.vertex || t.path.target(pair) != gu.vertex)
        throw CheckError(std::string(what) + ": entry endpoints mismatch");
      if (gv.simple && !t.path.trivial())
        throw CheckError(std::string(what) + ": nontrivial path into simple");
      if (t.path.degree(pair) + gu.shift - gv.shift != degree)
        throw CheckError(std::string(what) + ": entry degree mismatch");
      if (gu.simple && !t.path.trivial())
        throw CheckError(std::string(what) + ": nontrivial path out of simple");
    }
  }
}

/* Symbolic square of a differential-like table; composite u ->(via) v -> w. */
std::map<std::pair<int, int>, PathComb> table_square(
    const GentlePair& pair, const DgModule& m,
    const std::map<std::pair<int, int>, PathComb>& table) {
  std::map<std::pair<int, int>, PathComb> sq;
  for (const auto& [key1, comb1] : table) {
    auto [u, v] = key1;
    for (const auto& [key2, comb2] : table) {
      if (key2.first != v) continue;
      int w = key2.second;
      for (const PathTerm& t1 : comb1)
        for (const PathTerm& t2 : comb2) {
          auto q = compose_paths(pair, t2.path, t1.path);
          if (q)
            add_entry(sq, u, w, t1.coeff * t2.coeff, *q,
                      m.gens[(size_t)w].simple);
        }
    }
  }
  return sq;
}

}  // namespace

void module_check(const GentlePair& pair, const DgModule& m) {
  for (const Generator& g : m.gens)
    if (g.vertex < 0 || g.vertex >= pair.n_vertices())
      throw CheckError("module_check: generator vertex out of range");
  check_table(pair, m, m, m.diff, 1, "module differential");
  auto sq = table_square(pair, m, m.diff);
  if (!sq.empty())
    throw CheckError("module_check: differential does not square to zero");
}

void morphism_check(const GentlePair& pair, const DgModule& m,
                    const DgModule& n, const DgMorphism& f) {
  check_table(pair, m, n, f.comps, f.degree, "morphism");
}

DgMorphism identity_morphism(const DgModule& m) {
  DgMorphism id;
  for (int u = 0; u < m.size(); ++u)
    add_entry(id.comps, u, u, Rational(1),
              trivial_path(m.gens[(size_t)u].vertex), false);
  return id;
}

DgMorphism zero_morphism(int degree) {
  DgMorphism z;
  z.degree = degree;
  return z;
}

DgMorphism scale_morphism(const Rational& c, const DgMorphism& f) {
  DgMorphism out;
  out.degree = f.degree;
  if (c.is_zero()) return out;
  for (const auto& [key, comb] : f.comps) out.comps[key] = comb_scale(c, comb);
  return out;
}

DgMorphism add_morphisms(const DgMorphism& f, const DgMorphism& g) {
  if (!f.comps.empty() && !g.comps.empty() && f.degree != g.degree)
    throw CheckError("add_morphisms: degree mismatch");
  DgMorphism out;
  out.degree = f.comps.empty() ? g.degree : f.degree;
  out.comps = f.comps;
  for (const auto& [key, comb] : g.comps) {
    PathComb merged = comb_add(out.comps.count(key) ? out.comps[key] : PathComb{},
                               comb);
    if (merged.empty())
      out.comps.erase(key);
    else
      out.comps[key] = std::move(merged);
  }
  return out;
}

DgMorphism compose_morphisms(const GentlePair& pair, const DgModule& l,
                             const DgModule& m, const DgModule& n,
                             const DgMorphism& g, const DgMorphism& f) {
  (void)l;
  DgMorphism out;
  out.degree = f.degree + g.degree;
  for (const auto& [kf, combf] : f.comps) {
    auto [u, v] = kf;
    for (const auto& [kg, combg] : g.comps) {
      if (kg.first != v) continue;
      int w = kg.second;
      for (const PathTerm& tf : combf)
        for (const PathTerm& tg : combg) {
          auto q = compose_paths(pair, tg.path, tf.path);
          if (q)
            add_entry(out.comps, u, w, tf.coeff * tg.coeff, *q,
                      n.gens[(size_t)w].simple);
        }
    }
  }
  (void)m;
  return out;
}

DgMorphism d_of_morphism(const GentlePair& pair, const DgModule& m,
                         const DgModule& n, const DgMorphism& f) {
  DgMorphism out;
  out.degree = f.degree + 1;
  // f after d_M: entry (u', v) from d_M (u', u) and f (u, v).
  for (const auto& [kd, combd] : m.diff) {
    auto [up, u] = kd;
    for (const auto& [kf, combf] : f.comps) {
      if (kf.first != u) continue;
      int v = kf.second;
      for (const PathTerm& td : combd)
        for (const PathTerm& tf : combf) {
          auto q = compose_paths(pair, tf.path, td.path);
          if (q)
            add_entry(out.comps, up, v, td.coeff * tf.coeff, *q,
                      n.gens[(size_t)v].simple);
        }
    }
  }
  // minus (-1)^{|f|} d_N after f: entry (u, v') from f (u, v) and d_N (v, v').
  Rational sign = f.degree % 2 == 0 ? Rational(-1) : Rational(1);
  for (const auto& [kf, combf] : f.comps) {
    auto [u, v] = kf;
    for (const auto& [kd, combd] : n.diff) {
      if (kd.first != v) continue;
      int vp = kd.second;
      for (const PathTerm& tf : combf)
        for (const PathTerm& td : combd) {
          auto q = compose_paths(pair, td.path, tf.path);
          if (q)
            add_entry(out.comps, u, vp, sign * tf.coeff * td.coeff, *q,
                      n.gens[(size_t)vp].simple);
        }
    }
  }
  return out;
}

bool is_closed_morphism(const GentlePair& pair, const DgModule& m,
                        const DgModule& n, const DgMorphism& f) {
  return d_of_morphism(pair, m, n, f).comps.empty();
}

bool same_morphism(const DgMorphism& f, const DgMorphism& g) {
  if (f.comps.empty() && g.comps.empty()) return true;
  return f.degree == g.degree && f.comps == g.comps;
}

DgModule thread_total_module(const GentlePair& pair,
                             const std::vector<DgModule>& modules,
                             const std::vector<ThreadLink>& links,
                             std::vector<int>* gen_offsets) {
  if (modules.empty()) throw CheckError("thread_total_module: empty thread");
  if (links.size() + 1 != modules.size())
    throw CheckError("thread_total_module: link count mismatch");
  std::vector<int> offset;
  int total = 0;
  for (const DgModule& m : modules) {
    offset.push_back(total);
    total += m.size();
  }
  DgModule out;
  for (const DgModule& m : modules)
    out.gens.insert(out.gens.end(), m.gens.begin(), m.gens.end());
  for (size_t i = 0; i < modules.size(); ++i)
    for (const auto& [key, comb] : modules[i].diff)
      for (const PathTerm& t : comb)
        add_entry(out.diff, offset[i] + key.first, offset[i] + key.second,
                  t.coeff, t.path,
                  modules[i].gens[(size_t)key.second].simple);
  for (size_t i = 0; i < links.size(); ++i) {
    const ThreadLink& ln = links[i];
    if (ln.map.degree != 1 && !ln.map.comps.empty())
      throw CheckError("thread_total_module: link morphism must have degree 1");
    size_t src = ln.forward ? i : i + 1;
    size_t tgt = ln.forward ? i + 1 : i;
    morphism_check(pair, modules[src], modules[tgt], ln.map);
    if (!is_closed_morphism(pair, modules[src], modules[tgt], ln.map))
      throw CheckError("thread_total_module: link morphism is not closed");
    for (const auto& [key, comb] : ln.map.comps)
      for (const PathTerm& t : comb)
        add_entry(out.diff, offset[src] + key.first, offset[tgt] + key.second,
                  t.coeff, t.path,
                  modules[tgt].gens[(size_t)key.second].simple);
  }
  module_check(pair, out);
  if (gen_offsets) *gen_offsets = offset;
  return out;
}

}  // namespace ggk
