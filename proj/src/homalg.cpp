#include "ggk/homalg.hpp"

#include <algorithm>
#include <tuple>

namespace ggk {

namespace {

/* All paths from `from` to `to`, trivial included when from == to. */
std::vector<Path> paths_between(const std::vector<Path>& all, int from,
                                const GentlePair& pair, int to) {
  std::vector<Path> out;
  for (const Path& p : all)
    if (p.source == from && p.target(pair) == to) out.push_back(p);
  return out;
}

int elt_degree(const DgModule& m, const UnderlyingBasisElt& e,
               const GentlePair& pair) {
  return e.path.degree(pair) - m.gens[(size_t)e.gen].shift;
}

}  // namespace

UnderlyingComplex underlying_complex(const GentlePair& pair, const DgModule& m,
                                     int vertex) {
  std::vector<Path> all = nonzero_paths(pair);
  UnderlyingComplex uc;
  uc.vertex = vertex;
  std::map<std::pair<int, Path>, std::pair<int, int>> index;  // -> (degree, col)
  for (int u = 0; u < m.size(); ++u) {
    const Generator& g = m.gens[(size_t)u];
    std::vector<Path> ps;
    if (g.simple) {
      if (g.vertex == vertex) ps.push_back(trivial_path(vertex));
    } else {
      ps = paths_between(all, g.vertex, pair, vertex);
    }
    for (const Path& p : ps) {
      UnderlyingBasisElt e{u, p};
      int d = elt_degree(m, e, pair);
      index[{u, p}] = {d, (int)uc.basis[d].size()};
      uc.basis[d].push_back(std::move(e));
    }
  }
  for (const auto& [g, elts] : uc.basis) {
    int rows = uc.basis.count(g + 1) ? (int)uc.basis.at(g + 1).size() : 0;
    Mat<Rational> mat = Mat<Rational>::Zero(rows, (Eigen::Index)elts.size());
    for (size_t col = 0; col < elts.size(); ++col) {
      const UnderlyingBasisElt& e = elts[col];
      for (const auto& [key, comb] : m.diff) {
        if (key.first != e.gen) continue;
        int v = key.second;
        for (const PathTerm& t : comb) {
          auto q = compose_paths(pair, t.path, e.path);
          if (!q) continue;
          if (m.gens[(size_t)v].simple && !q->trivial()) continue;
          auto it = index.find({v, *q});
          if (it == index.end())
            throw CheckError("underlying_complex: image element missing");
          if (it->second.first != g + 1)
            throw CheckError("underlying_complex: differential is not degree 1");
          mat((Eigen::Index)it->second.second, (Eigen::Index)col) =
              mat((Eigen::Index)it->second.second, (Eigen::Index)col) + t.coeff;
        }
      }
    }
    uc.d[g] = std::move(mat);
  }
  return uc;
}

std::map<std::pair<int, int>, int> underlying_cohomology(const GentlePair& pair,
                                                         const DgModule& m) {
  std::map<std::pair<int, int>, int> out;
  for (int vertex = 0; vertex < pair.n_vertices(); ++vertex) {
    UnderlyingComplex uc = underlying_complex(pair, m, vertex);
    auto dim = [&uc](int d) {
      auto it = uc.basis.find(d);
      return it == uc.basis.end() ? 0 : (int)it->second.size();
    };
    auto mat_at = [&uc, &dim](int g) -> Mat<Rational> {
      auto it = uc.d.find(g);
      if (it != uc.d.end()) return it->second;
      return Mat<Rational>::Zero(dim(g + 1), dim(g));
    };
    for (const auto& [g, elts] : uc.basis) {
      int h = (int)elts.size() - rank_of<Rational>(mat_at(g)) -
              rank_of<Rational>(mat_at(g - 1));
      if (h != 0) out[{vertex, g}] = h;
    }
  }
  return out;
}

HomComplex hom_complex(const GentlePair& pair, const DgModule& m,
                       const DgModule& n) {
  for (const Generator& g : m.gens)
    if (g.simple)
      throw CheckError("hom_complex: source generators must be projective");
  std::vector<Path> all = nonzero_paths(pair);
  HomComplex hc;
  std::map<std::tuple<int, int, Path>, std::pair<int, int>> index;
  for (int u = 0; u < m.size(); ++u)
    for (int v = 0; v < n.size(); ++v) {
      const Generator& gu = m.gens[(size_t)u];
      const Generator& gv = n.gens[(size_t)v];
      std::vector<Path> qs;
      if (gv.simple) {
        if (gv.vertex == gu.vertex) qs.push_back(trivial_path(gu.vertex));
      } else {
        qs = paths_between(all, gv.vertex, pair, gu.vertex);
      }
      for (const Path& q : qs) {
        int deg = q.degree(pair) + gu.shift - gv.shift;
        index[{u, v, q}] = {deg, (int)hc.basis[deg].size()};
        hc.basis[deg].push_back({u, v, q});
      }
    }
  for (const auto& [g, elts] : hc.basis) {
    int rows = hc.basis.count(g + 1) ? (int)hc.basis.at(g + 1).size() : 0;
    Mat<Rational> mat = Mat<Rational>::Zero(rows, (Eigen::Index)elts.size());
    auto put = [&](int u, int v, const Path& q, const Rational& coeff,
                   Eigen::Index col, bool target_simple) {
      if (coeff.is_zero()) return;
      if (target_simple && !q.trivial()) return;
      auto it = index.find({u, v, q});
      if (it == index.end())
        throw CheckError("hom_complex: image element missing");
      if (it->second.first != g + 1)
        throw CheckError("hom_complex: differential is not degree 1");
      mat((Eigen::Index)it->second.second, col) =
          mat((Eigen::Index)it->second.second, col) + coeff;
    };
    Rational neg = g % 2 == 0 ? Rational(-1) : Rational(1);
    for (size_t col = 0; col < elts.size(); ++col) {
      const HomBasisElt& e = elts[col];
      // Precompose with d_M: entries (u', u).
      for (const auto& [key, comb] : m.diff) {
        if (key.second != e.u) continue;
        int up = key.first;
        for (const PathTerm& t : comb) {
          auto q = compose_paths(pair, e.q, t.path);
          if (q)
            put(up, e.v, *q, t.coeff, (Eigen::Index)col,
                n.gens[(size_t)e.v].simple);
        }
      }
      // Postcompose with -(-1)^g d_N: entries (v, v').
      for (const auto& [key, comb] : n.diff) {
        if (key.first != e.v) continue;
        int vp = key.second;
        for (const PathTerm& t : comb) {
          auto q = compose_paths(pair, t.path, e.q);
          if (q)
            put(e.u, vp, *q, neg * t.coeff, (Eigen::Index)col,
                n.gens[(size_t)vp].simple);
        }
      }
    }
    hc.d[g] = std::move(mat);
  }
  return hc;
}

UnderlyingMapSlice underlying_map(const GentlePair& pair, const DgModule& m,
                                  const DgModule& n, const DgMorphism& f,
                                  int vertex) {
  UnderlyingMapSlice slice;
  slice.source = underlying_complex(pair, m, vertex);
  slice.target = underlying_complex(pair, n, vertex);
  std::map<std::pair<int, Path>, std::pair<int, int>> tindex;
  for (const auto& [g, elts] : slice.target.basis)
    for (size_t col = 0; col < elts.size(); ++col)
      tindex[{elts[col].gen, elts[col].path}] = {g, (int)col};
  for (const auto& [g, elts] : slice.source.basis) {
    int tg = g + f.degree;
    int rows =
        slice.target.basis.count(tg) ? (int)slice.target.basis.at(tg).size() : 0;
    Mat<Rational> mat = Mat<Rational>::Zero(rows, (Eigen::Index)elts.size());
    for (size_t col = 0; col < elts.size(); ++col) {
      const UnderlyingBasisElt& e = elts[col];
      for (const auto& [key, comb] : f.comps) {
        if (key.first != e.gen) continue;
        int v = key.second;
        for (const PathTerm& t : comb) {
          auto q = compose_paths(pair, t.path, e.path);
          if (!q) continue;
          if (n.gens[(size_t)v].simple && !q->trivial()) continue;
          auto it = tindex.find({v, *q});
          if (it == tindex.end())
            throw CheckError("underlying_map: image element missing");
          if (it->second.first != g + f.degree)
            throw CheckError("underlying_map: map degree mismatch");
          mat((Eigen::Index)it->second.second, (Eigen::Index)col) =
              mat((Eigen::Index)it->second.second, (Eigen::Index)col) + t.coeff;
        }
      }
    }
    slice.f[g] = std::move(mat);
  }
  return slice;
}

}  // namespace ggk
