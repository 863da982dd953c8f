#pragma once

#include <map>

#include "ggk/linalg.hpp"
#include "ggk/module.hpp"

namespace ggk {

/* The complex of K-vector spaces a dg module restricts to over one vertex:
   basis elements are (generator, path from the generator's vertex to the
   chosen vertex); a basis element (u, w) sits in degree |w| - shift(u). */
struct UnderlyingBasisElt {
  int gen = -1;
  Path path;
};

struct UnderlyingComplex {
  int vertex = -1;
  std::map<int, std::vector<UnderlyingBasisElt>> basis;  // degree -> elements
  std::map<int, Mat<Rational>> d;  // degree g -> matrix slot g -> slot g+1
};

UnderlyingComplex underlying_complex(const GentlePair& pair, const DgModule& m,
                                     int vertex);

/* Nonzero underlying cohomology dimensions, keyed by (vertex, degree). */
std::map<std::pair<int, int>, int> underlying_cohomology(const GentlePair& pair,
                                                         const DgModule& m);

/* The morphism complex between two dg modules with projective generators on
   the source side.  Basis elements are single-path maps (u, v, q) with q
   running from the target generator's vertex to the source generator's
   vertex; degree |q| + shift_M(u) - shift_N(v). */
struct HomBasisElt {
  int u = -1;
  int v = -1;
  Path q;
};

struct HomComplex {
  std::map<int, std::vector<HomBasisElt>> basis;
  std::map<int, Mat<Rational>> d;  // degree g -> matrix slot g -> slot g+1
};

HomComplex hom_complex(const GentlePair& pair, const DgModule& m,
                       const DgModule& n);

/* Cohomology dimensions of the morphism complex over the scalar K, nonzero
   degrees only. */
template <class K>
std::map<int, int> cohomology_dims(const HomComplex& hc) {
  std::map<int, int> dims;  // degree -> space dimension
  for (const auto& [g, elts] : hc.basis) dims[g] = (int)elts.size();
  std::map<int, int> out;
  for (const auto& [g, dim] : dims) {
    auto shape = [&](int from) -> Mat<K> {
      int rows = dims.count(from + 1) ? dims.at(from + 1) : 0;
      int cols = dims.count(from) ? dims.at(from) : 0;
      auto it = hc.d.find(from);
      if (it == hc.d.end()) return Mat<K>::Zero(rows, cols);
      Mat<K> m(it->second.rows(), it->second.cols());
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
          m(r, c) = to_scalar(it->second(r, c), K(0));
      return m;
    };
    Mat<K> d_prev = shape(g - 1), d_next = shape(g);
    int h = dim - rank_of<K>(Mat<K>(d_next)) - rank_of<K>(Mat<K>(d_prev));
    if (h != 0) out[g] = h;
  }
  return out;
}

/* Cohomology of Hom(M, N) over K, nonzero degrees only. */
template <class K>
std::map<int, int> hom_cohomology(const GentlePair& pair, const DgModule& m,
                                  const DgModule& n) {
  return cohomology_dims<K>(hom_complex(pair, m, n));
}

/* The underlying complexes of m and n over one vertex together with the
   matrices of the chain map induced by f. */
struct UnderlyingMapSlice {
  UnderlyingComplex source;
  UnderlyingComplex target;
  std::map<int, Mat<Rational>> f;  // degree -> dim target_g x dim source_g
};

UnderlyingMapSlice underlying_map(const GentlePair& pair, const DgModule& m,
                                  const DgModule& n, const DgMorphism& f,
                                  int vertex);

namespace detail {

template <class K>
Mat<K> convert(const Mat<Rational>& m) {
  Mat<K> out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = to_scalar(m(r, c), K(0));
  return out;
}

template <class K>
Mat<K> slot_matrix(const std::map<int, std::vector<UnderlyingBasisElt>>& basis,
                   const std::map<int, Mat<Rational>>& mats, int g) {
  auto dim = [&basis](int d) {
    auto it = basis.find(d);
    return it == basis.end() ? 0 : (int)it->second.size();
  };
  auto it = mats.find(g);
  if (it != mats.end()) return convert<K>(it->second);
  return Mat<K>::Zero(dim(g + 1), dim(g));
}

}  // namespace detail

/* Whether the closed degree-0 morphism f induces an isomorphism on the
   underlying cohomology over every vertex. */
template <class K>
bool is_quasi_iso(const GentlePair& pair, const DgModule& m, const DgModule& n,
                  const DgMorphism& f) {
  if (f.degree != 0 && !f.comps.empty())
    throw CheckError("is_quasi_iso: morphism must have degree 0");
  if (!is_closed_morphism(pair, m, n, f))
    throw CheckError("is_quasi_iso: morphism is not closed");
  for (int vertex = 0; vertex < pair.n_vertices(); ++vertex) {
    UnderlyingMapSlice slice = underlying_map(pair, m, n, f, vertex);
    std::map<int, bool> degrees;
    for (const auto& [g, elts] : slice.source.basis)
      if (!elts.empty()) degrees[g] = true;
    for (const auto& [g, elts] : slice.target.basis)
      if (!elts.empty()) degrees[g] = true;
    for (const auto& [g, unused] : degrees) {
      (void)unused;
      auto dimN = [&slice](int d) {
        auto it = slice.target.basis.find(d);
        return it == slice.target.basis.end() ? 0 : (int)it->second.size();
      };
      auto dimM = [&slice](int d) {
        auto it = slice.source.basis.find(d);
        return it == slice.source.basis.end() ? 0 : (int)it->second.size();
      };
      Mat<K> d_prev = detail::slot_matrix<K>(slice.source.basis, slice.source.d, g - 1);
      Mat<K> d_next = detail::slot_matrix<K>(slice.source.basis, slice.source.d, g);
      Mat<K> dp_prev = detail::slot_matrix<K>(slice.target.basis, slice.target.d, g - 1);
      Mat<K> dp_next = detail::slot_matrix<K>(slice.target.basis, slice.target.d, g);
      Mat<K> fg;
      auto it = slice.f.find(g);
      if (it != slice.f.end())
        fg = detail::convert<K>(it->second);
      else
        fg = Mat<K>::Zero(dimN(g), dimM(g));
      if (!induces_iso<K>(d_prev, d_next, dp_prev, dp_next, fg)) return false;
    }
  }
  return true;
}

}  // namespace ggk
