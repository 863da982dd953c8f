#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ggk/scalars.hpp"
#include "ggk/strings.hpp"

namespace ggk {

/* Formal K-linear combination of parallel paths. */
struct PathTerm {
  Rational coeff;
  Path path;

  bool operator==(const PathTerm& o) const {
    return coeff == o.coeff && path == o.path;
  }
};
using PathComb = std::vector<PathTerm>;  // kept sorted by path, coeffs nonzero

void normalize(PathComb& comb);
PathComb comb_add(const PathComb& a, const PathComb& b);
PathComb comb_scale(const Rational& c, const PathComb& a);

/* One generator of a dg module: the graded projective e_v A placed in shift
   `shift`, or (for the `simple` kind) the one-dimensional top of it, on which
   every positive-length path acts as zero. */
struct Generator {
  int vertex = -1;
  int shift = 0;
  bool simple = false;
};

/* A dg module presented by generators and a differential.  The differential
   entry (u, v) is a combination of paths from gens[v].vertex to
   gens[u].vertex, acting by left multiplication as a map gen u -> gen v; each
   path q in it must have |q| + shift(u) - shift(v) = 1.  Entries into simple
   generators keep only trivial paths. */
struct DgModule {
  std::vector<Generator> gens;
  std::map<std::pair<int, int>, PathComb> diff;

  int size() const { return (int)gens.size(); }
};

/* A homogeneous morphism between dg modules, stored the same way: entry
   (u, v) maps gen u of the source to gen v of the target via paths from
   target vertex(v) to source vertex(u), each of degree
   |q| + shift_M(u) - shift_N(v) = `degree`. */
struct DgMorphism {
  int degree = 0;
  std::map<std::pair<int, int>, PathComb> comps;

  bool is_zero() const { return comps.empty(); }
};

/* Inserts coeff * path into entry (u, v), applying the simple-target
   truncation and dropping the entry if it cancels. */
void add_entry(std::map<std::pair<int, int>, PathComb>& table, int u, int v,
               const Rational& coeff, const Path& path, bool target_simple);

/* The dg string module of a graded string: one projective generator per
   position, one differential entry per letter. */
DgModule build_x_module(const GentlePair& pair, const GradedString& s);

/* The simple module at a vertex, concentrated in its shift. */
DgModule simple_module(int vertex, int shift = 0);

DgModule shift_module(const DgModule& m, int n);

/* Structural checks: generator vertices in range, differential entries of
   degree 1 with matching endpoints, d squared = 0.  Throws CheckError. */
void module_check(const GentlePair& pair, const DgModule& m);

/* Structural morphism check: entries of uniform degree with matching
   endpoints.  Throws CheckError. */
void morphism_check(const GentlePair& pair, const DgModule& m,
                    const DgModule& n, const DgMorphism& f);

DgMorphism identity_morphism(const DgModule& m);
DgMorphism zero_morphism(int degree);
DgMorphism scale_morphism(const Rational& c, const DgMorphism& f);
DgMorphism add_morphisms(const DgMorphism& f, const DgMorphism& g);

/* Composite "g after f": f : L -> M, g : M -> N. */
DgMorphism compose_morphisms(const GentlePair& pair, const DgModule& l,
                             const DgModule& m, const DgModule& n,
                             const DgMorphism& g, const DgMorphism& f);

/* The morphism differential d(f) = f d_M - (-1)^{|f|} d_N f. */
DgMorphism d_of_morphism(const GentlePair& pair, const DgModule& m,
                         const DgModule& n, const DgMorphism& f);

bool is_closed_morphism(const GentlePair& pair, const DgModule& m,
                        const DgModule& n, const DgMorphism& f);

bool same_morphism(const DgMorphism& f, const DgMorphism& g);

/* A chain of modules linked by closed degree-1 morphisms, each pointing
   either forward (from v to v+1) or backward.  The total module carries the
   block differential; it is a dg module iff consecutive same-direction links
   compose to zero, which module_check enforces. */
struct ThreadLink {
  bool forward = true;
  DgMorphism map;
};

DgModule thread_total_module(const GentlePair& pair,
                             const std::vector<DgModule>& modules,
                             const std::vector<ThreadLink>& links,
                             std::vector<int>* gen_offsets = nullptr);

}  // namespace ggk
