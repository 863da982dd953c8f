#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ggk {

/* Error raised by malformed user input (files, CLI arguments).  The CLI maps
   it to exit code 2. */
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* Error raised when a mathematical invariant the library relies on fails.
   These indicate either misuse of an operation outside its precondition or a
   genuine inconsistency, and are never swallowed. */
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string id;
  int src = -1;   // vertex index
  int tgt = -1;   // vertex index
  int degree = 0;
};

struct GradedQuiver {
  std::vector<std::string> vertices;  // sorted, unique
  std::vector<Arrow> arrows;          // sorted by id, unique ids

  int vertex_index(const std::string& name) const;
  int arrow_index(const std::string& id) const;
};

/* A graded quiver with a set of quadratic monomial relations.  Relations are
   stored as pairs (a, b) of arrow indices meaning the length-two path "first
   a then b" is declared zero. */
struct GentlePair {
  GradedQuiver quiver;
  std::vector<std::pair<int, int>> relations;  // sorted, unique

  // Derived adjacency tables, populated by finalize().
  std::vector<std::vector<int>> out_arrows;  // per vertex, sorted by arrow id
  std::vector<std::vector<int>> in_arrows;
  std::vector<int> rel_next;  // rel_next[a] = b with (a,b) a relation, else -1
  std::vector<int> rel_prev;
  std::vector<int> nz_next;   // nz_next[a] = b with t(a)=s(b), (a,b) not a relation
  std::vector<int> nz_prev;

  bool has_relation(int a, int b) const;
  int n_vertices() const { return (int)quiver.vertices.size(); }
  int n_arrows() const { return (int)quiver.arrows.size(); }
  const Arrow& arrow(int a) const { return quiver.arrows[(size_t)a]; }
};

struct ValidationReport {
  bool structural_ok = true;   // well-formed quiver + relations
  bool gentle_ok = true;       // the four gentleness conditions
  bool finite_dimensional = true;
  std::vector<std::string> problems;

  bool ok() const { return structural_ok && gentle_ok && finite_dimensional; }
};

/* Builds the pair from raw data, checking only well-formedness (indices in
   range, relations composable, no duplicates).  Gentleness is checked by
   validate_gentle; finalize() requires it. */
GentlePair make_gentle_pair(GradedQuiver quiver,
                            std::vector<std::pair<int, int>> relations);

ValidationReport validate_gentle(const GentlePair& pair);

/* Populates the derived adjacency tables.  Throws CheckError unless
   validate_gentle passes. */
void finalize(GentlePair& pair);

/* A path in the quiver: trivial (an idempotent at `source`) or a sequence of
   composable arrows starting at `source`.  "ab" means first a, then b. */
struct Path {
  int source = -1;
  std::vector<int> arrows;

  bool trivial() const { return arrows.empty(); }
  int length() const { return (int)arrows.size(); }
  int target(const GentlePair& pair) const;
  int degree(const GentlePair& pair) const;
  std::string str(const GentlePair& pair) const;

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  friend bool operator<(const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

Path trivial_path(int vertex);
Path arrow_path(const GentlePair& pair, int arrow);

/* Whether the path avoids every relation (and is well-formed). */
bool path_is_nonzero(const GentlePair& pair, const Path& p);

/* Composite "first p then q".  Mismatched endpoints are an error; a composite
   that meets a relation is the zero class, reported as nullopt. */
std::optional<Path> compose_paths(const GentlePair& pair, const Path& p,
                                  const Path& q);

/* All nonzero paths, trivial ones included, sorted by (source, length,
   arrows).  Throws CheckError if the pair is not finite dimensional. */
std::vector<Path> nonzero_paths(const GentlePair& pair);

/* Maximal relation paths starting at vertex i: each out-arrow of i extends
   uniquely forward through relation pairs; the result (at most two paths) is
   sorted by first arrow. */
std::vector<Path> maximal_relation_paths(const GentlePair& pair, int vertex);

/* The Koszul-dual pair: opposite quiver, degree 1-|a| on the reversed arrow,
   relations exactly the non-relations of the original.  Applying it twice
   returns the original pair (arrow ids use a trailing '*' toggle). */
GentlePair quadratic_dual(const GentlePair& pair);

/* Equality of presentations: same vertex names, same arrows (id, endpoints,
   degree), same relation set. */
bool same_presentation(const GentlePair& a, const GentlePair& b);

/* A fan: the chain of arrows through one marked point, listed so that
   consecutive entries compose nonzero.  `ends[c]` is the vertex at chain
   position c (0-based); arrows[c] runs ends[c] -> ends[c+1].  The chain order
   is anticlockwise around the marked point. */
struct Fan {
  std::vector<int> ends;    // size = arrows.size() + 1, >= 1
  std::vector<int> arrows;
};

/* Occurrence bookkeeping: every vertex appears in exactly two fan positions
   once singleton fans pad the deficit. */
struct FanSystem {
  std::vector<Fan> fans;
  // occ[v] = the two (fan, position) slots of vertex v, slot 0 < slot 1.
  std::vector<std::array<std::pair<int, int>, 2>> occ;
  // arrow_pos[a] = (fan, position) with fans[fan].arrows[position] == a.
  std::vector<std::pair<int, int>> arrow_pos;

  int fan_size(int f) const { return (int)fans[(size_t)f].ends.size(); }
  /* The other occurrence of vertex v besides (fan, pos). */
  std::pair<int, int> other_occ(int v, std::pair<int, int> at) const;
  /* The nonzero path along fan f from position lo to position hi (lo < hi). */
  Path run(const GentlePair& pair, int f, int lo, int hi) const;
};

FanSystem fan_system(const GentlePair& pair);

}  // namespace ggk
