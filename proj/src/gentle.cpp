#include "ggk/gentle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ggk {

int GradedQuiver::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), name);
  if (it == vertices.end() || *it != name)
    throw InputError("unknown vertex '" + name + "'");
  return (int)(it - vertices.begin());
}

int GradedQuiver::arrow_index(const std::string& id) const {
  auto it = std::lower_bound(
      arrows.begin(), arrows.end(), id,
      [](const Arrow& a, const std::string& s) { return a.id < s; });
  if (it == arrows.end() || it->id != id)
    throw InputError("unknown arrow '" + id + "'");
  return (int)(it - arrows.begin());
}

bool GentlePair::has_relation(int a, int b) const {
  return std::binary_search(relations.begin(), relations.end(),
                            std::make_pair(a, b));
}

GentlePair make_gentle_pair(GradedQuiver quiver,
                            std::vector<std::pair<int, int>> relations) {
  for (size_t i = 1; i < quiver.vertices.size(); ++i)
    if (!(quiver.vertices[i - 1] < quiver.vertices[i]))
      throw InputError("vertex names must be unique");
  for (size_t i = 1; i < quiver.arrows.size(); ++i)
    if (!(quiver.arrows[i - 1].id < quiver.arrows[i].id))
      throw InputError("arrow ids must be unique");
  int nv = (int)quiver.vertices.size();
  for (const Arrow& a : quiver.arrows)
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw InputError("arrow '" + a.id + "' has an endpoint outside the vertex set");
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()),
                  relations.end());
  int na = (int)quiver.arrows.size();
  for (auto [a, b] : relations) {
    if (a < 0 || a >= na || b < 0 || b >= na)
      throw InputError("relation refers to an unknown arrow");
    if (quiver.arrows[(size_t)a].tgt != quiver.arrows[(size_t)b].src)
      throw InputError("relation pair (" + quiver.arrows[(size_t)a].id + ", " +
                       quiver.arrows[(size_t)b].id + ") is not composable");
  }
  GentlePair pair;
  pair.quiver = std::move(quiver);
  pair.relations = std::move(relations);
  return pair;
}

namespace {

/* Detects an infinite family of nonzero paths: a cycle all of whose steps
   avoid the relations. */
bool has_nonzero_cycle(const GentlePair& pair) {
  int na = pair.n_arrows();
  // Edge a -> b when b can follow a nonzero.
  std::vector<std::vector<int>> next((size_t)na);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b)
      if (pair.arrow(a).tgt == pair.arrow(b).src && !pair.has_relation(a, b))
        next[(size_t)a].push_back(b);
  std::vector<int> state((size_t)na, 0);  // 0 new, 1 open, 2 done
  std::vector<std::pair<int, size_t>> stack;
  for (int start = 0; start < na; ++start) {
    if (state[(size_t)start]) continue;
    stack.push_back({start, 0});
    state[(size_t)start] = 1;
    while (!stack.empty()) {
      auto& [a, k] = stack.back();
      if (k < next[(size_t)a].size()) {
        int b = next[(size_t)a][k++];
        if (state[(size_t)b] == 1) return true;
        if (state[(size_t)b] == 0) {
          state[(size_t)b] = 1;
          stack.push_back({b, 0});
        }
      } else {
        state[(size_t)a] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate_gentle(const GentlePair& pair) {
  ValidationReport rep;
  auto fail = [&rep](bool& flag, const std::string& msg) {
    flag = false;
    rep.problems.push_back(msg);
  };

  int nv = pair.n_vertices(), na = pair.n_arrows();
  if (nv == 0) fail(rep.structural_ok, "empty vertex set");
  for (auto [a, b] : pair.relations)
    if (pair.arrow(a).tgt != pair.arrow(b).src)
      fail(rep.structural_ok, "non-composable relation pair");
  if (!rep.structural_ok) return rep;

  const auto& arrows = pair.quiver.arrows;
  std::vector<int> out((size_t)nv, 0), in((size_t)nv, 0);
  for (const Arrow& a : arrows) {
    out[(size_t)a.src]++;
    in[(size_t)a.tgt]++;
  }
  for (int v = 0; v < nv; ++v) {
    if (out[(size_t)v] > 2)
      fail(rep.gentle_ok, "vertex '" + pair.quiver.vertices[(size_t)v] +
                              "' has more than two outgoing arrows");
    if (in[(size_t)v] > 2)
      fail(rep.gentle_ok, "vertex '" + pair.quiver.vertices[(size_t)v] +
                              "' has more than two incoming arrows");
  }
  for (int a = 0; a < na; ++a) {
    int rel_after = 0, nz_after = 0, rel_before = 0, nz_before = 0;
    for (int b = 0; b < na; ++b) {
      if (arrows[(size_t)a].tgt == arrows[(size_t)b].src)
        (pair.has_relation(a, b) ? rel_after : nz_after)++;
      if (arrows[(size_t)b].tgt == arrows[(size_t)a].src)
        (pair.has_relation(b, a) ? rel_before : nz_before)++;
    }
    const std::string& id = arrows[(size_t)a].id;
    if (rel_after > 1)
      fail(rep.gentle_ok, "arrow '" + id + "' starts more than one relation");
    if (nz_after > 1)
      fail(rep.gentle_ok,
           "arrow '" + id + "' has more than one nonzero continuation");
    if (rel_before > 1)
      fail(rep.gentle_ok, "arrow '" + id + "' ends more than one relation");
    if (nz_before > 1)
      fail(rep.gentle_ok,
           "arrow '" + id + "' has more than one nonzero predecessor");
  }
  if (has_nonzero_cycle(pair))
    fail(rep.finite_dimensional, "the pair carries a relation-free cycle");
  return rep;
}

void finalize(GentlePair& pair) {
  ValidationReport rep = validate_gentle(pair);
  if (!rep.ok()) {
    std::string msg = "not a finite-dimensional gentle pair";
    for (const auto& p : rep.problems) msg += "; " + p;
    throw CheckError(msg);
  }
  int nv = pair.n_vertices(), na = pair.n_arrows();
  pair.out_arrows.assign((size_t)nv, {});
  pair.in_arrows.assign((size_t)nv, {});
  for (int a = 0; a < na; ++a) {
    pair.out_arrows[(size_t)pair.arrow(a).src].push_back(a);
    pair.in_arrows[(size_t)pair.arrow(a).tgt].push_back(a);
  }
  pair.rel_next.assign((size_t)na, -1);
  pair.rel_prev.assign((size_t)na, -1);
  pair.nz_next.assign((size_t)na, -1);
  pair.nz_prev.assign((size_t)na, -1);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < na; ++b) {
      if (pair.arrow(a).tgt != pair.arrow(b).src) continue;
      if (pair.has_relation(a, b)) {
        pair.rel_next[(size_t)a] = b;
        pair.rel_prev[(size_t)b] = a;
      } else {
        pair.nz_next[(size_t)a] = b;
        pair.nz_prev[(size_t)b] = a;
      }
    }
}

int Path::target(const GentlePair& pair) const {
  return arrows.empty() ? source : pair.arrow(arrows.back()).tgt;
}

int Path::degree(const GentlePair& pair) const {
  int d = 0;
  for (int a : arrows) d += pair.arrow(a).degree;
  return d;
}

std::string Path::str(const GentlePair& pair) const {
  if (arrows.empty()) return "e_" + pair.quiver.vertices[(size_t)source];
  std::string s;
  for (int a : arrows) s += pair.arrow(a).id;
  return s;
}

Path trivial_path(int vertex) {
  Path p;
  p.source = vertex;
  return p;
}

Path arrow_path(const GentlePair& pair, int arrow) {
  Path p;
  p.source = pair.arrow(arrow).src;
  p.arrows = {arrow};
  return p;
}

bool path_is_nonzero(const GentlePair& pair, const Path& p) {
  if (p.source < 0 || p.source >= pair.n_vertices()) return false;
  int at = p.source;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    const Arrow& a = pair.arrow(p.arrows[i]);
    if (a.src != at) return false;
    if (i > 0 && pair.has_relation(p.arrows[i - 1], p.arrows[i])) return false;
    at = a.tgt;
  }
  return true;
}

std::optional<Path> compose_paths(const GentlePair& pair, const Path& p,
                                  const Path& q) {
  if (!path_is_nonzero(pair, p) || !path_is_nonzero(pair, q))
    throw CheckError("compose_paths: operand is not a nonzero path");
  if (p.target(pair) != q.source)
    throw CheckError("compose_paths: endpoints do not match");
  Path r = p;
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  if (!path_is_nonzero(pair, r)) return std::nullopt;
  return r;
}

std::vector<Path> nonzero_paths(const GentlePair& pair) {
  ValidationReport rep = validate_gentle(pair);
  if (!rep.finite_dimensional)
    throw CheckError("nonzero_paths: the pair is not finite dimensional");
  std::vector<Path> out;
  for (int v = 0; v < pair.n_vertices(); ++v) out.push_back(trivial_path(v));
  size_t cap = 4u * (size_t)(pair.n_arrows() + 1) * (size_t)(pair.n_arrows() + 1) + 64;
  std::vector<Path> frontier;
  for (int a = 0; a < pair.n_arrows(); ++a)
    frontier.push_back(arrow_path(pair, a));
  while (!frontier.empty()) {
    out.insert(out.end(), frontier.begin(), frontier.end());
    if (out.size() > cap)
      throw CheckError("nonzero_paths: path count exceeds the finite bound");
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int b = 0; b < pair.n_arrows(); ++b) {
        if (pair.arrow(b).src != p.target(pair)) continue;
        if (pair.has_relation(p.arrows.back(), b)) continue;
        Path q = p;
        q.arrows.push_back(b);
        next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.length() != b.length()) return a.length() < b.length();
    return a.arrows < b.arrows;
  });
  return out;
}

std::vector<Path> maximal_relation_paths(const GentlePair& pair, int vertex) {
  if (pair.rel_next.empty())
    throw CheckError("maximal_relation_paths: pair is not finalized");
  std::vector<Path> out;
  for (int a : pair.out_arrows[(size_t)vertex]) {
    Path p = arrow_path(pair, a);
    int cur = a;
    std::set<int> seen{a};
    while (pair.rel_next[(size_t)cur] >= 0) {
      cur = pair.rel_next[(size_t)cur];
      if (seen.count(cur))
        throw CheckError("maximal_relation_paths: relation cycle");
      seen.insert(cur);
      p.arrows.push_back(cur);
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GentlePair quadratic_dual(const GentlePair& pair) {
  auto dual_id = [](const std::string& id) {
    if (!id.empty() && id.back() == '*') return id.substr(0, id.size() - 1);
    return id + "*";
  };
  GradedQuiver q;
  q.vertices = pair.quiver.vertices;
  std::vector<std::pair<std::string, int>> named;  // (dual id, original index)
  for (int a = 0; a < pair.n_arrows(); ++a)
    named.push_back({dual_id(pair.arrow(a).id), a});
  std::sort(named.begin(), named.end());
  for (size_t i = 1; i < named.size(); ++i)
    if (named[i - 1].first == named[i].first)
      throw InputError("dual arrow ids collide; rename arrows");
  std::vector<int> dual_of((size_t)pair.n_arrows(), -1);
  for (size_t k = 0; k < named.size(); ++k) {
    const Arrow& a = pair.arrow(named[k].second);
    Arrow d;
    d.id = named[k].first;
    d.src = a.tgt;
    d.tgt = a.src;
    d.degree = 1 - a.degree;
    q.arrows.push_back(std::move(d));
    dual_of[(size_t)named[k].second] = (int)k;
  }
  std::vector<std::pair<int, int>> rels;
  for (int a = 0; a < pair.n_arrows(); ++a)
    for (int b = 0; b < pair.n_arrows(); ++b) {
      if (pair.arrow(a).tgt != pair.arrow(b).src) continue;
      if (pair.has_relation(a, b)) continue;
      rels.push_back({dual_of[(size_t)b], dual_of[(size_t)a]});
    }
  GentlePair dual = make_gentle_pair(std::move(q), std::move(rels));
  finalize(dual);
  return dual;
}

bool same_presentation(const GentlePair& a, const GentlePair& b) {
  if (a.quiver.vertices != b.quiver.vertices) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  for (size_t i = 0; i < a.quiver.arrows.size(); ++i) {
    const Arrow &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.id != y.id || x.src != y.src || x.tgt != y.tgt || x.degree != y.degree)
      return false;
  }
  return a.relations == b.relations;
}

std::pair<int, int> FanSystem::other_occ(int v, std::pair<int, int> at) const {
  const auto& o = occ[(size_t)v];
  if (o[0] == at) return o[1];
  if (o[1] == at) return o[0];
  throw CheckError("other_occ: slot is not an occurrence of the vertex");
}

Path FanSystem::run(const GentlePair& pair, int f, int lo, int hi) const {
  if (lo >= hi || lo < 0 || hi >= fan_size(f))
    throw CheckError("fan run: bad positions");
  Path p;
  p.source = fans[(size_t)f].ends[(size_t)lo];
  for (int c = lo; c < hi; ++c)
    p.arrows.push_back(fans[(size_t)f].arrows[(size_t)c]);
  if (!path_is_nonzero(pair, p)) throw CheckError("fan run: zero path");
  return p;
}

FanSystem fan_system(const GentlePair& pair) {
  if (pair.nz_next.empty())
    throw CheckError("fan_system: pair is not finalized");
  FanSystem sys;
  int na = pair.n_arrows(), nv = pair.n_vertices();

  // Chains under unique nonzero composability.
  std::vector<Fan> chains;
  for (int a = 0; a < na; ++a) {
    if (pair.nz_prev[(size_t)a] >= 0) continue;  // not a chain start
    Fan f;
    f.ends.push_back(pair.arrow(a).src);
    int cur = a;
    while (true) {
      f.arrows.push_back(cur);
      f.ends.push_back(pair.arrow(cur).tgt);
      if (pair.nz_next[(size_t)cur] < 0) break;
      cur = pair.nz_next[(size_t)cur];
    }
    chains.push_back(std::move(f));
  }
  std::sort(chains.begin(), chains.end(), [&](const Fan& x, const Fan& y) {
    return pair.arrow(x.arrows[0]).id < pair.arrow(y.arrows[0]).id;
  });

  // Pad with singleton fans so every vertex occurs exactly twice.
  std::vector<int> occurrences((size_t)nv, 0);
  for (const Fan& f : chains)
    for (int v : f.ends) occurrences[(size_t)v]++;
  std::vector<Fan> singles;
  for (int v = 0; v < nv; ++v) {
    if (occurrences[(size_t)v] > 2)
      throw CheckError("fan_system: vertex '" + pair.quiver.vertices[(size_t)v] +
                       "' occurs more than twice");
    for (int k = occurrences[(size_t)v]; k < 2; ++k) {
      Fan f;
      f.ends.push_back(v);
      singles.push_back(std::move(f));
    }
  }
  sys.fans = std::move(chains);
  sys.fans.insert(sys.fans.end(), singles.begin(), singles.end());

  // Occurrence slots in fan order, then arrow positions.
  std::array<std::pair<int, int>, 2> unset{std::make_pair(-1, -1),
                                           std::make_pair(-1, -1)};
  sys.occ.assign((size_t)nv, unset);
  std::vector<int> filled((size_t)nv, 0);
  for (int fi = 0; fi < (int)sys.fans.size(); ++fi) {
    const Fan& f = sys.fans[(size_t)fi];
    for (int pos = 0; pos < (int)f.ends.size(); ++pos) {
      int v = f.ends[(size_t)pos];
      int& k = filled[(size_t)v];
      if (k >= 2) throw CheckError("fan_system: occurrence overflow");
      sys.occ[(size_t)v][(size_t)k] = {fi, pos};
      ++k;
    }
  }
  for (int v = 0; v < nv; ++v)
    if (filled[(size_t)v] != 2)
      throw CheckError("fan_system: vertex '" + pair.quiver.vertices[(size_t)v] +
                       "' does not occur exactly twice");
  sys.arrow_pos.assign((size_t)na, {-1, -1});
  for (int fi = 0; fi < (int)sys.fans.size(); ++fi) {
    const Fan& f = sys.fans[(size_t)fi];
    for (int c = 0; c < (int)f.arrows.size(); ++c)
      sys.arrow_pos[(size_t)f.arrows[(size_t)c]] = {fi, c};
  }
  return sys;
}

}  // namespace ggk
