#include "ggk/randomgen.hpp"

#include <algorithm>
#include <utility>

#include "ggk/strings.hpp"

namespace ggk {

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Dissection sample_dissection(Rng& rng, int max_arcs) {
  int npoly, total;
  std::vector<int> nsides;
  do {
    npoly = uniform(rng, 1, 4);
    nsides.assign((size_t)npoly, 0);
    total = 0;
    for (int& n : nsides) {
      n = uniform(rng, 1, 4);
      total += n;
    }
    if (total % 2 != 0) {
      nsides[(size_t)uniform(rng, 0, npoly - 1)] += 1;
      total += 1;
    }
  } while (total / 2 > max_arcs);

  Dissection d;
  for (int k = 0; k < total / 2; ++k)
    d.arcs.push_back("g" + std::to_string(k + 1));

  // Polygons with a marked stretch at a random position; remember the arc
  // side slots for the gluing below.
  std::vector<std::pair<int, int>> slots;  // (polygon, side position)
  for (int pi = 0; pi < npoly; ++pi) {
    DissectionPolygon poly;
    int token_at = uniform(rng, 0, nsides[(size_t)pi]);
    for (int s = 0; s <= nsides[(size_t)pi]; ++s) {
      DissectionSide side;
      side.marked = (s == token_at);
      if (!side.marked) slots.push_back({pi, s});
      poly.sides.push_back(std::move(side));
    }
    d.polygons.push_back(std::move(poly));
  }

  // Glue arc sides by a random perfect matching.
  std::shuffle(slots.begin(), slots.end(), rng);
  for (size_t k = 0; 2 * k + 1 < slots.size(); ++k) {
    int e = uniform(rng, 0, 1);
    auto [p0, s0] = slots[2 * k];
    auto [p1, s1] = slots[2 * k + 1];
    d.polygons[(size_t)p0].sides[(size_t)s0].arc = d.arcs[k];
    d.polygons[(size_t)p0].sides[(size_t)s0].end = e;
    d.polygons[(size_t)p1].sides[(size_t)s1].arc = d.arcs[k];
    d.polygons[(size_t)p1].sides[(size_t)s1].end = 1 - e;
  }

  // One angle per corner, random degree in [-3, 3].
  for (DissectionPolygon& poly : d.polygons) {
    int n = (int)poly.sides.size();
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      if (poly.sides[(size_t)i].marked || poly.sides[(size_t)j].marked)
        continue;
      AngleSpec a;
      a.degree = uniform(rng, -3, 3);
      poly.angles.push_back(std::move(a));
    }
  }
  return d;
}

}  // namespace

Dissection random_dissection(Rng& rng, int max_arcs) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    Dissection d = sample_dissection(rng, max_arcs);
    try {
      validate_dissection(d);
      GentlePair pair = algebra_from_dissection(d);
      (void)fan_system(pair);
    } catch (const std::exception&) {
      continue;  // degenerate gluing (folded corner, closed fan): resample
    }
    return d;
  }
  throw CheckError("random_dissection: no usable sample after 500 attempts");
}

GentlePair random_pair(Rng& rng, int max_arcs) {
  return algebra_from_dissection(random_dissection(rng, max_arcs));
}

GradedString random_string(const GentlePair& pair, Rng& rng, int max_letters) {
  GradedString s;
  s.vertices.push_back(uniform(rng, 0, pair.n_vertices() - 1));
  s.shifts.push_back(uniform(rng, -3, 3));
  int target = uniform(rng, 0, max_letters);
  while ((int)s.letters.size() < target) {
    int tail = s.vertices.back();
    const Letter* prev = s.letters.empty() ? nullptr : &s.letters.back();
    std::vector<Letter> cands;
    auto admissible = [&](const Letter& cur) {
      if (!prev) return true;
      int pf = prev->path.arrows.front(), pb = prev->path.arrows.back();
      int cf = cur.path.arrows.front(), cb = cur.path.arrows.back();
      if (prev->dir == Dir::L && cur.dir == Dir::L)
        return pair.has_relation(pb, cf);
      if (prev->dir == Dir::L && cur.dir == Dir::R) return pb != cb;
      if (prev->dir == Dir::R && cur.dir == Dir::R)
        return pair.has_relation(cb, pf);
      return pf != cf;  // R then L
    };
    for (int a : pair.out_arrows[(size_t)tail]) {
      Letter l{Dir::L, arrow_path(pair, a)};
      if (admissible(l)) cands.push_back(std::move(l));
    }
    for (int a : pair.in_arrows[(size_t)tail]) {
      Letter l{Dir::R, arrow_path(pair, a)};
      if (admissible(l)) cands.push_back(std::move(l));
    }
    if (cands.empty()) break;
    Letter pick = cands[(size_t)uniform(rng, 0, (int)cands.size() - 1)];
    int a = pick.path.arrows.front();
    int deg = pair.arrow(a).degree;
    if (pick.dir == Dir::L) {
      s.vertices.push_back(pair.arrow(a).tgt);
      s.shifts.push_back(s.shifts.back() - deg + 1);
    } else {
      s.vertices.push_back(pair.arrow(a).src);
      s.shifts.push_back(s.shifts.back() + deg - 1);
    }
    s.letters.push_back(std::move(pick));
  }
  validate_string(pair, s);
  return s;
}

}  // namespace ggk
