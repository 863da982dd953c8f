#include "ggk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ggk/intersect.hpp"

namespace ggk {

namespace {

std::string ctx_of(const std::string& what) { return what.empty() ? "input" : what; }

void reject_unknown(const ojson& j, const std::string& ctx,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw InputError(ctx + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) { known = true; break; }
    if (!known)
      throw InputError(ctx + ": unknown key '" + it.key() + "'");
  }
}

const ojson& need(const ojson& j, const char* key, const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end())
    throw InputError(ctx + ": missing key '" + key + "'");
  return *it;
}

std::string need_string(const ojson& j, const char* key, const std::string& ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_string())
    throw InputError(ctx + ": key '" + key + "' must be a string");
  return v.get<std::string>();
}

int need_int(const ojson& j, const char* key, const std::string& ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_number_integer())
    throw InputError(ctx + ": key '" + key + "' must be an integer");
  return v.get<int>();
}

const ojson& need_array(const ojson& j, const char* key, const std::string& ctx) {
  const ojson& v = need(j, key, ctx);
  if (!v.is_array())
    throw InputError(ctx + ": key '" + key + "' must be an array");
  return v;
}

std::vector<std::string> string_list(const ojson& arr, const std::string& ctx) {
  std::vector<std::string> out;
  for (const ojson& v : arr) {
    if (!v.is_string())
      throw InputError(ctx + ": expected an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<int> int_list(const ojson& arr, const std::string& ctx) {
  std::vector<int> out;
  for (const ojson& v : arr) {
    if (!v.is_number_integer())
      throw InputError(ctx + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

/* Shared shape of the string part of arc and thread files. */
GradedString string_from_json(const ojson& j, const GentlePair& pair,
                              const std::string& ctx) {
  GradedString s;
  std::vector<std::string> names =
      string_list(need_array(j, "vertices", ctx), ctx + ".vertices");
  if (names.empty())
    throw InputError(ctx + ": a string needs at least one vertex");
  for (const std::string& n : names) s.vertices.push_back(pair.quiver.vertex_index(n));
  s.shifts = int_list(need_array(j, "shifts", ctx), ctx + ".shifts");
  if (s.shifts.size() != s.vertices.size())
    throw InputError(ctx + ": 'shifts' must match 'vertices' in length");
  const ojson& letters = need_array(j, "letters", ctx);
  if (letters.size() + 1 != s.vertices.size())
    throw InputError(ctx + ": expected " +
                     std::to_string(s.vertices.size() - 1) + " letters, got " +
                     std::to_string(letters.size()));
  for (size_t i = 0; i < letters.size(); ++i) {
    std::string lctx = ctx + ".letters[" + std::to_string(i) + "]";
    reject_unknown(letters[i], lctx, {"dir", "path"});
    std::string dir = need_string(letters[i], "dir", lctx);
    Letter l;
    if (dir == "L")
      l.dir = Dir::L;
    else if (dir == "R")
      l.dir = Dir::R;
    else
      throw InputError(lctx + ": 'dir' must be \"L\" or \"R\"");
    std::vector<std::string> ids =
        string_list(need_array(letters[i], "path", lctx), lctx + ".path");
    if (ids.empty())
      throw InputError(lctx + ": 'path' must be a nonempty arrow list");
    l.path.source =
        l.dir == Dir::L ? s.vertices[i] : s.vertices[i + 1];
    for (const std::string& id : ids) l.path.arrows.push_back(pair.quiver.arrow_index(id));
    s.letters.push_back(std::move(l));
  }
  return s;
}

ojson string_to_json(const GentlePair& pair, const GradedString& s) {
  ojson j = ojson::object();
  ojson verts = ojson::array();
  for (int v : s.vertices) verts.push_back(pair.quiver.vertices[(size_t)v]);
  j["vertices"] = std::move(verts);
  j["shifts"] = s.shifts;
  ojson letters = ojson::array();
  for (const Letter& l : s.letters) {
    ojson lj = ojson::object();
    lj["dir"] = l.dir == Dir::L ? "L" : "R";
    ojson path = ojson::array();
    for (int a : l.path.arrows) path.push_back(pair.quiver.arrows[(size_t)a].id);
    lj["path"] = std::move(path);
    letters.push_back(std::move(lj));
  }
  j["letters"] = std::move(letters);
  return j;
}

bool over_dual_tag(const ojson& j, const std::string& ctx) {
  std::string over = need_string(j, "over", ctx);
  if (over == "primal") return false;
  if (over == "dual") return true;
  throw InputError(ctx + ": 'over' must be \"primal\" or \"dual\"");
}

}  // namespace

ojson parse_json_text(const std::string& text, const std::string& what) {
  try {
    return ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(ctx_of(what) + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof())
    throw InputError(path + ": read failure");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InputError(path + ": cannot open file for writing");
  out << text;
  if (!out.good())
    throw InputError(path + ": write failure");
}

ojson load_json_file(const std::string& path) {
  return parse_json_text(read_text_file(path), path);
}

/* ---- algebra files ---- */

GentlePair algebra_from_json(const ojson& j) {
  std::string ctx = "algebra";
  reject_unknown(j, ctx, {"vertices", "arrows", "relations"});
  GradedQuiver q;
  q.vertices = string_list(need_array(j, "vertices", ctx), ctx + ".vertices");
  std::sort(q.vertices.begin(), q.vertices.end());
  std::map<std::string, int> vidx;
  for (size_t i = 0; i < q.vertices.size(); ++i)
    vidx[q.vertices[i]] = (int)i;

  for (const ojson& aj : need_array(j, "arrows", ctx)) {
    std::string actx = ctx + ".arrows";
    reject_unknown(aj, actx, {"id", "from", "to", "degree"});
    Arrow a;
    a.id = need_string(aj, "id", actx);
    std::string from = need_string(aj, "from", actx);
    std::string to = need_string(aj, "to", actx);
    a.degree = need_int(aj, "degree", actx);
    auto fi = vidx.find(from), ti = vidx.find(to);
    if (fi == vidx.end())
      throw InputError(actx + ": arrow '" + a.id + "' has unknown source '" +
                       from + "'");
    if (ti == vidx.end())
      throw InputError(actx + ": arrow '" + a.id + "' has unknown target '" +
                       to + "'");
    a.src = fi->second;
    a.tgt = ti->second;
    q.arrows.push_back(std::move(a));
  }
  std::sort(q.arrows.begin(), q.arrows.end(),
            [](const Arrow& x, const Arrow& y) { return x.id < y.id; });
  std::map<std::string, int> aidx;
  for (size_t i = 0; i < q.arrows.size(); ++i)
    aidx[q.arrows[i].id] = (int)i;

  std::vector<std::pair<int, int>> rels;
  for (const ojson& rj : need_array(j, "relations", ctx)) {
    std::string rctx = ctx + ".relations";
    if (!rj.is_array() || rj.size() != 2 || !rj[0].is_string() ||
        !rj[1].is_string())
      throw InputError(rctx + ": each relation must be a pair of arrow ids");
    auto ai = aidx.find(rj[0].get<std::string>());
    auto bi = aidx.find(rj[1].get<std::string>());
    if (ai == aidx.end())
      throw InputError(rctx + ": unknown arrow '" + rj[0].get<std::string>() +
                       "'");
    if (bi == aidx.end())
      throw InputError(rctx + ": unknown arrow '" + rj[1].get<std::string>() +
                       "'");
    rels.push_back({ai->second, bi->second});
  }
  return make_gentle_pair(std::move(q), std::move(rels));
}

ojson algebra_to_json(const GentlePair& pair) {
  ojson j = ojson::object();
  j["vertices"] = pair.quiver.vertices;
  ojson arrows = ojson::array();
  for (const Arrow& a : pair.quiver.arrows) {
    ojson aj = ojson::object();
    aj["id"] = a.id;
    aj["from"] = pair.quiver.vertices[(size_t)a.src];
    aj["to"] = pair.quiver.vertices[(size_t)a.tgt];
    aj["degree"] = a.degree;
    arrows.push_back(std::move(aj));
  }
  j["arrows"] = std::move(arrows);
  ojson rels = ojson::array();
  for (auto [a, b] : pair.relations) {
    ojson rj = ojson::array();
    rj.push_back(pair.quiver.arrows[(size_t)a].id);
    rj.push_back(pair.quiver.arrows[(size_t)b].id);
    rels.push_back(std::move(rj));
  }
  j["relations"] = std::move(rels);
  return j;
}

std::string algebra_to_text(const GentlePair& pair) {
  return algebra_to_json(pair).dump(2) + "\n";
}

/* ---- dissection files ---- */

Dissection dissection_from_json(const ojson& j) {
  std::string ctx = "dissection";
  reject_unknown(j, ctx, {"arcs", "polygons"});
  Dissection d;
  d.arcs = string_list(need_array(j, "arcs", ctx), ctx + ".arcs");
  const ojson& polys = need_array(j, "polygons", ctx);
  for (size_t pi = 0; pi < polys.size(); ++pi) {
    std::string pctx = ctx + ".polygons[" + std::to_string(pi) + "]";
    reject_unknown(polys[pi], pctx, {"sides", "angle_degrees", "angle_ids"});
    DissectionPolygon poly;
    for (const ojson& sj : need_array(polys[pi], "sides", pctx)) {
      std::string sctx = pctx + ".sides";
      DissectionSide side;
      if (sj.is_object() && sj.contains("marked")) {
        reject_unknown(sj, sctx, {"marked"});
        if (!sj.at("marked").is_boolean() || !sj.at("marked").get<bool>())
          throw InputError(sctx + ": 'marked' must be true");
        side.marked = true;
      } else {
        reject_unknown(sj, sctx, {"arc", "end"});
        side.arc = need_string(sj, "arc", sctx);
        side.end = need_int(sj, "end", sctx);
        if (side.end != 0 && side.end != 1)
          throw InputError(sctx + ": 'end' must be 0 or 1");
      }
      poly.sides.push_back(std::move(side));
    }
    std::vector<int> degrees =
        int_list(need_array(polys[pi], "angle_degrees", pctx),
                 pctx + ".angle_degrees");
    std::vector<std::string> ids;
    if (polys[pi].contains("angle_ids")) {
      ids = string_list(polys[pi].at("angle_ids"), pctx + ".angle_ids");
      if (ids.size() != degrees.size())
        throw InputError(pctx +
                         ": 'angle_ids' must match 'angle_degrees' in length");
    }
    for (size_t k = 0; k < degrees.size(); ++k) {
      AngleSpec spec;
      spec.degree = degrees[k];
      if (!ids.empty()) spec.id = ids[k];
      poly.angles.push_back(std::move(spec));
    }
    d.polygons.push_back(std::move(poly));
  }
  return d;
}

ojson dissection_to_json(const Dissection& d) {
  ojson j = ojson::object();
  j["arcs"] = d.arcs;
  ojson polys = ojson::array();
  for (const DissectionPolygon& poly : d.polygons) {
    ojson pj = ojson::object();
    ojson sides = ojson::array();
    for (const DissectionSide& s : poly.sides) {
      ojson sj = ojson::object();
      if (s.marked) {
        sj["marked"] = true;
      } else {
        sj["arc"] = s.arc;
        sj["end"] = s.end;
      }
      sides.push_back(std::move(sj));
    }
    pj["sides"] = std::move(sides);
    ojson degrees = ojson::array();
    bool any_id = false;
    for (const AngleSpec& a : poly.angles) {
      degrees.push_back(a.degree);
      if (!a.id.empty()) any_id = true;
    }
    pj["angle_degrees"] = std::move(degrees);
    if (any_id) {
      ojson ids = ojson::array();
      for (const AngleSpec& a : poly.angles) ids.push_back(a.id);
      pj["angle_ids"] = std::move(ids);
    }
    polys.push_back(std::move(pj));
  }
  j["polygons"] = std::move(polys);
  return j;
}

/* ---- arc files ---- */

ArcFile arc_from_json(const ojson& j, const GentlePair& primal,
                      const GentlePair& dual) {
  std::string ctx = "arc";
  reject_unknown(j, ctx, {"over", "vertices", "shifts", "letters"});
  ArcFile f;
  f.over_dual = over_dual_tag(j, ctx);
  f.str = string_from_json(j, f.over_dual ? dual : primal, ctx);
  return f;
}

ojson arc_to_json(const GentlePair& pair, const GradedString& s,
                  bool over_dual) {
  ojson j = ojson::object();
  j["over"] = over_dual ? "dual" : "primal";
  ojson body = string_to_json(pair, s);
  for (auto it = body.begin(); it != body.end(); ++it)
    j[it.key()] = std::move(it.value());
  return j;
}

std::string arc_to_text(const GentlePair& pair, const GradedString& s,
                        bool over_dual) {
  return arc_to_json(pair, s, over_dual).dump(2) + "\n";
}

/* ---- thread files ---- */

ThreadFileData thread_from_json(const ojson& j, const GentlePair& primal,
                                const GentlePair& dual) {
  std::string ctx = "thread";
  reject_unknown(j, ctx, {"over", "strings", "records"});
  ThreadFileData t;
  t.over_dual = over_dual_tag(j, ctx);
  const GentlePair& pair = t.over_dual ? dual : primal;
  const ojson& strings = need_array(j, "strings", ctx);
  for (size_t i = 0; i < strings.size(); ++i) {
    std::string sctx = ctx + ".strings[" + std::to_string(i) + "]";
    reject_unknown(strings[i], sctx, {"vertices", "shifts", "letters"});
    t.strings.push_back(string_from_json(strings[i], pair, sctx));
  }
  const ojson& records = need_array(j, "records", ctx);
  for (size_t i = 0; i < records.size(); ++i) {
    std::string rctx = ctx + ".records[" + std::to_string(i) + "]";
    reject_unknown(records[i], rctx, {"end_first", "end_second"});
    int ef = need_int(records[i], "end_first", rctx);
    int es = need_int(records[i], "end_second", rctx);
    if ((ef != 0 && ef != 1) || (es != 0 && es != 1))
      throw InputError(rctx + ": ends must be 0 or 1");
    t.ends.push_back({ef, es});
  }
  if (t.strings.empty())
    throw InputError(ctx + ": needs at least one string");
  if (t.ends.size() + 1 != t.strings.size())
    throw InputError(ctx + ": expected " +
                     std::to_string(t.strings.size() - 1) + " records, got " +
                     std::to_string(t.ends.size()));
  return t;
}

ThreadSpec assemble_thread(const GentlePair& pair, const ThreadFileData& t) {
  for (const GradedString& s : t.strings) validate_string(pair, s);
  FanSystem sys = fan_system(pair);
  ThreadSpec spec;
  spec.strings = t.strings;
  for (size_t i = 0; i < t.ends.size(); ++i) {
    auto rec = record_at_end_pair(pair, sys, t.strings[i], t.ends[i].first,
                                  t.strings[i + 1], t.ends[i].second);
    if (!rec)
      throw InputError("thread.records[" + std::to_string(i) +
                       "]: the named ends do not meet at a marked point");
    spec.records.push_back(*rec);
  }
  return spec;
}

ojson thread_to_json(const GentlePair& pair, const ThreadSpec& spec,
                     bool over_dual) {
  ojson j = ojson::object();
  j["over"] = over_dual ? "dual" : "primal";
  ojson strings = ojson::array();
  for (const GradedString& s : spec.strings)
    strings.push_back(string_to_json(pair, s));
  j["strings"] = std::move(strings);
  ojson records = ojson::array();
  for (const IntersectionRecord& r : spec.records) {
    ojson rj = ojson::object();
    rj["end_first"] = r.end_first;
    rj["end_second"] = r.end_second;
    records.push_back(std::move(rj));
  }
  j["records"] = std::move(records);
  return j;
}

/* ---- graded dimension tables ---- */

ojson table_to_json(const std::map<int, int>& table) {
  ojson j = ojson::object();
  for (auto [rho, dim] : table) j[std::to_string(rho)] = dim;
  return j;
}

std::string table_to_text(const std::map<int, int>& table) {
  if (table.empty()) return "(zero)\n";
  std::string out;
  for (auto [rho, dim] : table)
    out += "degree " + std::to_string(rho) + ": " + std::to_string(dim) + "\n";
  return out;
}

}  // namespace ggk
