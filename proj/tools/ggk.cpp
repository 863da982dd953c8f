#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ggk/fixtures.hpp"
#include "ggk/homalg.hpp"
#include "ggk/intersect.hpp"
#include "ggk/io.hpp"
#include "ggk/koszul.hpp"
#include "ggk/verify.hpp"

namespace {

using namespace ggk;

/* Loads and finalizes an algebra file, or the built-in example pair when no
   path is given. */
GentlePair load_pair(const std::string& path) {
  if (path.empty()) return fixture_pair();
  GentlePair pair = algebra_from_json(load_json_file(path));
  ValidationReport rep = validate_gentle(pair);
  if (!rep.ok()) {
    std::string msg = path + ": not a gentle presentation";
    for (const std::string& p : rep.problems) msg += "; " + p;
    throw InputError(msg);
  }
  finalize(pair);
  return pair;
}

struct ArcInput {
  bool over_dual = false;
  GradedString str;
};

ArcInput load_arc(const std::string& path, const GentlePair& primal,
                  const GentlePair& dual) {
  ArcFile f = arc_from_json(load_json_file(path), primal, dual);
  validate_string(f.over_dual ? dual : primal, f.str);
  return {f.over_dual, f.str};
}

std::string path_text(const GentlePair& pair, const Path& p) {
  if (p.arrows.empty()) return "e_" + pair.quiver.vertices[(size_t)p.source];
  std::string out;
  for (int a : p.arrows) out += pair.arrow(a).id;
  return out;
}

std::string comb_text(const GentlePair& pair, const PathComb& comb) {
  std::string out;
  for (const PathTerm& t : comb) {
    if (!out.empty()) out += " + ";
    if (!(t.coeff == Rational(1))) out += t.coeff.str() + "*";
    out += path_text(pair, t.path);
  }
  return out.empty() ? "0" : out;
}

ojson module_to_json(const GentlePair& pair, const DgModule& m) {
  ojson j = ojson::object();
  ojson gens = ojson::array();
  for (const Generator& g : m.gens) {
    ojson gj = ojson::object();
    gj["vertex"] = pair.quiver.vertices[(size_t)g.vertex];
    gj["shift"] = g.shift;
    if (g.simple) gj["simple"] = true;
    gens.push_back(std::move(gj));
  }
  j["generators"] = std::move(gens);
  ojson diff = ojson::array();
  for (const auto& [uv, comb] : m.diff) {
    ojson e = ojson::object();
    e["from"] = uv.first;
    e["to"] = uv.second;
    ojson terms = ojson::array();
    for (const PathTerm& t : comb) {
      ojson tj = ojson::object();
      tj["coeff"] = t.coeff.str();
      ojson arrows = ojson::array();
      for (int a : t.path.arrows) arrows.push_back(pair.arrow(a).id);
      tj["path"] = std::move(arrows);
      terms.push_back(std::move(tj));
    }
    e["terms"] = std::move(terms);
    diff.push_back(std::move(e));
  }
  j["differential"] = std::move(diff);
  return j;
}

std::string module_to_text(const GentlePair& pair, const DgModule& m) {
  std::string out = "generators:\n";
  for (int i = 0; i < m.size(); ++i) {
    const Generator& g = m.gens[(size_t)i];
    out += "  " + std::to_string(i) + ": " + (g.simple ? "S[" : "P[") +
           pair.quiver.vertices[(size_t)g.vertex] + "] shift " +
           std::to_string(g.shift) + "\n";
  }
  out += "differential:\n";
  if (m.diff.empty()) out += "  (zero)\n";
  for (const auto& [uv, comb] : m.diff)
    out += "  (" + std::to_string(uv.first) + " -> " +
           std::to_string(uv.second) + ") " + comb_text(pair, comb) + "\n";
  return out;
}

int cmd_validate(const std::string& path, const std::string& algebra_path) {
  ojson j = load_json_file(path);
  if (!j.is_object()) throw InputError(path + ": expected a JSON object");
  if (j.contains("arrows")) {
    GentlePair pair = algebra_from_json(j);
    ValidationReport rep = validate_gentle(pair);
    if (!rep.ok()) {
      for (const std::string& p : rep.problems) std::cout << p << "\n";
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  }
  if (j.contains("polygons")) {
    Dissection d = dissection_from_json(j);
    try {
      validate_dissection(d);
    } catch (const InputError& e) {
      std::cout << e.what() << "\n";
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  }
  if (j.contains("over")) {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcFile f = arc_from_json(j, pair, dual);
    auto problem = string_problem(f.over_dual ? dual : pair, f.str);
    if (problem) {
      std::cout << *problem << "\n";
      return 1;
    }
    std::cout << "ok\n";
    return 0;
  }
  throw InputError(path + ": unrecognized file kind (expected an algebra, "
                          "arc, or dissection)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded gentle algebras from surface dissections"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file_a, file_b, algebra_path, vertex_name;
  std::string suite = "all", field = "q";
  std::uint64_t seed = 0;
  bool as_json = false;

  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--algebra", algebra_path,
                    "algebra file (defaults to the built-in example)");
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check an algebra, arc, or dissection file");
  validate->add_option("file", file_a)->required();
  add_algebra(validate);
  validate->callback([&] { exit_code = cmd_validate(file_a, algebra_path); });

  CLI::App* fromdis = app.add_subcommand(
      "from-dissection", "build the gentle pair of a dissected surface");
  fromdis->add_option("file", file_a)->required();
  fromdis->callback([&] {
    Dissection d = dissection_from_json(load_json_file(file_a));
    validate_dissection(d);
    std::cout << algebra_to_text(algebra_from_dissection(d));
  });

  CLI::App* dualc =
      app.add_subcommand("dual", "quadratic dual of an algebra file");
  dualc->add_option("file", file_a)->required();
  dualc->callback([&] {
    std::cout << algebra_to_text(quadratic_dual(load_pair(file_a)));
  });

  CLI::App* xmod =
      app.add_subcommand("xmod", "dg string module of an arc file");
  xmod->add_option("file", file_a)->required();
  add_algebra(xmod);
  xmod->add_flag("--json", as_json, "machine output");
  xmod->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcInput arc = load_arc(file_a, pair, dual);
    const GentlePair& owner = arc.over_dual ? dual : pair;
    DgModule m = build_x_module(owner, arc.str);
    if (as_json)
      std::cout << module_to_json(owner, m).dump(2) << "\n";
    else
      std::cout << module_to_text(owner, m);
  });

  CLI::App* hom = app.add_subcommand(
      "hom", "morphism cohomology table between two arcs");
  hom->add_option("from", file_a)->required();
  hom->add_option("to", file_b)->required();
  add_algebra(hom);
  hom->add_flag("--json", as_json, "machine output");
  hom->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcInput a = load_arc(file_a, pair, dual);
    ArcInput b = load_arc(file_b, pair, dual);
    if (a.over_dual != b.over_dual)
      throw InputError("arcs live over different algebras");
    const GentlePair& owner = a.over_dual ? dual : pair;
    auto table = hom_cohomology<Rational>(owner, build_x_module(owner, a.str),
                                          build_x_module(owner, b.str));
    std::cout << table_to_json(table).dump() << "\n";
  });

  CLI::App* intc = app.add_subcommand(
      "int", "graded intersection table between two arcs");
  intc->add_option("from", file_a)->required();
  intc->add_option("to", file_b)->required();
  add_algebra(intc);
  intc->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcInput a = load_arc(file_a, pair, dual);
    ArcInput b = load_arc(file_b, pair, dual);
    if (a.over_dual != b.over_dual)
      throw InputError("arcs live over different algebras");
    const GentlePair& owner = a.over_dual ? dual : pair;
    ojson j = ojson::object();
    j["from"] = file_a;
    j["to"] = file_b;
    j["table"] = table_to_json(int_table(owner, a.str, b.str));
    std::cout << j.dump() << "\n";
  });

  CLI::App* resolve = app.add_subcommand(
      "resolve-simple", "resolution string of the simple at a vertex");
  resolve->add_option("vertex", vertex_name)->required();
  add_algebra(resolve);
  resolve->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    int v = pair.quiver.vertex_index(vertex_name);
    std::cout << arc_to_text(pair, simple_resolution(pair, v), false);
  });

  CLI::App* rotate = app.add_subcommand(
      "rotate", "half rotation of an arc (to the other side of the duality)");
  rotate->add_option("file", file_a)->required();
  add_algebra(rotate);
  rotate->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcInput arc = load_arc(file_a, pair, dual);
    if (arc.over_dual)
      std::cout << arc_to_text(pair, half_rotate(pair, arc.str), false);
    else
      std::cout << arc_to_text(dual, half_rotate_open(pair, arc.str), true);
  });

  CLI::App* smoothc = app.add_subcommand(
      "smooth", "smoothing arc of a dg thread file");
  smoothc->add_option("file", file_a)->required();
  add_algebra(smoothc);
  smoothc->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ThreadFileData t = thread_from_json(load_json_file(file_a), pair, dual);
    const GentlePair& owner = t.over_dual ? dual : pair;
    ThreadSpec spec = assemble_thread(owner, t);
    validate_thread(owner, spec);
    std::cout << arc_to_text(owner, smooth_thread(owner, spec), t.over_dual);
  });

  CLI::App* kobj = app.add_subcommand(
      "koszul-obj", "underlying arc of the Koszul object of a closed arc");
  kobj->add_option("file", file_a)->required();
  add_algebra(kobj);
  kobj->callback([&] {
    GentlePair pair = load_pair(algebra_path);
    GentlePair dual = quadratic_dual(pair);
    ArcInput arc = load_arc(file_a, pair, dual);
    if (!arc.over_dual)
      throw InputError("koszul-obj expects an arc over the dual algebra");
    std::cout << arc_to_text(pair, half_rotate(pair, arc.str), false);
  });

  CLI::App* verify = app.add_subcommand(
      "verify", "run the batch verification suite");
  verify->add_option("--suite", suite, "all|int-dim|smoothing|koszul");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--field", field, "q (rationals) or p (prime field)");
  verify->add_flag("--json", as_json, "machine output");
  verify->callback([&] {
    VerifyReport r = run_verify(suite, seed, field);
    if (as_json)
      std::cout << report_to_json(r).dump(2) << "\n";
    else
      std::cout << report_to_text(r);
    exit_code = r.pass() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CheckError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
