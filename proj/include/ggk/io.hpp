#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ggk/dissection.hpp"
#include "ggk/gentle.hpp"
#include "ggk/koszul.hpp"
#include "ggk/strings.hpp"

namespace ggk {

using ojson = nlohmann::ordered_json;

/* Parses JSON text; failures become InputError carrying nlohmann's
   line/column diagnostics, prefixed with `what`. */
ojson parse_json_text(const std::string& text, const std::string& what);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/* read_text_file + parse_json_text. */
ojson load_json_file(const std::string& path);

/* ---- algebra files ----
   {"vertices":[...], "arrows":[{"id","from","to","degree"},...],
    "relations":[["a4","a6"],...]}; unknown keys rejected.  The result is not
   finalized: callers run validate_gentle first. */
GentlePair algebra_from_json(const ojson& j);

ojson algebra_to_json(const GentlePair& pair);

/* Canonical text form (2-space indent, trailing newline); parsing it and
   serializing again reproduces the bytes exactly. */
std::string algebra_to_text(const GentlePair& pair);

/* ---- dissection files ----
   {"arcs":[...], "polygons":[{"sides":[{"arc":"g1","end":0},{"marked":true},
    ...], "angle_degrees":[0,0], "angle_ids":["a8",...]?}]}; "angle_ids" is
   optional (omitted ids are auto-generated); unknown keys rejected. */
Dissection dissection_from_json(const ojson& j);

ojson dissection_to_json(const Dissection& d);

/* ---- arc files ----
   {"over":"primal"|"dual", "vertices":["g5",...], "shifts":[2,...],
    "letters":[{"dir":"R","path":["a6"]},...]}.  Names are resolved over
   `primal` or `dual` according to the tag.  Shape and name resolution only;
   callers run validate_string for the string axioms. */
struct ArcFile {
  bool over_dual = false;
  GradedString str;
};

ArcFile arc_from_json(const ojson& j, const GentlePair& primal,
                      const GentlePair& dual);

ojson arc_to_json(const GentlePair& pair, const GradedString& s,
                  bool over_dual);
std::string arc_to_text(const GentlePair& pair, const GradedString& s,
                        bool over_dual);

/* ---- thread files ----
   {"over":"primal"|"dual", "strings":[{"vertices","shifts","letters"},...],
    "records":[{"end_first":0,"end_second":1},...]}.  A record names the ends
   at which consecutive strings meet; the full intersection data is recovered
   from the geometry when the thread is assembled. */
struct ThreadFileData {
  bool over_dual = false;
  std::vector<GradedString> strings;
  std::vector<std::pair<int, int>> ends;  // (end_first, end_second) per joint
};

ThreadFileData thread_from_json(const ojson& j, const GentlePair& primal,
                                const GentlePair& dual);

/* Recomputes the record at each named end pair; a joint with no intersection
   there is an InputError. */
ThreadSpec assemble_thread(const GentlePair& pair, const ThreadFileData& t);

ojson thread_to_json(const GentlePair& pair, const ThreadSpec& spec,
                     bool over_dual);

/* ---- graded dimension tables ----
   {"rho": dim} with keys in increasing numeric order. */
ojson table_to_json(const std::map<int, int>& table);
std::string table_to_text(const std::map<int, int>& table);

}  // namespace ggk
