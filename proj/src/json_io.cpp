#include "grouplike/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "grouplike/errors.hpp"

namespace grouplike {

namespace {

// nlohmann throws its own exception hierarchy; funnel every access through
// these so callers only ever see ParseError.
[[noreturn]] void bad(const std::string& what) { fail("ParseError", what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field: ") + key);
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field is not an integer: ") + key);
  return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " is not a list");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(std::string(what) + " has a non-integer entry");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::string> label_list(const Json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) {
    if (!v.is_string()) bad(std::string(key) + " has a non-string entry");
    out.push_back(v.get<std::string>());
  }
  return out;
}

// Lists of triples [a, b, c] encode sparse tables deterministically.
std::vector<std::array<int, 3>> triple_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " is not a list");
  std::vector<std::array<int, 3>> out;
  for (const auto& v : j) {
    auto t = int_list(v, what);
    if (t.size() != 3) bad(std::string(what) + " entry is not a triple");
    out.push_back({t[0], t[1], t[2]});
  }
  return out;
}

Json sorted_triples(const std::unordered_map<uint64_t, int>& table) {
  std::vector<std::array<int, 3>> rows;
  for (const auto& [key, value] : table)
    rows.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu), value});
  std::sort(rows.begin(), rows.end());
  Json out = Json::array();
  for (const auto& row : rows) out.push_back({row[0], row[1], row[2]});
  return out;
}

} // namespace

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string()) bad("rational must be an integer or a \"p/q\" string");
  return parse_rat(j.get<std::string>());
}

Json angle_to_json(const Angle& a) {
  Json out;
  out["r0"] = rat_to_json(a.r0);
  out["rlam"] = rat_to_json(a.rlam);
  out["rpi"] = rat_to_json(a.rpi);
  if (a.ra1 != 0) out["ra1"] = rat_to_json(a.ra1);
  if (a.ra2 != 0) out["ra2"] = rat_to_json(a.ra2);
  return out;
}

Angle angle_from_json(const Json& j) {
  if (j.is_string()) return parse_angle(j.get<std::string>());
  Angle a;
  a.r0 = rat_from_json(field(j, "r0"));
  a.rlam = rat_from_json(field(j, "rlam"));
  a.rpi = rat_from_json(field(j, "rpi"));
  if (j.contains("ra1")) a.ra1 = rat_from_json(j.at("ra1"));
  if (j.contains("ra2")) a.ra2 = rat_from_json(j.at("ra2"));
  return a;
}

Json scalar_to_json(const Scalar& s) {
  Json terms = Json::array();
  for (const auto& [phase, coeff] : s.terms()) {
    Json t;
    t["re"] = rat_to_json(coeff.re);
    t["im"] = rat_to_json(coeff.im);
    t["angle"] = angle_to_json(phase.exp);
    terms.push_back(t);
  }
  return terms;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) bad("scalar must be a list of terms");
  Scalar s;
  for (const auto& t : j) {
    GaussRat c(rat_from_json(field(t, "re")), rat_from_json(field(t, "im")));
    s = s + Scalar::term(c, angle_from_json(field(t, "angle")));
  }
  return s;
}

Json group_to_json(const GroupSpec& g) {
  Json out;
  out["n"] = g.n;
  out["mul"] = g.mul;
  out["id"] = g.id;
  out["inv"] = g.inv;
  if (!g.labels.empty()) out["labels"] = g.labels;
  return out;
}

GroupSpec group_from_json(const Json& j) {
  GroupSpec g;
  g.n = int_field(j, "n");
  const Json& mul = field(j, "mul");
  if (!mul.is_array()) bad("mul is not a table");
  for (const auto& row : mul) g.mul.push_back(int_list(row, "mul row"));
  g.id = int_field(j, "id");
  g.inv = int_list(field(j, "inv"), "inv");
  g.labels = label_list(j, "labels");
  auto report = validate(g);
  if (!report.valid()) fail("InvalidGroup", report.summary());
  return g;
}

Json groupoid_to_json(const FiniteGroupoid& g) {
  Json out;
  out["objects"] = g.num_objects;
  Json arrows = Json::array();
  for (int a = 0; a < g.num_arrows(); ++a)
    arrows.push_back({{"id", a}, {"l", g.l[a]}, {"r", g.r[a]}});
  out["arrows"] = arrows;
  out["units"] = g.unit;
  out["inv"] = g.inv;
  out["comp"] = sorted_triples(g.comp);
  if (!g.object_labels.empty()) out["object_labels"] = g.object_labels;
  if (!g.arrow_labels.empty()) out["arrow_labels"] = g.arrow_labels;
  return out;
}

GroupoidPtr groupoid_from_json(const Json& j) {
  if (j.is_object() && j.contains("action")) {
    const Json& spec = j.at("action");
    GroupAction act;
    act.group = group_from_json(field(spec, "group"));
    act.carrier = int_field(spec, "carrier");
    for (const auto& row : field(spec, "act")) act.act.push_back(int_list(row, "act row"));
    act.point_labels = label_list(spec, "point_labels");
    return action_groupoid(act);
  }
  auto g = std::make_shared<FiniteGroupoid>();
  g->num_objects = int_field(j, "objects");
  const Json& arrows = field(j, "arrows");
  if (!arrows.is_array()) bad("arrows is not a list");
  g->l.resize(arrows.size());
  g->r.resize(arrows.size());
  for (const auto& a : arrows) {
    const int id = int_field(a, "id");
    if (id < 0 || id >= static_cast<int>(arrows.size())) bad("arrow ids must be dense");
    g->l[id] = int_field(a, "l");
    g->r[id] = int_field(a, "r");
  }
  g->unit = int_list(field(j, "units"), "units");
  g->inv = int_list(field(j, "inv"), "inv");
  for (const auto& t : triple_list(field(j, "comp"), "comp"))
    g->comp[pair_key(t[0], t[1])] = t[2];
  g->object_labels = label_list(j, "object_labels");
  g->arrow_labels = label_list(j, "arrow_labels");
  // Range checks before finalize(), which indexes fibers by these ids.
  const int na = g->num_arrows();
  for (int a = 0; a < na; ++a)
    if (g->l[a] < 0 || g->l[a] >= g->num_objects || g->r[a] < 0 || g->r[a] >= g->num_objects)
      bad("arrow feet out of range");
  if (static_cast<int>(g->unit.size()) != g->num_objects) bad("units has the wrong length");
  if (static_cast<int>(g->inv.size()) != na) bad("inv has the wrong length");
  for (int x : g->unit)
    if (x < 0 || x >= na) bad("unit arrow id out of range");
  for (int a : g->inv)
    if (a < 0 || a >= na) bad("inverse arrow id out of range");
  for (const auto& [key, value] : g->comp) {
    const int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
    if (a < 0 || a >= na || b < 0 || b >= na || value < 0 || value >= na)
      bad("comp entry out of range");
  }
  g->finalize();
  return g;
}

Json bibundle_to_json(const Bibundle& b) {
  Json out;
  out["left"] = groupoid_to_json(*b.left);
  out["right"] = groupoid_to_json(*b.right);
  out["carrier"] = b.carrier;
  out["lm"] = b.lm;
  out["rm"] = b.rm;
  out["act_l"] = sorted_triples(b.act_l);
  out["act_r"] = sorted_triples(b.act_r);
  if (!b.labels.empty()) out["labels"] = b.labels;
  return out;
}

Bibundle bibundle_from_json(const Json& j) {
  Bibundle b;
  b.left = groupoid_from_json(field(j, "left"));
  b.right = groupoid_from_json(field(j, "right"));
  b.carrier = int_field(j, "carrier");
  b.lm = int_list(field(j, "lm"), "lm");
  b.rm = int_list(field(j, "rm"), "rm");
  for (const auto& t : triple_list(field(j, "act_l"), "act_l"))
    b.act_l[pair_key(t[0], t[1])] = t[2];
  for (const auto& t : triple_list(field(j, "act_r"), "act_r"))
    b.act_r[pair_key(t[0], t[1])] = t[2];
  b.labels = label_list(j, "labels");
  return b;
}

Json symp_space_to_json(const SympSpace& s) {
  Json omega = Json::array();
  for (const auto& row : s.omega) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rat_to_json(v));
    omega.push_back(r);
  }
  return Json{{"dim", s.dim}, {"omega", omega}};
}

SympSpace symp_space_from_json(const Json& j) {
  SympSpace s;
  s.dim = int_field(j, "dim");
  for (const auto& row : field(j, "omega")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    s.omega.push_back(std::move(r));
  }
  auto report = validate(s);
  if (!report.valid()) fail("ShapeMismatch", report.summary());
  return s;
}

Json relation_to_json(const LinRelation& r) {
  Json basis = Json::array();
  for (const auto& row : r.basis) {
    Json br = Json::array();
    for (const auto& v : row) br.push_back(rat_to_json(v));
    basis.push_back(br);
  }
  return Json{{"src", symp_space_to_json(r.src)},
              {"dst", symp_space_to_json(r.dst)},
              {"basis", basis}};
}

LinRelation relation_from_json(const Json& j) {
  SympSpace src = symp_space_from_json(field(j, "src"));
  SympSpace dst = symp_space_from_json(field(j, "dst"));
  std::vector<std::vector<Rat>> basis;
  for (const auto& row : field(j, "basis")) {
    std::vector<Rat> r;
    for (const auto& v : row) r.push_back(rat_from_json(v));
    basis.push_back(std::move(r));
  }
  return make_relation(std::move(src), std::move(dst), std::move(basis));
}

Json module_class_to_json(const ModuleClass& c) {
  return Json{{"p", c.p}, {"q", c.q}, {"alpha", angle_str(c.alpha)}};
}

ModuleClass module_class_from_json(const Json& j) {
  ModuleClass c;
  c.p = int_field(j, "p");
  c.q = int_field(j, "q");
  c.alpha = angle_from_json(field(j, "alpha"));
  return c;
}

Json circle_to_json(const TorusCircle& c) {
  return Json{{"p", c.p}, {"q", c.q}, {"alpha", angle_str(c.alpha)}};
}

TorusCircle circle_from_json(const Json& j) {
  TorusCircle c;
  c.p = int_field(j, "p");
  c.q = int_field(j, "q");
  c.alpha = angle_from_json(field(j, "alpha"));
  return c;
}

Json validation_to_json(const ValidationReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return Json{{"valid", r.valid()}, {"violations", violations}};
}

Json stacky_report_to_json(const StackyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"name", row.name}, {"pass", row.passed}, {"witness", row.witness}});
  return Json{{"pass", r.all_pass()}, {"convention", r.convention}, {"rows", rows}};
}

Json zigzag_report_to_json(const ZigZagReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"name", row.name}, {"pass", row.passed}, {"witness", row.witness}});
  return Json{{"pass", r.all_pass()}, {"rows", rows}};
}

Json classification_to_json(const TensorClassification& t) {
  Json out;
  out["mult"] = t.multiplicity;
  if (t.multiplicity > 0) {
    out["p"] = t.cls.p;
    out["q"] = t.cls.q;
    out["alpha"] = angle_str(t.cls.alpha);
  }
  return out;
}

Json agreement_to_json(const AgreementReport& r) {
  Json components = Json::array();
  for (const auto& comp : r.components) {
    Json c = circle_to_json(comp.circle);
    c["winding_multiplicity"] = comp.winding_multiplicity;
    components.push_back(c);
  }
  return Json{{"classifier", classification_to_json(r.classification)},
              {"geometric", Json{{"components", components}}},
              {"agree", r.agree},
              {"witnesses", r.witnesses}};
}

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("input is not valid JSON");
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("IoError", "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

} // namespace grouplike
