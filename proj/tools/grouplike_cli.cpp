// Workbench CLI: validate structures, compose bibundles and modules, run the
// classifier against the geometric oracle, and render plots. JSON reports go
// to stdout, one-line human summaries to stderr. Exit codes: 0 pass, 1 check
// failed (report carries the witness), 2 input or usage error.

#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grouplike/circlegeom.hpp"
#include "grouplike/convalg.hpp"
#include "grouplike/json_io.hpp"
#include "grouplike/stacky.hpp"

using namespace grouplike;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Output {
  std::string out_path; // optional copy of the report
  int exit_code = 0;

  void emit(const std::string& command, Json payload, const std::string& summary) {
    Json report;
    report["version"] = kVersion;
    report["command"] = command;
    for (auto& [key, value] : payload.items()) report[key] = value;
    const std::string text = report.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) fail("IoError", "cannot write " + out_path);
      f << text;
    }
    std::cerr << summary << "\n";
  }
};

StackyFamily parse_family(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  try {
    if (parts.size() == 2 && parts[0] == "trivial")
      return make_trivial_group_family(GroupSpec::cyclic(std::stoi(parts[1])));
    if (parts.size() == 2 && parts[0] == "one-object")
      return make_one_object_family(GroupSpec::cyclic(std::stoi(parts[1])));
    if (parts.size() == 3 && parts[0] == "cyclic-quotient")
      return make_cyclic_quotient_family(std::stoi(parts[1]), std::stoi(parts[2]));
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  fail("ParseError",
       "family must be trivial:N, one-object:N, or cyclic-quotient:N:M, got " + spec);
}

TorusCircle parse_circle_arg(const std::string& text) {
  const auto c1 = text.find(',');
  const auto c2 = text.find(',', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    fail("ParseError", "circle must be p,q,alpha, got " + text);
  TorusCircle c;
  try {
    c.p = std::stoi(text.substr(0, c1));
    c.q = std::stoi(text.substr(c1 + 1, c2 - c1 - 1));
  } catch (const std::exception&) {
    fail("ParseError", "circle coefficients must be integers, got " + text);
  }
  c.alpha = parse_angle(text.substr(c2 + 1));
  return c;
}

const char* iso_status_name(IntertwinerResult::Status s) {
  switch (s) {
    case IntertwinerResult::Status::Found: return "found";
    case IntertwinerResult::Status::None: return "none";
    default: return "undecided";
  }
}

// All canonical coprime classes with |p|, |q| <= bound.
std::vector<std::pair<int, int>> canonical_classes(int bound) {
  std::vector<std::pair<int, int>> out;
  out.push_back({0, 1});
  for (int p = 1; p <= bound; ++p)
    for (int q = -bound; q <= bound; ++q)
      if (std::gcd(p, std::abs(q)) == 1) out.push_back({p, q});
  return out;
}

std::vector<std::pair<std::string, Angle>> alpha_samples() {
  return {{"0", Angle{}},
          {"lam", Angle::lam(Rat(1))},
          {"lam/2", Angle::lam(Rat(1, 2))},
          {"2pi/3", Angle::two_pi(Rat(1, 3))},
          {"a1", Angle::param1(Rat(1))},
          {"a2", Angle::param2(Rat(1))}};
}

int run_validate(Output& out, const std::string& path) {
  Json j = load_json_file(path);
  ValidationReport report;
  std::string what;
  if (j.is_object() && j.contains("carrier")) {
    what = "bibundle";
    report = validate(bibundle_from_json(j));
  } else if (j.is_object() && j.contains("mul")) {
    what = "group";
    report = validate(group_from_json(j));
  } else {
    what = "groupoid";
    report = validate(*groupoid_from_json(j));
  }
  Json payload = validation_to_json(report);
  payload["input"] = what;
  out.emit("validate", payload,
           "validate: " + what + (report.valid() ? " ok" : " INVALID: " + report.summary()));
  return report.valid() ? 0 : 1;
}

int run_compose(Output& out, const std::string& ma, const std::string& mb) {
  Bibundle m = bibundle_from_json(load_json_file(ma));
  Bibundle n = bibundle_from_json(load_json_file(mb));
  Bibundle c = compose_bibundles(m, n);
  auto principal = is_right_principal(c);
  Json payload;
  payload["bibundle"] = bibundle_to_json(c);
  payload["right_principal"] = principal.ok;
  if (!principal.ok) payload["witness"] = principal.witness;
  payload["convention"] = kOrientationConvention;
  out.emit("compose-bibundles", payload,
           "compose-bibundles: carrier " + std::to_string(c.carrier) +
               (principal.ok ? ", right principal" : ", NOT right principal"));
  return 0;
}

int run_morita(Output& out, const std::string& ga, const std::string& gb,
               const std::string& witness_path) {
  GroupoidPtr g = groupoid_from_json(load_json_file(ga));
  GroupoidPtr h = groupoid_from_json(load_json_file(gb));
  Json payload;
  payload["convention"] = kOrientationConvention;
  if (!witness_path.empty()) {
    Bibundle m = bibundle_from_json(load_json_file(witness_path));
    const bool ok = morita_verify(g, h, m);
    payload["equivalent"] = ok;
    payload["mode"] = "verify";
    out.emit("morita", payload,
             std::string("morita: witness bibundle ") + (ok ? "is" : "is NOT") + " biprincipal");
    return ok ? 0 : 1;
  }
  auto obstruction = morita_refute(g, h);
  payload["mode"] = "refute";
  if (obstruction) {
    payload["equivalent"] = false;
    payload["obstruction"] = Json{{"kind", obstruction->kind}, {"detail", obstruction->detail}};
    out.emit("morita", payload, "morita: refuted (" + obstruction->kind + ")");
    return 1;
  }
  payload["obstruction"] = nullptr;
  payload["note"] = "invariants match; not by itself a proof of equivalence";
  out.emit("morita", payload, "morita: no obstruction found");
  return 0;
}

int run_stacky(Output& out, const std::string& family, const std::vector<std::string>& inputs) {
  StackyReport report;
  std::string name;
  if (!family.empty()) {
    StackyFamily f = parse_family(family);
    name = f.name;
    report = stacky_group_check(f.g, f.em, f.ee, f.einv);
  } else if (inputs.size() == 4) {
    name = "explicit";
    GroupoidPtr g = groupoid_from_json(load_json_file(inputs[0]));
    report = stacky_group_check(g, bibundle_from_json(load_json_file(inputs[1])),
                                bibundle_from_json(load_json_file(inputs[2])),
                                bibundle_from_json(load_json_file(inputs[3])));
  } else {
    fail("ParseError", "stacky-check needs --family or four input files (g em ee einv)");
  }
  Json payload = stacky_report_to_json(report);
  payload["family"] = name;
  out.emit("stacky-check", payload, "stacky-check [" + name + "]: " + report.summary());
  return report.all_pass() ? 0 : 1;
}

int run_hopfish(Output& out, const std::string& family) {
  StackyFamily f = parse_family(family);
  HopfishData h = hopfish_from_stacky_group(f.g, f.em, f.ee, f.einv);
  const bool coassoc = check_coassoc(h);
  const bool counit = check_counit(h);
  Json payload;
  payload["family"] = f.name;
  payload["algebra_dim"] = h.algebra->num_arrows();
  payload["coassoc"] = coassoc;
  payload["counit"] = counit;
  out.emit("hopfish", payload,
           "hopfish [" + f.name + "]: coassoc " + (coassoc ? "ok" : "FAIL") + ", counit " +
               (counit ? "ok" : "FAIL"));
  return (coassoc && counit) ? 0 : 1;
}

int run_tensor_mod(Output& out, const std::string& family, int x, int y) {
  StackyFamily f = parse_family(family);
  HopfishData h = hopfish_from_stacky_group(f.g, f.em, f.ee, f.einv);
  const bool pointlike = f.g->num_objects > 1;
  const int n = pointlike ? f.g->num_objects : f.g->num_arrows();
  if (x < 0 || x >= n || y < 0 || y >= n)
    fail("ParseError", "module indices must lie in [0, " + std::to_string(n) + ")");
  Bimodule t1 = pointlike ? point_module(f.g, x) : character_module(f.g, x);
  Bimodule t2 = pointlike ? point_module(f.g, y) : character_module(f.g, y);
  Bimodule prod = module_tensor(t1, t2, h);
  Bimodule expected =
      pointlike ? point_module(f.g, (x + y) % n) : character_module(f.g, (x + y) % n);
  IntertwinerResult iso = bimodule_iso(prod, expected);
  Json payload;
  payload["family"] = f.name;
  payload["factors"] = Json::array({t1.label(0), t2.label(0)});
  payload["tensor_dim"] = prod.dim;
  payload["expected"] = expected.label(0);
  payload["expected_dim"] = expected.dim;
  payload["iso"] = iso_status_name(iso.status);
  if (!iso.note.empty()) payload["witness"] = iso.note;
  const bool ok = iso.status == IntertwinerResult::Status::Found;
  out.emit("tensor-mod", payload,
           "tensor-mod [" + f.name + "]: " + t1.label(0) + " (x) " + t2.label(0) + " vs " +
               expected.label(0) + ": " + iso_status_name(iso.status));
  return ok ? 0 : 1;
}

int run_nct_tensor(Output& out, int p1, int q1, const std::string& a1, int p2, int q2,
                   const std::string& a2) {
  ModuleClass c1{p1, q1, a1.empty() ? Angle::param1(Rat(1)) : parse_angle(a1)};
  ModuleClass c2{p2, q2, a2.empty() ? Angle::param2(Rat(1)) : parse_angle(a2)};
  TensorClassification t = tensor_classify(c1, c2);
  out.emit("nct-tensor", classification_to_json(t),
           "nct-tensor: multiplicity " + std::to_string(t.multiplicity) +
               (t.multiplicity ? ", class (" + std::to_string(t.cls.p) + ", " +
                                     std::to_string(t.cls.q) + ", " + angle_str(t.cls.alpha) + ")"
                               : ""));
  return 0;
}

int run_oracle_compare(Output& out, int sweep, int p1, int q1, const std::string& a1, int p2,
                       int q2, const std::string& a2) {
  if (sweep > 0) {
    const auto classes = canonical_classes(sweep);
    const auto alphas = alpha_samples();
    long long checked = 0, disagreements = 0;
    Json failures = Json::array();
    for (const auto& [cp1, cq1] : classes)
      for (const auto& [cp2, cq2] : classes)
        for (const auto& [n1, al1] : alphas)
          for (const auto& [n2, al2] : alphas) {
            AgreementReport rep = oracle_compare(ModuleClass{cp1, cq1, al1},
                                                 ModuleClass{cp2, cq2, al2});
            ++checked;
            if (!rep.agree) {
              ++disagreements;
              if (failures.size() < 16) {
                Json f = agreement_to_json(rep);
                f["inputs"] = Json{{"p1", cp1}, {"q1", cq1}, {"alpha1", n1},
                                   {"p2", cp2}, {"q2", cq2}, {"alpha2", n2}};
                failures.push_back(f);
              }
            }
          }
    Json payload;
    payload["sweep_bound"] = sweep;
    payload["classes"] = static_cast<int>(classes.size());
    payload["pairs_checked"] = checked;
    payload["disagreements"] = disagreements;
    payload["agree"] = disagreements == 0;
    if (disagreements > 0) payload["failures"] = failures;
    std::ostringstream sum;
    sum << "oracle-compare: " << checked << " pairs, " << disagreements << " disagreements";
    out.emit("oracle-compare", payload, sum.str());
    return disagreements == 0 ? 0 : 1;
  }
  ModuleClass c1{p1, q1, a1.empty() ? Angle::param1(Rat(1)) : parse_angle(a1)};
  ModuleClass c2{p2, q2, a2.empty() ? Angle::param2(Rat(1)) : parse_angle(a2)};
  AgreementReport rep = oracle_compare(c1, c2);
  out.emit("oracle-compare", agreement_to_json(rep),
           std::string("oracle-compare: ") + (rep.agree ? "agree" : "DISAGREE"));
  return rep.agree ? 0 : 1;
}

int run_zigzag(Output& out, std::vector<int> dims, int count, unsigned seed) {
  if (dims.empty()) dims = {2, 4, 6};
  Json cases = Json::array();
  bool all = true;
  for (int dim : dims) {
    {
      ZigZagReport rep = check_zigzag(standard_symp(dim));
      all = all && rep.all_pass();
      Json c = zigzag_report_to_json(rep);
      c["space"] = "standard dim " + std::to_string(dim);
      cases.push_back(c);
    }
    for (int k = 0; k < count; ++k) {
      ZigZagReport rep = check_zigzag(random_symp(dim, seed + static_cast<unsigned>(k)));
      all = all && rep.all_pass();
      Json c = zigzag_report_to_json(rep);
      c["space"] = "random dim " + std::to_string(dim) + " seed " +
                   std::to_string(seed + static_cast<unsigned>(k));
      cases.push_back(c);
    }
  }
  Json payload;
  payload["pass"] = all;
  payload["cases"] = cases;
  out.emit("zigzag", payload,
           std::string("zigzag: ") + (all ? "all cases pass" : "FAILURES present"));
  return all ? 0 : 1;
}

int run_plot(Output& out, const std::string& path, const std::vector<std::string>& circle_args,
             const std::string& circles_file) {
  std::vector<TorusCircle> circles;
  if (!circles_file.empty()) {
    Json j = load_json_file(circles_file);
    if (!j.is_object() || !j.contains("circles"))
      fail("ParseError", "circles file needs a top-level \"circles\" list");
    for (const auto& c : j.at("circles")) circles.push_back(circle_from_json(c));
  }
  for (const auto& arg : circle_args) circles.push_back(parse_circle_arg(arg));
  emit_plot(circles, path);
  Json payload;
  payload["path"] = path;
  payload["circles"] = static_cast<int>(circles.size());
  out.emit("plot", payload,
           "plot: wrote " + path + " with " + std::to_string(circles.size()) + " circles");
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-groupoid and quantum-torus workbench"};
  app.require_subcommand(1);

  Output out;
  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for the seeded generators (default 0)");
  app.add_option("--out", out.out_path, "also write the JSON report to this file");

  std::string in_a, in_b, in_c, family, alpha1, alpha2, circles_file, plot_path;
  std::vector<std::string> stacky_inputs, circle_args;
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0, sweep = 0, mod_x = 0, mod_y = 0, count = 20;
  std::vector<int> dims;

  auto* validate_cmd = app.add_subcommand("validate", "check groupoid/bibundle/group axioms");
  validate_cmd->add_option("input", in_a, "JSON file")->required();

  auto* compose_cmd = app.add_subcommand("compose-bibundles", "fibered product over the middle");
  compose_cmd->add_option("left", in_a)->required();
  compose_cmd->add_option("right", in_b)->required();

  auto* morita_cmd = app.add_subcommand("morita", "refute equivalence, or verify a witness");
  morita_cmd->add_option("first", in_a)->required();
  morita_cmd->add_option("second", in_b)->required();
  morita_cmd->add_option("--witness", in_c, "bibundle to verify as biprincipal");

  auto* stacky_cmd = app.add_subcommand("stacky-check", "group-object axioms for a stack");
  stacky_cmd->add_option("--family", family, "trivial:N | one-object:N | cyclic-quotient:N:M");
  stacky_cmd->add_option("inputs", stacky_inputs, "g em ee einv JSON files");

  auto* hopfish_cmd = app.add_subcommand("hopfish", "build the algebra triple and check laws");
  hopfish_cmd->add_option("--family", family)->required();

  auto* tensor_cmd = app.add_subcommand("tensor-mod", "tensor two irreducible modules");
  tensor_cmd->add_option("--family", family)->required();
  tensor_cmd->add_option("--x", mod_x, "first module index")->required();
  tensor_cmd->add_option("--y", mod_y, "second module index")->required();

  auto* nct_cmd = app.add_subcommand("nct-tensor", "classify a quantum-torus module tensor");
  nct_cmd->add_option("--p1", p1)->required();
  nct_cmd->add_option("--q1", q1)->required();
  nct_cmd->add_option("--alpha1", alpha1, "offset (default a1)");
  nct_cmd->add_option("--p2", p2)->required();
  nct_cmd->add_option("--q2", q2)->required();
  nct_cmd->add_option("--alpha2", alpha2, "offset (default a2)");

  auto* oracle_cmd = app.add_subcommand("oracle-compare", "classifier vs geometric composition");
  oracle_cmd->add_option("--sweep", sweep, "check every canonical coprime pair up to this bound");
  oracle_cmd->add_option("--p1", p1);
  oracle_cmd->add_option("--q1", q1);
  oracle_cmd->add_option("--alpha1", alpha1);
  oracle_cmd->add_option("--p2", p2);
  oracle_cmd->add_option("--q2", q2);
  oracle_cmd->add_option("--alpha2", alpha2);

  auto* zigzag_cmd = app.add_subcommand("zigzag", "duality snakes for symplectic relations");
  zigzag_cmd->add_option("--dim", dims, "dimensions to test (default 2 4 6)");
  zigzag_cmd->add_option("--count", count, "random forms per dimension (default 20)");

  auto* plot_cmd = app.add_subcommand("plot", "render circles on the torus to SVG");
  plot_cmd->add_option("output", plot_path, "SVG path")->required();
  plot_cmd->add_option("--circle", circle_args, "repeatable: p,q,alpha");
  plot_cmd->add_option("--circles", circles_file, "JSON file with a \"circles\" list");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return run_validate(out, in_a);
    if (*compose_cmd) return run_compose(out, in_a, in_b);
    if (*morita_cmd) return run_morita(out, in_a, in_b, in_c);
    if (*stacky_cmd) return run_stacky(out, family, stacky_inputs);
    if (*hopfish_cmd) return run_hopfish(out, family);
    if (*tensor_cmd) return run_tensor_mod(out, family, mod_x, mod_y);
    if (*nct_cmd) return run_nct_tensor(out, p1, q1, alpha1, p2, q2, alpha2);
    if (*oracle_cmd) return run_oracle_compare(out, sweep, p1, q1, alpha1, p2, q2, alpha2);
    if (*zigzag_cmd) return run_zigzag(out, dims, count, seed);
    if (*plot_cmd) return run_plot(out, plot_path, circle_args, circles_file);
  } catch (const Error& e) {
    Json payload;
    payload["version"] = kVersion;
    payload["error"] = Json{{"kind", e.kind()}, {"message", e.what()}};
    std::cout << payload.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
