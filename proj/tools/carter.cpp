#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "carter/diagram.hpp"
#include "carter/dual_weyl.hpp"
#include "carter/export.hpp"
#include "carter/flation.hpp"
#include "carter/linkage.hpp"
#include "carter/spectral.hpp"
#include "carter/transition.hpp"
#include "carter/verify.hpp"

using namespace carter;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void print_matrix(std::ostream& os, const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "  ") << m(r, c).str();
    os << '\n';
  }
}

std::vector<CarterDiagram> all_catalog() {
  std::vector<CarterDiagram> out;
  for (int l = 1; l <= 9; ++l) out.push_back(diagram("A" + std::to_string(l)));
  for (int l = 4; l <= 9; ++l)
    for (auto& d : catalog(AdeType{Family::D, l})) out.push_back(std::move(d));
  for (int l = 6; l <= 8; ++l)
    for (auto& d : catalog(AdeType{Family::E, l})) out.push_back(std::move(d));
  return out;
}

int cmd_catalog(const std::string& cls, bool as_json) {
  const auto list = cls.empty() ? all_catalog() : catalog(cls);
  json out = json::array();
  for (const auto& d : list) {
    const auto report = validate(d);
    if (as_json) {
      json j = diagram_json(d);
      j["valid"] = report.ok();
      out.push_back(std::move(j));
    } else {
      std::cout << d.name() << "  vertices " << d.size() << ", edges " << d.edges().size() << ", det "
                << det(partial_cartan(d)).str() << (report.ok() ? "" : "  INVALID") << '\n';
    }
  }
  if (as_json) std::cout << out.dump(2) << '\n';
  return kPass;
}

int cmd_roots(const std::string& type, bool as_json) {
  const auto rs = root_system(AdeType::parse(type));
  if (as_json) {
    std::cout << root_system_json(*rs).dump() << '\n';
    return kPass;
  }
  std::cout << rs->type().name() << ": " << rs->size() << " roots\n";
  for (const auto& r : rs->roots()) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? " " : "  ") << r[i];
    std::cout << '\n';
  }
  return kPass;
}

int cmd_gram(const std::string& name, bool as_json) {
  const CarterDiagram d = diagram(name);
  const RatMatrix b = partial_cartan(d);
  const RatMatrix inv = invert(b);
  if (as_json) {
    json labels = d.labels();
    std::cout << json{{"diagram", d.name()}, {"labels", labels}, {"B", matrix_json(b)}, {"inverse", matrix_json(inv)},
                      {"det", det(b).str()}}
                     .dump(2)
              << '\n';
    return kPass;
  }
  std::cout << "B(" << d.name() << "), order";
  for (const auto& l : d.labels()) std::cout << ' ' << l;
  std::cout << '\n';
  print_matrix(std::cout, b);
  std::cout << "inverse:\n";
  print_matrix(std::cout, inv);
  std::cout << "det " << det(b).str() << '\n';
  return kPass;
}

int cmd_linkage(const std::string& name, const std::string& ambient, bool orbits, bool as_json) {
  const CarterDiagram d = diagram(name);
  LinkageSystem ls{d, {}, {}};
  if (ambient.empty()) {
    ls = enumerate_full(d);
  } else {
    ls.partials.push_back(enumerate_partial(d, AdeType::parse(ambient)));
    ls.total = ls.partials.back().labels;
  }
  if (as_json) {
    json j = linkage_json(ls);
    if (orbits) {
      json list = json::array();
      for (const auto& o : orbit_partition(d, ls.total)) list.push_back(orbit_json(o));
      j["orbits"] = list;
    }
    std::cout << j.dump() << '\n';
    return kPass;
  }
  std::cout << "linkage system of " << d.name() << '\n';
  for (const auto& p : ls.partials) {
    std::cout << "  " << p.ambient.name() << ": ";
    if (p.embedded()) std::cout << p.labels.size() << " labels\n";
    else std::cout << p.note << '\n';
  }
  std::cout << "  total " << ls.total.size() << '\n';
  if (orbits) {
    for (const char* fam : {"A", "D", "E"}) {
      const Family f = fam[0] == 'A' ? Family::A : fam[0] == 'D' ? Family::D : Family::E;
      const LabelSet comp = ls.component(f);
      if (comp.empty()) continue;
      std::cout << "  " << fam << "-component " << comp.size() << ":";
      for (const auto& o : orbit_partition(d, comp)) std::cout << ' ' << o.size() << " (p = " << o.p.str() << ")";
      std::cout << '\n';
    }
  }
  return kPass;
}

int cmd_orbits(const std::string& name, const std::string& component, bool dot, bool as_json) {
  const CarterDiagram d = diagram(name);
  const LinkageSystem ls = enumerate_full(d);
  LabelSet labels = ls.total;
  if (component == "D") labels = ls.component(Family::D);
  else if (component == "E") labels = ls.component(Family::E);
  else if (component == "A") labels = ls.component(Family::A);
  const auto orbits = orbit_partition(d, labels);
  if (dot) {
    for (const auto& o : orbits) std::cout << orbit_dot(d, o);
    return kPass;
  }
  if (as_json) {
    json list = json::array();
    for (const auto& o : orbits) list.push_back(orbit_json(o));
    std::cout << list.dump() << '\n';
    return kPass;
  }
  for (const auto& o : orbits) {
    std::cout << "orbit of size " << o.size() << ", p = " << o.p.str() << (o.is_loctet() ? " (loctet)" : "") << '\n';
    for (const auto& u : o.labels) std::cout << "  " << u.str() << '\n';
  }
  return kPass;
}

int cmd_reduce(const std::string& input, bool as_json) {
  RatMatrix b;
  std::string label = input;
  if (std::ifstream file{input}) {
    std::stringstream buf;
    buf << file.rdbuf();
    b = RatMatrix::parse(buf.str());
  } else {
    const CarterDiagram d = diagram(input);
    b = partial_cartan(d);
    label = d.name();
  }
  const Reduction r = ovsienko_reduce(UnitForm(b));
  const bool certified = congruent(r.certificate, b) == r.reduced;
  if (as_json) {
    json j = reduction_json(r);
    j["input"] = label;
    j["certified"] = certified;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << label << " ->";
    for (const auto& t : r.types) std::cout << ' ' << t.name();
    std::cout << " after " << r.steps.size() << " inflations\ncertificate T:\n";
    print_matrix(std::cout, r.certificate);
    std::cout << (certified ? "ᵗT B T verified\n" : "ᵗT B T MISMATCH\n");
  }
  return certified ? kPass : kFail;
}

int cmd_transition(const std::string& from, const std::string& to, bool as_json) {
  const CarterDiagram a = diagram(from), b = diagram(to);
  const auto c = chain(a, b);
  if (!c) {
    std::cerr << "no transition chain from " << a.name() << " to " << b.name() << '\n';
    return kFail;
  }
  bool ok = congruent(c->map, partial_cartan(a)) == partial_cartan(b);
  json steps = json::array();
  for (const auto& t : c->steps) {
    const auto rep = verify_transition(t, false);
    ok = ok && rep.ok();
    json j = transition_json(t);
    j["verified"] = rep.ok();
    steps.push_back(std::move(j));
  }
  if (as_json) {
    std::cout << json{{"from", a.name()}, {"to", b.name()}, {"steps", steps}, {"map", c->map.to_ints()}, {"ok", ok}}.dump()
              << '\n';
    return ok ? kPass : kFail;
  }
  std::cout << a.name() << " -> " << b.name() << ": " << c->steps.size() << " transition(s)\n";
  for (const auto& t : c->steps) {
    std::cout << "  " << t.from.diagram().name() << " -> " << t.target.name() << ", moved "
              << t.from.diagram().labels()[t.moved] << ", M:\n";
    print_matrix(std::cout, t.matrix);
  }
  std::cout << "map F with ᵗF B F = B':\n";
  print_matrix(std::cout, c->map);
  std::cout << (ok ? "verified\n" : "verification FAILED\n");
  return ok ? kPass : kFail;
}

int cmd_export(const std::string& what, const std::string& name, const std::string& format, const std::string& out) {
  std::string text;
  if (what == "table1") {
    const auto rows = table1_rows();
    if (format == "csv") {
      text = table1_csv(rows);
    } else {
      json list = json::array();
      for (const auto& r : rows)
        list.push_back({{"diagram", r.diagram}, {"components", r.orbits}, {"d_component", r.d_component},
                        {"e_component", r.e_component}, {"total", r.total}});
      text = list.dump(2) + "\n";
    }
  } else if (name.empty()) {
    throw CLI::ValidationError("export " + what + " needs a name");
  } else if (what == "diagram") {
    const CarterDiagram d = diagram(name);
    text = format == "dot" ? diagram_dot(d) : diagram_json(d).dump(2) + "\n";
  } else if (what == "roots") {
    text = root_system_json(*root_system(AdeType::parse(name))).dump() + "\n";
  } else if (what == "gamma") {
    const CarterDiagram d = diagram(name);
    json list = json::array();
    for (AdeType t : extension_ambients(d.size()))
      if (auto g = find_gamma_set(d, t)) list.push_back(gamma_set_json(*g));
    text = list.dump(2) + "\n";
  } else if (what == "linkage") {
    text = linkage_json(enumerate_full(diagram(name))).dump() + "\n";
  } else if (what == "orbits") {
    const CarterDiagram d = diagram(name);
    const auto orbits = orbit_partition(d, enumerate_full(d).total);
    if (format == "dot") {
      for (const auto& o : orbits) text += orbit_dot(d, o);
    } else {
      json list = json::array();
      for (const auto& o : orbits) list.push_back(orbit_json(o));
      text = list.dump() + "\n";
    }
  } else {
    throw CLI::ValidationError("unknown export target '" + what + "'");
  }
  if (format == "csv" && what != "table1") throw CLI::ValidationError("csv is available for table1 only");
  if (format == "dot" && what != "diagram" && what != "orbits")
    throw CLI::ValidationError("dot is available for diagram and orbits");

  if (out.empty() || out == "-") {
    std::cout << text;
    return kPass;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open " + out + " for writing");
  file << text;
  if (!file) throw std::runtime_error("write to " + out + " failed");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linkage systems of Carter diagrams: enumeration and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string arg1, arg2, ambient, component = "all", format = "json", out;
  bool orbits = false, dot = false;

  auto* c_catalog = app.add_subcommand("catalog", "List catalog diagrams, optionally of one class such as D5");
  c_catalog->add_option("class", arg1, "Homogeneous class, e.g. D6 or C(D6)");
  auto* c_roots = app.add_subcommand("roots", "Print a root system");
  c_roots->add_option("type", arg1, "A<l>, D<l> or E<l>")->required();
  auto* c_gram = app.add_subcommand("gram", "Print B and its inverse for a catalog diagram");
  c_gram->add_option("diagram", arg1)->required();
  auto* c_linkage = app.add_subcommand("linkage", "Enumerate the linkage system of a diagram");
  c_linkage->add_option("diagram", arg1)->required();
  c_linkage->add_option("--ambient", ambient, "Restrict to one ambient, e.g. E6");
  c_linkage->add_flag("--orbits", orbits, "Show the dual Weyl orbits per component");
  auto* c_orbits = app.add_subcommand("orbits", "Dual Weyl orbits of a linkage system");
  c_orbits->add_option("diagram", arg1)->required();
  c_orbits->add_option("--component", component, "A, D, E or all")->check(CLI::IsMember({"A", "D", "E", "all"}));
  c_orbits->add_flag("--dot", dot, "Graphviz output");

  auto* c_verify = app.add_subcommand("verify", "Run verification suites (all when no flag is given)");
  bool v_table = false, v_e8 = false, v_pair = false, v_spec = false, v_trans = false, v_reduce = false;
  std::vector<std::string> v_crit;
  c_verify->add_flag("--table1", v_table, "Linkage totals, components and orbits");
  auto* crit_opt = c_verify->add_option("--criterion", v_crit, "Linkage root criterion, optionally for one diagram")
                       ->expected(0, 1);
  c_verify->add_flag("--e8d7", v_e8, "The 14 E8/D7 root pairs");
  c_verify->add_flag("--pairing", v_pair, "δ = μmax - φ + τ pairing for D4..D7");
  c_verify->add_flag("--spectrum", v_spec, "Spectra in (0,4) and the Coxeter relation");
  c_verify->add_flag("--transitions", v_trans, "Transition matrices for {D_l(a_k), D_l}");
  c_verify->add_flag("--reduce-all", v_reduce, "Inflation reduction of the catalog");

  auto* c_reduce = app.add_subcommand("reduce", "Reduce a unit form to Dynkin type by inflations");
  c_reduce->add_option("input", arg1, "Catalog diagram name or matrix file")->required();
  auto* c_trans = app.add_subcommand("transition", "Find a transition chain between homogeneous diagrams");
  c_trans->add_option("from", arg1)->required();
  c_trans->add_option("to", arg2)->required();
  auto* c_export = app.add_subcommand("export", "Write table1, diagram, roots, gamma, linkage or orbits");
  c_export->add_option("what", arg1)->required()->check(
      CLI::IsMember({"table1", "diagram", "roots", "gamma", "linkage", "orbits"}));
  c_export->add_option("name", arg2, "Diagram or type name");
  c_export->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "csv"}));
  c_export->add_option("--out", out, "Output path, stdout by default");

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (c_catalog->parsed()) return cmd_catalog(arg1, as_json);
    if (c_roots->parsed()) return cmd_roots(arg1, as_json);
    if (c_gram->parsed()) return cmd_gram(arg1, as_json);
    if (c_linkage->parsed()) return cmd_linkage(arg1, ambient, orbits, as_json);
    if (c_orbits->parsed()) return cmd_orbits(arg1, component, dot, as_json);
    if (c_reduce->parsed()) return cmd_reduce(arg1, as_json);
    if (c_trans->parsed()) return cmd_transition(arg1, arg2, as_json);
    if (c_export->parsed()) return cmd_export(arg1, arg2, format, out);
    if (c_verify->parsed()) {
      const bool crit = crit_opt->count() > 0;
      // A bare --criterion may leave an empty value behind.
      std::erase(v_crit, std::string{});
      const bool any = v_table || crit || v_e8 || v_pair || v_spec || v_trans || v_reduce;
      std::vector<SuiteResult> results;
      // Suites run in a fixed order so the report is stable.
      if (!any || v_table) results.push_back(verify_table1());
      if (!any || crit)
        results.push_back(verify_criterion(v_crit.empty() ? std::nullopt : std::optional<std::string>(v_crit.front())));
      if (!any || v_e8) results.push_back(verify_e8d7());
      if (!any || v_pair) results.push_back(verify_pairing());
      if (!any || v_spec) results.push_back(verify_spectrum());
      if (!any || v_trans) results.push_back(verify_transitions());
      if (!any || v_reduce) results.push_back(verify_reduce_all());
      bool ok = true;
      json report = json::array();
      for (const auto& r : results) {
        ok = ok && r.ok();
        if (as_json) report.push_back(r.to_json());
        else std::cout << r.text();
      }
      if (as_json) std::cout << json{{"ok", ok}, {"suites", report}}.dump(2) << '\n';
      else std::cout << (ok ? "all suites passed" : "verification FAILED")
                     << " (spectrum tolerances: interval margin 1e-6, Coxeter multisets 1e-8)\n";
      return ok ? kPass : kFail;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
