#include "carter/verify.hpp"

#include <algorithm>
#include <sstream>

#include "carter/export.hpp"
#include "carter/flation.hpp"
#include "carter/linkage.hpp"
#include "carter/spectral.hpp"
#include "carter/transition.hpp"

namespace carter {

namespace {

struct ExpectedRow {
  int l;
  std::size_t total, d_component, e_component, orbits;
};

// Totals and component sizes of the full linkage systems of C(D_l).
constexpr ExpectedRow kTable1[] = {
    {4, 24, 24, 0, 3},   {5, 42, 10, 32, 3}, {6, 76, 12, 64, 3},
    {7, 142, 14, 128, 3}, {8, 16, 16, 0, 1},  {9, 18, 18, 0, 1},
};

std::vector<CarterDiagram> d_catalog(int lo, int hi) {
  std::vector<CarterDiagram> out;
  for (int l = lo; l <= hi; ++l)
    for (auto& d : catalog(AdeType{Family::D, l})) out.push_back(std::move(d));
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "+" : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

bool SuiteResult::ok() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json SuiteResult::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& c : checks) items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"suite", suite}, {"ok", ok()}, {"checks", items}};
}

std::string SuiteResult::text() const {
  std::ostringstream os;
  for (const auto& c : checks) os << (c.pass ? "PASS " : "FAIL ") << suite << '/' << c.name << ": " << c.detail << '\n';
  return os.str();
}

SuiteResult verify_table1() {
  SuiteResult res{"table1", {}};
  for (const auto& exp : kTable1) {
    for (const auto& d : catalog(AdeType{Family::D, exp.l})) {
      const Table1Row row = table1_row(d);
      const Rational e_p(exp.l, 4);
      bool pass = row.total == exp.total && row.d_component == exp.d_component &&
                  row.e_component == exp.e_component && row.orbits == exp.orbits;
      pass = pass && (row.d_component == 0 || row.d_p == Rational(1));
      if (exp.e_component) {
        pass = pass && row.e_orbits.size() == 2 && row.e_orbits[0] == exp.e_component / 2 &&
               row.e_orbits[1] == exp.e_component / 2 && row.e_p == e_p;
      }
      if (exp.l == 4) pass = pass && row.d_orbits == std::vector<std::size_t>{8, 8, 8};
      std::ostringstream detail;
      detail << "total " << row.total << ", D " << row.d_component << " (" << join(row.d_orbits) << ", p "
             << row.d_p.str() << "), E " << row.e_component;
      if (row.e_component) detail << " (" << join(row.e_orbits) << ", p " << row.e_p.str() << ")";
      detail << ", orbits " << row.orbits;
      res.checks.push_back({d.name(), pass, detail.str()});
    }
  }
  // The D8-derived labels of D7 all reappear in the E8 partial system.
  const LinkageSystem d7 = enumerate_full(diagram("D7"));
  const auto* dpart = d7.partial(Family::D);
  const auto* epart = d7.partial(Family::E);
  const bool subset = dpart && epart &&
                      std::includes(epart->labels.begin(), epart->labels.end(), dpart->labels.begin(), dpart->labels.end());
  res.checks.push_back({"D7 D8-labels within E8", subset,
                        std::to_string(dpart ? dpart->labels.size() : 0) + " of " +
                            std::to_string(epart ? epart->labels.size() : 0)});
  return res;
}

SuiteResult verify_criterion(const std::optional<std::string>& name) {
  SuiteResult res{"criterion", {}};
  const auto diagrams = name ? std::vector<CarterDiagram>{diagram(*name)} : d_catalog(4, 9);
  for (const auto& d : diagrams) {
    const CriterionReport rep = criterion_check(d);
    std::string detail = std::to_string(rep.roots_checked) + " roots over";
    for (const auto& a : rep.ambients) detail += " " + a;
    if (!rep.failures.empty()) detail += "; first failure: " + rep.failures.front();
    res.checks.push_back({d.name(), rep.ok(), detail});
  }
  return res;
}

SuiteResult verify_e8d7() {
  SuiteResult res{"e8d7", {}};
  std::vector<RootPair> pairs;
  try {
    pairs = e8_d7_pairs();
  } catch (const std::exception& e) {
    res.checks.push_back({"pair count", false, e.what()});
    return res;
  }
  res.checks.push_back({"pair count", pairs.size() == 14, std::to_string(pairs.size()) + " pairs"});
  const Coords sum{4, 5, 7, 10, 8, 6, 4, 2};
  std::size_t positive = 0;
  for (const auto& p : pairs) {
    if (!p.positive()) continue;
    ++positive;
    res.checks.push_back({"pair " + std::to_string(positive), add(p.eta, p.lambda) == sum,
                          e8_layout(p.eta) + " + " + e8_layout(p.lambda) + " label " + p.label.str()});
  }
  res.checks.push_back({"positive pairs", positive == 7, std::to_string(positive)});
  return res;
}

SuiteResult verify_pairing() {
  SuiteResult res{"pairing", {}};
  for (int l = 4; l <= 7; ++l) {
    const PairingReport rep = pairing_check(l);
    std::string detail = std::to_string(rep.checked) + " roots";
    if (!rep.failures.empty()) detail += "; " + rep.failures.front();
    res.checks.push_back({"D" + std::to_string(l) + " in D" + std::to_string(l + 1), rep.ok(), detail});
  }
  return res;
}

SuiteResult verify_spectrum() {
  SuiteResult res{"spectrum", {}};
  std::vector<CarterDiagram> all;
  for (int l = 1; l <= 9; ++l) all.push_back(diagram("A" + std::to_string(l)));
  for (auto& d : d_catalog(4, 9)) all.push_back(std::move(d));
  for (const char* e : {"E6", "E7", "E8"})
    for (auto& d : catalog(e)) all.push_back(std::move(d));
  for (const auto& d : all) {
    const SpectrumReport s = spectrum(partial_cartan(d));
    std::ostringstream detail;
    detail.precision(6);
    detail << "min " << s.min << " max " << s.max;
    res.checks.push_back({d.name() + " in (0,4)", s.min > 1e-6 && s.max < 4 - 1e-6, detail.str()});
  }
  for (const char* n : {"A1", "A2", "A3", "A4", "D4", "D5", "D6", "D7", "E6", "E7", "E8"}) {
    const CoxeterReport c = coxeter_relation_check(diagram(n));
    std::ostringstream detail;
    detail << "max deviation " << c.max_deviation;
    res.checks.push_back({std::string(n) + " Coxeter relation", c.ok, detail.str()});
  }
  return res;
}

SuiteResult verify_transitions() {
  SuiteResult res{"transitions", {}};
  for (int l = 4; l <= 7; ++l) {
    const CarterDiagram dynkin = diagram("D" + std::to_string(l));
    for (const auto& d : catalog(AdeType{Family::D, l})) {
      if (d.is_dynkin()) continue;
      for (bool forward : {true, false}) {
        const CarterDiagram& src = forward ? d : dynkin;
        const CarterDiagram& dst = forward ? dynkin : d;
        const std::string name = src.name() + " -> " + dst.name();
        const auto g = find_gamma_set(src, AdeType{Family::D, l});
        const auto t = g ? find_transition(*g, dst) : std::nullopt;
        if (!t) {
          res.checks.push_back({name, false, "no transition found"});
          continue;
        }
        const TransitionReport rep = verify_transition(*t);
        std::string detail = "moved " + src.labels()[t->moved] + ", labels " + std::to_string(rep.labels_from) + "/" +
                             std::to_string(rep.labels_to);
        for (const auto& f : rep.failures) detail += "; failed " + f;
        res.checks.push_back({name, rep.ok(), detail});
      }
    }
  }
  return res;
}

SuiteResult verify_reduce_all() {
  SuiteResult res{"reduce", {}};
  std::vector<CarterDiagram> all = d_catalog(4, 9);
  for (auto& d : catalog("E6")) all.push_back(std::move(d));
  for (const auto& d : all) {
    const RatMatrix b = partial_cartan(d);
    const AdeType expected = DiagramName::parse(d.name()).type;
    try {
      const Reduction r = ovsienko_reduce(UnitForm(b));
      const bool pass = r.types == std::vector<AdeType>{expected} && congruent(r.certificate, b) == r.reduced &&
                        similar_gram(r.reduced.to_ints(), cartan_matrix(expected)).has_value() && det(r.reduced) == det(b);
      const std::string got = r.types.empty() ? "nothing" : r.types.front().name();
      res.checks.push_back({d.name(), pass, got + " after " + std::to_string(r.steps.size()) + " inflations"});
    } catch (const std::exception& e) {
      res.checks.push_back({d.name(), false, e.what()});
    }
  }
  return res;
}

}  // namespace carter
