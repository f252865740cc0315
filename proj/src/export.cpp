#include "carter/export.hpp"

#include <algorithm>
#include <sstream>

namespace carter {

json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json root_system_json(const RootSystem& rs) {
  return {{"type", rs.type().name()}, {"count", rs.size()}, {"cartan", rs.gram()}, {"roots", rs.roots()}};
}

json diagram_json(const CarterDiagram& d) {
  json alpha = json::array(), beta = json::array(), edges = json::array();
  for (int v = 0; v < d.size(); ++v) (d.colors()[v] == Color::Alpha ? alpha : beta).push_back(d.labels()[v]);
  for (const Edge& e : d.edges()) edges.push_back({e.i, e.j, e.sign});
  return {{"name", d.name()}, {"alpha", alpha}, {"beta", beta}, {"edges", edges}};
}

CarterDiagram diagram_from_json(const json& j) {
  std::vector<std::string> labels;
  std::vector<Color> colors;
  for (const auto& a : j.at("alpha")) {
    labels.push_back(a.get<std::string>());
    colors.push_back(Color::Alpha);
  }
  for (const auto& b : j.at("beta")) {
    labels.push_back(b.get<std::string>());
    colors.push_back(Color::Beta);
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  return CarterDiagram(j.at("name").get<std::string>(), std::move(labels), std::move(colors), std::move(edges));
}

json gamma_set_json(const GammaSet& g) {
  return {{"diagram", g.diagram().name()}, {"ambient", g.ambient().type().name()}, {"roots", g.roots()}};
}

json linkage_json(const LinkageSystem& ls) {
  json partials = json::object();
  for (const auto& p : ls.partials) {
    if (!p.embedded()) continue;
    json labels = json::array();
    for (const auto& u : p.labels) labels.push_back(u.values());
    partials[p.ambient.name()] = {{"count", p.labels.size()}, {"labels", labels}};
  }
  return {{"base", ls.base.name()}, {"partials", partials}, {"total", ls.total.size()}};
}

json orbit_json(const Orbit& o) {
  json labels = json::array();
  for (const auto& u : o.labels) labels.push_back(u.values());
  return {{"p", o.p.str()}, {"size", o.size()}, {"labels", labels}};
}

json transition_json(const Transition& t) {
  return {{"from", t.from.diagram().name()},
          {"to", t.target.name()},
          {"ambient", t.from.ambient().type().name()},
          {"moved", t.moved},
          {"matrix", t.matrix.to_ints()},
          {"coefficients", t.coefficients},
          {"map", t.full_map.to_ints()}};
}

json reduction_json(const Reduction& r) {
  json types = json::array(), steps = json::array();
  for (const auto& t : r.types) types.push_back(t.name());
  for (const auto& f : r.steps) steps.push_back({f.i, f.j, f.sign});
  return {{"types", types}, {"certificate", r.certificate.to_ints()}, {"steps", steps}};
}

std::string diagram_dot(const CarterDiagram& d) {
  std::ostringstream os;
  os << "graph \"" << d.name() << "\" {\n";
  for (int v = 0; v < d.size(); ++v)
    os << "  v" << v << " [label=\"" << d.labels()[v] << "\""
       << (d.colors()[v] == Color::Alpha ? "" : ", style=filled, fillcolor=gray80") << "];\n";
  for (const Edge& e : d.edges())
    os << "  v" << e.i << " -- v" << e.j << (e.sign == kDotted ? " [style=dotted]" : "") << ";\n";
  os << "}\n";
  return os.str();
}

Table1Row table1_row(const CarterDiagram& d) {
  const LinkageSystem ls = enumerate_full(d);
  Table1Row row;
  row.diagram = d.name();
  row.total = ls.total.size();
  row.orbits = orbit_partition(d, ls.total).size();
  const LabelSet dc = ls.component(Family::D), ec = ls.component(Family::E);
  row.d_component = dc.size();
  row.e_component = ec.size();
  for (const auto& o : orbit_partition(d, dc)) {
    row.d_orbits.push_back(o.size());
    row.d_p = o.p;
  }
  for (const auto& o : orbit_partition(d, ec)) {
    row.e_orbits.push_back(o.size());
    row.e_p = o.p;
  }
  std::sort(row.d_orbits.begin(), row.d_orbits.end());
  std::sort(row.e_orbits.begin(), row.e_orbits.end());
  return row;
}

std::vector<Table1Row> table1_rows() {
  std::vector<Table1Row> rows;
  for (int l = 4; l <= 9; ++l)
    for (const auto& d : catalog(AdeType{Family::D, l})) rows.push_back(table1_row(d));
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  auto sizes = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "+" : "") + std::to_string(v[k]);
    return s;
  };
  std::ostringstream os;
  os << "diagram,components,d_component,d_orbits,d_p,e_component,e_orbits,e_p,total\n";
  for (const auto& r : rows)
    os << r.diagram << ',' << r.orbits << ',' << r.d_component << ',' << sizes(r.d_orbits) << ','
       << (r.d_component ? r.d_p.str() : "") << ',' << r.e_component << ',' << sizes(r.e_orbits) << ','
       << (r.e_component ? r.e_p.str() : "") << ',' << r.total << '\n';
  return os.str();
}

}  // namespace carter
