#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "carter/diagram.hpp"
#include "carter/dual_weyl.hpp"
#include "carter/flation.hpp"
#include "carter/gamma_set.hpp"
#include "carter/linkage.hpp"
#include "carter/root_system.hpp"
#include "carter/transition.hpp"

namespace carter {

using nlohmann::json;

/// Rows of `p/q` strings.
json matrix_json(const RatMatrix& m);
json root_system_json(const RootSystem& rs);
/// {"name","alpha","beta","edges":[[i,j,sign]]}; alpha/beta hold vertex labels.
json diagram_json(const CarterDiagram& d);
/// Inverse of diagram_json.
CarterDiagram diagram_from_json(const json& j);
json gamma_set_json(const GammaSet& g);
/// {"base","partials":{"D7":{"count","labels"}},"total"}; embedded ambients only.
json linkage_json(const LinkageSystem& ls);
/// {"p":"5/4","size","labels"}
json orbit_json(const Orbit& o);
json transition_json(const Transition& t);
json reduction_json(const Reduction& r);

std::string diagram_dot(const CarterDiagram& d);

/// One line of the component/orbit table for a D-type class member.
struct Table1Row {
  std::string diagram;
  std::size_t orbits = 0;
  std::size_t d_component = 0;
  std::size_t e_component = 0;
  /// E-orbit sizes, ascending.
  std::vector<std::size_t> e_orbits;
  /// D-orbit sizes, ascending.
  std::vector<std::size_t> d_orbits;
  Rational d_p;
  Rational e_p;
  std::size_t total = 0;
};

Table1Row table1_row(const CarterDiagram& d);
/// Rows for every catalog member of D4..D9.
std::vector<Table1Row> table1_rows();
std::string table1_csv(const std::vector<Table1Row>& rows);

}  // namespace carter
