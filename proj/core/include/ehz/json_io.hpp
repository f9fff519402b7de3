#pragma once

#include "ehz/building.hpp"
#include "ehz/hecke.hpp"
#include <string>

namespace ehz {

// JSON carries all numbers as strings to keep exactness.

std::string polytope_to_json(const LatticePolytope& P);
LatticePolytope polytope_from_json(const std::string& text);

std::string plattice_to_json(const PLattice& L);
std::string unipoly_to_json_coeffs(const UniPoly& f); // ["1","5/2","3/2"]

std::string matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const std::string& text);

} // namespace ehz
