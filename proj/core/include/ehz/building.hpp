#pragma once

#include "ehz/polytope.hpp"
#include <string>
#include <vector>

namespace ehz {

/// One vertex of the (p+1)-regular tree of homothety classes of lattices in
/// Q_p^2 around [Z^2]. The class representative contains Z^2 minimally; a
/// depth-d class is generated over Z^2 by gen/p^d with gen primitive mod p.
struct BuildingVertex {
    int depth = 0;
    int parent = -1;       // index into the flat vertex list; -1 for the root
    std::vector<Int> gen;  // (a, b); the root stores (0, 0)
    Rational value;        // c_l of the Ehrhart polynomial at the class rep
};

struct BuildingTree {
    Int p;
    int ell = 0;
    int radius = 0;
    std::vector<BuildingVertex> vertices; // breadth-first, root first

    /// Sorted multiset of values at the given depth.
    std::vector<Rational> ring(int depth) const;
    std::string dot() const;
};

/// Values c_l(E^Lambda(P)) on the tree out to the given radius (P planar).
BuildingTree building_values(const Int& p, const LatticePolytope& P, int ell, int radius);

/// Representative lattice of the class with the given generator and depth.
Lat building_class_lattice(const Int& p, int depth, const std::vector<Int>& gen);

} // namespace ehz
