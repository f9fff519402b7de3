#pragma once

#include "ehz/lattice.hpp"
#include "ehz/unipoly.hpp"
#include <vector>

namespace ehz {

/// Full-dimensional lattice polytope given by its vertices.
struct LatticePolytope {
    int n = 0;
    std::vector<std::vector<Int>> vertices;
};

/// Facet list: a*x <= b with primitive integer normals.
struct Facet {
    std::vector<Int> a;
    Int b;
};

struct HRep {
    std::vector<Facet> facets;
};

struct EhrhartPolynomial {
    UniPoly poly;            // in T, degree n
    std::string lattice_tag; // which lattice it is relative to
    Rational coeff(long k) const { return poly.coeff(k); }
};

LatticePolytope make_polytope(std::vector<std::vector<Int>> vertices);

/// Complete irredundant facet description; throws on degenerate input.
HRep hrep(const LatticePolytope& P);

/// Row action: vertices map to v * g (v a row vector). Non-vertex images are
/// pruned. Throws on singular g.
LatticePolytope transform(const IntMatrix& g, const LatticePolytope& P);

/// #(tP intersect L). L may be a sublattice or superlattice of Z^n.
Int count_points(const LatticePolytope& P, long t, const Lat& L);
Int count_points(const LatticePolytope& P, const HRep& H, long t, const Lat& L);

/// Degree-n Ehrhart polynomial by interpolation at t = 0..n, verified at n+1.
/// Requires every vertex of P to lie in L.
EhrhartPolynomial ehrhart(const LatticePolytope& P, const Lat& L);
EhrhartPolynomial ehrhart(const LatticePolytope& P); // relative to Z^n

/// Checks E(transform(g,P)) == E^{Lambda_{g^{-1}}}(P) coefficientwise.
bool ehrhart_identity_check(const IntMatrix& g, const LatticePolytope& P);

/// Lattice generated by the rows of g^{-1} (g integral, nonsingular).
Lat lattice_of_inverse(const IntMatrix& g);

} // namespace ehz
