#pragma once

#include "ehz/polytope.hpp"
#include "ehz/qfunctions.hpp"
#include <optional>
#include <string>
#include <vector>

namespace ehz {

enum class CosetKind { TypeA, TypeC };

/// Right cosets of a Hecke double coset. `labels` are the canonical
/// upper-triangular row-HNF matrices of one full right transversal's
/// transposes: the group element representing a coset is label^t, and the
/// coset is determined by the superlattice rowspan((label^t)^{-1}).
struct CosetSet {
    CosetKind kind;
    int n = 0;      // GL_n for type A, GSp_2n for type C
    Int p = 0;
    int k = 0;      // operator index
    int dim = 0;    // matrix size: n (type A), 2n (type C)
    long similitude_exp = 0; // type C: mu(rep) = ±p^alpha
    std::vector<IntMatrix> labels;

    size_t size() const { return labels.size(); }
    IntMatrix rep(size_t i) const { return labels[i].transpose(); }
    /// Superlattice Lambda_{rep^{-1}} attached to coset i.
    Lat superlattice(size_t i) const;
};

/// Right cosets of T_n^A(p,k): HNF labels of determinant p^k with elementary
/// divisors (1,...,1,p,...,p). Count = gaussian_binomial(n,k) at q=p.
CosetSet typeA_cosets(int n, const Int& p, int k);

/// Right cosets of the symplectic similitude generators: k = 0 is the
/// similitude-p operator, k in [n] the similitude-p^2 operator with the k-th
/// elementary divisor type.
CosetSet typeC_cosets(int n, const Int& p, int k);

/// All right cosets of integral similitude-p^alpha symplectic matrices
/// (every divisor type), used by the type-C zeta series.
CosetSet typeC_similitude_cosets(int n, const Int& p, long alpha);

/// Sum of E over the coset translates. `via_transform` recomputes each
/// summand as E(transform(rep, P), Z^dim) instead of through the superlattice;
/// both routes agree (Eq-style identity, exercised in tests).
UniPoly hecke_act(const CosetSet& cs, const LatticePolytope& P, bool via_transform = false);

enum class NuAMode { Grassmannian, Formula, Action };

/// Type-A eigenvalue nu^A_{n,k,l}(p) by the requested route.
Rational nu_A(int n, int k, int l, const Int& p, NuAMode mode,
              const LatticePolytope* P = nullptr);

/// Type-C eigenvalue as the coefficient ratio of the Hecke action on P.
Rational nu_C(int n, int k, int l, const Int& p, const LatticePolytope& P);

/// Reference eigenvalue polynomial nu^C_{2,k,l} (n = 2, k in {0,1}, l in [4]_0),
/// as a polynomial in p.
UniPoly nu_C_reference(int k, int l);

struct EigenReport {
    std::string operator_id;
    int ell = 0;
    UniPoly acted;      // polynomial at the identity vertex
    UniPoly base;       // E(P)
    Rational eigenvalue;
    bool matched_formula = false;
    int vertices_checked = 0;
};

/// Verifies the eigen-equation at the identity vertex and at >= 3 translated
/// vertices; throws if c_l(P) == 0.
EigenReport eigen_check(int n, const Int& p, int l, const LatticePolytope& P,
                        const CosetSet& op, std::optional<Rational> expected = std::nullopt);

/// Sum over index-p^m superlattices of c_l^M(P)/c_l(P).
Rational superlattice_ratio_sum(int n, const Int& p, long m, int l, const LatticePolytope& P);

/// (sum_m a_m X^m) * (sum_k (-1)^k p^(k choose 2) nu^A_{n,k,l} X^k) == 1 up to
/// X^order, with a_m from brute-force superlattice enumeration.
bool tamagawa_check(int n, int l, const Int& p, long order, const LatticePolytope& P);

/// Subspaces of F_p^n of dimension k, as reduced row-echelon matrices.
std::vector<std::vector<std::vector<long>>> grassmannian_rref(int n, int k, long p);

/// sum over W in Gr(k,n,p) of #(U cap W) for an arbitrary spanning set U.
Rational grassmannian_intersection_sum(int n, int k, const std::vector<std::vector<long>>& U, long p);

} // namespace ehz
