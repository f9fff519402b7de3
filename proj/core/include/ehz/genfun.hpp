#pragma once

#include "ehz/hecke.hpp"
#include "ehz/series.hpp"
#include "ehz/substitution.hpp"
#include <map>
#include <set>

namespace ehz {

/// Truncated coefficient table of the Hermite-Smith generating function:
/// (mu, delta) -> number of sublattices, for all sublattices with
/// sum(delta) <= N.
struct MultiDegreeTable {
    int n = 0;
    Int p = 0;      // 0 in symbolic mode
    long N = 0;
    bool symbolic = false;
    std::map<std::pair<std::vector<long>, std::vector<long>>, Int> counts;
    std::map<std::pair<std::vector<long>, std::vector<long>>, UniPoly> sym_counts; // in p

    /// X^mu Y^delta polynomial of all stored entries (numeric mode).
    MultiPoly to_poly() const;
};

MultiDegreeTable hs_enumerate(int n, const Int& p, long N);

/// Symbolic-p table: per-(mu, delta) counts as polynomials in p, built by
/// sampling enough primes and interpolating (the count divides into residue
/// classes of bounded degree, so interpolation at degree+1 points is exact).
MultiDegreeTable hs_enumerate_symbolic(int n, long N);

/// Multiply by (1 - X_n Y_1...Y_n): keeps one entry per homothety class.
MultiDegreeTable hs_primitive(const MultiDegreeTable& t);
RationalFunction hs_primitive(const RationalFunction& hs, int n);

/// X_i -> p^(i(i+1)/2) x_0 X, Y_i -> p^-i x_i. Numeric or symbolic p.
MultiPoly phi_map(const MultiPoly& f, int n, const Int& p = 0);
RationalFunction phi_map(const RationalFunction& f, int n, const Int& p = 0);

/// Truncated Satake sum over homothety classes with nu_n <= order:
/// weight p^{<d,nu>-<a,delta>} x^delta (x_0 X)^{nu_n}.
MultiPoly andrianov_sum(int n, const Int& p, long order);

/// x_0 -> p^l, x_i -> p^i, x_n -> p^{n-l}, X -> t^n.
RationalFunction psi_nl(int n, int l, const RationalFunction& f, const Int& p);

/// Two-part chain sum W_{n,I}(Z, X_1..X_n, Y) for I inside [n-1]: the closed
/// form of the support-I slice of the Y-specialized primitive series.
RationalFunction W_nI(int n, const std::set<long>& I);

/// sum over I of W_{n,I}: closed form of HS^pr(X, 1, ..., 1, Y) in (Z, X, Y).
RationalFunction hs_bar_closed(int n);

/// Closed form of the type-C zeta as W(X, Y) with X the prime and Y = p^{-ns}.
RationalFunction zeta_C_closed(int n, int l);

/// Product formula 1/((1 - p^l t) prod_k (1 - p^k t)) in variables (p, t),
/// plus the global factorization surfaced as the list of zeta shifts.
RationalFunction zeta_A_closed(int n, int l);
std::vector<long> zeta_A_shifts(int n, int l);

enum class ZetaType { A, C };

/// Dirichlet-series truncation sum_m (sum over lattices of index p^m of
/// c_l ratios) t^m; type C runs over similitude cosets, exponent n*alpha.
UniPoly zeta_series_bruteforce(ZetaType type, int n, int l, const Int& p,
                               const LatticePolytope& P, long order);

enum class ReciprocityKind { HS, Z, R };

/// Functional equations checked as exact rational-function identities.
bool reciprocity_check(ReciprocityKind kind, int n, int l = 0);

/// Fine Hilbert series of the Stanley-Reisner ring of the order complex of
/// nonempty proper subsets of [n], pushed through y_I -> x_0 X prod x_i.
RationalFunction sr_hilbert(int n);
MultiPoly sr_hilbert_series(int n, long order);

/// Series of the p->1 Satake sum: sum over delta with min(delta) = 0 and
/// max(delta) <= order of x^delta (x_0 X)^{max delta}.
MultiPoly satake_p1_series(int n, long order);

/// f-vector route: sum_k f_{k-1} X^k (1-X)^{n-1-k} == E_n(X), and the series
/// of E_n/(1-X)^{n+1} equals sum (k+1)^n X^k up to the given order.
bool eulerian_check(int n, long order);

// Reference closed forms (exact fixtures).
RationalFunction reference_hs2();      // in (p, X_1, X_2, Y_1, Y_2)
RationalFunction reference_r2();       // in (p, x_0, x_1, x_2, X)
RationalFunction reference_zeta_C(int n, int l); // W_{n,l}(X, Y), n <= 4

} // namespace ehz
