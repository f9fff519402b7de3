#pragma once

#include "ehz/int_matrix.hpp"
#include <functional>
#include <vector>

namespace ehz {

/// A full-rank lattice in Q^n: rowspan(basis) / den with basis an integer row
/// HNF. This is the minimal data point counting and membership need; PLattice
/// adds the p-local bookkeeping on top.
struct Lat {
    int n = 0;
    IntMatrix basis;
    Int den = 1;

    bool contains(const std::vector<Rational>& x) const;
    bool contains_znn() const;
    std::string key() const;
};

/// Build from arbitrary generating rows over a common denominator; the basis
/// is HNF-reduced and common integer factors are moved out of the denominator.
Lat lat_from_rows(int n, const IntMatrix& rows, const Int& den);
Lat lat_standard(int n);

/// Finite-index p-power sublattice of Z^n (denominator_exp == 0), or a
/// superlattice represented as p^{-denominator_exp} times an integer lattice.
/// The basis is the row Hermite normal form: upper triangular, diagonal
/// p^{delta_i}, off-diagonal entries in column j reduced into [0, p^{delta_j}).
struct PLattice {
    int n = 0;
    Int p = 0;
    IntMatrix basis;          // rows generate the integer lattice part
    std::vector<long> delta;  // diagonal p-exponents
    std::vector<long> nu;     // Smith exponents, weakly increasing
    std::vector<long> mu;     // Smith increments, mu_i = nu_{n+1-i} - nu_{n-i}
    long index_exp = 0;       // sum of delta
    long denominator_exp = 0; // lattice = p^{-denominator_exp} * rowspan(basis)

    /// Index exponent relative to Z^n (negative for proper sublattices):
    /// |L : Z^n| = p^{rel} when rel >= 0, |Z^n : L| = p^{-rel} otherwise.
    long relative_index_exp() const { return n * denominator_exp - index_exp; }

    Lat lat() const { return Lat{n, basis, int_pow(p, denominator_exp)}; }
    bool contains(const std::vector<Rational>& x) const { return lat().contains(x); }
    bool contains_znn() const { return lat().contains_znn(); }
    std::string key() const { return lat().key(); }
};

/// Build a PLattice from an integer HNF basis (validates HNF p-power shape).
PLattice plattice_from_hnf(int n, const Int& p, const IntMatrix& hnf_basis, long denominator_exp = 0);

/// Build from arbitrary generating rows given as num/den pair: rows/den.
PLattice plattice_from_rational_rows(int n, const Int& p, const IntMatrix& rows, const Int& den);

PLattice standard_lattice(int n, const Int& p);

/// mu from nu (throws on nonmonotone input).
std::vector<long> smith_increments(const std::vector<long>& nu);

/// All sublattices of Z^n of index p^e, one per lattice, in a fixed
/// deterministic order (delta compositions lexicographically, then
/// column-major odometer over off-diagonal residues).
void sublattices_p_index(int n, const Int& p, long e,
                         const std::function<void(const PLattice&)>& emit,
                         long max_delta = -1);

std::vector<PLattice> sublattices_p_index(int n, const Int& p, long e, long max_delta = -1);

/// Sublattices with a fixed Hermite diagonal (off-diagonal odometer only).
void sublattices_with_delta(int n, const Int& p, const std::vector<long>& delta,
                            const std::function<void(const PLattice&)>& emit);

/// Compositions of e into n nonnegative parts (each <= max_delta if >= 0),
/// in the same deterministic order the enumerators use.
std::vector<std::vector<long>> delta_compositions(int n, long e, long max_delta = -1);

/// All superlattices of Z^n of index p^e (duals of the index-p^e sublattices),
/// emitted with minimal denominator_exp.
std::vector<PLattice> superlattices_p_index(int n, const Int& p, long e);

/// Dual lattice {x : <x, L> in Z}.
PLattice dual_lattice(const PLattice& L);

/// Homothety-minimal representative inside Z^n: scale so that min nu == 0 and
/// denominator_exp == 0. Idempotent.
PLattice minimal_rep(const PLattice& L);

/// Representative of the homothety class that contains Z^n minimally
/// (Z^n inside L but Z^n not inside p*L).
PLattice minimal_super_rep(const PLattice& L);

} // namespace ehz
