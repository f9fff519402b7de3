#pragma once

#include "ehz/multipoly.hpp"
#include "ehz/unipoly.hpp"
#include <set>
#include <vector>

namespace ehz {

/// Gaussian binomial coefficient as a polynomial in q.
/// Returns 0 when k < 0 or k > n.
UniPoly gaussian_binomial(long n, long k);

/// Gaussian multinomial for a dimension set I inside [0..n]: the number of
/// flags of subspaces of F_q^n with dimension set I. Computed as the chain
/// product of Gaussian binomials; elements equal to 0 or n are dropped first.
UniPoly gaussian_multinomial(long n, std::set<long> I);

/// Eulerian polynomial E_n(X), computed literally by iterating the n!
/// permutations and counting descents.
UniPoly eulerian_poly(long n);

/// Elementary symmetric polynomial s_{n,k} in the given variables
/// (0 for k < 0 or k > n, 1 for k == 0).
MultiPoly elementary_symmetric(long n, long k, const std::vector<std::string>& vars);

/// Unique interpolating polynomial through the given points; throws on
/// duplicate abscissae.
UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             const std::string& var = "T");

long binom2(long k); // k*(k-1)/2

} // namespace ehz
