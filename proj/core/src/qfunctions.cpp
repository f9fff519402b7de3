#include "ehz/qfunctions.hpp"

#include <algorithm>
#include <numeric>

namespace ehz {

long binom2(long k) { return k * (k - 1) / 2; }

UniPoly gaussian_binomial(long n, long k) {
    if (n < 0) throw std::domain_error("gaussian_binomial: n < 0");
    if (k < 0 || k > n) return UniPoly("q");
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k].
    std::vector<UniPoly> row(1, UniPoly::constant(1, "q"));
    for (long i = 1; i <= n; ++i) {
        std::vector<UniPoly> next(i + 1, UniPoly("q"));
        for (long j = 0; j <= i; ++j) {
            UniPoly acc("q");
            if (j > 0) acc += row[j - 1];
            if (j < i) acc += UniPoly::monomial(1, j, "q") * row[j];
            next[j] = acc;
        }
        row = std::move(next);
    }
    return row[k];
}

UniPoly gaussian_multinomial(long n, std::set<long> I) {
    for (long i : I)
        if (i < 0 || i > n) throw std::domain_error("gaussian_multinomial: element outside [0,n]");
    I.erase(0);
    I.erase(n);
    UniPoly r = UniPoly::constant(1, "q");
    std::vector<long> chain(I.begin(), I.end());
    chain.push_back(n);
    for (size_t j = 0; j + 1 < chain.size(); ++j)
        r = r * gaussian_binomial(chain[j + 1], chain[j]);
    return r;
}

UniPoly eulerian_poly(long n) {
    if (n < 1) throw std::domain_error("eulerian_poly: n < 1");
    std::vector<long> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Rational> counts(n, Rational(0));
    do {
        long des = 0;
        for (long i = 0; i + 1 < n; ++i)
            if (perm[i] > perm[i + 1]) ++des;
        counts[des] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return UniPoly(std::move(counts), "X");
}

MultiPoly elementary_symmetric(long n, long k, const std::vector<std::string>& vars) {
    if (static_cast<long>(vars.size()) < n) throw std::domain_error("elementary_symmetric: too few variables");
    if (k < 0 || k > n) return MultiPoly();
    // DP over prefixes: e[j] after i vars = s_{i,j}.
    std::vector<MultiPoly> e(k + 1);
    e[0] = MultiPoly(Rational(1));
    for (long i = 0; i < n; ++i) {
        MultiPoly x = MultiPoly::var(vars[i]);
        for (long j = std::min(k, i + 1); j >= 1; --j)
            e[j] += e[j - 1] * x;
    }
    return e[k];
}

UniPoly lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                             const std::string& var) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("lagrange_interpolate: duplicate abscissa");
    UniPoly result(var);
    for (size_t i = 0; i < points.size(); ++i) {
        UniPoly basis = UniPoly::constant(1, var);
        Rational denom(1);
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly({-points[j].first, Rational(1)}, var);
            denom *= points[i].first - points[j].first;
        }
        result += basis * UniPoly::constant(points[i].second / denom, var);
    }
    return result;
}

} // namespace ehz
