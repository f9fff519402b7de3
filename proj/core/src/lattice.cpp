#include "ehz/lattice.hpp"

#include <sstream>

namespace ehz {

namespace {

std::vector<long> snf_exponents(const IntMatrix& basis, const Int& p) {
    std::vector<long> nu;
    for (const Int& d : snf(basis)) nu.push_back(d == 1 ? 0 : valuation(d, p));
    return nu;
}

} // namespace

bool Lat::contains(const std::vector<Rational>& x) const {
    // Solve z * basis = den * x by back-substitution; the point is in the
    // lattice iff the solution is integral.
    if (static_cast<int>(x.size()) != n) throw std::domain_error("contains: dimension mismatch");
    std::vector<Rational> z(n);
    for (int j = 0; j < n; ++j) {
        Rational acc = x[j] * Rational(den);
        for (int i = 0; i < j; ++i) acc -= z[i] * Rational(basis.at(i, j));
        Rational q = acc / Rational(basis.at(j, j));
        if (!q.is_integer()) return false;
        z[j] = q;
    }
    return true;
}

bool Lat::contains_znn() const {
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> e(n, Rational(0));
        e[i] = 1;
        if (!contains(e)) return false;
    }
    return true;
}

std::string Lat::key() const {
    std::ostringstream os;
    os << n << "|" << den.get_str() << "|" << basis.str();
    return os.str();
}

Lat lat_from_rows(int n, const IntMatrix& rows, const Int& den) {
    if (den == 0) throw std::domain_error("lat_from_rows: zero denominator");
    IntMatrix h = hnf(rows).h;
    Int d = abs(den);
    Int g = d;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) g = gcd(g, h.at(i, j));
    if (g > 1) {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) h.at(i, j) /= g;
        d /= g;
    }
    return Lat{n, h, d};
}

Lat lat_standard(int n) { return Lat{n, IntMatrix::identity(n), Int(1)}; }

PLattice plattice_from_hnf(int n, const Int& p, const IntMatrix& hnf_basis, long denominator_exp) {
    if (hnf_basis.rows() != n || hnf_basis.cols() != n)
        throw std::domain_error("plattice_from_hnf: shape mismatch");
    if (!hnf_basis.is_upper_triangular())
        throw std::domain_error("plattice_from_hnf: not upper triangular");
    PLattice L;
    L.n = n;
    L.p = p;
    L.basis = hnf_basis;
    L.denominator_exp = denominator_exp;
    L.delta.resize(n);
    L.index_exp = 0;
    for (int i = 0; i < n; ++i) {
        L.delta[i] = valuation(hnf_basis.at(i, i), p);
        if (int_pow(p, L.delta[i]) != hnf_basis.at(i, i))
            throw std::domain_error("plattice_from_hnf: diagonal not a p-power");
        L.index_exp += L.delta[i];
    }
    L.nu = snf_exponents(hnf_basis, p);
    L.mu = smith_increments(L.nu);
    return L;
}

PLattice plattice_from_rational_rows(int n, const Int& p, const IntMatrix& rows, const Int& den) {
    if (den == 0) throw std::domain_error("plattice_from_rational_rows: zero denominator");
    long dexp = den == 1 ? 0 : valuation(den, p);
    if (int_pow(p, dexp) != abs(den))
        throw std::domain_error("plattice_from_rational_rows: denominator not a p-power");
    IntMatrix h = hnf(rows).h;
    // Pull out any common p-power so the denominator exponent is minimal.
    long common = -1;
    for (int i = 0; i < n && common != 0; ++i)
        for (int j = 0; j < n && common != 0; ++j) {
            if (h.at(i, j) == 0) continue;
            long v = valuation(h.at(i, j), p);
            common = common < 0 ? v : std::min(common, v);
        }
    long strip = std::min(common < 0 ? 0L : common, dexp < 0 ? 0L : dexp);
    // Only strip as much as the denominator allows; further common powers stay.
    if (strip > 0) {
        Int f = int_pow(p, strip);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h.at(i, j) /= f;
        dexp -= strip;
    }
    return plattice_from_hnf(n, p, h, dexp);
}

PLattice standard_lattice(int n, const Int& p) {
    return plattice_from_hnf(n, p, IntMatrix::identity(n), 0);
}

std::vector<long> smith_increments(const std::vector<long>& nu) {
    for (size_t i = 0; i + 1 < nu.size(); ++i)
        if (nu[i] > nu[i + 1]) throw std::domain_error("smith_increments: not weakly increasing");
    if (!nu.empty() && nu[0] < 0) throw std::domain_error("smith_increments: negative entry");
    size_t n = nu.size();
    std::vector<long> mu(n);
    for (size_t i = 0; i < n; ++i) {
        long hi = nu[n - 1 - i];
        long lo = (n - 1 - i == 0) ? 0 : nu[n - 2 - i];
        mu[i] = hi - lo;
    }
    return mu;
}

std::vector<std::vector<long>> delta_compositions(int n, long e, long max_delta) {
    if (e < 0) throw std::domain_error("delta_compositions: negative exponent");
    std::vector<std::vector<long>> out;
    std::vector<long> delta(n, 0);
    std::function<void(int, long)> rec = [&](int pos, long rem) {
        if (pos == n - 1) {
            if (max_delta >= 0 && rem > max_delta) return;
            delta[pos] = rem;
            out.push_back(delta);
            delta[pos] = 0;
            return;
        }
        long cap = max_delta >= 0 ? std::min(rem, max_delta) : rem;
        for (long d = 0; d <= cap; ++d) {
            delta[pos] = d;
            rec(pos + 1, rem - d);
        }
        delta[pos] = 0;
    };
    rec(0, e);
    return out;
}

void sublattices_with_delta(int n, const Int& p, const std::vector<long>& delta,
                            const std::function<void(const PLattice&)>& emit) {
    // Off-diagonal odometer: entry (i,j), i<j, runs over [0, p^{delta_j}).
    std::vector<Int> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = int_pow(p, delta[i]);
    std::vector<std::pair<int, int>> slots;
    for (int j = 1; j < n; ++j)
        if (delta[j] > 0)
            for (int i = 0; i < j; ++i) slots.push_back({i, j});
    IntMatrix b(n, n);
    for (int i = 0; i < n; ++i) b.at(i, i) = diag[i];
    std::function<void(size_t)> rec_off = [&](size_t s) {
        if (s == slots.size()) {
            emit(plattice_from_hnf(n, p, b, 0));
            return;
        }
        auto [i, j] = slots[s];
        Int lim = diag[j];
        for (Int v = 0; v < lim; ++v) {
            b.at(i, j) = v;
            rec_off(s + 1);
        }
        b.at(i, j) = 0;
    };
    rec_off(0);
}

void sublattices_p_index(int n, const Int& p, long e,
                         const std::function<void(const PLattice&)>& emit,
                         long max_delta) {
    for (const auto& delta : delta_compositions(n, e, max_delta))
        sublattices_with_delta(n, p, delta, emit);
}

std::vector<PLattice> sublattices_p_index(int n, const Int& p, long e, long max_delta) {
    std::vector<PLattice> out;
    sublattices_p_index(n, p, e, [&](const PLattice& L) { out.push_back(L); }, max_delta);
    return out;
}

PLattice dual_lattice(const PLattice& L) {
    // Basis of the dual: rows of (B^t)^{-1} = adj(B)^t / det(B), carried over
    // the existing denominator: dual of p^{-d} K is p^{d} K^*.
    IntMatrix adjT = L.basis.adjugate().transpose();
    Int det = L.basis.det();
    if (det < 0) { adjT = Int(-1) * adjT; det = -det; }
    // dual(p^{-d} rowspan(B)) = p^{d} rowspan((B^t)^{-1}) = rowspan(p^d adj(B)^t)/det.
    Int scale = int_pow(L.p, L.denominator_exp);
    return plattice_from_rational_rows(L.n, L.p, scale * adjT, det);
}

std::vector<PLattice> superlattices_p_index(int n, const Int& p, long e) {
    std::vector<PLattice> out;
    sublattices_p_index(n, p, e, [&](const PLattice& L) { out.push_back(dual_lattice(L)); });
    return out;
}

PLattice minimal_rep(const PLattice& L) {
    // Scale the class so the representative sits inside Z^n with min nu == 0:
    // strip p^{nu_1} from the integer part, then drop the denominator.
    long nu1 = L.nu.empty() ? 0 : L.nu[0];
    IntMatrix b = L.basis;
    if (nu1 > 0) {
        Int f = int_pow(L.p, nu1);
        for (int i = 0; i < L.n; ++i)
            for (int j = 0; j < L.n; ++j) b.at(i, j) /= f;
    }
    return plattice_from_hnf(L.n, L.p, b, 0);
}

PLattice minimal_super_rep(const PLattice& L) {
    // Scale so that Z^n is contained minimally: nu_max(M) == denominator_exp
    // after normalization, i.e. M contains Z^n, p^{-1}(integer part) does not.
    PLattice m = minimal_rep(L);
    long numax = m.nu.empty() ? 0 : m.nu.back();
    // p^{-numax} * m contains Z^n minimally.
    return plattice_from_rational_rows(m.n, m.p, m.basis, int_pow(m.p, numax));
}

} // namespace ehz
