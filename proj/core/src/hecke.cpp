#include "ehz/hecke.hpp"

#include "ehz/parallel.hpp"

#include <algorithm>
#include <functional>

namespace ehz {

namespace {

IntMatrix symplectic_J(int n) {
    IntMatrix J(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        J.at(i, n + i) = 1;
        J.at(n + i, i) = -1;
    }
    return J;
}

/// p^{-alpha} * H J H^t must be integral for H to span (p^alpha times) a
/// symplectic similitude lattice; unimodularity is then automatic since
/// |det| = 1 after the scaling.
bool symplectic_scaled_integral(const IntMatrix& H, const Int& p, long alpha) {
    int d = H.rows();
    IntMatrix S = H * symplectic_J(d / 2) * H.transpose();
    Int pa = int_pow(p, alpha);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!mpz_divisible_p(S.at(i, j).get_mpz_t(), pa.get_mpz_t())) return false;
    return true;
}

std::vector<long> snf_pattern(const IntMatrix& m, const Int& p) {
    std::vector<long> v;
    for (const Int& d : snf(m)) v.push_back(d == 1 ? 0 : valuation(d, p));
    return v;
}

std::vector<long> dk_pattern(int n, int k) {
    // Elementary divisor exponents of the generator with index k.
    std::vector<long> v;
    if (k == 0) {
        v.assign(n, 0);
        v.insert(v.end(), n, 1);
    } else {
        v.assign(n - k, 0);
        v.insert(v.end(), 2 * k, 1);
        v.insert(v.end(), n - k, 2);
    }
    return v;
}

void enumerate_hnf(int dim, const Int& p, long e, long max_delta,
                   const std::function<void(const IntMatrix&)>& emit) {
    sublattices_p_index(dim, p, e, [&](const PLattice& L) { emit(L.basis); }, max_delta);
}

} // namespace

Lat CosetSet::superlattice(size_t i) const {
    // rowspan((H^t)^{-1}) = rowspan(adj(H)^t / det H).
    return lattice_of_inverse(labels[i].transpose());
}

CosetSet typeA_cosets(int n, const Int& p, int k) {
    if (k < 0 || k > n) throw std::domain_error("typeA_cosets: k outside [0,n]");
    CosetSet cs;
    cs.kind = CosetKind::TypeA;
    cs.n = n;
    cs.p = p;
    cs.k = k;
    cs.dim = n;
    std::vector<long> want(n - k, 0);
    want.insert(want.end(), k, 1);
    enumerate_hnf(n, p, k, 1, [&](const IntMatrix& H) {
        if (snf_pattern(H, p) == want) cs.labels.push_back(H);
    });
    return cs;
}

CosetSet typeC_cosets(int n, const Int& p, int k) {
    if (k < 0 || k > n) throw std::domain_error("typeC_cosets: k outside [0,n]");
    CosetSet cs;
    cs.kind = CosetKind::TypeC;
    cs.n = n;
    cs.p = p;
    cs.k = k;
    cs.dim = 2 * n;
    cs.similitude_exp = k == 0 ? 1 : 2;
    long det_exp = k == 0 ? n : 2 * n;
    std::vector<long> want = dk_pattern(n, k);
    enumerate_hnf(2 * n, p, det_exp, cs.similitude_exp, [&](const IntMatrix& H) {
        if (!symplectic_scaled_integral(H, p, cs.similitude_exp)) return;
        if (snf_pattern(H, p) == want) cs.labels.push_back(H);
    });
    return cs;
}

CosetSet typeC_similitude_cosets(int n, const Int& p, long alpha) {
    if (alpha < 0) throw std::domain_error("typeC_similitude_cosets: negative exponent");
    CosetSet cs;
    cs.kind = CosetKind::TypeC;
    cs.n = n;
    cs.p = p;
    cs.k = -1;
    cs.dim = 2 * n;
    cs.similitude_exp = alpha;
    enumerate_hnf(2 * n, p, n * alpha, alpha, [&](const IntMatrix& H) {
        if (symplectic_scaled_integral(H, p, alpha)) cs.labels.push_back(H);
    });
    return cs;
}

UniPoly hecke_act(const CosetSet& cs, const LatticePolytope& P, bool via_transform) {
    if (P.n != cs.dim) throw std::domain_error("hecke_act: dimension mismatch");
    // Per-coset Ehrhart polynomials in parallel, reduced in index order.
    std::vector<UniPoly> parts = parallel_map<UniPoly>(cs.size(), [&](size_t i) {
        if (via_transform) return ehrhart(transform(cs.rep(i), P)).poly;
        return ehrhart(P, cs.superlattice(i)).poly;
    });
    UniPoly sum("T");
    for (auto& part : parts) sum += part;
    return sum;
}

std::vector<std::vector<std::vector<long>>> grassmannian_rref(int n, int k, long p) {
    std::vector<std::vector<std::vector<long>>> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // Choose pivot columns, then odometer over the free entries.
    std::vector<int> piv(k);
    std::function<void(int, int)> choose = [&](int start, int idx) {
        if (idx == k) {
            std::vector<std::pair<int, int>> free_slots; // (row, col)
            for (int r = 0; r < k; ++r)
                for (int c = piv[r] + 1; c < n; ++c) {
                    bool is_pivot_col = false;
                    for (int rr = 0; rr < k; ++rr)
                        if (piv[rr] == c) { is_pivot_col = true; break; }
                    if (!is_pivot_col) free_slots.push_back({r, c});
                }
            std::vector<std::vector<long>> m(k, std::vector<long>(n, 0));
            for (int r = 0; r < k; ++r) m[r][piv[r]] = 1;
            std::function<void(size_t)> odo = [&](size_t s) {
                if (s == free_slots.size()) {
                    out.push_back(m);
                    return;
                }
                auto [r, c] = free_slots[s];
                for (long v = 0; v < p; ++v) {
                    m[r][c] = v;
                    odo(s + 1);
                }
                m[r][c] = 0;
            };
            odo(0);
            return;
        }
        for (int c = start; c <= n - (k - idx); ++c) {
            piv[idx] = c;
            choose(c + 1, idx + 1);
        }
    };
    choose(0, 0);
    return out;
}

namespace {

long fp_rank(std::vector<std::vector<long>> m, long p) {
    if (m.empty()) return 0;
    int rows = m.size(), cols = m[0].size();
    auto inv_mod = [&](long a) {
        long t = 1, base = ((a % p) + p) % p;
        for (long e = p - 2; e > 0; e >>= 1) {
            if (e & 1) t = t * base % p;
            base = base * base % p;
        }
        return t;
    };
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        long inv = inv_mod(m[r][c]);
        for (int j = 0; j < cols; ++j) m[r][j] = (m[r][j] % p + p) % p * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            long f = ((m[i][c] % p) + p) % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                m[i][j] = ((m[i][j] - f * m[r][j]) % p + p) % p;
        }
        ++r;
    }
    return r;
}

} // namespace

Rational grassmannian_intersection_sum(int n, int k, const std::vector<std::vector<long>>& U, long p) {
    // #(U cap W) = p^{dim U + k - rank([U; W])}.
    long dimU = fp_rank(U, p);
    Rational total(0);
    for (auto& W : grassmannian_rref(n, k, p)) {
        std::vector<std::vector<long>> stack = U;
        for (auto& row : W) stack.push_back(row);
        long r = fp_rank(stack, p);
        total += Rational(int_pow(Int(p), dimU + k - r));
    }
    return total;
}

Rational nu_A(int n, int k, int l, const Int& p, NuAMode mode, const LatticePolytope* P) {
    if (k < 0 || k > n || l < 0 || l > n) throw std::domain_error("nu_A: indices outside [0,n]");
    switch (mode) {
    case NuAMode::Formula: {
        Rational q(p);
        UniPoly b1 = gaussian_binomial(n - 1, k);
        UniPoly b2 = gaussian_binomial(n - 1, k - 1);
        return Rational(int_pow(p, k)) * b1(q) + rat_pow(Rational(p), l) * b2(q);
    }
    case NuAMode::Grassmannian: {
        std::vector<std::vector<long>> U;
        for (int i = 0; i < l; ++i) {
            std::vector<long> e(n, 0);
            e[i] = 1;
            U.push_back(e);
        }
        return grassmannian_intersection_sum(n, k, U, p.get_si());
    }
    case NuAMode::Action: {
        if (!P) throw std::domain_error("nu_A: action mode needs a polytope");
        EhrhartPolynomial base = ehrhart(*P);
        if (base.coeff(l).is_zero())
            throw std::domain_error("nu_A: ratio undefined, c_l(P) = 0");
        UniPoly acted = hecke_act(typeA_cosets(n, p, k), *P);
        return acted.coeff(l) / base.coeff(l);
    }
    }
    throw std::logic_error("nu_A: unreachable");
}

Rational nu_C(int n, int k, int l, const Int& p, const LatticePolytope& P) {
    if (P.n != 2 * n) throw std::domain_error("nu_C: polytope dimension must be 2n");
    EhrhartPolynomial base = ehrhart(P);
    if (base.coeff(l).is_zero()) throw std::domain_error("nu_C: ratio undefined, c_l(P) = 0");
    UniPoly acted = hecke_act(typeC_cosets(n, p, k), P);
    return acted.coeff(l) / base.coeff(l);
}

UniPoly nu_C_reference(int k, int l) {
    auto mono = [](int c, int e) { return UniPoly::monomial(Rational(c), e, "p"); };
    if (k == 0) {
        switch (l) {
        case 0: return mono(1, 3) + mono(1, 2) + mono(1, 1) + mono(1, 0);
        case 1: return mono(1, 3) + mono(2, 2) + mono(1, 1);
        case 2: return mono(2, 3) + mono(2, 2);
        case 3: return mono(1, 4) + mono(2, 3) + mono(1, 2);
        case 4: return mono(1, 5) + mono(1, 4) + mono(1, 3) + mono(1, 2);
        }
    } else if (k == 1) {
        switch (l) {
        case 0: return mono(1, 4) + mono(1, 3) + mono(1, 2) + mono(1, 1);
        case 1: return mono(2, 4) + mono(1, 3) + mono(2, 2) + mono(-1, 1);
        case 2: return mono(1, 5) + mono(3, 4) + mono(1, 3) + mono(-1, 2);
        case 3: return mono(2, 6) + mono(1, 5) + mono(2, 4) + mono(-1, 3);
        case 4: return mono(1, 8) + mono(1, 7) + mono(1, 6) + mono(1, 5);
        }
    }
    throw std::domain_error("nu_C_reference: only n=2, k in {0,1}, l in [4]_0");
}

EigenReport eigen_check(int n, const Int& p, int l, const LatticePolytope& P,
                        const CosetSet& op, std::optional<Rational> expected) {
    if (op.n != n || op.p != p)
        throw std::domain_error("eigen_check: operator does not match (n, p)");
    EigenReport rep;
    rep.operator_id = (op.kind == CosetKind::TypeA ? "A(" : "C(") + std::to_string(op.k) + ")";
    rep.ell = l;
    rep.base = ehrhart(P).poly;
    if (rep.base.coeff(l).is_zero()) throw std::domain_error("eigen_check: c_l(P) = 0");
    rep.acted = hecke_act(op, P);
    rep.eigenvalue = rep.acted.coeff(l) / rep.base.coeff(l);
    rep.vertices_checked = 1;

    // Check the eigen-equation at translated vertices g: the value at a coset
    // h is c_l(E^M(P)) with M = rowspan((gh)^{-1}); vertices are taken from a
    // similitude/Hecke coset set of the same group.
    const CosetSet& vertices = op;
    for (size_t vi = 0; vi < vertices.size() && rep.vertices_checked < 4; ++vi) {
        IntMatrix g = vertices.rep(vi);
        Rational vertex_value;
        {
            EhrhartPolynomial e = ehrhart(P, lattice_of_inverse(g));
            vertex_value = e.poly.coeff(l);
        }
        Rational sum(0);
        for (size_t hi = 0; hi < op.size(); ++hi) {
            IntMatrix gh = g * op.rep(hi);
            EhrhartPolynomial e = ehrhart(P, lattice_of_inverse(gh));
            sum += e.poly.coeff(l);
        }
        if (sum != rep.eigenvalue * vertex_value)
            throw std::logic_error("eigen_check: eigen-equation fails at a translated vertex");
        ++rep.vertices_checked;
    }
    rep.matched_formula = !expected || *expected == rep.eigenvalue;
    return rep;
}

Rational superlattice_ratio_sum(int n, const Int& p, long m, int l, const LatticePolytope& P) {
    EhrhartPolynomial base = ehrhart(P);
    if (base.coeff(l).is_zero())
        throw std::domain_error("superlattice_ratio_sum: c_l(P) = 0");
    Rational sum(0);
    HRep H = hrep(P);
    for (const PLattice& M : superlattices_p_index(n, p, m)) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (long t = 0; t <= n; ++t)
            pts.push_back({Rational(t), Rational(count_points(P, H, t, M.lat()))});
        UniPoly E = lagrange_interpolate(pts, "T");
        sum += E.coeff(l);
    }
    return sum / base.coeff(l);
}

bool tamagawa_check(int n, int l, const Int& p, long order, const LatticePolytope& P) {
    // a(X) = sum_m a_m X^m from enumeration, b(X) = sum_k (-1)^k p^C(k,2) nu X^k.
    UniPoly a("X"), b("X");
    for (long m = 0; m <= order; ++m)
        a += UniPoly::monomial(superlattice_ratio_sum(n, p, m, l, P), m, "X");
    for (int k = 0; k <= n; ++k) {
        Rational c = Rational(int_pow(p, binom2(k))) * nu_A(n, k, l, p, NuAMode::Formula);
        if (k % 2 == 1) c = -c;
        b += UniPoly::monomial(c, k, "X");
    }
    UniPoly prod = (a * b).truncated(order);
    return prod == UniPoly::constant(1, "X");
}

} // namespace ehz
