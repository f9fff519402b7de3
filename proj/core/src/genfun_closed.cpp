#include "ehz/genfun.hpp"

#include <functional>

namespace ehz {

namespace {

MultiPoly one_minus(const Monomial& m) {
    MultiPoly f(Rational(1));
    f.add_term(m, Rational(-1));
    return f;
}

MultiPoly laurent_Z(long e) { return MultiPoly::var("Z", e); }

/// Gaussian multinomial binom(n-1, S)_{Z^{-1}} as a Laurent polynomial in Z.
MultiPoly multinomial_Zinv(long n1, const std::set<long>& S) {
    UniPoly q = gaussian_multinomial(n1, S);
    MultiPoly r;
    for (long k = 0; k <= q.degree(); ++k)
        r.add_term(Monomial::var("Z", -k), q.coeff(k));
    return r;
}

struct GTerm {
    MultiPoly num;     // product of the monomial numerators
    FactorMap den;     // binomial factors
};

/// The product term G_{n,I,k}: factors without Y for j < k, with Y for j >= k.
GTerm g_term(int n, const std::vector<long>& I, long k) {
    GTerm g;
    g.num = MultiPoly(Rational(1));
    for (size_t j = 0; j < I.size(); ++j) {
        long i = I[j];
        bool with_Y = static_cast<long>(j + 1) >= k;
        long ze = with_Y ? i * (n - i) : i * (n - i - 1);
        Monomial m = Monomial::var("Z", ze) * Monomial::var("X_" + std::to_string(i));
        if (with_Y) m = m * Monomial::var("Y");
        g.num *= MultiPoly(m);
        g.den[one_minus(m)] += 1;
    }
    return g;
}

std::set<long> I_shifted(const std::vector<long>& I, long k) {
    // First k-1 elements as-is, the rest lowered by one.
    std::set<long> s;
    for (size_t j = 0; j < I.size(); ++j)
        s.insert(static_cast<long>(j + 1) < k ? I[j] : I[j] - 1);
    return s;
}

} // namespace

namespace {

void add_W_terms(int n, const std::set<long>& Iset, FactoredSum& sum) {
    for (long i : Iset)
        if (i < 1 || i > n - 1) throw std::domain_error("W_nI: I must lie in [n-1]");
    std::vector<long> I(Iset.begin(), Iset.end());
    long ell = static_cast<long>(I.size());
    auto chain_i = [&](long k) { return k == ell + 1 ? n : I[k - 1]; }; // i_k, i_{ell+1} = n

    // First sum: k = 1..ell+1.
    for (long k = 1; k <= ell + 1; ++k) {
        GTerm g = g_term(n, I, k);
        MultiPoly coef = laurent_Z(-(n - chain_i(k))) * multinomial_Zinv(n - 1, I_shifted(I, k));
        sum.add(coef * g.num, g.den);
    }
    // Second sum: k = 1..ell, with the extra Y-free denominator at i_k. The
    // unbound j is read as k, and the multinomial rides inside the m-sum as
    // I^{(m)}; both choices are pinned by the enumeration oracle (the readings
    // coincide for n <= 3 and diverge first at n = 4, where only this one
    // matches the lattice counts).
    for (long k = 1; k <= ell; ++k) {
        GTerm g = g_term(n, I, k);
        long ik = chain_i(k);
        Monomial extra = Monomial::var("Z", ik * (n - ik - 1)) * Monomial::var("X_" + std::to_string(ik));
        g.den[one_minus(extra)] += 1;
        MultiPoly msum;
        for (long m = k + 1; m <= ell + 1; ++m)
            msum += laurent_Z(-(n - chain_i(m))) * multinomial_Zinv(n - 1, I_shifted(I, m));
        MultiPoly coef = (MultiPoly(Rational(1)) - laurent_Z(-ik)) * msum;
        sum.add(coef * g.num, g.den);
    }
}

} // namespace

RationalFunction W_nI(int n, const std::set<long>& Iset) {
    FactoredSum sum;
    add_W_terms(n, Iset, sum);
    return sum.value();
}

RationalFunction hs_bar_closed(int n) {
    // All 2^{n-1} summands share one factored denominator, so the sum stays
    // at the true common denominator instead of the pairwise product.
    FactoredSum sum;
    long full = 1L << (n - 1);
    for (long mask = 0; mask < full; ++mask) {
        std::set<long> I;
        for (int b = 0; b < n - 1; ++b)
            if (mask & (1L << b)) I.insert(b + 1);
        add_W_terms(n, I, sum);
    }
    return sum.value();
}

RationalFunction psi_nl(int n, int l, const RationalFunction& f, const Int& p) {
    SubstitutionMap s;
    s.set("X", MultiPoly::var("t", n));
    auto pp = [&](long e) {
        return p == 0 ? MultiPoly::var("p", e)
                      : MultiPoly(rat_pow(Rational(p), e));
    };
    s.set("x_0", pp(l));
    for (int i = 1; i < n; ++i) s.set("x_" + std::to_string(i), pp(i));
    s.set("x_" + std::to_string(n), pp(n - l));
    // Reject variables outside the (p, x_0..x_n, X) alphabet.
    auto check = [&](const MultiPoly& g) {
        for (auto& [m, c] : g.terms())
            for (auto& [v, e] : m.entries()) {
                const std::string& name = VarPool::name(v);
                if (name != "p" && name != "X" && name.rfind("x_", 0) != 0)
                    throw std::domain_error("psi_nl: unknown variable " + name);
            }
    };
    check(f.num());
    check(f.den());
    return s.apply(f);
}

RationalFunction zeta_C_closed(int n, int l) {
    if (l < 0 || l > 2 * n) throw std::domain_error("zeta_C_closed: l outside [2n]_0");
    // Substitute into sum_I W_{n,I}: Z -> X, X_i -> X^{C(i+1,2)+l} Y, Y -> X^{-l};
    // divide by (1 - X^l Y)(1 - X^{C(n+1,2)} Y). Result in (X, Y), Y = p^{-ns}.
    SubstitutionMap s;
    s.set("Z", MultiPoly::var("X"));
    for (int i = 1; i <= n; ++i) {
        long c = static_cast<long>(i) * (i + 1) / 2;
        s.set("X_" + std::to_string(i),
              MultiPoly(Monomial::var("X", c + l) * Monomial::var("Y")));
    }
    s.set("Y", MultiPoly::var("X", -l));
    RationalFunction w = s.apply(hs_bar_closed(n));
    MultiPoly pre1 = one_minus(Monomial::var("X", l) * Monomial::var("Y"));
    MultiPoly pre2 = one_minus(Monomial::var("X", binom2(n + 1)) * Monomial::var("Y"));
    return w / RationalFunction(pre1 * pre2);
}

RationalFunction zeta_A_closed(int n, int l) {
    if (l < 0 || l > n) throw std::domain_error("zeta_A_closed: l outside [n]_0");
    MultiPoly den = one_minus(Monomial::var("p", l) * Monomial::var("t"));
    for (int k = 1; k <= n - 1; ++k)
        den *= one_minus(Monomial::var("p", k) * Monomial::var("t"));
    return RationalFunction(MultiPoly(Rational(1)), den);
}

std::vector<long> zeta_A_shifts(int n, int l) {
    std::vector<long> shifts{static_cast<long>(l)};
    for (long k = 1; k <= n - 1; ++k) shifts.push_back(k);
    return shifts;
}

namespace {

/// Chains of nonempty proper subsets of [n] (the order complex of the
/// barycentric subdivision of the boundary of the simplex on [n]).
void for_each_chain(int n, const std::function<void(const std::vector<long>&)>& emit) {
    long full = (1L << n) - 1;
    std::vector<long> subsets;
    for (long s = 1; s < full; ++s) subsets.push_back(s); // proper nonempty
    std::vector<long> chain;
    std::function<void(size_t)> rec = [&](size_t start) {
        emit(chain);
        for (size_t i = start; i < subsets.size(); ++i) {
            if (!chain.empty()) {
                long prev = chain.back(), s = subsets[i];
                if ((prev & s) != prev || prev == s) continue; // need strict superset
            }
            chain.push_back(subsets[i]);
            rec(i + 1);
            chain.pop_back();
        }
    };
    rec(0);
}

Monomial phi_y(int n, long subset_mask, int l_unused = 0) {
    (void)l_unused;
    Monomial m = Monomial::var("x_0") * Monomial::var("X");
    for (int i = 0; i < n; ++i)
        if (subset_mask & (1L << i)) m = m * Monomial::var("x_" + std::to_string(i + 1));
    return m;
}

} // namespace

RationalFunction sr_hilbert(int n) {
    if (n > 4)
        throw std::domain_error("sr_hilbert: closed form supported for n <= 4; use sr_hilbert_series");
    FactoredSum sum;
    for_each_chain(n, [&](const std::vector<long>& chain) {
        MultiPoly num(Rational(1));
        FactorMap den;
        for (long s : chain) {
            Monomial a = phi_y(n, s);
            num *= MultiPoly(a);
            den[one_minus(a)] += 1;
        }
        sum.add(num, den);
    });
    return sum.value();
}

MultiPoly sr_hilbert_series(int n, long order) {
    MultiPoly total;
    for_each_chain(n, [&](const std::vector<long>& chain) {
        // prod a/(1-a) expanded to X-order `order`: each factor contributes
        // a^j, j >= 1; iterate exponent tuples with total X-degree <= order.
        std::function<void(size_t, long, const MultiPoly&)> rec =
            [&](size_t idx, long used, const MultiPoly& acc) {
                if (idx == chain.size()) {
                    total += acc;
                    return;
                }
                Monomial a = phi_y(n, chain[idx]);
                for (long j = 1; used + j <= order; ++j)
                    rec(idx + 1, used + j, acc * MultiPoly(a.pow(j)));
            };
        if (chain.empty()) total += MultiPoly(Rational(1));
        else rec(0, 0, MultiPoly(Rational(1)));
    });
    return total.truncated({"X"}, order);
}

bool eulerian_check(int n, long order) {
    // f-vector of the chain complex; the longest chain has n-1 subsets.
    std::vector<Int> f(n, Int(0)); // f[k] = #chains of k subsets
    for_each_chain(n, [&](const std::vector<long>& chain) {
        f.at(chain.size()) += 1;
    });
    // sum_k f_k X^k (1-X)^{n-1-k} must equal E_n(X).
    UniPoly En = eulerian_poly(n);
    UniPoly lhs("X");
    UniPoly one_minus_X({Rational(1), Rational(-1)}, "X");
    for (int k = 0; k <= n - 1; ++k) {
        UniPoly term = UniPoly::constant(Rational(f[k]), "X");
        for (long j = 0; j < k; ++j) term = term * UniPoly({Rational(0), Rational(1)}, "X");
        for (long j = 0; j < n - 1 - k; ++j) term = term * one_minus_X;
        lhs += term;
    }
    if (lhs != En) return false;
    // Series check: E_n(X)/(1-X)^{n+1} = sum (k+1)^n X^k.
    RationalFunction ehr(MultiPoly::from_unipoly(En, "X"),
                         one_minus(Monomial::var("X")).pow(n + 1));
    MultiPoly series = series_expand(ehr, {"X"}, order);
    for (long k = 0; k <= order; ++k) {
        Rational want(int_pow(Int(k + 1), n));
        if (series.coeff(Monomial::var("X", k)) != want) return false;
    }
    return true;
}

} // namespace ehz
