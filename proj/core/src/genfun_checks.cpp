#include "ehz/genfun.hpp"

namespace ehz {

namespace {

/// Substitute every variable in `names` by its inverse.
RationalFunction invert_vars(const RationalFunction& f, const std::vector<std::string>& names) {
    SubstitutionMap s;
    for (auto& v : names) s.set(v, MultiPoly::var(v, -1));
    return s.apply(f);
}

} // namespace

bool reciprocity_check(ReciprocityKind kind, int n, int l) {
    switch (kind) {
    case ReciprocityKind::HS: {
        // HS_{n,p}(X^-1, Y^-1)|_{p -> 1/p} = (-1)^n p^C(n,2) X_n Y_1...Y_n HS_{n,p}(X, Y).
        RationalFunction hs;
        if (n == 1) {
            MultiPoly den(Rational(1));
            den.add_term(Monomial::var("X_1") * Monomial::var("Y_1"), Rational(-1));
            hs = RationalFunction(MultiPoly(Rational(1)), den);
        } else if (n == 2) {
            hs = reference_hs2();
        } else {
            throw std::domain_error("reciprocity_check(HS): closed form available for n <= 2");
        }
        std::vector<std::string> vars{"p"};
        for (int i = 1; i <= n; ++i) {
            vars.push_back("X_" + std::to_string(i));
            vars.push_back("Y_" + std::to_string(i));
        }
        RationalFunction lhs = invert_vars(hs, vars);
        Monomial m = Monomial::var("p", binom2(n)) * Monomial::var("X_" + std::to_string(n));
        for (int i = 1; i <= n; ++i) m = m * Monomial::var("Y_" + std::to_string(i));
        Rational sign(n % 2 == 0 ? 1 : -1);
        RationalFunction rhs = RationalFunction(MultiPoly(m, sign)) * hs;
        return lhs.equals(rhs);
    }
    case ReciprocityKind::Z: {
        // W_{n,l}(X^-1, Y^-1) = (-1)^{n+1} X^{n^2+l} Y^2 W_{n,l}(X, Y).
        RationalFunction w = n <= 4 ? reference_zeta_C(n, l) : zeta_C_closed(n, l);
        RationalFunction lhs = invert_vars(w, {"X", "Y"});
        Rational sign((n + 1) % 2 == 0 ? 1 : -1);
        Monomial m = Monomial::var("X", static_cast<long>(n) * n + l) * Monomial::var("Y", 2);
        RationalFunction rhs = RationalFunction(MultiPoly(m, sign)) * w;
        return lhs.equals(rhs);
    }
    case ReciprocityKind::R: {
        // R_{n,p}(x^-1, X^-1)|_{p -> 1/p} = (-1)^{n+1} p^C(n,2) x_0^2 x_1..x_n X^2 R.
        RationalFunction r;
        if (n == 1) {
            Monomial x0 = Monomial::var("x_0"), x1 = Monomial::var("x_1"), X = Monomial::var("X");
            MultiPoly d1(Rational(1)), d2(Rational(1));
            d1.add_term(x0 * X, Rational(-1));
            d2.add_term(x0 * x1 * X, Rational(-1));
            r = RationalFunction(MultiPoly(Rational(1)), d1 * d2);
        } else if (n == 2) {
            r = reference_r2();
        } else {
            throw std::domain_error("reciprocity_check(R): closed form available for n <= 2");
        }
        std::vector<std::string> vars{"p", "X"};
        for (int i = 0; i <= n; ++i) vars.push_back("x_" + std::to_string(i));
        RationalFunction lhs = invert_vars(r, vars);
        Monomial m = Monomial::var("p", binom2(n)) * Monomial::var("x_0", 2) * Monomial::var("X", 2);
        for (int i = 1; i <= n; ++i) m = m * Monomial::var("x_" + std::to_string(i));
        Rational sign((n + 1) % 2 == 0 ? 1 : -1);
        RationalFunction rhs = RationalFunction(MultiPoly(m, sign)) * r;
        return lhs.equals(rhs);
    }
    }
    throw std::logic_error("reciprocity_check: unreachable");
}

} // namespace ehz
