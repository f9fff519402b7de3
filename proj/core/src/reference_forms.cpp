#include "ehz/genfun.hpp"

namespace ehz {

namespace {

Monomial XY(long a, long b = 1) { return Monomial::var("X", a) * Monomial::var("Y", b); }

MultiPoly one_minus_m(const Monomial& m) {
    MultiPoly f(Rational(1));
    f.add_term(m, Rational(-1));
    return f;
}

MultiPoly mono(int c, const Monomial& m) { return MultiPoly(m, Rational(c)); }

} // namespace

RationalFunction reference_hs2() {
    Monomial X1 = Monomial::var("X_1"), X2 = Monomial::var("X_2");
    Monomial Y1 = Monomial::var("Y_1"), Y2 = Monomial::var("Y_2");
    Monomial P = Monomial::var("p");
    MultiPoly num = one_minus_m(X1.pow(2) * Y1 * Y2);
    MultiPoly den = one_minus_m(X1 * Y1) * one_minus_m(P * X1 * Y2) * one_minus_m(X2 * Y1 * Y2);
    return RationalFunction(num, den);
}

RationalFunction reference_r2() {
    Monomial x0 = Monomial::var("x_0"), x1 = Monomial::var("x_1"), x2 = Monomial::var("x_2");
    Monomial X = Monomial::var("X");
    Monomial pinv = Monomial::var("p", -1);
    MultiPoly num = one_minus_m(pinv * x0.pow(2) * x1 * x2 * X.pow(2));
    MultiPoly den = one_minus_m(x0 * X) * one_minus_m(x0 * x1 * X) *
                    one_minus_m(x0 * x2 * X) * one_minus_m(x0 * x1 * x2 * X);
    return RationalFunction(num, den);
}

RationalFunction reference_zeta_C(int n, int l) {
    if (l < 0 || l > 2 * n) throw std::domain_error("reference_zeta_C: l outside [2n]_0");
    switch (n) {
    case 1: {
        MultiPoly den = one_minus_m(XY(1)) * one_minus_m(XY(l));
        return RationalFunction(MultiPoly(Rational(1)), den);
    }
    case 2: {
        MultiPoly num = one_minus_m(XY(2 + l, 2));
        MultiPoly den = one_minus_m(XY(2)) * one_minus_m(XY(3)) *
                        one_minus_m(XY(l)) * one_minus_m(XY(l + 1));
        return RationalFunction(num, den);
    }
    case 3: {
        MultiPoly num(Rational(1));
        num += mono(1, XY(1 + l, 1)) + mono(1, XY(4, 1));
        num -= mono(1, XY(7 + l, 2)) + mono(2, XY(6 + l, 2)) + mono(2, XY(4 + l, 2)) + mono(1, XY(3 + l, 2));
        num += mono(1, XY(6 + 2 * l, 3)) + mono(1, XY(9 + l, 3));
        num += mono(1, XY(10 + 2 * l, 4));
        MultiPoly den = one_minus_m(XY(3)) * one_minus_m(XY(5)) * one_minus_m(XY(6)) *
                        one_minus_m(XY(l)) * one_minus_m(XY(2 + l)) * one_minus_m(XY(3 + l));
        return RationalFunction(num, den);
    }
    case 4: {
        MultiPoly num(Rational(1));
        // Y^1
        for (long e : {5L, 6L, 7L, 8L}) num += mono(1, XY(e, 1));
        for (long e : {1L, 2L, 3L, 4L}) num += mono(1, XY(e + l, 1));
        // Y^2
        num += mono(1, XY(13, 2));
        num -= mono(1, XY(4 + l, 2));
        for (long e : {5L, 6L, 7L, 8L, 9L}) num -= mono(2, XY(e + l, 2));
        num -= mono(3, XY(10 + l, 2));
        for (long e : {11L, 12L, 13L}) num -= mono(2, XY(e + l, 2));
        num -= mono(1, XY(14 + l, 2));
        num += mono(1, XY(5 + 2 * l, 2));
        // Y^3
        num += mono(1, XY(14 + l, 3)) - mono(1, XY(18 + l, 3));
        num += mono(1, XY(10 + 2 * l, 3)) - mono(1, XY(14 + 2 * l, 3));
        // Y^4 (outer minus sign distributed)
        num -= mono(1, XY(23 + l, 4));
        num += mono(1, XY(14 + 2 * l, 4));
        for (long e : {15L, 16L, 17L}) num += mono(2, XY(e + 2 * l, 4));
        num += mono(3, XY(18 + 2 * l, 4));
        for (long e : {19L, 20L, 21L, 22L, 23L}) num += mono(2, XY(e + 2 * l, 4));
        num += mono(1, XY(24 + 2 * l, 4));
        num -= mono(1, XY(15 + 3 * l, 4));
        // Y^5
        for (long e : {24L, 25L, 26L, 27L}) num -= mono(1, XY(e + 2 * l, 5));
        for (long e : {20L, 21L, 22L, 23L}) num -= mono(1, XY(e + 3 * l, 5));
        // Y^6
        num -= mono(1, XY(28 + 3 * l, 6));
        MultiPoly den(Rational(1));
        for (long e : {4L, 7L, 9L, 10L}) den *= one_minus_m(XY(e));
        for (long e : {0L, 3L, 5L, 6L}) den *= one_minus_m(XY(e + l));
        return RationalFunction(num, den);
    }
    }
    throw std::domain_error("reference_zeta_C: n must be 1..4");
}

} // namespace ehz
