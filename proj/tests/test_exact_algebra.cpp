#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehz/genfun.hpp"
#include "ehz/hecke.hpp"
#include "ehz/qfunctions.hpp"
#include "ehz/series.hpp"
#include "ehz/substitution.hpp"

#include <random>

using namespace ehz;

namespace {

MultiPoly random_laurent(std::mt19937& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coef(-5, 5), expo(-2, 3);
    static const char* vars[] = {"X", "Y", "q"};
    MultiPoly f;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (const char* v : vars)
            m = m * Monomial::var(v, expo(rng));
        f.add_term(m, Rational(coef(rng)));
    }
    return f;
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(Int(6), Int(-4)).str() == "-3/2");
    CHECK(Rational::parse("5/2") == Rational(Int(5), Int(2)));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK_THROWS(Rational(Int(1), Int(0)));
    CHECK(rat_pow(Rational(2), -3) == Rational(Int(1), Int(8)));
}

TEST_CASE("poly_arith examples") {
    MultiPoly q = MultiPoly::var("q");
    CHECK((MultiPoly(1) + q) * (MultiPoly(1) - q) == MultiPoly(1) - q * q);

    MultiPoly x1 = MultiPoly::var("X_1");
    MultiPoly x1inv = MultiPoly::var("X_1", -1);
    CHECK(x1 * x1inv == MultiPoly(1));

    MultiPoly X = MultiPoly::var("X");
    MultiPoly geom;
    for (long k = 0; k <= 3; ++k) geom += MultiPoly::var("X", k);
    CHECK((MultiPoly(1) - X) * geom == MultiPoly(1) - MultiPoly::var("X", 4));
}

TEST_CASE("ring axioms on random Laurent polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(777);
    SubstitutionMap s;
    s.set("X", MultiPoly::var("q", 2) * Rational(3));
    s.set("Y", MultiPoly::var("X", -1));
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly f = random_laurent(rng), g = random_laurent(rng);
        CHECK(s.apply(f * g) == s.apply(f) * s.apply(g));
        CHECK(s.apply(f + g) == s.apply(f) + s.apply(g));
    }
    CHECK_THROWS(SubstitutionMap().set("X", MultiPoly(1) + MultiPoly::var("q")));
}

TEST_CASE("canonical string round-trips") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly f = random_laurent(rng);
        CHECK(MultiPoly::parse(f.str()) == f);
    }
    MultiPoly f = MultiPoly::parse("5/2*p^2*X - 3*Y^-1 + 1");
    CHECK(f.coeff(Monomial::var("p", 2) * Monomial::var("X")) == Rational(5, 2));
    CHECK(f.coeff(Monomial::var("Y", -1)) == Rational(-3));
    CHECK(MultiPoly::parse(f.str()) == f);
}

TEST_CASE("rf_equal by cross-multiplication") {
    MultiPoly q = MultiPoly::var("q");
    RationalFunction a(MultiPoly(1) - q * q, MultiPoly(1) - q);
    RationalFunction b(MultiPoly(1) + q);
    CHECK(a.equals(b));
    RationalFunction c(MultiPoly(1), MultiPoly(1) - MultiPoly::var("X"));
    RationalFunction d(MultiPoly(1), MultiPoly(1) + MultiPoly::var("X"));
    CHECK_FALSE(c.equals(d));
    CHECK_THROWS(RationalFunction(MultiPoly(1), MultiPoly()));
}

TEST_CASE("series_expand") {
    MultiPoly X = MultiPoly::var("X");
    RationalFunction f(MultiPoly(1), MultiPoly(1) - X);
    MultiPoly s = series_expand(f, {"X"}, 3);
    MultiPoly want;
    for (long k = 0; k <= 3; ++k) want += MultiPoly::var("X", k);
    CHECK(s == want);

    // 1/((1-XY)(1-X^l Y)) at l = 1, in Y to order 1: 1 + 2XY.
    MultiPoly XY(Monomial::var("X") * Monomial::var("Y"));
    RationalFunction w1(MultiPoly(1), (MultiPoly(1) - XY) * (MultiPoly(1) - XY));
    MultiPoly s1 = series_expand(w1, {"Y"}, 1);
    MultiPoly want1 = MultiPoly(1) + MultiPoly(Monomial::var("X") * Monomial::var("Y")) * Rational(2);
    CHECK(s1 == want1);

    CHECK_THROWS_WITH_AS(series_expand(RationalFunction(MultiPoly(1), X), {"X"}, 2),
                         "not expandable at origin", std::domain_error);
}

TEST_CASE("series_expand times denominator recovers numerator") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> expo(1, 2), coef(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly den(1);
        for (int j = 0; j < 2; ++j) {
            MultiPoly m(Monomial::var("X", expo(rng)) * Monomial::var("q", expo(rng) - 1),
                        Rational(coef(rng)));
            den -= m;
        }
        MultiPoly num = MultiPoly(1) + MultiPoly::var("X") * Rational(coef(rng));
        RationalFunction f(num, den);
        long order = 6;
        MultiPoly s = series_expand(f, {"X"}, order);
        CHECK((s * den).truncated({"X"}, order) == num.truncated({"X"}, order));
    }
}

TEST_CASE("gaussian binomial") {
    // Brute-force subspace counts pin the polynomial.
    UniPoly g42 = gaussian_binomial(4, 2);
    for (long q : {2L, 3L, 5L})
        CHECK(g42(Rational(q)) == Rational(Int(grassmannian_rref(4, 2, q).size())));
    UniPoly expected({Rational(1), Rational(1), Rational(2), Rational(1), Rational(1)}, "q");
    CHECK(g42 == expected);

    CHECK(gaussian_binomial(7, 0) == UniPoly::constant(1, "q"));
    CHECK(gaussian_binomial(3, -1).is_zero());
    CHECK(gaussian_binomial(3, 4).is_zero());

    // q-Pascal identity for all 0 <= k <= n <= 8.
    for (long n = 1; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            UniPoly lhs = gaussian_binomial(n, k);
            UniPoly rhs = gaussian_binomial(n - 1, k - 1) +
                          UniPoly::monomial(1, k, "q") * gaussian_binomial(n - 1, k);
            CHECK(lhs == rhs);
        }
}

namespace {

// Brute-force count of flags with dimension set I in F_q^n.
long flag_count(int n, const std::set<long>& I, long q) {
    std::vector<long> dims(I.begin(), I.end());
    std::function<long(size_t, const std::vector<std::vector<long>>&)> rec =
        [&](size_t idx, const std::vector<std::vector<long>>& lower) -> long {
        if (idx == dims.size()) return 1;
        long total = 0;
        for (auto& W : grassmannian_rref(n, dims[idx], q)) {
            // The previous subspace must be contained in W.
            bool ok = true;
            for (auto& v : lower) {
                std::vector<std::vector<long>> stack = W;
                stack.push_back(v);
                // v in W iff rank unchanged: use intersection dimension trick via sizes
                // (reuse grassmannian_intersection arithmetic through ranks).
                // rank check:
                long rw = dims[idx];
                std::vector<std::vector<long>> m = stack;
                // Gaussian elimination mod q
                long rank = 0;
                int rows = m.size(), cols = n;
                for (int c = 0; c < cols && rank < rows; ++c) {
                    int piv = -1;
                    for (int i = rank; i < rows; ++i)
                        if (m[i][c] % q != 0) { piv = i; break; }
                    if (piv < 0) continue;
                    std::swap(m[rank], m[piv]);
                    for (int i = 0; i < rows; ++i) {
                        if (i == rank) continue;
                        while (m[i][c] % q != 0)
                            for (int j = 0; j < cols; ++j) m[i][j] = (m[i][j] + m[rank][j]) % q;
                    }
                    ++rank;
                }
                if (rank != rw) { ok = false; break; }
            }
            if (ok) total += rec(idx + 1, W);
        }
        return total;
    };
    return rec(0, {});
}

} // namespace

TEST_CASE("gaussian multinomial") {
    UniPoly m = gaussian_multinomial(3, {1, 2});
    UniPoly expected = gaussian_binomial(2, 1) * gaussian_binomial(3, 2);
    CHECK(m == expected);
    for (long q : {2L, 3L})
        CHECK(m(Rational(q)) == Rational(flag_count(3, {1, 2}, q)));

    CHECK(gaussian_multinomial(5, {}) == UniPoly::constant(1, "q"));
    CHECK(gaussian_multinomial(2, {1}) == gaussian_binomial(2, 1));
    for (long q : {2L, 3L})
        CHECK(gaussian_multinomial(2, {1})(Rational(q)) == Rational(q + 1));
    CHECK(gaussian_multinomial(4, {0, 2, 4}) == gaussian_binomial(4, 2));
    CHECK_THROWS(gaussian_multinomial(3, {5}));
}

TEST_CASE("eulerian polynomials") {
    CHECK(eulerian_poly(1) == UniPoly::constant(1, "X"));
    CHECK(eulerian_poly(2) == UniPoly({Rational(1), Rational(1)}, "X"));
    CHECK(eulerian_poly(3) == UniPoly({Rational(1), Rational(4), Rational(1)}, "X"));
    for (long n = 1; n <= 7; ++n) {
        UniPoly e = eulerian_poly(n);
        Rational sum(0);
        Int fact(1);
        for (long k = 2; k <= n; ++k) fact *= k;
        for (long k = 0; k <= e.degree(); ++k) {
            sum += e.coeff(k);
            CHECK(e.coeff(k) == e.coeff(n - 1 - k)); // palindromic
        }
        CHECK(sum == Rational(fact));
    }
}

TEST_CASE("elementary symmetric and the specialization identity") {
    MultiPoly s21 = elementary_symmetric(2, 1, {"x_1", "x_2"});
    CHECK(s21 == MultiPoly::var("x_1") + MultiPoly::var("x_2"));
    MultiPoly s33 = elementary_symmetric(3, 3, {"x_1", "x_2", "x_3"});
    CHECK(s33 == MultiPoly(Monomial::var("x_1") * Monomial::var("x_2") * Monomial::var("x_3")));

    // s_{n-1,k}(1, p, ..., p^{n-2}) == p^C(k,2) * binom(n-1,k)_p as polynomials in p.
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            std::vector<std::string> vars;
            for (int i = 0; i < n - 1; ++i) vars.push_back("x_" + std::to_string(i + 1));
            MultiPoly s = elementary_symmetric(n - 1, k, vars);
            SubstitutionMap sub;
            for (int i = 0; i < n - 1; ++i) sub.set(vars[i], MultiPoly::var("p", i));
            UniPoly lhs = sub.apply(s).to_unipoly("p");
            UniPoly gb = gaussian_binomial(n - 1, k);
            UniPoly rhs("p");
            for (long d = 0; d <= gb.degree(); ++d)
                rhs += UniPoly::monomial(gb.coeff(d), d + binom2(k), "p");
            CHECK(lhs == rhs);
        }
}

TEST_CASE("lagrange interpolation") {
    UniPoly f = lagrange_interpolate({{Rational(0), Rational(1)},
                                      {Rational(1), Rational(4)},
                                      {Rational(2), Rational(9)}});
    CHECK(f == UniPoly({Rational(1), Rational(2), Rational(1)}, "T"));
    UniPoly g = lagrange_interpolate({{Rational(0), Rational(1)}, {Rational(1), Rational(7)}});
    CHECK(g == UniPoly({Rational(1), Rational(6)}, "T"));
    UniPoly h = lagrange_interpolate({{Rational(0), Rational(1)},
                                      {Rational(1), Rational(5)},
                                      {Rational(2), Rational(12)}});
    CHECK(h == UniPoly({Rational(1), Rational(5, 2), Rational(3, 2)}, "T"));
    CHECK_THROWS(lagrange_interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}));
}
