#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ehz/polytope.hpp"

#include <random>

using namespace ehz;

namespace {

LatticePolytope figP() {
    return make_polytope({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(2), Int(1)}});
}

LatticePolytope figP2() {
    return make_polytope({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)},
                          {Int(1), Int(2)}, {Int(3), Int(3)}, {Int(4), Int(1)}});
}

LatticePolytope unit_cube(int n) {
    std::vector<std::vector<Int>> verts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        verts.push_back(v);
    }
    return make_polytope(std::move(verts));
}

IntMatrix mat2(long a, long b, long c, long d) {
    return IntMatrix::from_rows({{Int(a), Int(b)}, {Int(c), Int(d)}});
}

// Boundary lattice points of a polygon: sum of gcds over the vertex cycle.
Int boundary_points(const LatticePolytope& P) {
    // order vertices by angle around the centroid (coordinates are small).
    auto verts = P.vertices;
    std::vector<Rational> cx(2, Rational(0));
    for (auto& v : verts) {
        cx[0] += Rational(v[0]);
        cx[1] += Rational(v[1]);
    }
    cx[0] /= Rational(Int(verts.size()));
    cx[1] /= Rational(Int(verts.size()));
    std::sort(verts.begin(), verts.end(), [&](const auto& a, const auto& b) {
        auto half = [&](const std::vector<Int>& v) {
            Rational dx = Rational(v[0]) - cx[0], dy = Rational(v[1]) - cx[1];
            return dy > Rational(0) || (dy == Rational(0) && dx > Rational(0)) ? 0 : 1;
        };
        if (half(a) != half(b)) return half(a) < half(b);
        Rational ax = Rational(a[0]) - cx[0], ay = Rational(a[1]) - cx[1];
        Rational bx = Rational(b[0]) - cx[0], by = Rational(b[1]) - cx[1];
        return ax * by - ay * bx > Rational(0);
    });
    Int total(0);
    for (size_t i = 0; i < verts.size(); ++i) {
        auto& a = verts[i];
        auto& b = verts[(i + 1) % verts.size()];
        total += gcd(Int(a[0] - b[0]), Int(a[1] - b[1]));
    }
    return total;
}

} // namespace

TEST_CASE("hrep") {
    CHECK(hrep(unit_cube(2)).facets.size() == 4);
    CHECK(hrep(figP()).facets.size() == 4);
    CHECK(hrep(unit_cube(4)).facets.size() == 8);
    CHECK_THROWS(make_polytope({{Int(0), Int(0)}, {Int(1), Int(1)}})); // degenerate
}

TEST_CASE("transform") {
    LatticePolytope P = figP();
    CHECK(transform(IntMatrix::identity(2), P).vertices == P.vertices);

    LatticePolytope Q = transform(mat2(2, 0, 0, 1), P);
    LatticePolytope want = make_polytope({{Int(0), Int(0)}, {Int(2), Int(0)}, {Int(0), Int(1)}, {Int(4), Int(1)}});
    CHECK(Q.vertices == want.vertices);

    CHECK_THROWS(transform(mat2(1, 2, 2, 4), P));

    // Unimodular invariance of the Ehrhart polynomial.
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> small(-2, 2);
    for (int trial = 0; trial < 8; ++trial) {
        IntMatrix u = mat2(1, small(rng), 0, 1);
        IntMatrix l = mat2(1, 0, small(rng), 1);
        IntMatrix g = u * l;
        CHECK(ehrhart(transform(g, P)).poly == ehrhart(P).poly);
    }
}

TEST_CASE("count_points") {
    LatticePolytope P = figP();
    Lat Z2 = lat_standard(2);
    CHECK(count_points(P, 0, Z2) == 1);
    CHECK(count_points(P, 1, Z2) == 5);

    LatticePolytope C3 = unit_cube(3);
    Lat Z3 = lat_standard(3);
    for (long t = 0; t <= 3; ++t)
        CHECK(count_points(C3, t, Z3) == int_pow(Int(t + 1), 3));

    // monotone in t and under lattice refinement
    Lat finer{2, mat2(1, 0, 0, 1), Int(2)};
    Int prev(0);
    for (long t = 0; t <= 4; ++t) {
        Int c = count_points(P, t, Z2);
        CHECK(c >= prev);
        CHECK(count_points(P, t, finer) >= c);
        prev = c;
    }
}

TEST_CASE("ehrhart polynomials") {
    CHECK(ehrhart(unit_cube(2)).poly == UniPoly({Rational(1), Rational(2), Rational(1)}, "T"));

    UniPoly figE = ehrhart(figP()).poly;
    CHECK(figE == UniPoly({Rational(1), Rational(5, 2), Rational(3, 2)}, "T"));

    UniPoly figE2 = ehrhart(figP2()).poly;
    CHECK(figE2 == UniPoly({Rational(1), Rational(3), Rational(7)}, "T"));

    // relative to Z^2 + (1/2)e_2: c_1 = 3
    Lat L = lat_from_rows(2, mat2(2, 0, 0, 1), Int(2));
    CHECK(ehrhart(figP(), L).poly.coeff(1) == Rational(3));

    // vertices not in the lattice -> error
    Lat coarse{2, mat2(2, 0, 0, 1), Int(1)};
    CHECK_THROWS_WITH_AS(ehrhart(figP(), coarse).poly.coeff(0),
                         "Ehrhart not polynomial relative to this lattice", std::domain_error);
}

TEST_CASE("planar c_1 is half the boundary count") {
    for (auto& P : {figP(), figP2(), unit_cube(2)}) {
        UniPoly E = ehrhart(P).poly;
        CHECK(E.coeff(1) * Rational(2) == Rational(boundary_points(P)));
    }
}

TEST_CASE("ehrhart transform identity") {
    LatticePolytope P = figP();
    CHECK(ehrhart_identity_check(IntMatrix::identity(2), P));
    CHECK(ehrhart_identity_check(mat2(2, 0, 0, 1), P));

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> small(-2, 2);
    std::uniform_int_distribution<long> coord(0, 3);
    int done = 0;
    while (done < 20) {
        IntMatrix g = mat2(small(rng), small(rng), small(rng), small(rng));
        Int d = g.det();
        if (d == 0 || abs(d) > 8) continue;
        // random small polytope: quadrilateral-ish point cloud, retried when
        // degenerate
        LatticePolytope Q;
        try {
            Q = make_polytope({{Int(coord(rng)), Int(coord(rng))},
                               {Int(coord(rng)), Int(coord(rng))},
                               {Int(coord(rng)), Int(coord(rng))},
                               {Int(coord(rng)), Int(coord(rng))}});
        } catch (const std::domain_error&) {
            continue;
        }
        ++done;
        CHECK(ehrhart_identity_check(g, Q));
    }

    // dimension 3, diagonal-ish transforms
    LatticePolytope C3 = unit_cube(3);
    std::uniform_int_distribution<long> diag(1, 2);
    for (int trial = 0; trial < 5; ++trial) {
        IntMatrix g(3, 3);
        for (int i = 0; i < 3; ++i) g.at(i, i) = diag(rng);
        g.at(0, 1) = small(rng);
        g.at(1, 2) = small(rng);
        CHECK(ehrhart_identity_check(g, C3));
    }
}
