#include "ehz/building.hpp"

#include "ehz/qfunctions.hpp"
#include <algorithm>
#include <sstream>

namespace ehz {

Lat building_class_lattice(const Int& p, int depth, const std::vector<Int>& gen) {
    if (depth == 0) return lat_standard(2);
    Int pd = int_pow(p, depth);
    // M = Z^2 + Z*gen/p^d; the integer part p^d*M is generated by the rows
    // (gen), (p^d, 0), (0, p^d). Euclid on the first coordinate of the first
    // two rows, then fold the leftover into the y-sublattice.
    Int r1x = gen[0], r1y = gen[1];
    Int r2x = pd, r2y = 0;
    while (r2x != 0) {
        Int q = floor_div(r1x, r2x);
        Int nx = r1x - q * r2x, ny = r1y - q * r2y;
        r1x = r2x; r1y = r2y;
        r2x = nx; r2y = ny;
    }
    Int ylat = r2y == 0 ? pd : gcd(r2y, pd);
    IntMatrix sq(2, 2);
    sq.at(0, 0) = r1x;
    sq.at(0, 1) = r1y;
    sq.at(1, 1) = ylat;
    return lat_from_rows(2, sq, pd);
}

BuildingTree building_values(const Int& p, const LatticePolytope& P, int ell, int radius) {
    if (P.n != 2) throw std::domain_error("building_values: polytope must be planar");
    BuildingTree T;
    T.p = p;
    T.ell = ell;
    T.radius = radius;
    HRep H = hrep(P);

    auto value_of = [&](const Lat& L) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (long t = 0; t <= 2; ++t)
            pts.push_back({Rational(t), Rational(count_points(P, H, t, L))});
        UniPoly E = lagrange_interpolate(pts, "T");
        return E.coeff(ell);
    };

    BuildingVertex root;
    root.depth = 0;
    root.parent = -1;
    root.gen = {Int(0), Int(0)};
    root.value = value_of(lat_standard(2));
    T.vertices.push_back(root);

    // Depth-d classes: generators (1, b) with b in [0, p^d), and (a, 1) with
    // a in [0, p^d), p | a. Children of (1, b): (1, b + c p^d); children of
    // (a, 1): (a + c p^d, 1).
    std::vector<int> frontier; // indices into T.vertices
    frontier.push_back(0);
    for (int d = 1; d <= radius; ++d) {
        Int pd_prev = int_pow(p, d - 1);
        std::vector<int> next;
        for (int idx : frontier) {
            const BuildingVertex v = T.vertices[idx];
            std::vector<std::vector<Int>> gens;
            if (d == 1) {
                for (Int b = 0; b < p; ++b) gens.push_back({Int(1), b});
                gens.push_back({Int(0), Int(1)});
            } else if (v.gen[0] == 1 || v.gen[0] % p != 0) {
                for (Int c = 0; c < p; ++c) gens.push_back({v.gen[0], v.gen[1] + c * pd_prev});
            } else {
                for (Int c = 0; c < p; ++c) gens.push_back({v.gen[0] + c * pd_prev, v.gen[1]});
            }
            for (auto& g : gens) {
                BuildingVertex w;
                w.depth = d;
                w.parent = idx;
                w.gen = g;
                w.value = value_of(building_class_lattice(p, d, g));
                next.push_back(static_cast<int>(T.vertices.size()));
                T.vertices.push_back(w);
            }
        }
        frontier = next;
    }
    return T;
}

std::vector<Rational> BuildingTree::ring(int depth) const {
    std::vector<Rational> vals;
    for (auto& v : vertices)
        if (v.depth == depth) vals.push_back(v.value);
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::string BuildingTree::dot() const {
    std::ostringstream os;
    os << "graph building {\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << vertices[i].value.str()
           << "\", depth=" << vertices[i].depth << "];\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].parent >= 0)
            os << "  v" << vertices[i].parent << " -- v" << i << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ehz
