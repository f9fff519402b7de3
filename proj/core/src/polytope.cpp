#include "ehz/polytope.hpp"

#include "ehz/qfunctions.hpp"
#include <algorithm>
#include <set>

namespace ehz {

namespace {

Int vec_gcd(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

int rank_of(std::vector<std::vector<Rational>> m) {
    int rows = m.size();
    if (rows == 0) return 0;
    int cols = m[0].size();
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

int affine_rank(const std::vector<std::vector<Int>>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Rational>> diffs;
    for (size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> d(pts[0].size());
        for (size_t j = 0; j < pts[0].size(); ++j) d[j] = Rational(Int(pts[i][j] - pts[0][j]));
        diffs.push_back(std::move(d));
    }
    return rank_of(std::move(diffs));
}

// Normal of the hyperplane through n points (cofactor expansion of the
// (n-1) x n difference matrix); zero vector if the points are degenerate.
std::vector<Int> hyperplane_normal(const std::vector<std::vector<Int>>& pts) {
    int n = pts[0].size();
    std::vector<std::vector<Int>> d(n - 1, std::vector<Int>(n));
    for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = pts[i + 1][j] - pts[0][j];
    std::vector<Int> normal(n);
    if (n == 1) { normal[0] = 1; return normal; }
    IntMatrix minor(n - 1, n - 1);
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n - 1; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r, cc++) = d[r][c];
            }
        }
        Int m = minor.det();
        normal[j] = (j % 2 == 0) ? m : -m;
    }
    return normal;
}

std::vector<std::vector<Int>> dedup(std::vector<std::vector<Int>> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

LatticePolytope make_polytope(std::vector<std::vector<Int>> vertices) {
    if (vertices.empty()) throw std::domain_error("polytope: no vertices");
    LatticePolytope P;
    P.n = static_cast<int>(vertices[0].size());
    for (auto& v : vertices)
        if (static_cast<int>(v.size()) != P.n) throw std::domain_error("polytope: ragged vertices");
    P.vertices = dedup(std::move(vertices));
    if (affine_rank(P.vertices) != P.n)
        throw std::domain_error("polytope: not full-dimensional");
    return P;
}

HRep hrep(const LatticePolytope& P) {
    int n = P.n;
    const auto& V = P.vertices;
    if (affine_rank(V) != n) throw std::domain_error("hrep: not full-dimensional");
    std::set<std::pair<std::vector<Int>, Int>> seen;
    HRep H;

    std::vector<int> idx(n);
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == n) {
            std::vector<std::vector<Int>> pts;
            for (int i : idx) pts.push_back(V[i]);
            std::vector<Int> a = hyperplane_normal(pts);
            if (vec_gcd(a) == 0) return;
            Int b = 0;
            for (int j = 0; j < n; ++j) b += a[j] * pts[0][j];
            // Orientation: keep the side containing all vertices.
            bool all_le = true, all_ge = true;
            for (auto& v : V) {
                Int s = 0;
                for (int j = 0; j < n; ++j) s += a[j] * v[j];
                if (s > b) all_le = false;
                if (s < b) all_ge = false;
            }
            if (!all_le && !all_ge) return;
            if (!all_le) {
                for (auto& x : a) x = -x;
                b = -b;
            }
            Int g = vec_gcd(a);
            for (auto& x : a) x /= g;
            b = floor_div(b, g); // g divides b: b is a Z-combination of a-entries
            if (seen.insert({a, b}).second) {
                // Supporting facet: needs n affinely independent vertices on it.
                std::vector<std::vector<Int>> on;
                for (auto& v : V) {
                    Int s = 0;
                    for (int j = 0; j < n; ++j) s += a[j] * v[j];
                    if (s == b) on.push_back(v);
                }
                if (static_cast<int>(on.size()) >= n && affine_rank(on) == n - 1)
                    H.facets.push_back({a, b});
            }
            return;
        }
        for (int i = start; i <= static_cast<int>(V.size()) - (n - k); ++i) {
            idx[k] = i;
            choose(i + 1, k + 1);
        }
    };
    choose(0, 0);
    if (H.facets.empty()) throw std::domain_error("hrep: no facets found");
    return H;
}

LatticePolytope transform(const IntMatrix& g, const LatticePolytope& P) {
    if (g.rows() != P.n || g.cols() != P.n) throw std::domain_error("transform: shape mismatch");
    if (g.det() == 0) throw std::domain_error("transform: singular matrix");
    std::vector<std::vector<Int>> img;
    for (auto& v : P.vertices) {
        std::vector<Int> w(P.n, Int(0));
        for (int j = 0; j < P.n; ++j)
            for (int i = 0; i < P.n; ++i) w[j] += v[i] * g.at(i, j);
        img.push_back(std::move(w));
    }
    img = dedup(std::move(img));
    // Prune non-vertices: a point is a vertex iff its active facet normals span R^n.
    LatticePolytope Q;
    Q.n = P.n;
    Q.vertices = img;
    HRep H = hrep(Q);
    std::vector<std::vector<Int>> verts;
    for (auto& v : img) {
        std::vector<std::vector<Rational>> active;
        for (auto& f : H.facets) {
            Int s = 0;
            for (int j = 0; j < P.n; ++j) s += f.a[j] * v[j];
            if (s == f.b) {
                std::vector<Rational> row;
                for (auto& x : f.a) row.push_back(Rational(x));
                active.push_back(std::move(row));
            }
        }
        if (rank_of(std::move(active)) == P.n) verts.push_back(v);
    }
    Q.vertices = dedup(std::move(verts));
    return Q;
}

Int count_points(const LatticePolytope& P, long t, const Lat& L) {
    return count_points(P, hrep(P), t, L);
}

Int count_points(const LatticePolytope& P, const HRep& H, long t, const Lat& L) {
    if (t < 0) throw std::domain_error("count_points: negative dilate");
    if (L.n != P.n) throw std::domain_error("count_points: dimension mismatch");
    if (t == 0) return 1;
    int n = P.n;
    const Int& D = L.den;

    // Bounding box of tP per coordinate.
    std::vector<Int> lo(n), hi(n);
    for (int j = 0; j < n; ++j) {
        Int mn = P.vertices[0][j], mx = P.vertices[0][j];
        for (auto& v : P.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = t * mn;
        hi[j] = t * mx;
    }

    // Points are x = z * basis / D with z integral; facet a*x <= t*b becomes
    // sum_i z_i * q_i <= t*b*D with q = basis * a.
    size_t nf = H.facets.size();
    std::vector<std::vector<Int>> q(nf, std::vector<Int>(n, Int(0)));
    std::vector<Int> rhs(nf);
    for (size_t f = 0; f < nf; ++f) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) q[f][i] += L.basis.at(i, j) * H.facets[f].a[j];
        rhs[f] = Int(t) * H.facets[f].b * D;
    }

    // partial[f] = contribution of z_0..z_{level-1} to facet f.
    std::vector<Int> partial(nf, Int(0));
    std::vector<Int> xpart(n, Int(0)); // running coordinates z*basis for box bounds
    Int total = 0;

    std::function<void(int)> walk = [&](int level) {
        // Box bounds for z_level from coordinate `level`:
        // lo*D <= xpart_level + z*basis[level][level] <= hi*D.
        const Int& step = L.basis.at(level, level);
        Int zmin = ceil_div(lo[level] * D - xpart[level], step);
        Int zmax = floor_div(hi[level] * D - xpart[level], step);
        if (level == n - 1) {
            // Intersect with all facet constraints solved for z_{n-1}.
            for (size_t f = 0; f < nf; ++f) {
                const Int& c = q[f][level];
                Int r = rhs[f] - partial[f];
                if (c == 0) {
                    if (r < 0) return;
                } else if (c > 0) {
                    zmax = std::min(zmax, floor_div(r, c));
                } else {
                    zmin = std::max(zmin, ceil_div(r, c));
                }
            }
            if (zmax >= zmin) total += zmax - zmin + 1;
            return;
        }
        for (Int z = zmin; z <= zmax; ++z) {
            for (size_t f = 0; f < nf; ++f) partial[f] += z * q[f][level];
            for (int j = level; j < n; ++j) xpart[j] += z * L.basis.at(level, j);
            walk(level + 1);
            for (size_t f = 0; f < nf; ++f) partial[f] -= z * q[f][level];
            for (int j = level; j < n; ++j) xpart[j] -= z * L.basis.at(level, j);
        }
    };
    walk(0);
    return total;
}

EhrhartPolynomial ehrhart(const LatticePolytope& P, const Lat& L) {
    for (auto& v : P.vertices) {
        std::vector<Rational> x;
        for (auto& c : v) x.push_back(Rational(c));
        if (!L.contains(x))
            throw std::domain_error("Ehrhart not polynomial relative to this lattice");
    }
    HRep H = hrep(P);
    std::vector<std::pair<Rational, Rational>> pts;
    for (long t = 0; t <= P.n; ++t)
        pts.push_back({Rational(t), Rational(count_points(P, H, t, L))});
    UniPoly E = lagrange_interpolate(pts, "T");
    Rational check = E(Rational(P.n + 1));
    if (check != Rational(count_points(P, H, P.n + 1, L)))
        throw std::logic_error("ehrhart: verification at t = n+1 failed");
    if (E.coeff(0) != Rational(1)) throw std::logic_error("ehrhart: constant term != 1");
    if (!(E.coeff(P.n) > Rational(0))) throw std::logic_error("ehrhart: nonpositive leading coefficient");
    EhrhartPolynomial out;
    out.poly = E;
    out.lattice_tag = L.key();
    return out;
}

EhrhartPolynomial ehrhart(const LatticePolytope& P) {
    return ehrhart(P, lat_standard(P.n));
}

Lat lattice_of_inverse(const IntMatrix& g) {
    Int det = g.det();
    if (det == 0) throw std::domain_error("lattice_of_inverse: singular matrix");
    IntMatrix adj = g.adjugate(); // rows of g^{-1} = rows of adj / det
    if (det < 0) { adj = Int(-1) * adj; det = -det; }
    return lat_from_rows(g.rows(), adj, det);
}

bool ehrhart_identity_check(const IntMatrix& g, const LatticePolytope& P) {
    EhrhartPolynomial lhs = ehrhart(transform(g, P));
    EhrhartPolynomial rhs = ehrhart(P, lattice_of_inverse(g));
    return lhs.poly == rhs.poly;
}

} // namespace ehz
