#include "ehz/genfun.hpp"

namespace ehz {

MultiPoly MultiDegreeTable::to_poly() const {
    MultiPoly r;
    for (auto& [key, cnt] : counts) {
        auto& [mu, delta] = key;
        Monomial m;
        for (int i = 0; i < n; ++i) {
            m = m * Monomial::var("X_" + std::to_string(i + 1), mu[i]);
            m = m * Monomial::var("Y_" + std::to_string(i + 1), delta[i]);
        }
        r.add_term(m, Rational(cnt));
    }
    return r;
}

MultiDegreeTable hs_enumerate(int n, const Int& p, long N) {
    MultiDegreeTable t;
    t.n = n;
    t.p = p;
    t.N = N;
    for (long e = 0; e <= N; ++e)
        sublattices_p_index(n, p, e, [&](const PLattice& L) {
            t.counts[{L.mu, L.delta}] += 1;
        });
    return t;
}

MultiDegreeTable hs_enumerate_symbolic(int n, long N) {
    // Per-(mu, delta) counts are polynomials in p of degree at most
    // sum_j (j-1) delta_j (the number of off-diagonal residues); sampling
    // max_degree + 1 primes pins them exactly.
    long max_deg = 0;
    // Worst composition is everything in the last slot.
    max_deg = (n - 1) * N;
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59};
    if (max_deg + 1 > static_cast<long>(sizeof(primes) / sizeof(primes[0])))
        throw std::domain_error("hs_enumerate_symbolic: truncation too large");

    // Sample i is only consulted for signatures of interpolation degree
    // >= i - 1, so high primes skip the low-freedom compositions entirely.
    std::vector<MultiDegreeTable> samples;
    for (long i = 0; i <= max_deg; ++i) {
        MultiDegreeTable s;
        s.n = n;
        s.p = Int(primes[i]);
        s.N = N;
        for (long e = 0; e <= N; ++e)
            for (const auto& delta : delta_compositions(n, e)) {
                long deg = 0;
                for (int j = 0; j < n; ++j) deg += j * delta[j];
                if (deg < i - 1) continue;
                sublattices_with_delta(n, Int(primes[i]), delta, [&](const PLattice& L) {
                    s.counts[{L.mu, L.delta}] += 1;
                });
            }
        samples.push_back(std::move(s));
    }

    MultiDegreeTable t;
    t.n = n;
    t.p = 0;
    t.N = N;
    t.symbolic = true;
    // Interpolate each signature across the sampled primes. A signature can
    // be absent from a sample only with count zero.
    std::set<std::pair<std::vector<long>, std::vector<long>>> keys;
    for (auto& s : samples)
        for (auto& [key, cnt] : s.counts) keys.insert(key);
    for (auto& key : keys) {
        long deg = 0;
        const std::vector<long>& delta = key.second;
        for (int j = 0; j < n; ++j) deg += j * delta[j];
        std::vector<std::pair<Rational, Rational>> pts;
        for (long i = 0; i <= deg; ++i) {
            auto it = samples[i].counts.find(key);
            Int c = it == samples[i].counts.end() ? Int(0) : it->second;
            pts.push_back({Rational(Int(primes[i])), Rational(c)});
        }
        UniPoly f = lagrange_interpolate(pts, "p");
        // Exactness guard: the interpolant must reproduce one held-out sample.
        if (deg + 1 <= max_deg) {
            auto it = samples[deg + 1].counts.find(key);
            Int c = it == samples[deg + 1].counts.end() ? Int(0) : it->second;
            if (f(Rational(Int(primes[deg + 1]))) != Rational(c))
                throw std::logic_error("hs_enumerate_symbolic: count is not polynomial of expected degree");
        }
        t.sym_counts[key] = f;
    }
    return t;
}

MultiDegreeTable hs_primitive(const MultiDegreeTable& t) {
    // (1 - X_n Y_1...Y_n) acts on tables by subtracting the shift
    // mu -> mu + e_n, delta -> delta + (1,...,1).
    MultiDegreeTable r = t;
    r.counts.clear();
    r.sym_counts.clear();
    auto shift_back = [&](const std::pair<std::vector<long>, std::vector<long>>& key,
                          std::pair<std::vector<long>, std::vector<long>>& prev) {
        prev = key;
        prev.first[t.n - 1] -= 1;
        for (auto& d : prev.second) d -= 1;
        if (prev.first[t.n - 1] < 0) return false;
        for (auto& d : prev.second)
            if (d < 0) return false;
        return true;
    };
    if (!t.symbolic) {
        for (auto& [key, cnt] : t.counts) {
            std::pair<std::vector<long>, std::vector<long>> prev;
            Int v = cnt;
            if (shift_back(key, prev)) {
                auto it = t.counts.find(prev);
                if (it != t.counts.end()) v -= it->second;
            }
            if (v != 0) r.counts[key] = v;
        }
    } else {
        for (auto& [key, cnt] : t.sym_counts) {
            std::pair<std::vector<long>, std::vector<long>> prev;
            UniPoly v = cnt;
            if (shift_back(key, prev)) {
                auto it = t.sym_counts.find(prev);
                if (it != t.sym_counts.end()) v = v - it->second;
            }
            if (!v.is_zero()) r.sym_counts[key] = v;
        }
    }
    return r;
}

RationalFunction hs_primitive(const RationalFunction& hs, int n) {
    MultiPoly factor = MultiPoly(Rational(1));
    Monomial m = Monomial::var("X_" + std::to_string(n));
    for (int i = 1; i <= n; ++i) m = m * Monomial::var("Y_" + std::to_string(i));
    factor -= MultiPoly(m);
    return RationalFunction(factor) * hs;
}

namespace {

SubstitutionMap phi_substitution(int n, const Int& p) {
    SubstitutionMap s;
    for (int i = 1; i <= n; ++i) {
        MultiPoly xi = MultiPoly::var("x_0") * MultiPoly::var("X");
        MultiPoly yi = MultiPoly::var("x_" + std::to_string(i));
        long c = static_cast<long>(i) * (i + 1) / 2;
        if (p == 0) {
            xi *= MultiPoly::var("p", c);
            yi *= MultiPoly::var("p", -i);
        } else {
            xi = xi * Rational(int_pow(p, c));
            yi = yi * rat_pow(Rational(p), -i);
        }
        s.set("X_" + std::to_string(i), xi);
        s.set("Y_" + std::to_string(i), yi);
    }
    return s;
}

} // namespace

MultiPoly phi_map(const MultiPoly& f, int n, const Int& p) {
    for (auto& [m, c] : f.terms())
        for (auto& [v, e] : m.entries()) {
            const std::string& name = VarPool::name(v);
            if (name != "p" && name.rfind("X_", 0) != 0 && name.rfind("Y_", 0) != 0)
                throw std::domain_error("phi_map: unknown variable " + name);
        }
    return phi_substitution(n, p).apply(f);
}

RationalFunction phi_map(const RationalFunction& f, int n, const Int& p) {
    return RationalFunction(phi_map(f.num(), n, p), phi_map(f.den(), n, p));
}

MultiPoly andrianov_sum(int n, const Int& p, long order) {
    // a = (1..n), d = (n..1); weight p^{<d,nu> - <a,delta>} over minimal
    // classes with nu_n <= order.
    MultiPoly sum;
    for (long e = 0; e <= n * order; ++e) {
        sublattices_p_index(n, p, e, [&](const PLattice& L) {
            if (L.nu[0] != 0) return;       // minimal representatives only
            if (L.nu[n - 1] > order) return;
            long w = 0;
            for (int i = 0; i < n; ++i) {
                w += (n - i) * L.nu[i];      // <d, nu>
                w -= (i + 1) * L.delta[i];   // <a, delta>
            }
            Monomial m = Monomial::var("x_0", L.nu[n - 1]) * Monomial::var("X", L.nu[n - 1]);
            for (int i = 0; i < n; ++i)
                m = m * Monomial::var("x_" + std::to_string(i + 1), L.delta[i]);
            sum.add_term(m, rat_pow(Rational(p), w));
        }, order);
    }
    return sum;
}

UniPoly zeta_series_bruteforce(ZetaType type, int n, int l, const Int& p,
                               const LatticePolytope& P, long order) {
    EhrhartPolynomial base = ehrhart(P);
    if (base.coeff(l).is_zero())
        throw std::domain_error("zeta_series_bruteforce: c_l(P) = 0");
    UniPoly series("t");
    if (type == ZetaType::A) {
        if (P.n != n) throw std::domain_error("zeta_series_bruteforce: dim P != n");
        for (long m = 0; m <= order; ++m)
            series += UniPoly::monomial(superlattice_ratio_sum(n, p, m, l, P), m, "t");
        return series;
    }
    // Type C: `order` bounds the similitude exponent alpha; the series carries
    // t^{n*alpha} per alpha (index p^{n*alpha}).
    if (P.n != 2 * n) throw std::domain_error("zeta_series_bruteforce: dim P != 2n");
    HRep H = hrep(P);
    for (long alpha = 0; alpha <= order; ++alpha) {
        CosetSet cs = typeC_similitude_cosets(n, p, alpha);
        Rational sum(0);
        for (size_t i = 0; i < cs.size(); ++i) {
            Lat M = cs.superlattice(i);
            std::vector<std::pair<Rational, Rational>> pts;
            for (long t = 0; t <= 2 * n; ++t)
                pts.push_back({Rational(t), Rational(count_points(P, H, t, M))});
            sum += lagrange_interpolate(pts, "T").coeff(l);
        }
        series += UniPoly::monomial(sum / base.coeff(l), n * alpha, "t");
    }
    return series;
}

MultiPoly satake_p1_series(int n, long order) {
    MultiPoly sum;
    std::vector<long> delta(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            long mn = delta[0], mx = delta[0];
            for (long d : delta) { mn = std::min(mn, d); mx = std::max(mx, d); }
            if (mn != 0) return;
            Monomial m = Monomial::var("x_0", mx) * Monomial::var("X", mx);
            for (int i = 0; i < n; ++i)
                m = m * Monomial::var("x_" + std::to_string(i + 1), delta[i]);
            sum.add_term(m, Rational(1));
            return;
        }
        for (long d = 0; d <= order; ++d) {
            delta[pos] = d;
            rec(pos + 1);
        }
        delta[pos] = 0;
    };
    rec(0);
    return sum;
}

} // namespace ehz
