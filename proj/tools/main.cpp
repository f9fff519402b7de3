// ehz: exact Ehrhart / Hecke / zeta toolkit command-line interface.
//
// Subcommands: ehrhart, transform, hnf, snf, lattices, hecke, building,
// hs, satake, zeta, check. All numeric output is exact, rendered as strings.
// Exit codes: 0 success / all checks pass, 2 malformed input, 3 violated
// mathematical precondition, 1 failed check.

#include <CLI11.hpp>
#include <json.hpp>

#include "ehz/building.hpp"
#include "ehz/cache.hpp"
#include "ehz/genfun.hpp"
#include "ehz/json_io.hpp"
#include "ehz/parallel.hpp"

#include <fstream>
#include <iostream>

using namespace ehz;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LatticePolytope load_polytope(const std::string& path) {
    return polytope_from_json(slurp(path));
}

json poly_json(const UniPoly& f) {
    json j;
    j["string"] = f.str();
    j["coeffs"] = json::parse(unipoly_to_json_coeffs(f));
    return j;
}

json rf_json(const RationalFunction& f) {
    json j;
    j["num"] = f.num().str();
    j["den"] = f.den().str();
    j["string"] = f.str();
    return j;
}

int checks_failed = 0;

json check_line(const std::string& name, bool pass) {
    json j;
    j["check"] = name;
    j["pass"] = pass;
    if (!pass) ++checks_failed;
    std::cerr << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
    return j;
}

LatticePolytope builtin_figP() {
    return make_polytope({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(2), Int(1)}});
}

LatticePolytope builtin_figP2() {
    return make_polytope({{Int(0), Int(0)}, {Int(1), Int(0)}, {Int(0), Int(1)},
                          {Int(1), Int(2)}, {Int(3), Int(3)}, {Int(4), Int(1)}});
}

LatticePolytope builtin_cube(int n) {
    std::vector<std::vector<Int>> verts;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
        verts.push_back(v);
    }
    return make_polytope(std::move(verts));
}

LatticePolytope builtin_cross(int n) {
    std::vector<std::vector<Int>> verts;
    for (int i = 0; i < n; ++i) {
        std::vector<Int> e(n, Int(0)), f(n, Int(0));
        e[i] = 1;
        f[i] = -1;
        verts.push_back(e);
        verts.push_back(f);
    }
    return make_polytope(std::move(verts));
}

json run_check_fixtures(bool extended) {
    json out;
    json checks = json::array();

    auto ring_eq = [](const BuildingTree& T, int d, std::vector<long> want) {
        std::vector<Rational> w;
        for (long v : want) w.push_back(Rational(v));
        std::sort(w.begin(), w.end());
        return T.ring(d) == w;
    };
    BuildingTree T1 = building_values(Int(2), builtin_figP(), 1, 3);
    checks.push_back(check_line("tree P: root 5/2", T1.vertices[0].value == Rational(5, 2)));
    checks.push_back(check_line("tree P: rings",
                                ring_eq(T1, 1, {3, 4, 3}) && ring_eq(T1, 2, {4, 3, 7, 4, 4, 3}) &&
                                    ring_eq(T1, 3, {6, 4, 3, 3, 13, 7, 4, 4, 6, 4, 3, 3})));
    BuildingTree T2 = building_values(Int(2), builtin_figP2(), 1, 3);
    checks.push_back(check_line("tree P': root 3", T2.vertices[0].value == Rational(3)));
    checks.push_back(check_line("tree P': rings",
                                ring_eq(T2, 1, {4, 4, 4}) && ring_eq(T2, 2, {5, 5, 5, 5, 5, 5}) &&
                                    ring_eq(T2, 3, {7, 5, 7, 5, 7, 5, 5, 7, 7, 5, 7, 5})));

    std::vector<long> primes{2};
    if (extended) primes.push_back(3);
    for (long p : primes)
        for (int k = 0; k <= 1; ++k) {
            CosetSet cs = typeC_cosets(2, Int(p), k);
            std::vector<UniPoly> acted, base;
            for (auto& P : {builtin_cube(4), builtin_cross(4)}) {
                acted.push_back(hecke_act(cs, P));
                base.push_back(ehrhart(P).poly);
            }
            for (int l = 0; l <= 4; ++l) {
                Rational want = nu_C_reference(k, l)(Rational(Int(p)));
                bool ok = true;
                for (size_t i = 0; i < acted.size(); ++i)
                    ok = ok && acted[i].coeff(l) == want * base[i].coeff(l);
                checks.push_back(check_line("table p=" + std::to_string(p) + " k=" +
                                                std::to_string(k) + " l=" + std::to_string(l),
                                            ok));
            }
        }

    for (int n = 1; n <= 4; ++n) {
        bool ok = true;
        for (int l = 0; l <= 2 * n; ++l)
            ok = ok && zeta_C_closed(n, l).equals(reference_zeta_C(n, l));
        checks.push_back(check_line("zeta closed forms n=" + std::to_string(n), ok));
    }

    // Eigen-equation at translated vertices, figure eigenvalue 4 = p^2 + p at p=2.
    {
        EigenReport r = eigen_check(1, Int(2), 1, builtin_figP(), typeC_cosets(1, Int(2), 0),
                                    Rational(4));
        checks.push_back(check_line("eigenfunction at translated vertices",
                                    r.matched_formula && r.vertices_checked >= 4));
    }

    // Three-way type A eigenvalues at n = 2.
    {
        bool ok = true;
        LatticePolytope P = builtin_figP(), Q = builtin_figP2();
        for (int k = 0; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                Rational f = nu_A(2, k, l, Int(2), NuAMode::Formula);
                ok = ok && nu_A(2, k, l, Int(2), NuAMode::Grassmannian) == f;
                ok = ok && nu_A(2, k, l, Int(2), NuAMode::Action, &P) == f;
                ok = ok && nu_A(2, k, l, Int(2), NuAMode::Action, &Q) == f;
            }
        checks.push_back(check_line("type A eigenvalue three-way agreement", ok));
    }

    // Tamagawa identity and the transform identity on small random cases.
    {
        bool ok = true;
        for (int l = 0; l <= 2; ++l) ok = ok && tamagawa_check(2, l, Int(2), 3, builtin_figP());
        checks.push_back(check_line("tamagawa identity n=2 p=2", ok));
    }
    {
        bool ok = ehrhart_identity_check(IntMatrix::from_rows({{Int(2), Int(1)}, {Int(0), Int(3)}}),
                                         builtin_figP()) &&
                  ehrhart_identity_check(IntMatrix::from_rows({{Int(1), Int(-1)}, {Int(2), Int(1)}}),
                                         builtin_figP2());
        checks.push_back(check_line("transform identity", ok));
    }

    out["checks"] = checks;
    return out;
}

json run_check_andrianov() {
    json out;
    json checks = json::array();
    for (int n = 2; n <= 3; ++n)
        for (long p : {2L, 3L}) {
            long order = 3;
            MultiPoly lhs = andrianov_sum(n, Int(p), order);
            MultiDegreeTable t = hs_enumerate(n, Int(p), (n - 1) * order);
            MultiPoly rhs = phi_map(hs_primitive(t).to_poly(), n, Int(p)).truncated({"X"}, order);
            checks.push_back(check_line("andrianov n=" + std::to_string(n) + " p=" + std::to_string(p),
                                        lhs == rhs));
        }
    out["checks"] = checks;
    return out;
}

json run_check_thmD() {
    json out;
    json checks = json::array();
    for (int n = 2; n <= 3; ++n)
        for (long p : {2L, 3L}) {
            long N = n == 2 ? 6 : 5;
            SubstitutionMap at_p;
            at_p.set("Z", MultiPoly(Rational(Int(p))));
            RationalFunction closed = at_p.apply(hs_bar_closed(n));
            std::vector<std::string> vars{"Y"};
            for (int i = 1; i <= n; ++i) vars.push_back("X_" + std::to_string(i));
            MultiPoly series = series_expand(closed, vars, 2 * N);
            MultiDegreeTable prim = hs_primitive(hs_enumerate(n, Int(p), N));
            MultiPoly table;
            for (auto& [key, cnt] : prim.counts) {
                Monomial m;
                for (int i = 0; i < n; ++i)
                    m = m * Monomial::var("X_" + std::to_string(i + 1), key.first[i]);
                m = m * Monomial::var("Y", key.second[n - 1]);
                table.add_term(m, Rational(cnt));
            }
            bool ok = true;
            std::set<Monomial> keys;
            for (auto& [m, c] : series.terms()) keys.insert(m);
            for (auto& [m, c] : table.terms()) keys.insert(m);
            for (auto& m : keys) {
                long w = 0;
                for (int i = 1; i <= n; ++i) w += i * m.exp(VarPool::id("X_" + std::to_string(i)));
                if (w > N) continue;
                ok = ok && series.coeff(m) == table.coeff(m);
            }
            checks.push_back(check_line("thmD n=" + std::to_string(n) + " p=" + std::to_string(p), ok));
        }
    out["checks"] = checks;
    return out;
}

json run_check_reciprocity() {
    json out;
    json checks = json::array();
    checks.push_back(check_line("HS functional equation n=1", reciprocity_check(ReciprocityKind::HS, 1)));
    checks.push_back(check_line("HS functional equation n=2", reciprocity_check(ReciprocityKind::HS, 2)));
    for (int n = 1; n <= 4; ++n) {
        bool ok = true;
        for (int l = 0; l <= 2 * n; ++l) ok = ok && reciprocity_check(ReciprocityKind::Z, n, l);
        checks.push_back(check_line("zeta functional equation n=" + std::to_string(n), ok));
    }
    checks.push_back(check_line("satake functional equation n=1", reciprocity_check(ReciprocityKind::R, 1)));
    checks.push_back(check_line("satake functional equation n=2", reciprocity_check(ReciprocityKind::R, 2)));
    out["checks"] = checks;
    return out;
}

json run_check_eulerian() {
    json out;
    json checks = json::array();
    for (int n = 1; n <= 6; ++n)
        checks.push_back(check_line("eulerian n=" + std::to_string(n), eulerian_check(n, 12)));
    for (int n = 1; n <= 4; ++n) {
        bool ok = sr_hilbert_series(n, 3) == satake_p1_series(n, 3);
        if (n <= 2) {
            SubstitutionMap p1;
            p1.set("p", MultiPoly(Rational(1)));
            RationalFunction rpr =
                n == 1 ? RationalFunction(1)
                       : p1.apply(phi_map(hs_primitive(reference_hs2(), 2), 2, Int(0)));
            ok = ok && sr_hilbert(n).equals(rpr);
        }
        checks.push_back(check_line("stanley-reisner n=" + std::to_string(n), ok));
    }
    out["checks"] = checks;
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Ehrhart/Hecke/zeta toolkit"};
    app.require_subcommand(1);
    int jobs_flag = 0;
    app.add_option("--jobs", jobs_flag, "worker threads for enumeration-heavy commands");

    std::string polytope_path, matrix_path;

    auto* cmd_ehr = app.add_subcommand("ehrhart", "Ehrhart polynomial of a polytope");
    cmd_ehr->add_option("--polytope", polytope_path, "polytope JSON file")->required();
    std::string lattice_basis;
    long lat_den = 1;
    cmd_ehr->add_option("--lattice-basis", lattice_basis, "row basis JSON (integer matrix)");
    cmd_ehr->add_option("--lattice-den", lat_den, "denominator for the basis rows");

    auto* cmd_tr = app.add_subcommand("transform", "apply a row transform to a polytope");
    cmd_tr->add_option("--polytope", polytope_path, "polytope JSON file")->required();
    cmd_tr->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* cmd_hnf = app.add_subcommand("hnf", "row Hermite normal form");
    cmd_hnf->add_option("--matrix", matrix_path, "matrix JSON file")->required();
    auto* cmd_snf = app.add_subcommand("snf", "elementary divisors");
    cmd_snf->add_option("--matrix", matrix_path, "matrix JSON file")->required();

    auto* cmd_lat = app.add_subcommand("lattices", "enumerate p-power sub/superlattices");
    int lat_n = 2;
    long lat_p = 2, lat_e = 1;
    bool lat_super = false, lat_minimal = false;
    cmd_lat->add_option("--n", lat_n)->required();
    cmd_lat->add_option("--p", lat_p)->required();
    cmd_lat->add_option("--e", lat_e)->required();
    cmd_lat->add_flag("--super", lat_super, "superlattices instead of sublattices");
    cmd_lat->add_flag("--minimal", lat_minimal, "apply minimal_rep to each lattice");

    auto* cmd_hecke = app.add_subcommand("hecke", "Hecke operators");
    auto* cmd_act = cmd_hecke->add_subcommand("act", "act on an Ehrhart polynomial");
    std::string hk_type = "A";
    int hk_n = 2, hk_k = 0, hk_ell = -1;
    long hk_p = 2;
    cmd_act->add_option("--type", hk_type, "A or C")->required();
    cmd_act->add_option("--n", hk_n)->required();
    cmd_act->add_option("--p", hk_p)->required();
    cmd_act->add_option("--k", hk_k)->required();
    cmd_act->add_option("--polytope", polytope_path)->required();
    cmd_act->add_option("--ell", hk_ell, "only report the eigenvalue at this coefficient");

    auto* cmd_b = app.add_subcommand("building", "eigenfunction values on the tree");
    long b_p = 2;
    int b_ell = 1, b_radius = 3;
    std::string b_format = "json";
    cmd_b->add_option("--p", b_p)->required();
    cmd_b->add_option("--polytope", polytope_path)->required();
    cmd_b->add_option("--ell", b_ell)->required();
    cmd_b->add_option("--radius", b_radius)->required();
    cmd_b->add_option("--format", b_format, "json or dot");

    auto* cmd_hs = app.add_subcommand("hs", "Hermite-Smith generating function");
    auto* cmd_hs_enum = cmd_hs->add_subcommand("enumerate", "coefficient table by enumeration");
    int hs_n = 2;
    long hs_p = 2, hs_N = 4;
    bool hs_prim = false, hs_symbolic = false;
    cmd_hs_enum->add_option("--n", hs_n)->required();
    cmd_hs_enum->add_option("--p", hs_p, "prime (ignored with --symbolic-p)");
    cmd_hs_enum->add_option("--N", hs_N, "truncation: sum of delta <= N")->required();
    cmd_hs_enum->add_flag("--prim", hs_prim, "primitive table (homothety classes)");
    cmd_hs_enum->add_flag("--symbolic-p", hs_symbolic, "counts as polynomials in p");
    auto* cmd_hs_closed = cmd_hs->add_subcommand("closed", "reference closed form (n = 2)");
    cmd_hs_closed->add_option("--n", hs_n);
    cmd_hs_closed->add_flag("--prim", hs_prim);

    auto* cmd_sat = app.add_subcommand("satake", "Satake generating function");
    int sat_n = 2;
    bool sat_prim = false;
    long sat_series = -1, sat_p = 2;
    cmd_sat->add_option("--n", sat_n)->required();
    cmd_sat->add_flag("--prim", sat_prim);
    cmd_sat->add_option("--series", sat_series, "truncated sum to this X-order (any n)");
    cmd_sat->add_option("--p", sat_p, "prime for --series");

    auto* cmd_z = app.add_subcommand("zeta", "Ehrhart-Hecke zeta functions");
    std::string z_type = "A";
    int z_n = 1, z_ell = 0;
    bool z_closed = false;
    long z_series = -1, z_p = 2;
    cmd_z->add_option("--type", z_type, "A or C")->required();
    cmd_z->add_option("--n", z_n)->required();
    cmd_z->add_option("--ell", z_ell)->required();
    cmd_z->add_flag("--closed", z_closed);
    cmd_z->add_option("--series", z_series, "brute-force series order");
    cmd_z->add_option("--p", z_p);
    cmd_z->add_option("--polytope", polytope_path);

    auto* cmd_check = app.add_subcommand("check", "verification suites");
    std::string which;
    bool check_extended = false;
    cmd_check->add_option("suite", which, "andrianov|thmD|reciprocity|eulerian|fixtures")->required();
    cmd_check->add_flag("--extended", check_extended, "include the slow p=3 symplectic case");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (jobs_flag > 0) set_jobs(jobs_flag);

    json out;
    try {
        if (*cmd_ehr) {
            LatticePolytope P = load_polytope(polytope_path);
            Lat L = lattice_basis.empty()
                        ? lat_standard(P.n)
                        : lat_from_rows(P.n, matrix_from_json(slurp(lattice_basis)), Int(lat_den));
            std::string req = "ehrhart|" + polytope_to_json(P) + "|" + L.key();
            if (auto cached = Cache::get(req)) {
                std::cout << *cached << "\n";
                return 0;
            }
            EhrhartPolynomial E = ehrhart(P, L);
            out = poly_json(E.poly);
            out["facets"] = hrep(P).facets.size();
            Cache::put(req, out.dump(2));
        } else if (*cmd_tr) {
            LatticePolytope P = load_polytope(polytope_path);
            IntMatrix g = matrix_from_json(slurp(matrix_path));
            out = json::parse(polytope_to_json(transform(g, P)));
        } else if (*cmd_hnf) {
            HnfResult r = hnf(matrix_from_json(slurp(matrix_path)));
            out["h"] = json::parse(matrix_to_json(r.h));
            out["transform"] = json::parse(matrix_to_json(r.transform));
        } else if (*cmd_snf) {
            json divs = json::array();
            for (const Int& d : snf(matrix_from_json(slurp(matrix_path))))
                divs.push_back(d.get_str());
            out["divisors"] = divs;
        } else if (*cmd_lat) {
            std::string req = std::string("lattices|") + std::to_string(lat_n) + "|" +
                              std::to_string(lat_p) + "|" + std::to_string(lat_e) + "|" +
                              (lat_super ? "super" : "sub") + (lat_minimal ? "|min" : "");
            if (auto cached = Cache::get(req)) {
                std::cout << *cached << "\n";
                return 0;
            }
            std::vector<PLattice> ls = lat_super ? superlattices_p_index(lat_n, Int(lat_p), lat_e)
                                                 : sublattices_p_index(lat_n, Int(lat_p), lat_e);
            out["count"] = ls.size();
            out["lattices"] = json::array();
            for (auto& L : ls)
                out["lattices"].push_back(
                    json::parse(plattice_to_json(lat_minimal ? minimal_rep(L) : L)));
            Cache::put(req, out.dump(2));
        } else if (*cmd_act) {
            LatticePolytope P = load_polytope(polytope_path);
            std::string req = "hecke|" + hk_type + "|" + std::to_string(hk_n) + "|" +
                              std::to_string(hk_p) + "|" + std::to_string(hk_k) + "|" +
                              std::to_string(hk_ell) + "|" + polytope_to_json(P);
            if (auto cached = Cache::get(req)) {
                std::cout << *cached << "\n";
                return 0;
            }
            CosetSet cs = hk_type == "A" ? typeA_cosets(hk_n, Int(hk_p), hk_k)
                                         : typeC_cosets(hk_n, Int(hk_p), hk_k);
            UniPoly acted = hecke_act(cs, P);
            out["reps_count"] = cs.size();
            out["acted_poly"] = poly_json(acted);
            out["eigenvalues"] = json::array();
            UniPoly base = ehrhart(P).poly;
            int top = hk_type == "A" ? hk_n : 2 * hk_n;
            for (int l = 0; l <= top; ++l) {
                if (hk_ell >= 0 && l != hk_ell) continue;
                json e;
                e["ell"] = l;
                if (base.coeff(l).is_zero()) e["eigenvalue"] = nullptr;
                else e["eigenvalue"] = (acted.coeff(l) / base.coeff(l)).str();
                out["eigenvalues"].push_back(e);
            }
            Cache::put(req, out.dump(2));
        } else if (*cmd_b) {
            LatticePolytope P = load_polytope(polytope_path);
            BuildingTree T = building_values(Int(b_p), P, b_ell, b_radius);
            if (b_format == "dot") {
                std::cout << T.dot();
                return 0;
            }
            out["p"] = b_p;
            out["ell"] = b_ell;
            out["radius"] = b_radius;
            out["rings"] = json::array();
            for (int d = 0; d <= b_radius; ++d) {
                json ring = json::array();
                for (auto& v : T.ring(d)) ring.push_back(v.str());
                out["rings"].push_back(ring);
            }
            out["vertices"] = json::array();
            for (size_t i = 0; i < T.vertices.size(); ++i) {
                json v;
                v["depth"] = T.vertices[i].depth;
                v["parent"] = T.vertices[i].parent;
                v["value"] = T.vertices[i].value.str();
                out["vertices"].push_back(v);
            }
        } else if (*cmd_hs_enum) {
            json entries = json::array();
            if (hs_symbolic) {
                MultiDegreeTable t = hs_enumerate_symbolic(hs_n, hs_N);
                if (hs_prim) t = hs_primitive(t);
                for (auto& [key, f] : t.sym_counts) {
                    json e;
                    e["mu"] = key.first;
                    e["delta"] = key.second;
                    e["count"] = f.str();
                    entries.push_back(e);
                }
            } else {
                MultiDegreeTable t = hs_enumerate(hs_n, Int(hs_p), hs_N);
                if (hs_prim) t = hs_primitive(t);
                for (auto& [key, c] : t.counts) {
                    json e;
                    e["mu"] = key.first;
                    e["delta"] = key.second;
                    e["count"] = c.get_str();
                    entries.push_back(e);
                }
            }
            out["entries"] = entries;
        } else if (*cmd_hs_closed) {
            if (hs_n != 2) throw std::domain_error("hs closed: reference form available for n = 2");
            RationalFunction f = hs_prim ? hs_primitive(reference_hs2(), 2) : reference_hs2();
            out = rf_json(f);
        } else if (*cmd_sat) {
            if (sat_series >= 0) {
                out["series"] = andrianov_sum(sat_n, Int(sat_p), sat_series).str();
                out["order"] = sat_series;
            } else {
                if (sat_n != 2)
                    throw std::domain_error("satake: closed form available for n = 2; use --series");
                out = rf_json(sat_prim ? phi_map(hs_primitive(reference_hs2(), 2), 2, Int(0))
                                       : reference_r2());
            }
        } else if (*cmd_z) {
            if (z_closed) {
                RationalFunction f = z_type == "A" ? zeta_A_closed(z_n, z_ell)
                                                   : zeta_C_closed(z_n, z_ell);
                out = rf_json(f);
                if (z_type == "A") {
                    out["euler_product_shifts"] = zeta_A_shifts(z_n, z_ell);
                    std::map<long, int> mult;
                    for (long s : zeta_A_shifts(z_n, z_ell)) ++mult[s];
                    std::string fac = "1/(";
                    bool first = true;
                    for (auto& [s, m] : mult) {
                        if (!first) fac += "*";
                        first = false;
                        fac += "(1-p^" + std::to_string(s) + "*t)";
                        if (m > 1) fac += "^" + std::to_string(m);
                    }
                    fac += ")";
                    out["factored"] = fac;
                } else {
                    out["variables"] = "X = p, Y = p^(-n s)";
                }
            } else if (z_series >= 0) {
                LatticePolytope P = load_polytope(polytope_path);
                UniPoly s = zeta_series_bruteforce(z_type == "A" ? ZetaType::A : ZetaType::C,
                                                   z_n, z_ell, Int(z_p), P, z_series);
                out = poly_json(s);
            } else {
                throw std::invalid_argument("zeta: need --closed or --series N");
            }
        } else if (*cmd_check) {
            if (which == "fixtures") out = run_check_fixtures(check_extended);
            else if (which == "andrianov") out = run_check_andrianov();
            else if (which == "thmD") out = run_check_thmD();
            else if (which == "reciprocity") out = run_check_reciprocity();
            else if (which == "eulerian") out = run_check_eulerian();
            else throw std::invalid_argument("unknown check suite: " + which);
            out["pass"] = checks_failed == 0;
            std::cout << out.dump(2) << "\n";
            return checks_failed == 0 ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::cout << out.dump(2) << "\n";
    return 0;
}
