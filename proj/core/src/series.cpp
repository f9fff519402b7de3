#include "ehz/series.hpp"

namespace ehz {

namespace {

// Split p into (part constant in vars, rest).
std::pair<MultiPoly, MultiPoly> split_constant(const MultiPoly& p, const std::vector<int>& ids) {
    MultiPoly c0, rest;
    for (auto& [m, c] : p.terms()) {
        bool constant = true;
        for (int id : ids)
            if (m.exp(id) != 0) { constant = false; break; }
        if (constant) c0.add_term(m, c);
        else rest.add_term(m, c);
    }
    return {c0, rest};
}

} // namespace

MultiPoly series_inverse(const MultiPoly& den, const std::vector<std::string>& vars, long order) {
    std::vector<int> ids;
    for (auto& v : vars) ids.push_back(VarPool::id(v));
    auto [c0, rest] = split_constant(den, ids);
    if (c0.is_zero() || !c0.is_monomial())
        throw std::domain_error("not expandable at origin");
    for (auto& [m, c] : rest.terms()) {
        long d = 0;
        for (int id : ids) d += m.exp(id);
        if (d < 0) throw std::domain_error("not expandable at origin");
    }
    // den = c0 (1 + u), u = rest/c0; 1/den = c0^{-1} sum (-u)^j.
    MultiPoly c0_inv = c0.pow(-1);
    MultiPoly u = rest * c0_inv;
    MultiPoly acc(Rational(1));
    MultiPoly pw(Rational(1));
    for (long j = 1; j <= order; ++j) {
        pw = (pw * u).truncated(vars, order);
        if (pw.is_zero()) break;
        if (j % 2 == 1) acc -= pw;
        else acc += pw;
    }
    return (acc * c0_inv).truncated(vars, order);
}

MultiPoly series_expand(const RationalFunction& f, const std::vector<std::string>& vars, long order) {
    // Laurent numerators may dip to negative degrees in `vars`; expand the
    // inverse far enough that every surviving cross term is complete.
    std::vector<int> ids;
    for (auto& v : vars) ids.push_back(VarPool::id(v));
    long dmin = 0;
    for (auto& [m, c] : f.num().terms()) {
        long d = 0;
        for (int id : ids) d += m.exp(id);
        dmin = std::min(dmin, d);
    }
    MultiPoly inv = series_inverse(f.den(), vars, order - dmin);
    return (f.num().truncated(vars, order) * inv).truncated(vars, order);
}

} // namespace ehz
