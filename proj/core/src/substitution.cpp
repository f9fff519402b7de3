#include "ehz/substitution.hpp"

namespace ehz {

SubstitutionMap& SubstitutionMap::set(const std::string& var, const MultiPoly& image) {
    if (image.is_zero()) throw std::domain_error("substitution: zero image for " + var);
    if (!image.is_monomial())
        throw std::domain_error("substitution: image of " + var + " must be a single term");
    auto [m, c] = image.leading();
    images_[VarPool::id(var)] = {m, c};
    return *this;
}

bool SubstitutionMap::has(const std::string& var) const {
    return images_.count(VarPool::id(var)) > 0;
}

MultiPoly SubstitutionMap::apply(const MultiPoly& f) const {
    MultiPoly r;
    for (auto& [m, c] : f.terms()) {
        Monomial out;
        Rational coef = c;
        for (auto& [v, e] : m.entries()) {
            auto it = images_.find(v);
            if (it == images_.end()) {
                out.set(v, out.exp(v) + e);
                continue;
            }
            const auto& [im, ic] = it->second;
            out = out * im.pow(e);
            coef *= rat_pow(ic, e);
        }
        r.add_term(out, coef);
    }
    return r;
}

RationalFunction SubstitutionMap::apply(const RationalFunction& f) const {
    return RationalFunction(apply(f.num()), apply(f.den()));
}

MultiPoly subst_poly(const MultiPoly& f, const std::string& var, const MultiPoly& image) {
    int id = VarPool::id(var);
    MultiPoly r;
    for (auto& [m, c] : f.terms()) {
        long e = m.exp(id);
        if (e < 0) throw std::domain_error("subst_poly: negative exponent of " + var);
        Monomial rest = m;
        rest.set(id, 0);
        r += MultiPoly(rest, c) * image.pow(e);
    }
    return r;
}

} // namespace ehz
