#include "ehz/unipoly.hpp"

#include <sstream>

namespace ehz {

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var)
    : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) {
    return UniPoly({c}, std::move(var));
}

UniPoly UniPoly::monomial(const Rational& c, long deg, std::string var) {
    std::vector<Rational> cs(deg + 1, Rational(0));
    cs[deg] = c;
    return UniPoly(std::move(cs), std::move(var));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::operator-() const {
    auto cs = coeffs_;
    for (auto& c : cs) c = -c;
    return UniPoly(std::move(cs), var_);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) cs[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) cs[i] += b.coeffs_[i];
    return UniPoly(std::move(cs), a.coeffs_.empty() ? b.var_ : a.var_);
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(cs), a.var_);
}

UniPoly UniPoly::truncated(long order) const {
    if (degree() <= order) return *this;
    std::vector<Rational> cs(coeffs_.begin(), coeffs_.begin() + order + 1);
    return UniPoly(std::move(cs), var_);
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        Rational c = coeffs_[k];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (k == 0) {
            os << c.str();
        } else {
            if (c != Rational(1)) os << c.str() << "*";
            os << var_;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace ehz
