#include "ehz/rational_function.hpp"

namespace ehz {

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) { den_ = MultiPoly(Rational(1)); return; }
    Rational lc = den_.leading().second;
    if (lc != Rational(1)) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    RationalFunction r(Rational(1));
    RationalFunction base = *this;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
    if (den_ == MultiPoly(Rational(1))) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

bool PolyLess::operator()(const MultiPoly& a, const MultiPoly& b) const {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.terms().size() < b.terms().size();
}

void FactoredSum::add(const MultiPoly& numerator, const FactorMap& den_factors) {
    // Extend the common denominator, rescaling the running numerator.
    for (auto& [f, mult] : den_factors) {
        int& have = fac_[f];
        if (have < mult) {
            MultiPoly scale = f.pow(mult - have);
            num_ *= scale;
            have = mult;
        }
    }
    // Multiply the incoming numerator by the complement factors.
    MultiPoly nn = numerator;
    for (auto& [f, mult] : fac_) {
        auto it = den_factors.find(f);
        int need = mult - (it == den_factors.end() ? 0 : it->second);
        if (need > 0) nn *= f.pow(need);
    }
    num_ += nn;
}

RationalFunction FactoredSum::value() const {
    MultiPoly den(Rational(1));
    for (auto& [f, mult] : fac_) den *= f.pow(mult);
    return RationalFunction(num_, den);
}

} // namespace ehz
