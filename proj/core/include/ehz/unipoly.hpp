#pragma once

#include "ehz/rational.hpp"
#include <vector>

namespace ehz {

/// Dense univariate polynomial over Q in one named variable.
/// Trailing zero coefficients are trimmed; degree() == -1 for the zero polynomial.
class UniPoly {
public:
    UniPoly() : var_("T") {}
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::vector<Rational> coeffs, std::string var = "T");

    static UniPoly constant(const Rational& c, std::string var = "T");
    static UniPoly monomial(const Rational& c, long deg, std::string var = "T");

    const std::string& var() const { return var_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Rational coeff(long k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly truncated(long order) const;

    /// Canonical string, highest degree term first, e.g. "3/2*T^2 + 5/2*T + 1".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_; // coeffs_[k] multiplies var^k
    std::string var_;
};

} // namespace ehz
