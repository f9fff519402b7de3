#pragma once

#include "ehz/multipoly.hpp"
#include <map>

namespace ehz {

/// Ratio of two MultiPoly. No gcd normalization; the denominator is scaled so
/// its leading coefficient is +1 and equality is decided by cross-multiplication.
class RationalFunction {
public:
    RationalFunction() : num_(Rational(0)), den_(Rational(1)) {}
    RationalFunction(const MultiPoly& num, const MultiPoly& den);
    RationalFunction(const MultiPoly& num) : num_(num), den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(int c) : num_(Rational(c)), den_(Rational(1)) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction inverse() const;
    RationalFunction pow(long k) const;

    /// True iff equal as rational functions (num1*den2 == num2*den1).
    bool equals(const RationalFunction& o) const;

    std::string str() const;

private:
    void normalize();
    MultiPoly num_, den_;
};

struct PolyLess {
    bool operator()(const MultiPoly& a, const MultiPoly& b) const;
};

using FactorMap = std::map<MultiPoly, int, PolyLess>;

/// Sum-of-fractions accumulator that keeps the denominator as a multiset of
/// factors, so repeated addition over a shared product of binomials never
/// expands more than the true common denominator.
class FactoredSum {
public:
    FactoredSum() : num_(Rational(0)) {}

    /// Add numerator / prod(den_factors^multiplicity).
    void add(const MultiPoly& numerator, const FactorMap& den_factors);

    RationalFunction value() const;
    const FactorMap& factors() const { return fac_; }
    const MultiPoly& numerator() const { return num_; }

private:
    MultiPoly num_;
    FactorMap fac_;
};

} // namespace ehz
