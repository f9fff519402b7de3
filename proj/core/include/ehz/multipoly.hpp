#pragma once

#include "ehz/rational.hpp"
#include "ehz/unipoly.hpp"
#include <map>
#include <vector>

namespace ehz {

/// Process-wide interned variable names with a fixed canonical order
/// (the order of first interning; the standard names used throughout the
/// library are interned up front so printing is stable across runs).
class VarPool {
public:
    static int id(const std::string& name);
    static const std::string& name(int id);
    static int count();
};

/// Monomial: sparse exponent vector, Laurent exponents allowed.
/// Entries sorted by variable id, no zero exponents stored.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(const std::string& name, long exp = 1);

    long exp(int var_id) const;
    const std::vector<std::pair<int, long>>& entries() const { return e_; }
    bool is_one() const { return e_.empty(); }
    bool has_negative() const;
    long total_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial inverse() const;
    Monomial pow(long k) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a.e_ == b.e_); }
    /// Lexicographic on the full exponent vector in canonical variable order.
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const;

    void set(int var_id, long exp);

private:
    std::vector<std::pair<int, long>> e_;
};

/// Sparse multivariate Laurent polynomial over Q with canonical term order.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Monomial& m, const Rational& c = Rational(1));

    static MultiPoly var(const std::string& name, long exp = 1);
    static MultiPoly from_unipoly(const UniPoly& p, const std::string& var_name = "");

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    Rational coeff(const Monomial& m) const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool has_negative_exponent() const;
    /// Leading term under the canonical order (largest monomial).
    std::pair<Monomial, Rational> leading() const;
    long degree_in(const std::string& var) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly operator*(const Rational& c) const;
    MultiPoly pow(long k) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Keep only terms whose total degree in `vars` is <= order.
    MultiPoly truncated(const std::vector<std::string>& vars, long order) const;

    /// Collapse to a dense univariate polynomial; fails if other variables occur
    /// or any exponent is negative.
    UniPoly to_unipoly(const std::string& var) const;

    /// Canonical string: terms in descending monomial order, "5/2*p^2*X" style.
    std::string str() const;
    static MultiPoly parse(const std::string& s);

    void add_term(const Monomial& m, const Rational& c);

private:
    std::map<Monomial, Rational> terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

} // namespace ehz
