#include "ehz/rational.hpp"

namespace ehz {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Int(s));
    Int n(s.substr(0, slash)), d(s.substr(slash + 1));
    return Rational(n, d);
}

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (e > 0) return Rational(int_pow(base.num(), e), int_pow(base.den(), e));
    if (base.is_zero()) throw std::domain_error("rat_pow: 0 to negative power");
    return Rational(int_pow(base.den(), -e), int_pow(base.num(), -e));
}

long valuation(Int x, const Int& p) {
    if (x == 0) throw std::domain_error("valuation of 0");
    long v = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        x /= p;
        ++v;
    }
    return v;
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace ehz
