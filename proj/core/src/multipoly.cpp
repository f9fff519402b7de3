#include "ehz/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace ehz {

namespace {

struct PoolState {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::mutex mu;

    PoolState() {
        // Standard names first so the canonical order is independent of
        // the order in which a particular run touches them.
        static const char* std_names[] = {"p", "q", "t", "T", "X", "Y", "Z"};
        for (const char* n : std_names) intern(n);
        for (int i = 0; i <= 8; ++i) intern("X_" + std::to_string(i));
        for (int i = 0; i <= 8; ++i) intern("Y_" + std::to_string(i));
        for (int i = 0; i <= 8; ++i) intern("x_" + std::to_string(i));
    }

    int intern(const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        int id = static_cast<int>(names.size());
        names.push_back(name);
        ids.emplace(name, id);
        return id;
    }
};

PoolState& pool() {
    static PoolState s;
    return s;
}

} // namespace

int VarPool::id(const std::string& name) {
    auto& s = pool();
    std::lock_guard<std::mutex> lk(s.mu);
    return s.intern(name);
}

const std::string& VarPool::name(int id) {
    auto& s = pool();
    std::lock_guard<std::mutex> lk(s.mu);
    return s.names.at(id);
}

int VarPool::count() {
    auto& s = pool();
    std::lock_guard<std::mutex> lk(s.mu);
    return static_cast<int>(s.names.size());
}

Monomial Monomial::var(const std::string& name, long exp) {
    Monomial m;
    if (exp != 0) m.e_.push_back({VarPool::id(name), exp});
    return m;
}

long Monomial::exp(int var_id) const {
    for (auto& [v, e] : e_)
        if (v == var_id) return e;
    return 0;
}

bool Monomial::has_negative() const {
    for (auto& [v, e] : e_)
        if (e < 0) return true;
    return false;
}

long Monomial::total_degree() const {
    long d = 0;
    for (auto& [v, e] : e_) d += e;
    return d;
}

void Monomial::set(int var_id, long exp) {
    auto it = std::lower_bound(e_.begin(), e_.end(), var_id,
                               [](const auto& p, int v) { return p.first < v; });
    if (it != e_.end() && it->first == var_id) {
        if (exp == 0) e_.erase(it);
        else it->second = exp;
    } else if (exp != 0) {
        e_.insert(it, {var_id, exp});
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < e_.size() || j < o.e_.size()) {
        if (j >= o.e_.size() || (i < e_.size() && e_[i].first < o.e_[j].first)) {
            r.e_.push_back(e_[i++]);
        } else if (i >= e_.size() || o.e_[j].first < e_[i].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            long s = e_[i].second + o.e_[j].second;
            if (s != 0) r.e_.push_back({e_[i].first, s});
            ++i; ++j;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_) e = -e;
    return r;
}

Monomial Monomial::pow(long k) const {
    Monomial r;
    if (k == 0) return r;
    r = *this;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

bool operator<(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
        int va = i < a.e_.size() ? a.e_[i].first : INT32_MAX;
        int vb = j < b.e_.size() ? b.e_[j].first : INT32_MAX;
        long ea = 0, eb = 0;
        int v;
        if (va < vb) { v = va; ea = a.e_[i].second; ++i; }
        else if (vb < va) { v = vb; eb = b.e_[j].second; ++j; }
        else { v = va; ea = a.e_[i].second; eb = b.e_[j].second; ++i; ++j; }
        (void)v;
        if (ea != eb) return ea < eb;
    }
    return false;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [v, e] : e_) {
        if (!first) os << "*";
        first = false;
        os << VarPool::name(v);
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

MultiPoly::MultiPoly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

MultiPoly MultiPoly::var(const std::string& name, long exp) {
    return MultiPoly(Monomial::var(name, exp));
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, const std::string& var_name) {
    const std::string& v = var_name.empty() ? p.var() : var_name;
    MultiPoly r;
    for (long k = 0; k <= p.degree(); ++k)
        r.add_term(Monomial::var(v, k), p.coeff(k));
    return r;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::has_negative_exponent() const {
    for (auto& [m, c] : terms_)
        if (m.has_negative()) return true;
    return false;
}

std::pair<Monomial, Rational> MultiPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto it = std::prev(terms_.end());
    return {it->first, it->second};
}

long MultiPoly::degree_in(const std::string& var) const {
    int id = VarPool::id(var);
    long d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exp(id));
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r = a;
    for (auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    if (c.is_zero()) return MultiPoly();
    MultiPoly r = *this;
    for (auto& [m, cc] : r.terms_) cc *= c;
    return r;
}

MultiPoly MultiPoly::pow(long k) const {
    if (k < 0) {
        if (!is_monomial()) throw std::domain_error("pow: negative power of non-monomial");
        auto [m, c] = leading();
        return MultiPoly(m.pow(k), rat_pow(c, k));
    }
    MultiPoly r(Rational(1));
    MultiPoly base = *this;
    long e = k;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

MultiPoly MultiPoly::truncated(const std::vector<std::string>& vars, long order) const {
    std::vector<int> ids;
    for (auto& v : vars) ids.push_back(VarPool::id(v));
    MultiPoly r;
    for (auto& [m, c] : terms_) {
        long d = 0;
        for (int id : ids) d += m.exp(id);
        if (d <= order) r.add_term(m, c);
    }
    return r;
}

UniPoly MultiPoly::to_unipoly(const std::string& var) const {
    int id = VarPool::id(var);
    std::vector<Rational> cs;
    for (auto& [m, c] : terms_) {
        long e = m.exp(id);
        if (e < 0) throw std::domain_error("to_unipoly: negative exponent");
        for (auto& [v, ex] : m.entries())
            if (v != id && ex != 0)
                throw std::domain_error("to_unipoly: foreign variable " + VarPool::name(v));
        if (static_cast<long>(cs.size()) <= e) cs.resize(e + 1, Rational(0));
        cs[e] += c;
    }
    return UniPoly(std::move(cs), var);
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        const Monomial& m = it->first;
        if (m.is_one()) {
            os << c.str();
        } else {
            if (c != Rational(1)) os << c.str() << "*";
            os << m.str();
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    long parse_long() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("poly parse: expected integer at " + std::to_string(start));
        return std::stol(s.substr(start, i - start));
    }

    Rational parse_number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("poly parse: expected number at " + std::to_string(start));
        Int num(s.substr(start, i - start));
        if (eat('/')) {
            skip_ws();
            size_t ds = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (ds == i) throw std::invalid_argument("poly parse: expected denominator");
            return Rational(num, Int(s.substr(ds, i - ds)));
        }
        return Rational(num);
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) throw std::invalid_argument("poly parse: expected identifier at " + std::to_string(start));
        return s.substr(start, i - start);
    }

    // term := [number] {'*'? factor}, factor := ident ['^' int]
    MultiPoly parse_term() {
        Rational c(1);
        Monomial m;
        bool any = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_number();
            any = true;
        }
        for (;;) {
            skip_ws();
            if (i < s.size() && s[i] == '*') { ++i; skip_ws(); }
            if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) break;
            std::string name = parse_ident();
            long e = 1;
            if (eat('^')) e = parse_long();
            m = m * Monomial::var(name, e);
            any = true;
        }
        if (!any) throw std::invalid_argument("poly parse: empty term at " + std::to_string(i));
        return MultiPoly(m, c);
    }

    MultiPoly parse_sum() {
        MultiPoly r;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        for (;;) {
            MultiPoly t = parse_term();
            r += neg ? -t : t;
            skip_ws();
            if (eat('-')) neg = true;
            else if (eat('+')) neg = false;
            else break;
        }
        return r;
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& s) {
    Parser p(s);
    p.skip_ws();
    if (p.i >= s.size()) throw std::invalid_argument("poly parse: empty input");
    MultiPoly r = p.parse_sum();
    p.skip_ws();
    if (p.i != s.size()) throw std::invalid_argument("poly parse: trailing input at " + std::to_string(p.i));
    return r;
}

} // namespace ehz
