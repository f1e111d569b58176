#include "asepq/qarith.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace asepq {

LaurentPoly LaurentPoly::constant(const Rational& c) { return u_power(0, c); }

LaurentPoly LaurentPoly::u_power(long k, const Rational& c) {
    LaurentPoly p;
    p.set_coeff(k, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(long k, const Rational& c) { return u_power(2 * k, c); }

bool LaurentPoly::is_one() const {
    return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0);
}

long LaurentPoly::lowest() const {
    if (t_.empty()) throw std::domain_error("lowest(): zero polynomial");
    return t_.begin()->first;
}

long LaurentPoly::highest() const {
    if (t_.empty()) throw std::domain_error("highest(): zero polynomial");
    return t_.rbegin()->first;
}

Rational LaurentPoly::coeff(long uexp) const {
    auto it = t_.find(uexp);
    return it == t_.end() ? Rational(0) : it->second;
}

void LaurentPoly::set_coeff(long uexp, const Rational& c) {
    // GMP comparisons and arithmetic assume canonical form, and incoming
    // values may not be reduced, so canonicalize before the zero test
    Rational cc = c;
    cc.canonicalize();
    if (cc == 0) {
        t_.erase(uexp);
        return;
    }
    t_[uexp] = cc;
}

void LaurentPoly::add_to_coeff(long uexp, const Rational& c) {
    auto it = t_.find(uexp);
    if (it == t_.end()) {
        set_coeff(uexp, c);
        return;
    }
    Rational cc = c;
    cc.canonicalize();
    it->second += cc;
    if (it->second == 0) t_.erase(it);
}

bool LaurentPoly::integer_q_exponents() const {
    for (const auto& [e, c] : t_)
        if (e % 2 != 0) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_to_coeff(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.t_) add_to_coeff(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : t_) r.t_[e] = -c;
    return r;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
}

LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_to_coeff(ea + eb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    LaurentPoly r = one();
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
    if (is_zero()) return zero();
    // ascending long division; quotient exponents can only grow, bounded by
    // the degree difference, so failure to terminate means non-divisibility
    const long qmax = highest() - d.highest();
    LaurentPoly r = *this;
    LaurentPoly q;
    while (!r.is_zero()) {
        const long e = r.lowest() - d.lowest();
        if (e > qmax) return std::nullopt;
        const Rational c = r.coeff(r.lowest()) / d.coeff(d.lowest());
        q.add_to_coeff(e, c);
        r -= u_power(e, c) * d;
    }
    return q;
}

double LaurentPoly::eval(double q0) const {
    if (q0 <= 0) throw std::domain_error("eval: q0 must be positive");
    double v = 0;
    for (const auto& [e, c] : t_) v += c.get_d() * std::pow(q0, 0.5 * static_cast<double>(e));
    return v;
}

namespace {

Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) throw std::domain_error("rational_pow: 0 to negative power");
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational r(1);
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

}  // namespace

std::optional<Rational> LaurentPoly::eval_rational(const Rational& q0) const {
    if (q0 <= 0) throw std::domain_error("eval_rational: q0 must be positive");
    if (!integer_q_exponents()) return std::nullopt;
    Rational v(0);
    for (const auto& [e, c] : t_) v += c * rational_pow(q0, e / 2);
    return v;
}

namespace {

std::string rational_str(const Rational& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

// exponent on the u-grid -> printed q-exponent: "2", "-1", "(1/2)", "(-3/2)"
std::string q_exponent_str(long uexp) {
    if (uexp % 2 == 0) return std::to_string(uexp / 2);
    return "(" + std::to_string(uexp) + "/2)";
}

std::string term_str(long uexp, const Rational& c) {
    if (uexp == 0) return rational_str(c);
    std::string coeff;
    if (c == 1)
        coeff = "";
    else if (c == -1)
        coeff = "-";
    else
        coeff = rational_str(c) + "*";
    if (uexp == 2) return coeff + "q";
    return coeff + "q^" + q_exponent_str(uexp);
}

}  // namespace

std::string LaurentPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (first) {
            out = term_str(e, c);
            first = false;
            continue;
        }
        if (c > 0)
            out += " + " + term_str(e, c);
        else
            out += " - " + term_str(e, -c);
    }
    return out;
}

namespace {

bool parse_rational(const std::string& s, Rational& out) {
    if (s.empty()) return false;
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den)) return false;
    mpz_class n(num), d(den);
    if (d == 0) return false;
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

// "2" -> 4, "-1" -> -2, "(1/2)" -> 1, "-3/2" -> -3   (returned on the u-grid)
bool parse_exponent(std::string s, long& uexp) {
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
    if (s.empty()) return false;
    std::string num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    try {
        size_t pos = 0;
        long n = std::stol(num, &pos);
        if (pos != num.size()) return false;
        long d = std::stol(den, &pos);
        if (pos != den.size()) return false;
        if (d == 1)
            uexp = 2 * n;
        else if (d == 2)
            uexp = n;
        else
            return false;
        return true;
    } catch (...) {
        return false;
    }
}

bool parse_term(const std::string& term, long& uexp, Rational& coeff) {
    std::string s;
    for (char ch : term)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) return false;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        s = s.substr(1);
    }
    auto qpos = s.find('q');
    if (qpos == std::string::npos) {
        uexp = 0;
        if (!parse_rational(s, coeff)) return false;
        if (neg) coeff = -coeff;
        return true;
    }
    std::string chead = s.substr(0, qpos);
    if (!chead.empty() && chead.back() == '*') chead.pop_back();
    if (chead.empty())
        coeff = 1;
    else if (!parse_rational(chead, coeff))
        return false;
    if (neg) coeff = -coeff;
    std::string tail = s.substr(qpos + 1);
    if (tail.empty()) {
        uexp = 2;
        return true;
    }
    if (tail[0] != '^') return false;
    return parse_exponent(tail.substr(1), uexp);
}

}  // namespace

std::optional<LaurentPoly> LaurentPoly::parse(const std::string& s) {
    // split into signed terms at top-level +/-; a sign right after '^', '*',
    // '(' or '/' belongs to the term body
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    char prev_sig = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if ((ch == '+' || ch == '-') && depth == 0 && !cur.empty() && prev_sig != 0 &&
            prev_sig != '^' && prev_sig != '*' && prev_sig != '(' && prev_sig != '/') {
            parts.push_back(cur);
            cur.clear();
        }
        cur += ch;
        if (!std::isspace(static_cast<unsigned char>(ch))) prev_sig = ch;
    }
    if (depth != 0) return std::nullopt;
    if (!cur.empty()) parts.push_back(cur);
    if (parts.empty()) return std::nullopt;
    LaurentPoly p;
    for (const auto& part : parts) {
        bool blank = true;
        for (char ch : part)
            if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (blank) return std::nullopt;
        long e;
        Rational c;
        if (!parse_term(part, e, c)) return std::nullopt;
        p.add_to_coeff(e, c);
    }
    return p;
}

RationalFunction::RationalFunction(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // strip the common power of u so entries do not accumulate monomial cruft
    const long s = std::min(num_.lowest(), den_.lowest());
    if (s != 0) {
        LaurentPoly shift = LaurentPoly::u_power(-s);
        num_ *= shift;
        den_ *= shift;
    }
    if (den_.coeff(den_.lowest()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<LaurentPoly> RationalFunction::as_poly() const {
    if (is_poly()) return num_;
    return num_.divide_exact(den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    *this += -o;
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) {
        *this = RationalFunction();
        return *this;
    }
    num_ *= o.num_;
    if (!o.den_.is_one()) den_ *= o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("RationalFunction: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

double RationalFunction::eval(double q0) const {
    const double d = den_.eval(q0);
    if (d == 0) throw std::domain_error("RationalFunction eval: denominator vanishes at q0");
    return num_.eval(q0) / d;
}

std::optional<Rational> RationalFunction::eval_rational(const Rational& q0) const {
    auto n = num_.eval_rational(q0);
    auto d = den_.eval_rational(q0);
    if (!n || !d) return std::nullopt;
    if (*d == 0) throw std::domain_error("RationalFunction eval: denominator vanishes at q0");
    return *n / *d;
}

std::string RationalFunction::str() const {
    if (is_poly()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
    a += b;
    return a;
}

RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
    a -= b;
    return a;
}

RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
    a *= b;
    return a;
}

RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
    a /= b;
    return a;
}

LaurentPoly q_int(long n) {
    if (n < 0) throw std::domain_error("q_int: negative argument");
    LaurentPoly p;
    // [n] = q^{n-1} + q^{n-3} + ... + q^{-(n-1)}
    for (long i = 0; i < n; ++i) p.add_to_coeff(2 * (n - 1 - 2 * i), 1);
    return p;
}

LaurentPoly q_int2(long n) {
    if (n < 0) throw std::domain_error("q_int2: negative argument");
    LaurentPoly p;
    // {n} = 1 + q^2 + ... + q^{2(n-1)}
    for (long i = 0; i < n; ++i) p.add_to_coeff(4 * i, 1);
    return p;
}

LaurentPoly q_factorial(long n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    LaurentPoly p = LaurentPoly::one();
    for (long k = 1; k <= n; ++k) p *= q_int(k);
    return p;
}

LaurentPoly q_factorial2(long n) {
    if (n < 0) throw std::domain_error("q_factorial2: negative argument");
    LaurentPoly p = LaurentPoly::one();
    for (long k = 1; k <= n; ++k) p *= q_int2(k);
    return p;
}

LaurentPoly q_binomial(long n, long m) {
    if (m < 0 || n < 0 || m > n) throw std::domain_error("q_binomial: need 0 <= m <= n");
    auto q = q_factorial(n).divide_exact(q_factorial(n - m) * q_factorial(m));
    if (!q) throw std::logic_error("q_binomial: factorial quotient not exact");
    return *q;
}

double eval_at(const LaurentPoly& p, double q0) { return p.eval(q0); }
double eval_at(const RationalFunction& f, double q0) { return f.eval(q0); }

}  // namespace asepq
