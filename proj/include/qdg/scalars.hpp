#pragma once

// Exact coefficient arithmetic: Laurent polynomials in a formal variable v
// over the rationals, and their fraction field.  All algebra coefficients in
// this project are Laurent polynomials; ranks and representation matrices
// live in the fraction field.

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qdg {

using Rational = mpq_class;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string rational_str(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------------------
// Laurent polynomial in v: finite map exponent -> nonzero rational.
// ---------------------------------------------------------------------------
class Laurent {
  public:
    Laurent() = default;
    Laurent(long n) { set(0, Rational(n)); }  // NOLINT(google-explicit-constructor)
    explicit Laurent(const Rational& c) { set(0, c); }

    static Laurent v_pow(long k, const Rational& c = 1) {
        Laurent r;
        r.set(k, c);
        return r;
    }

    const std::map<long, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return is_monomial() && t_.begin()->first == 0 && t_.begin()->second == 1; }
    bool is_monomial() const { return t_.size() == 1; }
    // Units of Q[v,v^-1] are the nonzero monomials.
    bool is_unit() const { return is_monomial(); }

    Rational coeff(long k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Rational(0) : it->second;
    }

    long min_exp() const { check_nonzero(); return t_.begin()->first; }
    long max_exp() const { check_nonzero(); return t_.rbegin()->first; }
    Rational lead_coeff() const { check_nonzero(); return t_.rbegin()->second; }

    void set(long k, const Rational& c) {
        if (c == 0)
            t_.erase(k);
        else
            t_[k] = c;
    }
    void add_term(long k, const Rational& c) {
        auto it = t_.find(k);
        if (it == t_.end()) {
            if (c != 0) t_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [k, c] : o.t_) add_term(k, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (auto& [k, c] : a.t_) r.t_[k] = -c;
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ka, ca] : a.t_)
            for (auto& [kb, cb] : b.t_) r.add_term(add_exp(ka, kb), ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.t_ < b.t_; }

    Laurent shifted(long k) const {
        Laurent r;
        for (auto& [e, c] : t_) r.t_[add_exp(e, k)] = c;
        return r;
    }

    // Inverse of a unit (monomial); throws otherwise.
    Laurent unit_inverse() const {
        if (!is_unit()) throw error("Laurent: not a unit: " + to_string());
        auto [k, c] = *t_.begin();
        return v_pow(-k, Rational(c.get_den(), c.get_num()));
    }

    Laurent pow(long n) const {
        if (n < 0) return unit_inverse().pow(-n);
        Laurent r = Laurent(1);
        for (long i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    Rational evaluate(const Rational& x) const {
        if (x == 0) throw error("Laurent: cannot evaluate at 0");
        Rational acc = 0;
        for (auto& [k, c] : t_) {
            Rational p = 1;
            long n = k >= 0 ? k : -k;
            for (long i = 0; i < n; ++i) p *= x;
            if (k < 0) p = Rational(p.get_den(), p.get_num());
            acc += c * p;
        }
        return acc;
    }

    // Canonical text form, exponents descending: `v^2 + -1*v^-2`, `1 + 2*v`.
    std::string to_string() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            auto [k, c] = *it;
            if (k == 0) {
                os << rational_str(c);
            } else {
                if (c != 1) os << rational_str(c) << "*";
                os << (k == 1 ? "v" : "v^" + std::to_string(k));
            }
        }
        return os.str();
    }

    static Laurent parse(const std::string& s);

    size_t hash() const {
        size_t h = 0x9e3779b97f4a7c15ull;
        for (auto& [k, c] : t_) {
            h ^= std::hash<long>()(k) + 0x9e3779b9 + (h << 6) + (h >> 2);
            h ^= std::hash<std::string>()(c.get_str()) + 0x9e3779b9 + (h << 6) + (h >> 2);
        }
        return h;
    }

  private:
    std::map<long, Rational> t_;

    void check_nonzero() const {
        if (t_.empty()) throw error("Laurent: zero has no extremal exponent");
    }
    static long add_exp(long a, long b) {
        long r;
        if (__builtin_add_overflow(a, b, &r)) throw error("Laurent: exponent overflow");
        return r;
    }
};

// Symmetric q-integer [n] with q_i = v^(d*D): (q_i^n - q_i^-n)/(q_i - q_i^-1).
inline Laurent q_integer(long n, long d, long D) {
    Laurent r;
    long neg = n < 0 ? -1 : 1;
    long m = n < 0 ? -n : n;
    for (long j = 0; j < m; ++j) r.add_term(d * D * (m - 1 - 2 * j), neg);
    return r;
}

// ---------------------------------------------------------------------------
// Dense poly helpers over Q[x] used for gcd-reduction of the fraction field.
// ---------------------------------------------------------------------------
namespace detail {
using Poly = std::vector<Rational>;  // coeff[i] of x^i, normalized: no trailing zeros

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline Poly laurent_to_poly(const Laurent& l, long& shift) {
    shift = l.is_zero() ? 0 : l.min_exp();
    Poly p;
    if (l.is_zero()) return p;
    p.assign(static_cast<size_t>(l.max_exp() - shift + 1), Rational(0));
    for (auto& [k, c] : l.terms()) p[static_cast<size_t>(k - shift)] = c;
    return p;
}
inline Laurent poly_to_laurent(const Poly& p, long shift) {
    Laurent r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r.set(shift + static_cast<long>(i), p[i]);
    return r;
}
// Division with remainder; returns quotient, rem output parameter.
inline Poly poly_divmod(Poly a, const Poly& b, Poly& rem) {
    if (b.empty()) throw error("poly division by zero");
    poly_trim(a);
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    rem = std::move(a);
    poly_trim(q);
    return q;
}
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r;
        poly_divmod(a, b, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;  // monic
    }
    return a;
}
}  // namespace detail

// Exact division in Q[v,v^-1]; throws if not divisible.
inline Laurent laurent_div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw error("Laurent: division by zero");
    if (a.is_zero()) return Laurent();
    long sa, sb;
    detail::Poly pa = detail::laurent_to_poly(a, sa);
    detail::Poly pb = detail::laurent_to_poly(b, sb);
    detail::Poly rem;
    detail::Poly q = detail::poly_divmod(pa, pb, rem);
    if (!rem.empty()) throw error("Laurent: inexact division");
    return detail::poly_to_laurent(q, sa - sb);
}

// ---------------------------------------------------------------------------
// Fraction field Q(v) element, kept reduced (gcd 1, denominator monic with
// min exponent 0).
// ---------------------------------------------------------------------------
class FieldScalar {
  public:
    FieldScalar() : num_(), den_(1) {}
    FieldScalar(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(Laurent n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    FieldScalar(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_unit() const { return !is_zero(); }
    FieldScalar unit_inverse() const { return FieldScalar(1) / *this; }

    friend FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return FieldScalar(a.num_ + b.num_);
        return FieldScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return FieldScalar(a.num_ - b.num_);
        return FieldScalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend FieldScalar operator-(const FieldScalar& a) { return raw(-a.num_, a.den_); }
    friend FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return FieldScalar(a.num_ * b.num_);
        return FieldScalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend FieldScalar operator/(const FieldScalar& a, const FieldScalar& b) {
        if (b.is_zero()) throw error("FieldScalar: division by zero");
        return FieldScalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }
    FieldScalar& operator/=(const FieldScalar& o) { return *this = *this / o; }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) {
        return (a.num_ * b.den_) == (b.num_ * a.den_);
    }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

    // Only valid for reduced representatives; used for map keys.
    friend bool operator<(const FieldScalar& a, const FieldScalar& b) {
        if (a.num_ != b.num_) return a.num_ < b.num_;
        return a.den_ < b.den_;
    }

    // Throws if the value is not a Laurent polynomial.
    Laurent as_laurent() const {
        if (den_.is_one()) return num_;
        return laurent_div_exact(num_, den_);
    }

    Rational evaluate(const Rational& x) const {
        Rational d = den_.evaluate(x);
        if (d == 0) throw error("FieldScalar: evaluation hits pole");
        return num_.evaluate(x) / d;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

  private:
    Laurent num_, den_;

    static FieldScalar raw(Laurent n, Laurent d) {
        FieldScalar r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void reduce() {
        if (den_.is_zero()) throw error("FieldScalar: zero denominator");
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return;
        }
        long sn, sd;
        detail::Poly pn = detail::laurent_to_poly(num_, sn);
        detail::Poly pd = detail::laurent_to_poly(den_, sd);
        detail::Poly g = detail::poly_gcd(pn, pd);
        if (g.size() > 1) {
            detail::Poly rem;
            pn = detail::poly_divmod(pn, g, rem);
            pd = detail::poly_divmod(detail::laurent_to_poly(den_, sd), g, rem);
        }
        // normalize: denominator min exponent 0, monic
        Laurent n = detail::poly_to_laurent(pn, sn);
        Laurent d = detail::poly_to_laurent(pd, sd);
        Laurent u = Laurent::v_pow(d.min_exp(), d.lead_coeff());
        num_ = laurent_div_exact(n, u);
        den_ = laurent_div_exact(d, u);
    }
};

// ---------------------------------------------------------------------------
// Laurent text parser (canonical grammar: terms `c`, `v^k`, `c*v^k` joined
// by `+`; also accepts '-' joining for convenience).
// ---------------------------------------------------------------------------
inline Laurent Laurent::parse(const std::string& s) {
    Laurent result;
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (!first || s[i] == '+' || s[i] == '-') {
            if (i >= s.size() || (s[i] != '+' && s[i] != '-'))
                throw error("Laurent parse: expected '+' in '" + s + "'");
            if (s[i] == '-') sign = -1;
            ++i;
            skip_ws();
        }
        first = false;
        // coefficient
        Rational c(1);
        bool have_coeff = false;
        if (i < s.size() && (isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-')) {
            size_t j = i;
            if (s[j] == '-') ++j;
            while (j < s.size() && (isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
            c = Rational(s.substr(i, j - i));
            c.canonicalize();
            i = j;
            have_coeff = true;
            skip_ws();
            if (i < s.size() && s[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long k = 0;
        if (i < s.size() && s[i] == 'v') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t j = i;
                if (j < s.size() && s[j] == '-') ++j;
                while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
                k = std::stol(s.substr(i, j - i));
                i = j;
            }
        } else if (!have_coeff) {
            throw error("Laurent parse: bad term in '" + s + "'");
        }
        result.add_term(k, sign * c);
        skip_ws();
    }
    return result;
}

}  // namespace qdg
