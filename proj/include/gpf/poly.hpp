#pragma once
// Dense univariate polynomials over an exact field (or commutative ring for
// the basic operations), coefficients stored by ascending degree.  The zero
// polynomial is the empty sequence.  RatFunc is the reduced quotient type.

#include "gpf/quadext.hpp"

#include <algorithm>
#include <vector>

namespace gpf {

template <class K>
struct Poly {
    std::vector<K> c;  // c[i] multiplies x^i; no trailing zeros

    Poly() = default;
    Poly(long v) { if (v != 0) c.push_back(K(v)); trim(); }
    Poly(const K& v) { c.push_back(v); trim(); }
    explicit Poly(std::vector<K> cs) : c(std::move(cs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    // degree of the zero polynomial reported as -1 (the -infinity sentinel)
    long deg() const { return static_cast<long>(c.size()) - 1; }
    const K& lc() const {
        static const K zero = K(0);
        return c.empty() ? zero : c.back();
    }
    K coeff(size_t i) const { return i < c.size() ? c[i] : K(0); }

    static Poly var() { return Poly(std::vector<K>{K(0), K(1)}); }  // x
    static Poly linear(const K& a0, const K& a1) {                  // a0 + a1 x
        return Poly(std::vector<K>{a0, a1});
    }

    template <class V>
    V eval(const V& x) const {
        V out = V(0);
        for (size_t i = c.size(); i-- > 0;) out = out * x + V(c[i]);
        return out;
    }

    friend bool operator==(const Poly& f, const Poly& g) { return f.c == g.c; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    friend Poly operator+(const Poly& f, const Poly& g) {
        Poly out;
        out.c.resize(std::max(f.c.size(), g.c.size()), K(0));
        for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.coeff(i) + g.coeff(i);
        out.trim();
        return out;
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        Poly out;
        out.c.resize(std::max(f.c.size(), g.c.size()), K(0));
        for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.coeff(i) - g.coeff(i);
        out.trim();
        return out;
    }
    Poly operator-() const {
        Poly out = *this;
        for (auto& v : out.c) v = K(0) - v;
        return out;
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly();
        Poly out;
        out.c.assign(f.c.size() + g.c.size() - 1, K(0));
        for (size_t i = 0; i < f.c.size(); ++i)
            for (size_t j = 0; j < g.c.size(); ++j)
                out.c[i + j] += f.c[i] * g.c[j];
        out.trim();
        return out;
    }
    friend Poly operator*(const Poly& f, const K& s) {
        Poly out = f;
        for (auto& v : out.c) v *= s;
        out.trim();
        return out;
    }
    friend Poly operator*(const K& s, const Poly& f) { return f * s; }
    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    // division with remainder; requires invertible leading coefficient
    friend std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
        if (g.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly q, r = f;
        K inv = K(1) / g.lc();
        while (!r.is_zero() && r.deg() >= g.deg()) {
            long d = r.deg() - g.deg();
            K s = r.lc() * inv;
            // q += s x^d ; r -= s x^d g
            if (q.c.size() < static_cast<size_t>(d + 1)) q.c.resize(d + 1, K(0));
            q.c[d] += s;
            for (size_t i = 0; i < g.c.size(); ++i) r.c[i + d] -= s * g.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }
    friend Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }
    friend Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * (K(1) / lc());
    }

    Poly derivative() const {
        Poly out;
        for (size_t i = 1; i < c.size(); ++i) out.c.push_back(c[i] * K(static_cast<long>(i)));
        out.trim();
        return out;
    }

    // f(x + s)
    Poly shift(const K& s) const {
        Poly out, pow = Poly(K(1));
        Poly lin = Poly::linear(s, K(1));
        for (size_t i = 0; i < c.size(); ++i) {
            out += pow * c[i];
            pow *= lin;
        }
        return out;
    }

    // f(s * x)
    Poly scale_arg(const K& s) const {
        Poly out = *this;
        K pw = K(1);
        for (auto& v : out.c) {
            v *= pw;
            pw *= s;
        }
        out.trim();
        return out;
    }
};

template <class K>
Poly<K> poly_gcd(Poly<K> f, Poly<K> g) {
    while (!g.is_zero()) {
        Poly<K> r = f % g;
        f = g;
        g = r;
    }
    return f.monic();
}

// resultant via the Euclidean remainder chain
template <class K>
K resultant(Poly<K> f, Poly<K> g) {
    if (f.is_zero() || g.is_zero()) return K(0);
    K res = K(1);
    bool neg = false;
    while (g.deg() > 0) {
        Poly<K> r = f % g;
        long df = f.deg(), dg = g.deg(), dr = r.is_zero() ? -1 : r.deg();
        if (r.is_zero()) return K(0);
        // res(f,g) = (-1)^{df dg} lc(g)^{df - dr} res(g, r)
        if ((df % 2) && (dg % 2)) neg = !neg;
        K l = g.lc(), pw = K(1);
        for (long i = 0; i < df - dr; ++i) pw *= l;
        res *= pw;
        f = g;
        g = r;
    }
    // g is a nonzero constant: res(f, c) = c^{deg f}
    K l = g.lc(), pw = K(1);
    for (long i = 0; i < f.deg(); ++i) pw *= l;
    res *= pw;
    return neg ? K(0) - res : res;
}

// rising factorial (t + u)(t + u + 1)...(t + u + n - 1) as a polynomial in
// the variable of `base`;  pochhammer_poly(P, n) = P(x) P(x)+1 ... shifted.
template <class K>
Poly<K> pochhammer_poly(const Poly<K>& base, long n) {
    Poly<K> out(K(1));
    for (long i = 0; i < n; ++i) out *= base + Poly<K>(K(i));
    return out;
}

// scalar Pochhammer (t)_n
template <class K>
K pochhammer(const K& t, long n) {
    K out = K(1);
    for (long i = 0; i < n; ++i) out *= t + K(i);
    return out;
}

template <class K>
Poly<K> poly_from_roots(const std::vector<K>& roots) {
    Poly<K> out(K(1));
    for (const auto& r : roots) out *= Poly<K>::linear(K(0) - r, K(1));
    return out;
}

// ---------------------------------------------------------------------------
// reduced rational functions

template <class K>
struct RatFunc {
    Poly<K> num, den;  // den monic, gcd(num, den) = 1

    RatFunc() : num(), den(K(1)) {}
    RatFunc(long v) : num(v), den(K(1)) {}
    RatFunc(const K& v) : num(v), den(K(1)) {}
    RatFunc(const Poly<K>& n) : num(n), den(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) : num(std::move(n)), den(std::move(d)) { reduce(); }

    void reduce() {
        if (den.is_zero()) throw std::domain_error("RatFunc zero denominator");
        if (num.is_zero()) { den = Poly<K>(K(1)); return; }
        Poly<K> g = poly_gcd(num, den);
        if (g.deg() > 0) {
            num = num / g;
            den = den / g;
        }
        K l = den.lc();
        den = den.monic();
        num = num * (K(1) / l);
    }

    bool is_zero() const { return num.is_zero(); }

    friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num * g.den + g.num * f.den, f.den * g.den);
    }
    friend RatFunc operator-(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num * g.den - g.num * f.den, f.den * g.den);
    }
    friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
        return RatFunc(f.num * g.num, f.den * g.den);
    }
    friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
        if (g.is_zero()) throw std::domain_error("RatFunc division by zero");
        return RatFunc(f.num * g.den, f.den * g.num);
    }
    RatFunc operator-() const { RatFunc out = *this; out.num = -out.num; return out; }
    RatFunc& operator+=(const RatFunc& g) { return *this = *this + g; }
    RatFunc& operator-=(const RatFunc& g) { return *this = *this - g; }
    RatFunc& operator*=(const RatFunc& g) { return *this = *this * g; }
    RatFunc& operator/=(const RatFunc& g) { return *this = *this / g; }

    friend bool operator==(const RatFunc& f, const RatFunc& g) {
        return f.num == g.num && f.den == g.den;
    }
    friend bool operator!=(const RatFunc& f, const RatFunc& g) { return !(f == g); }

    // f(x + s)
    RatFunc shift(const K& s) const { return RatFunc(num.shift(s), den.shift(s)); }
    // f(s * x)
    RatFunc scale_arg(const K& s) const {
        return RatFunc(num.scale_arg(s), den.scale_arg(s));
    }

    template <class V>
    V eval(const V& x) const {
        return num.eval(x) / den.eval(x);
    }
};

}  // namespace gpf
