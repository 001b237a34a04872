#pragma once
// FieldElem: an exact scalar living in Q or in a real quadratic extension
// Q(sqrt(D)).  One radicand per computation: combining elements from two
// different extensions throws rather than building a degree-4 tower.

#include "gpf/rational.hpp"

#include <cmath>
#include <iostream>

namespace gpf {

struct field_mismatch : std::runtime_error {
    field_mismatch() : std::runtime_error("mixing distinct quadratic extensions") {}
};

class Fe {
  public:
    Rat a, b;   // value = a + b*sqrt(D)
    long D;     // squarefree > 1 when b != 0; 0 marks a plain rational

    Fe() : a(0), b(0), D(0) {}
    Fe(long v) : a(v), b(0), D(0) {}
    Fe(const Rat& v) : a(v), b(0), D(0) {}
    Fe(Rat av, Rat bv, long Dv) : a(std::move(av)), b(std::move(bv)), D(Dv) {
        normalize();
    }

    bool is_rational() const { return D == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    static long join(long D1, long D2) {
        if (D1 == 0) return D2;
        if (D2 == 0) return D1;
        if (D1 != D2) throw field_mismatch();
        return D1;
    }

    Fe conj() const { return Fe(a, -b, D); }
    Rat norm() const { return a * a - b * b * Rat(D); }  // x * conj(x)

    Fe operator-() const { return Fe(-a, -b, D); }

    friend Fe operator+(const Fe& x, const Fe& y) {
        return Fe(x.a + y.a, x.b + y.b, join(x.D, y.D));
    }
    friend Fe operator-(const Fe& x, const Fe& y) {
        return Fe(x.a - y.a, x.b - y.b, join(x.D, y.D));
    }
    friend Fe operator*(const Fe& x, const Fe& y) {
        long D = join(x.D, y.D);
        return Fe(x.a * y.a + x.b * y.b * Rat(D), x.a * y.b + x.b * y.a, D);
    }
    friend Fe operator/(const Fe& x, const Fe& y) {
        if (y.is_zero()) throw std::domain_error("Fe division by zero");
        if (y.D == 0) return Fe(x.a / y.a, x.b / y.a, x.D);
        Rat n = y.norm();
        if (n == 0) throw std::domain_error("Fe division by zero norm");
        return x * Fe(y.a / n, -y.b / n, y.D);
    }

    Fe& operator+=(const Fe& y) { return *this = *this + y; }
    Fe& operator-=(const Fe& y) { return *this = *this - y; }
    Fe& operator*=(const Fe& y) { return *this = *this * y; }
    Fe& operator/=(const Fe& y) { return *this = *this / y; }

    friend bool operator==(const Fe& x, const Fe& y) {
        if (x.a != y.a || x.b != y.b) return false;
        return x.b == 0 || x.D == y.D;
    }
    friend bool operator!=(const Fe& x, const Fe& y) { return !(x == y); }

    // exact sign of a + b*sqrt(D)
    int sign() const {
        if (b == 0) return sgn(a);
        if (a == 0) return sgn(b);
        if (sgn(a) == sgn(b)) return sgn(a);
        // |a| vs |b| sqrt(D): compare a^2 vs b^2 D, sign decided by the larger
        int c = sgn(a * a - b * b * Rat(D));
        return c == 0 ? 0 : c * sgn(a);
    }
    friend bool operator<(const Fe& x, const Fe& y) { return (x - y).sign() < 0; }
    friend bool operator>(const Fe& x, const Fe& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const Fe& x, const Fe& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const Fe& x, const Fe& y) { return (x - y).sign() >= 0; }

    double to_double() const {
        double v = a.get_d();
        if (b != 0) v += b.get_d() * std::sqrt(static_cast<double>(D));
        return v;
    }

    std::string str() const {
        if (b == 0) return rat_str(a);
        std::string s;
        if (a != 0) s = rat_str(a) + "+";
        s += rat_str(b) + "*sqrt(" + std::to_string(D) + ")";
        return s;
    }

  private:
    static int sgn(const Rat& q) { return mpq_sgn(q.get_mpq_t()); }

    void normalize() {
        if (b == 0) { D = 0; return; }
        if (D <= 1) throw std::invalid_argument("radicand must be squarefree > 1");
    }
};

inline std::ostream& operator<<(std::ostream& os, const Fe& x) { return os << x.str(); }

// sqrt of an Fe inside the same (or a fresh) quadratic extension, if it
// exists there.  For a rational radicand r = s^2 or r = t^2 D' the result
// is s or t*sqrt(D'); for a + b*sqrt(D) we solve (s + t*sqrt(D))^2 = a + b*sqrt(D).
inline std::optional<Fe> sqrt_exact_fe(const Fe& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_zero()) return Fe(0);
    if (x.b == 0) {
        if (auto r = sqrt_exact_rat(x.a)) return Fe(*r);
        // a = (n/d): sqrt = sqrt(n d)/d; split off the square part
        Rat q = x.a;
        Int nd = Int(q.get_num()) * Int(q.get_den());
        auto [s, f] = squarefree_split(nd);
        if (!f.fits_slong_p()) return std::nullopt;
        if (x.D != 0 && f != x.D) return std::nullopt;  // would leave the field... unless it matches
        return Fe(Rat(0), Rat(s) / Rat(q.get_den()), f.get_si());
    }
    // (s + t sqrt(D))^2 = s^2 + t^2 D + 2 s t sqrt(D); so s^2 is a root of
    // y^2 - a y + b^2 D / 4 = 0.
    Rat disc = x.a * x.a - x.b * x.b * Rat(x.D);
    auto rd = sqrt_exact_rat(disc);
    if (!rd) return std::nullopt;
    for (int pm = 0; pm < 2; ++pm) {
        Rat s2 = (x.a + (pm ? -*rd : *rd)) / 2;
        if (s2 < 0) continue;
        if (auto s = sqrt_exact_rat(s2)) {
            if (*s == 0) continue;
            Rat t = x.b / (2 * *s);
            Fe cand(*s, t, x.D);
            if (cand * cand == x && cand.sign() > 0) return cand;
            cand = -cand;
            if (cand * cand == x && cand.sign() > 0) return cand;
        }
    }
    return std::nullopt;
}

}  // namespace gpf
