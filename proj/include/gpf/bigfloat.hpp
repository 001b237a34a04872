#pragma once
// Thin RAII wrapper around MPFR reals.  Precision is explicit per value;
// binary operations carry the minimum precision of their operands.

#include "gpf/quadext.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <string>

namespace gpf {

inline long default_prec() {
    static long p = [] {
        if (const char* e = std::getenv("GPF_PREC")) {
            long v = std::atol(e);
            if (v >= 64) return v;
        }
        return 256L;
    }();
    return p;
}

class BigFloat {
  public:
    mpfr_t v;

    BigFloat() { mpfr_init2(v, default_prec()); mpfr_set_zero(v, 1); }
    static BigFloat zero(long prec) {
        BigFloat r(no_init{});
        mpfr_init2(r.v, prec);
        mpfr_set_zero(r.v, 1);
        return r;
    }
    BigFloat(double x, long prec) { mpfr_init2(v, prec); mpfr_set_d(v, x, MPFR_RNDN); }
    BigFloat(const Rat& q, long prec = default_prec()) {
        mpfr_init2(v, prec);
        mpfr_set_q(v, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const Fe& x, long prec = default_prec()) {
        mpfr_init2(v, prec);
        mpfr_set_q(v, x.a.get_mpq_t(), MPFR_RNDN);
        if (x.b != 0) {
            BigFloat s = zero(prec);
            mpfr_sqrt_ui(s.v, static_cast<unsigned long>(x.D), MPFR_RNDN);
            BigFloat bq(x.b, prec);
            mpfr_fma(v, s.v, bq.v, v, MPFR_RNDN);
        }
    }
    BigFloat(const BigFloat& o) { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(v, mpfr_get_prec(o.v)); mpfr_swap(v, o.v); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) { mpfr_set_prec(v, mpfr_get_prec(o.v)); mpfr_set(v, o.v, MPFR_RNDN); }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v, o.v);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v); }

    long prec() const { return mpfr_get_prec(v); }
    static long join(const BigFloat& a, const BigFloat& b) {
        return std::min(a.prec(), b.prec());
    }

    // integer-valued constructors so templated polynomial evaluation can
    // build V(0), V(1), ... at the ambient default precision
    explicit BigFloat(long i) { mpfr_init2(v, default_prec()); mpfr_set_si(v, i, MPFR_RNDN); }
    explicit BigFloat(int i) : BigFloat(static_cast<long>(i)) {}

  private:
    struct no_init {};
    explicit BigFloat(no_init) {}

  public:

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::zero(join(a, b)); mpfr_add(r.v, a.v, b.v, MPFR_RNDN); return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::zero(join(a, b)); mpfr_sub(r.v, a.v, b.v, MPFR_RNDN); return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::zero(join(a, b)); mpfr_mul(r.v, a.v, b.v, MPFR_RNDN); return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = BigFloat::zero(join(a, b)); mpfr_div(r.v, a.v, b.v, MPFR_RNDN); return r;
    }
    BigFloat operator-() const { BigFloat r = BigFloat::zero(prec()); mpfr_neg(r.v, v, MPFR_RNDN); return r; }
    BigFloat& operator+=(const BigFloat& b) { mpfr_add(v, v, b.v, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& b) { mpfr_sub(v, v, b.v, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& b) { mpfr_mul(v, v, b.v, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& b) { mpfr_div(v, v, b.v, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v, b.v) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v, b.v) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v, b.v) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v, b.v) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v, b.v); }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return !mpfr_equal_p(a.v, b.v); }

    bool is_zero() const { return mpfr_zero_p(v); }
    int sign() const { return mpfr_sgn(v); }
    double to_double() const { return mpfr_get_d(v, MPFR_RNDN); }
    bool is_integer() const { return mpfr_integer_p(v); }

    std::string str(size_t digits = 40) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }
};

inline BigFloat bf_abs(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_abs(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_sqrt(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_sqrt(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_exp(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_exp(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_log(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_log(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_sin(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_sin(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_cos(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_cos(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_atan(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_atan(r.v, x.v, MPFR_RNDN); return r;
}
inline BigFloat bf_pi(long prec) {
    BigFloat r = BigFloat::zero(prec); mpfr_const_pi(r.v, MPFR_RNDN); return r;
}
// x^y for real x > 0 (or integer y)
inline BigFloat bf_pow(const BigFloat& x, const BigFloat& y) {
    BigFloat r = BigFloat::zero(BigFloat::join(x, y)); mpfr_pow(r.v, x.v, y.v, MPFR_RNDN); return r;
}
inline BigFloat bf_pow2(long e, long prec) {  // 2^e
    BigFloat r = BigFloat::zero(prec); mpfr_set_si_2exp(r.v, 1, e, MPFR_RNDN); return r;
}
inline BigFloat bf_floor(const BigFloat& x) {
    BigFloat r = BigFloat::zero(x.prec()); mpfr_floor(r.v, x.v); return r;
}
// every finite MPFR value is a dyadic rational; recover it exactly
inline Rat bf_to_rat_exact(const BigFloat& x) {
    if (x.is_zero()) return Rat(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x.v);
    Rat r(m);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(p);
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(p);
    }
    return r;
}

}  // namespace gpf
