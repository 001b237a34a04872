#pragma once
// Numeric evaluation of the Gauss series, the Gamma function, and the exact
// terminating hypergeometric / Appell-F3 sums.

#include "gpf/bigfloat.hpp"
#include "gpf/poly.hpp"

namespace gpf {

struct pole_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct divergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SeriesResult {
    BigFloat value;
    long terms_used = 0;
    BigFloat error_bound;
};

// 2F1(alpha, beta; gamma; x) for |x| < 1 by direct summation.
// Stops once three consecutive terms fall below 2^-prec of the partial sum
// and the term ratio has settled under rho < 1; tail bounded geometrically.
inline SeriesResult gauss_2f1(const BigFloat& alpha, const BigFloat& beta,
                              const BigFloat& gamma, const BigFloat& x,
                              long prec = default_prec()) {
    BigFloat ax = bf_abs(x);
    if (!(ax < BigFloat(1))) throw divergence_error("gauss_2f1: |x| >= 1");
    // gamma at (or extremely near) a non-positive integer is a pole of the series
    BigFloat g_round = bf_floor(gamma + BigFloat(Rat(1, 2), prec));
    if (!(g_round > BigFloat(0)) &&
        bf_abs(gamma - g_round) < bf_pow2(-prec / 2, prec))
        throw pole_error("gauss_2f1: gamma at non-positive integer");

    BigFloat sum = BigFloat(Rat(1), prec);
    BigFloat term = BigFloat(Rat(1), prec);
    BigFloat tiny = bf_pow2(-prec, prec);
    // asymptotic term ratio -> |x|; use rho = (1+|x|)/2 < 1 for the tail
    BigFloat rho = (BigFloat(1) + ax) / BigFloat(2);
    int small_run = 0;
    long k = 0;
    const long kmax = 64 * prec + 10000;
    while (k < kmax) {
        BigFloat ratio = (alpha + BigFloat(Rat(k), prec)) * (beta + BigFloat(Rat(k), prec)) /
                         ((gamma + BigFloat(Rat(k), prec)) * BigFloat(Rat(k + 1), prec)) * x;
        term = term * ratio;
        ++k;
        if (term.is_zero()) { small_run = 3; break; }
        sum += term;
        if (bf_abs(term) < tiny * bf_abs(sum)) {
            if (++small_run >= 3 && bf_abs(ratio) < rho) break;
        } else {
            small_run = 0;
        }
    }
    SeriesResult out;
    out.value = sum;
    out.terms_used = k + 1;
    out.error_bound = bf_abs(term) * rho / (BigFloat(1) - rho);
    return out;
}

// Gamma via MPFR (correctly rounded), with a few guard bits.
inline BigFloat gamma_fn(const BigFloat& z, long prec = default_prec()) {
    if (z.sign() <= 0 && z.is_integer())
        throw pole_error("gamma_fn: pole at non-positive integer");
    BigFloat r = BigFloat::zero(prec);
    BigFloat zz = BigFloat::zero(prec + 16);
    mpfr_set(zz.v, z.v, MPFR_RNDN);
    mpfr_gamma(r.v, zz.v, MPFR_RNDN);
    return r;
}

template <class K>
K pow_fe(const K& base, long e) {
    K out = K(1);
    K b = base;
    long n = e;
    if (n < 0) { b = K(1) / b; n = -n; }
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

// Renormalized terminating sum
//   F_k(beta; gamma; x) = sum_{j=0}^k (-1)^j C(k,j) (beta)_j (gamma+j)_{k-j} x^j
// as an exact field element.
template <class K>
K terminating_F(long k, const K& beta, const K& gamma, const K& x) {
    K sum = K(0);
    for (long j = 0; j <= k; ++j) {
        K term = K(Rat(binom_int(k, j)));
        term *= pochhammer(beta, j);
        K gj = gamma + K(static_cast<long>(j));
        term *= pochhammer(gj, k - j);
        term *= pow_fe(x, j);
        if (j % 2) sum -= term; else sum += term;
    }
    return sum;
}

// same sum with x left symbolic: a polynomial in z
template <class K>
Poly<K> terminating_F_poly(long k, const K& beta, const K& gamma) {
    Poly<K> sum;
    for (long j = 0; j <= k; ++j) {
        K coef = K(Rat(binom_int(k, j)));
        coef *= pochhammer(beta, j);
        K gj = gamma + K(static_cast<long>(j));
        coef *= pochhammer(gj, k - j);
        if (j % 2) coef = K(0) - coef;
        std::vector<K> mono(static_cast<size_t>(j) + 1, K(0));
        mono.back() = coef;
        sum += Poly<K>(mono);
    }
    return sum;
}

// Appell F3(a1, a2; b1, b2; c; u, v) when the double series terminates.
template <class K>
K appell_f3(const K& a1, const K& a2, const K& b1, const K& b2, const K& c,
            const K& u, const K& v, long cap = 200) {
    K sum = K(0);
    for (long m = 0; m <= cap; ++m) {
        K num_m = pochhammer(a1, m) * pochhammer(b1, m);
        if (num_m == K(0) && m > 0) break;
        for (long n = 0; n <= cap; ++n) {
            K num_n = pochhammer(a2, n) * pochhammer(b2, n);
            if (num_n == K(0) && n > 0) break;
            K den = pochhammer(c, m + n) * K(Rat(factorial_int(m) * factorial_int(n)));
            if (den == K(0)) throw pole_error("appell_f3: lower Pochhammer vanishes");
            sum += num_m * num_n * pow_fe(u, m) * pow_fe(v, n) / den;
        }
    }
    return sum;
}

// S_ij(w; x) of the dihedral closed form: needs sqrt(1-x) in the field.
//   S_ij(w;x) = (1-x)^{-(i+j)/2} F3(i+j, j-i; 1-i-j, 1+i-j; w; u, v)
//   u = -(1-s)/(2s),  v = (1-s)/2,  s = sqrt(1-x).
inline Fe appell_f3_terminating(long i, long j, const Fe& w, const Fe& x) {
    auto s = sqrt_exact_fe(Fe(1) - x);
    if (!s) throw std::domain_error("appell_f3_terminating: sqrt(1-x) not in field");
    Fe u = -(Fe(1) - *s) / (Fe(2) * *s);
    Fe v = (Fe(1) - *s) / Fe(2);
    Fe f3 = appell_f3(Fe(i + j), Fe(j - i), Fe(1 - i - j), Fe(1 + i - j), w, u, v);
    // (1-x)^{-(i+j)/2} = s^{-(i+j)}
    return pow_fe(*s, -(i + j)) * f3;
}

}  // namespace gpf
