#pragma once
// Exact rational scalars on top of GMP, plus the small number-theoretic
// helpers (floor, squarefree split, continued-fraction reconstruction)
// that the rest of the library leans on.

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gpf {

using Int = mpz_class;
using Rat = mpq_class;   // always stored canonicalized by gmpxx

inline Rat rat(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline bool is_half_integer(const Rat& q) {            // in 1/2 + Z
    return q.get_den() == 2;
}

inline Int floor_int(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

inline Rat frac_part(const Rat& q) { return q - Rat(floor_int(q)); }

// q mod m for integer q, m > 0, result in [0, m)
inline Int mod_int(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Rat pow_rat(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat out(1);
    while (n) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

inline Int factorial_int(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binom_int(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// exact integer square root if a is a perfect square
inline std::optional<Int> sqrt_exact_int(const Int& a) {
    if (a < 0) return std::nullopt;
    if (mpz_perfect_square_p(a.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), a.get_mpz_t());
        return s;
    }
    return std::nullopt;
}

inline std::optional<Rat> sqrt_exact_rat(const Rat& q) {
    auto n = sqrt_exact_int(Int(q.get_num()));
    auto d = sqrt_exact_int(Int(q.get_den()));
    if (n && d) return Rat(*n) / Rat(*d);
    return std::nullopt;
}

// Split |n| = s^2 * f with f squarefree (trial division; desk scale).
// Returns (s, f).  n must be nonzero.
inline std::pair<Int, Int> squarefree_split(Int n) {
    if (n == 0) throw std::invalid_argument("squarefree_split(0)");
    if (n < 0) n = -n;
    Int s(1), f(1);
    for (Int d(2); d * d <= n && d <= 1000000; ++d) {
        while (mpz_divisible_p(n.get_mpz_t(), Int(d * d).get_mpz_t())) {
            n /= d * d;
            s *= d;
        }
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            f *= d;
        }
    }
    // leftover n is either 1, a prime, a prime square, or a product of
    // big primes; catch the perfect-square case
    if (auto r = sqrt_exact_int(n)) {
        s *= *r;
    } else {
        f *= n;
    }
    return {s, f};
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// The rational with smallest denominator in the closed interval [lo, hi]
// (Stern-Brocot walk).  Used to pull exact roots out of isolation intervals.
inline Rat simplest_between(const Rat& lo, const Rat& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_between: empty interval");
    if (lo == hi) return lo;
    if (lo <= 0 && hi >= 0) return Rat(0);
    if (hi < 0) return -simplest_between(-hi, -lo);
    // now 0 < lo < hi
    Int fl = floor_int(lo);
    if (lo == Rat(fl)) return lo;  // integer endpoint
    if (Rat(fl) + 1 <= hi) return Rat(fl + 1);
    // same integer part; recurse on the fractional inverses
    Rat lo2 = Rat(1) / (hi - Rat(fl));
    Rat hi2 = Rat(1) / (lo - Rat(fl));
    Rat inner = simplest_between(lo2, hi2);
    return Rat(fl) + Rat(1) / inner;
}

}  // namespace gpf
