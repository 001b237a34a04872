#pragma once
// Analytic invariants of a parameter tuple: saddle-point asymptotics, the
// exact dilation, residues at the poles, the density of holomorphic indices,
// the sine-sine constancy classification, deficiency counts, and the Bailey
// family of products at x = 1/2.

#include "gpf/canonical.hpp"

namespace gpf {

// ---------------------------------------------------------------------------
// saddle point and growth constants: f(w) ~ A * B^w

struct Asymptotics {
    BigFloat t0, A, B;
};

inline Asymptotics asymptotic_constants(const Lambda& l, long prec = default_prec()) {
    if (!(l.p > 0 && l.p < l.r && l.q < l.r))
        throw std::domain_error("asymptotic_constants: need 0 < p < r, q < r");
    BigFloat p(l.p, prec), q(l.q, prec), r(l.r, prec);
    BigFloat a(l.a, prec), b(l.b, prec), x(l.x, prec);
    BigFloat one(Rat(1), prec), half(rat(1, 2), prec);
    // phi1(t) = -(r-q) x t^2 + ((p-q) x + r) t - p, with a single root in (0,1)
    BigFloat c2 = -(r - q) * x, c1 = (p - q) * x + r, c0 = -p;
    BigFloat t0 = BigFloat::zero(prec);
    if (c2.is_zero()) {
        t0 = -c0 / c1;
    } else {
        BigFloat disc = bf_sqrt(c1 * c1 - BigFloat(Rat(4), prec) * c2 * c0);
        BigFloat r1 = (-c1 + disc) / (BigFloat(Rat(2), prec) * c2);
        BigFloat r2 = (-c1 - disc) / (BigFloat(Rat(2), prec) * c2);
        t0 = (r1 > BigFloat(Rat(0), prec) && r1 < one) ? r1 : r2;
    }
    if (!(t0 > BigFloat(Rat(0), prec) && t0 < one))
        throw std::runtime_error("asymptotic_constants: saddle not in (0,1)");
    BigFloat phi2 = (BigFloat(Rat(-2), prec) * (r - q) * x * t0 + (p - q) * x + r) /
                    (t0 * (one - t0) * (one - x * t0));
    BigFloat eta = bf_pow(t0, a - one) * bf_pow(one - t0, -a - one) *
                   bf_pow(one - x * t0, -b);
    BigFloat Phi = bf_pow(t0, p) * bf_pow(one - t0, r - p) * bf_pow(one - x * t0, -q);
    Asymptotics out;
    out.t0 = t0;
    out.A = bf_pow(r - p, a + half) * bf_pow(p, half - a) / bf_sqrt(r) * eta /
            bf_sqrt(phi2);
    out.B = bf_pow(r, r) * bf_pow(p, -p) * bf_pow(r - p, p - r) * Phi;
    return out;
}

// ---------------------------------------------------------------------------
// exact dilation
//   d = r^r / sqrt(p^p q^q (r-p)^{r-p} (r-q)^{r-q} x^r (1-x)^{p+q-r})
// for integer slopes; half-integer slopes go through the duplication d^2.

struct Dilation {
    Fe value;            // meaningful when exact
    bool exact = false;
    BigFloat numeric;
};

inline Dilation dilation(const Lambda& l, long prec = default_prec()) {
    Dilation out;
    if (is_integer(l.p) && is_integer(l.q) && is_integer(l.r)) {
        long p = floor_int(l.p).get_si(), q = floor_int(l.q).get_si(),
             r = floor_int(l.r).get_si();
        if (!(p > 0 && p < r && q >= 0 && q < r))
            throw std::domain_error("dilation: need 0 < p < r, 0 <= q < r");
        Fe rad(pow_rat(Rat(p), p) * pow_rat(Rat(r - p), r - p) *
               pow_rat(Rat(r - q), r - q));
        if (q > 0) rad = rad * Fe(pow_rat(Rat(q), q));
        rad = rad * pow_fe(l.x, r) * pow_fe(Fe(1) - l.x, p + q - r);
        Fe rr(pow_rat(Rat(r), r));
        if (auto s = sqrt_exact_fe(rad)) {
            out.value = rr / *s;
            out.exact = true;
            out.numeric = BigFloat(out.value, prec);
        } else {
            out.numeric = BigFloat(rr, prec) / bf_sqrt(BigFloat(rad, prec));
        }
        return out;
    }
    if (is_half_integer(l.p) && is_half_integer(l.q) && is_integer(l.r)) {
        Lambda dbl{l.p * 2, l.q * 2, l.r * 2, l.a, l.b, l.x};
        Dilation big = dilation(dbl, prec);
        if (big.exact) {
            if (auto s = sqrt_exact_fe(big.value)) {
                out.value = *s;
                out.exact = true;
                out.numeric = BigFloat(*s, prec);
                return out;
            }
        }
        out.numeric = bf_sqrt(big.numeric);
        return out;
    }
    throw std::domain_error("dilation: slopes must be integers or half-integers");
}

// ---------------------------------------------------------------------------
// residues at the candidate poles w_j = -j/r

struct Residue {
    Fe C;            // exact prefactor; the pole is absent iff C = 0
    BigFloat value;  // C * 2F1(p w_j + j + a + 1, q w_j + j + b + 1; j + 2; x)
};

inline Residue residue_at(const Lambda& l, long j, long prec = default_prec()) {
    Residue out;
    Rat wj = -Rat(j) / l.r;
    Fe pa = Fe(Rat(l.p * wj)) + l.a;
    Fe qb = Fe(Rat(l.q * wj)) + l.b;
    Fe C = Fe(1) / Fe(Rat(l.r)) * pochhammer(pa, j + 1) * pochhammer(qb, j + 1) *
           pow_fe(l.x, j + 1) /
           Fe(Rat(factorial_int(j) * factorial_int(j + 1)));
    if (j % 2) C = -C;
    out.C = C;
    if (C.is_zero()) {
        out.value = BigFloat(Rat(0), prec);
        return out;
    }
    auto h = gauss_2f1(BigFloat(pa + Fe(j + 1), prec), BigFloat(qb + Fe(j + 1), prec),
                       BigFloat(Rat(j + 2), prec), BigFloat(l.x, prec), prec);
    out.value = BigFloat(C, prec) * h.value;
    return out;
}

// all candidate poles beyond this index obey the exact vanishing criterion
inline long residue_tail_start(const Lambda& l) {
    if (!l.a.is_rational() || !l.b.is_rational())
        throw std::domain_error("residue_tail_start: shifts must be rational");
    Rat m(0);
    m = std::max(m, Rat(-l.r * (l.a.a + 1) / (l.r - l.p)));
    m = std::max(m, Rat(-l.r * (l.b.a + 1) / (l.r - l.q)));
    return floor_int(m).get_si() + 1;
}

// arithmetic progressions: all j in [0, jmax] with nu + lam*i = mu*j for some
// integer 0 <= i <= j
inline std::vector<long> solve_progression(const Rat& nu, const Rat& lam,
                                           const Rat& mu, long jmax) {
    std::vector<long> out;
    for (long j = 0; j <= jmax; ++j) {
        bool hit = false;
        if (lam == 0) {
            hit = (nu == mu * j);
        } else {
            Rat i = (mu * j - nu) / lam;
            hit = is_integer(i) && i >= 0 && i <= j;
        }
        if (hit) out.push_back(j);
    }
    return out;
}

// ---------------------------------------------------------------------------
// pole structure cases I..V and the density of holomorphic indices

struct PoleStructure {
    bool c1 = false, c2 = false, c3 = false;
    int kase = 1;     // 1..5
    Rat delta;        // density of j with no pole at w_j
    long r_p = 1, r_q = 1;
    Int a_adj, b_adj; // a', b' (valid when c1, c2 hold)
};

inline PoleStructure pole_structure(const Rat& p, const Rat& q, const Rat& r,
                                    const Rat& a, const Rat& b) {
    PoleStructure out;
    Rat pr = p / r, qr = q / r;
    out.r_p = pr.get_den().get_si();
    out.r_q = qr.get_den().get_si();
    Rat a1 = a * out.r_p, b1 = b * out.r_q;
    out.c1 = is_integer(a1);
    out.c2 = is_integer(b1);
    auto adjust = [](const Rat& v1, const Rat& slope_red, long modulus) {
        // multiply by the inverse of the reduced numerator mod the denominator
        Int inv;
        Int num = mod_int(slope_red.get_num(), Int(modulus));
        if (modulus == 1 || mpz_invert(inv.get_mpz_t(), num.get_mpz_t(),
                                       Int(modulus).get_mpz_t()) == 0)
            inv = 0;
        return mod_int(v1.get_num() * inv, Int(modulus));
    };
    if (out.c1) out.a_adj = adjust(a1, pr, out.r_p);
    if (out.c2) out.b_adj = adjust(b1, qr, out.r_q);
    long r_pq = gcd_int(Int(out.r_p), Int(out.r_q)).get_si();
    if (out.c1 && out.c2)
        out.c3 = mod_int(out.a_adj - out.b_adj, Int(r_pq)) == 0;
    if (!out.c1 && !out.c2) {
        out.kase = 1;
        out.delta = 0;
    } else if (!out.c1) {
        out.kase = 2;
        out.delta = rat(1, out.r_q);
    } else if (!out.c2) {
        out.kase = 3;
        out.delta = rat(1, out.r_p);
    } else if (!out.c3) {
        out.kase = 4;
        out.delta = rat(1, out.r_p) + rat(1, out.r_q);
    } else {
        out.kase = 5;
        out.delta = rat(1, out.r_p) + rat(1, out.r_q) - Rat(r_pq) / Rat(out.r_p * out.r_q);
    }
    return out;
}

// ---------------------------------------------------------------------------
// elementary families

inline std::string elementary_check(const Lambda& l) {
    auto int_le0 = [](const Fe& v) {
        return v.is_rational() && is_integer(v.a) && v.a <= 0;
    };
    auto int_ge0 = [](const Fe& v) {
        return v.is_rational() && is_integer(v.a) && v.a >= 0;
    };
    if ((l.q == 0 && int_le0(l.b)) || (l.p == 0 && int_le0(l.a)) ||
        (l.q == l.r && int_ge0(l.b)) || (l.p == l.r && int_ge0(l.a)))
        return "elementary1";
    auto is_int = [](const Fe& v) { return v.is_rational() && is_integer(v.a); };
    auto is_half = [](const Fe& v) { return v.is_rational() && is_half_integer(v.a); };
    if (l.p == l.q && l.p * 2 == l.r && l.p > 0 &&
        ((is_int(l.a) && is_half(l.b)) || (is_half(l.a) && is_int(l.b))))
        return "elementary2";
    return "";
}

// ---------------------------------------------------------------------------
// sine-sine constancy: sigma_j = sin(pi {p j + alpha}) sin(pi {q j + beta})

// elements of Q + Q kappa, kappa = arctan(sqrt(3/5)) / pi
struct Kappa {
    Rat c0, c1;
    Kappa(Rat a = Rat(0), Rat b = Rat(0)) : c0(std::move(a)), c1(std::move(b)) {}
    friend Kappa operator+(const Kappa& x, const Kappa& y) { return {x.c0 + y.c0, x.c1 + y.c1}; }
    friend Kappa operator-(const Kappa& x, const Kappa& y) { return {x.c0 - y.c0, x.c1 - y.c1}; }
    bool is_int() const { return c1 == 0 && is_integer(c0); }
    bool is_half_int() const { return c1 == 0 && is_half_integer(c0); }
    // congruent to t mod 1
    bool congruent(const Rat& t) const { return c1 == 0 && is_integer(Rat(c0 - t)); }
};

inline BigFloat kappa_value(long prec) {
    BigFloat v = bf_sqrt(BigFloat(rat(3, 5), prec));
    return bf_atan(v) / bf_pi(prec);
}

struct SineSineResult {
    bool constant = false;
    int kase = 0;            // 1..7, first matching case
    std::string verdict;     // "typeA", "typeB" or "ruled-out"
};

inline SineSineResult sine_sine_classify(const Rat& p, const Rat& q, const Rat& r,
                                         const Kappa& alpha, const Kappa& beta) {
    SineSineResult out;
    auto pint = is_integer(p), qint = is_integer(q);
    auto phal = is_half_integer(p), qhal = is_half_integer(q);
    auto set_case = [&](int k) {
        if (!out.kase) {
            out.kase = k;
            out.constant = true;
        }
    };
    // (1) one factor is identically zero
    if ((pint && alpha.is_int()) || (qint && beta.is_int())) set_case(1);
    // (2) both slopes integral, neither shift integral
    if (pint && qint && !alpha.is_int() && !beta.is_int()) set_case(2);
    // (3)/(4) one slope half-integral with shift at an odd eighth of a turn
    if (pint && qhal && !alpha.is_int() &&
        (beta.congruent(rat(1, 4)) || beta.congruent(rat(-1, 4))))
        set_case(3);
    if (phal && qint && !beta.is_int() &&
        (alpha.congruent(rat(1, 4)) || alpha.congruent(rat(-1, 4))))
        set_case(4);
    // (5) both slopes half-integral with coupled shifts
    if (phal && qhal && ((alpha + beta).is_half_int() || (alpha - beta).is_half_int()))
        set_case(5);
    // (6) thirds with the transcendental shift kappa
    if (q.get_den() == 3 && p.get_den() == 3) {
        for (int ep : {1, -1})
            for (int eq : {1, -1})
                for (int dl : {-1, 0, 1})
                    for (int ee : {1, -1}) {
                        if (!is_integer(Rat(p - rat(ep, 3)))) continue;
                        if (!is_integer(Rat(q - rat(eq, 3)))) continue;
                        Kappa ta(rat(ep * dl, 3), Rat(ep * ee));
                        Kappa tb(rat(eq * dl, 3), Rat(-eq * ee));
                        if ((alpha - ta).is_int() && (beta - tb).is_int()) set_case(6);
                    }
    }
    // (7) quarters with shifts at odd sixteenths
    if (p.get_den() == 4 && q.get_den() == 4) {
        for (int ep : {1, -1})
            for (int eq : {1, -1})
                for (int dl : {-3, -1, 1, 3})
                    for (int ee : {1, -1}) {
                        if (!is_integer(Rat(p - rat(ep, 4)))) continue;
                        if (!is_integer(Rat(q - rat(eq, 4)))) continue;
                        Kappa ta(Rat(ep) * (rat(dl, 8) + rat(ee, 4)), Rat(0));
                        Kappa tb(Rat(eq) * (rat(dl, 8) - rat(ee, 4)), Rat(0));
                        if ((alpha - ta).is_int() && (beta - tb).is_int()) set_case(7);
                    }
    }

    out.verdict = "ruled-out";
    bool even = is_integer(Rat((p + q + r) / 2));
    if (out.kase == 2 && is_integer(r) && even) out.verdict = "typeA";
    if (out.kase == 5) {
        bool ok = even ? (alpha - beta).is_half_int() : (alpha + beta).is_half_int();
        if (ok && is_integer(r)) out.verdict = "typeB";
    }
    return out;
}

// parity of [p j + alpha] + [q j + beta] + r j over one full period
inline bool parity_constant(const Rat& p, const Rat& q, long r, const Rat& alpha,
                            const Rat& beta) {
    Int dp = p.get_den(), dq = q.get_den();
    long L = 2 * Int(dp * dq / gcd_int(dp, dq)).get_si();
    auto term = [&](long j) {
        Int s = floor_int(Rat(p * j + alpha)) + floor_int(Rat(q * j + beta)) +
                Int(r * j);
        return mod_int(s, Int(2)) != 0;
    };
    bool first = term(0);
    for (long j = 1; j < L; ++j)
        if (term(j) != first) return false;
    return true;
}

// ---------------------------------------------------------------------------
// deficiency: how many of the r candidate poles are absent (N = r - m)

struct DeficiencyResult {
    long N = 0;
    int kase = 1;
};

struct deficiency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline DeficiencyResult deficiency(const Lambda& l, const std::string& type) {
    if (!l.a.is_rational() || !l.b.is_rational())
        throw deficiency_error("deficiency: shifts must be rational");
    auto ps = pole_structure(l.p, l.q, l.r, l.a.a, l.b.a);
    DeficiencyResult out;
    out.kase = ps.kase;
    long r = floor_int(l.r).get_si();
    if (type == "typeA") {
        long gp = gcd_int(floor_int(l.p), Int(r)).get_si();
        long gq = gcd_int(floor_int(l.q), Int(r)).get_si();
        long gpq = gcd_int(gcd_int(floor_int(l.p), floor_int(l.q)), Int(r)).get_si();
        switch (ps.kase) {
            case 1: out.N = 0; break;
            case 2: out.N = gq; break;
            case 3: out.N = gp; break;
            case 4: out.N = gp + gq; break;
            case 5: out.N = gp + gq - gpq; break;
        }
        return out;
    }
    if (type == "typeB") {
        if (ps.kase == 1) { out.N = 0; return out; }
        if (ps.kase != 4)
            throw deficiency_error("deficiency: impossible pole case for half-integer slopes");
        long N = gcd_int(floor_int(Rat(l.p * 2)), Int(r)).get_si();
        if (N != gcd_int(floor_int(Rat(l.q * 2)), Int(r)).get_si())
            throw deficiency_error("deficiency: mismatched gcds");
        long rho = r / N;
        Int diff = ps.a_adj - ps.b_adj;
        if (mod_int(diff, Int(2 * rho)) == 0)
            throw deficiency_error("deficiency: shifts congruent mod 2 rho");
        if (mod_int(diff, Int(rho)) != 0)
            throw deficiency_error("deficiency: shifts incongruent mod rho");
        out.N = N;
        return out;
    }
    throw deficiency_error("deficiency: unknown type");
}

// ---------------------------------------------------------------------------
// the Bailey family at x = 1/2: lambda = (j-k, -(j-k), j+k; c, 1-c; 1/2)

inline GammaProduct bailey_gpf(long j, long k, const Rat& c,
                               long prec = default_prec()) {
    if (!(j > k && k >= 1)) throw std::domain_error("bailey_gpf: need j > k >= 1");
    GammaProduct g;
    g.S = RatFunc<Fe>(1);
    g.r = j + k;
    g.d = Fe(pow_rat(Rat(j + k), j + k) /
             (pow_rat(Rat(2), j + k) * pow_rat(Rat(j), j) * pow_rat(Rat(k), k)));
    for (long nu = 0; nu < j + k; ++nu) {
        g.u.push_back(rat(nu, j + k));
        g.s.push_back(nu);
    }
    for (long nu = 0; nu < j; ++nu) g.v.push_back(c / (2 * j) + rat(nu, j));
    for (long nu = 0; nu < k; ++nu) g.v.push_back((1 - c) / (2 * k) + rat(nu, k));
    std::sort(g.v.begin(), g.v.end());
    // sqrt2 k^{c/2} / (j^{(c-1)/2} (j+k)^{1/2})
    BigFloat C = bf_sqrt(BigFloat(Rat(2), prec));
    C *= bf_pow(BigFloat(Rat(k), prec), BigFloat(Rat(c / 2), prec));
    C /= bf_pow(BigFloat(Rat(j), prec), BigFloat(Rat((c - 1) / 2), prec));
    C /= bf_sqrt(BigFloat(Rat(j + k), prec));
    g.constant_num = C;
    g.constant_exact = false;
    return g;
}

inline Lambda bailey_lambda(long j, long k, const Rat& c) {
    return {Rat(j - k), Rat(k - j), Rat(j + k), Fe(c), Fe(Rat(1 - c)), Fe(rat(1, 2))};
}

// the product has no missing gamma factors iff c avoids the lattice
// Z chi and 1 + Z chi, chi = 2 gcd(j,k)/(j+k)
inline bool bailey_null_deficiency(long j, long k, const Rat& c) {
    Rat chi = Rat(2 * gcd_int(Int(j), Int(k)).get_si()) / Rat(j + k);
    return !is_integer(Rat(c / chi)) && !is_integer(Rat((c - 1) / chi));
}

}  // namespace gpf
