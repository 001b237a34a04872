#pragma once
// The search pipeline: exact polynomial criteria that decide whether
// 2F1(pw+a, qw+b; rw; x) has a rational ratio f(w+1)/f(w), candidate x from
// the spectral polynomial, an exact bivariate solver for (a,b), and recovery
// of half-integer (p,q) solutions from their integer duplications.

#include "gpf/contiguous.hpp"

#include <map>
#include <optional>
#include <set>

namespace gpf {

// general parameter tuple; p,q may be half-integers
struct Lambda {
    Rat p, q, r;
    Fe a, b, x;
};

// ---------------------------------------------------------------------------
// truncated products

// coefficients of 2F1(al, be; ga; z) up to z^N, each a rational function of w
inline std::vector<RF> gauss_series_w(const PF& al, const PF& be, const PF& ga,
                                      long N) {
    std::vector<RF> c;
    c.reserve(N + 1);
    c.push_back(RF(1));
    for (long n = 0; n < N; ++n) {
        RF step(PF((al + PF(Fe(n))) * (be + PF(Fe(n)))),
                PF((ga + PF(Fe(n))) * Fe(n + 1)));
        c.push_back(c.back() * step);
    }
    return c;
}

inline std::vector<Fe> one_minus_z_pow(long e, long N) {
    // (1-z)^e, e >= 0
    std::vector<Fe> c(static_cast<size_t>(N) + 1, Fe(0));
    for (long k = 0; k <= std::min(e, N); ++k) {
        Fe v(Rat(binom_int(e, k)));
        c[k] = (k % 2) ? -v : v;
    }
    return c;
}

namespace detail {

// truncated product of up to three coefficient lists, evaluated at z = x
inline RF truncated_eval(const std::vector<std::vector<RF>>& lists, long N,
                         const Fe& x) {
    std::vector<RF> acc(static_cast<size_t>(N) + 1);
    acc[0] = RF(1);
    for (const auto& f : lists) {
        std::vector<RF> next(static_cast<size_t>(N) + 1);
        for (long i = 0; i <= N; ++i)
            for (long j = 0; i + j <= N && j < static_cast<long>(f.size()); ++j)
                next[i + j] += acc[i] * f[j];
        acc = std::move(next);
    }
    RF out;
    Fe xp(1);
    for (long k = 0; k <= N; ++k) {
        out += acc[k] * RF(xp);
        xp *= x;
    }
    return out;
}

inline PF expect_poly(const RF& f, const char* who) {
    if (f.den.deg() != 0)
        throw std::runtime_error(std::string(who) + ": expected polynomial");
    return f.num * (Fe(1) / f.den.lc());
}

}  // namespace detail

// Phi(w; lambda): vanishes identically exactly when lambda admits a rational
// ratio.  Degree at most r-1 in w.  Requires p >= q >= 1 and p + q < r.
inline PF phi_poly(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    const auto [p, q, r] = t;
    if (q > p || q < 1 || p + q >= r) throw std::domain_error("phi_poly: need p >= q >= 1, p+q < r");
    long N = r - q - 1;
    PF one{Fe(1)};
    // first factor 2F1((r-p)w - a, (r-q)w - b; rw; z)
    auto F1 = gauss_series_w(PF::linear(-a, Fe(r - p)), PF::linear(-b, Fe(r - q)),
                             PF::linear(Fe(0), Fe(r)), N);
    // second factor 2F1(1 - (r-p)(w+1) + a, 1 - (r-q)(w+1) + b; 2 - r(w+1); z)
    auto F2 = gauss_series_w(PF::linear(a + Fe(1 - (r - p)), Fe(-(r - p))),
                             PF::linear(b + Fe(1 - (r - q)), Fe(-(r - q))),
                             PF::linear(Fe(2 - r), Fe(-r)), N);
    RF bracket = detail::truncated_eval({F1, F2}, N, x);
    PF poch = pochhammer_poly(PF::linear(Fe(0), Fe(r)), r - 1);  // (rw)_{r-1}
    return detail::expect_poly(RF(poch) * bracket, "phi_poly");
}

// Euler-transformed route to the same polynomial (used as a cross-check)
inline PF phi_poly_euler(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    const auto [p, q, r] = t;
    long N = r - q - 1;
    auto F1 = gauss_series_w(PF::linear(a, Fe(p)), PF::linear(b, Fe(q)),
                             PF::linear(Fe(0), Fe(r)), N);
    auto F2 = gauss_series_w(PF::linear(-a + Fe(1 - p), Fe(-p)),
                             PF::linear(-b + Fe(1 - q), Fe(-q)),
                             PF::linear(Fe(2 - r), Fe(-r)), N);
    std::vector<RF> E;
    for (const Fe& c : one_minus_z_pow(r - p - q, N)) E.push_back(RF(c));
    RF bracket = detail::truncated_eval({E, F1, F2}, N, x);
    PF poch = pochhammer_poly(PF::linear(Fe(0), Fe(r)), r - 1);
    return detail::expect_poly(RF(poch) * bracket, "phi_poly_euler");
}

// P(w): for solutions this has degree exactly r and gives the ratio
//   R(w) = (1-x)^{r-p-q-1} (rw)_r / P(w).
inline PF p_poly(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    const auto [p, q, r] = t;
    if (q > p || q < 1 || p + q >= r) throw std::domain_error("p_poly: need p >= q >= 1, p+q < r");
    long N = r - q - 1;
    auto F1 = gauss_series_w(PF::linear(-a, Fe(r - p)), PF::linear(-b, Fe(r - q)),
                             PF::linear(Fe(0), Fe(r)), N);
    // second factor with lower parameter 1 - r(w+1)
    auto F2 = gauss_series_w(PF::linear(a + Fe(1 - (r - p)), Fe(-(r - p))),
                             PF::linear(b + Fe(1 - (r - q)), Fe(-(r - q))),
                             PF::linear(Fe(1 - r), Fe(-r)), N);
    RF bracket = detail::truncated_eval({F1, F2}, N, x);
    PF poch = pochhammer_poly(PF::linear(Fe(0), Fe(r)), r);  // (rw)_r
    return detail::expect_poly(RF(poch) * bracket, "p_poly");
}

inline PF p_poly_euler(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    const auto [p, q, r] = t;
    long N = r - q - 1;
    auto F1 = gauss_series_w(PF::linear(a, Fe(p)), PF::linear(b, Fe(q)),
                             PF::linear(Fe(0), Fe(r)), N);
    auto F2 = gauss_series_w(PF::linear(-a - Fe(p), Fe(-p)),
                             PF::linear(-b - Fe(q), Fe(-q)),
                             PF::linear(Fe(1 - r), Fe(-r)), N);
    std::vector<RF> E;
    for (const Fe& c : one_minus_z_pow(r - p - q - 1, N)) E.push_back(RF(c));
    RF bracket = detail::truncated_eval({E, F1, F2}, N, x);
    PF poch = pochhammer_poly(PF::linear(Fe(0), Fe(r)), r);
    return detail::expect_poly(RF(poch) * bracket, "p_poly_euler");
}

// ---------------------------------------------------------------------------
// candidate x: roots of the spectral Y in (0,1)

struct CandidateX {
    std::vector<Fe> roots;
    bool complete = true;
    std::vector<std::string> warnings;
};

inline CandidateX candidate_x(const Triple& t) {
    CandidateX out;
    const auto [p, q, r] = t;
    long e = r - p - q;
    if (e <= 0) {
        if (e == 0) out.warnings.push_back("balanced triple: no admissible x");
        return out;
    }
    if (e % 2) {
        out.warnings.push_back("odd defect: no admissible x");
        return out;
    }
    auto sp = spectral_polys(t);
    auto in01 = [](const Fe& v) {
        return v.sign() > 0 && (Fe(1) - v).sign() > 0;
    };
    auto fac = factor_small(sp.Y);
    std::set<std::string> seen;
    for (const auto& [f, mult] : fac.factors) {
        if (f.deg() == 1) {
            Fe root(-f.coeff(0) / f.coeff(1));
            if (in01(root) && seen.insert(root.str()).second) out.roots.push_back(root);
        } else if (f.deg() == 2) {
            // z^2 + uz + v with roots (-u +- sqrt(u^2 - 4v))/2
            Rat u = f.coeff(1) / f.coeff(2), v = f.coeff(0) / f.coeff(2);
            Rat disc = u * u - 4 * v;
            if (disc <= 0) continue;  // complex pair
            auto [s, d] = squarefree_split(disc.get_num() * disc.get_den());
            Rat mag(s, disc.get_den());
            mag.canonicalize();
            Fe sqrt_disc = (d == 1) ? Fe(mag) : Fe(Rat(0), mag, d.get_si());
            for (int sgn : {1, -1}) {
                Fe root = (Fe(-u) + Fe(sgn) * sqrt_disc) / Fe(2);
                if (in01(root) && seen.insert(root.str()).second) out.roots.push_back(root);
            }
        }
    }
    if (!fac.complete()) {
        // roots of the unfactored part would lie outside any quadratic field;
        // only a problem if some of them fall inside (0,1)
        auto stray = isolate_real_roots(fac.cofactor, Rat(0), Rat(1));
        for (auto& iv : stray) {
            if (iv.hi <= 0 || iv.lo >= 1) continue;
            out.complete = false;
            out.warnings.push_back("spectral factor of degree >= 3 has a root in (0,1)");
            break;
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const Fe& l, const Fe& rr) { return (l - rr).sign() < 0; });
    return out;
}

// ---------------------------------------------------------------------------
// solving for (a, b) at fixed (p,q,r; x)

using PolyFe = Poly<Fe>;
using PolyBB = Poly<PolyFe>;  // outer variable b, inner variable a

namespace detail {

inline PolyFe lagrange_fe(const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
    PolyFe out;
    for (size_t i = 0; i < xs.size(); ++i) {
        PolyFe li{Fe(1)};
        Fe denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            li *= PolyFe::linear(-xs[j], Fe(1));
            denom *= xs[i] - xs[j];
        }
        out += li * (ys[i] / denom);
    }
    return out;
}

inline long inner_deg(const PolyBB& f) {
    long d = -1;
    for (const auto& c : f.c) d = std::max(d, c.deg());
    return d;
}

inline PolyFe eval_inner(const PolyBB& f, const Fe& v) {
    // substitute the inner variable a = v, leaving a polynomial in b
    std::vector<Fe> c;
    c.reserve(f.c.size());
    for (const auto& coef : f.c) c.push_back(coef.eval(v));
    return PolyFe(c);
}

// resultant with respect to b by specializing a at integer points and
// interpolating; valid sample points keep both leading coefficients nonzero
inline PolyFe resultant_b_interp(const PolyBB& A, const PolyBB& B) {
    long bound = A.deg() * inner_deg(B) + B.deg() * inner_deg(A);
    if (bound < 0) bound = 0;
    std::vector<Fe> xs, ys;
    for (long k = 0; static_cast<long>(xs.size()) <= bound; ++k) {
        Fe v = (k % 2) ? Fe(-(k + 1) / 2) : Fe(k / 2);
        if (A.lc().eval(v) == Fe(0) || B.lc().eval(v) == Fe(0)) continue;
        xs.push_back(v);
        ys.push_back(resultant(eval_inner(A, v), eval_inner(B, v)));
        if (k > 10 * (bound + 4)) throw std::runtime_error("resultant_b_interp: no sample points");
    }
    return lagrange_fe(xs, ys);
}

}  // namespace detail

// the vanishing criterion at fixed integer w = t with a, b symbolic
inline PolyBB phi_bivariate(const Triple& t, long wval, const Fe& x) {
    const auto [p, q, r] = t;
    long N = r - q - 1;
    auto blin = [](const Fe& c0, const Fe& c1) {  // c0 + c1 b (constant in a)
        return PolyBB(std::vector<PolyFe>{PolyFe(c0), PolyFe(c1)});
    };
    auto alin = [](const Fe& c0, const Fe& c1) {  // c0 + c1 a (constant in b)
        return PolyBB(PolyFe::linear(c0, c1));
    };
    Fe w{Rat(wval)};
    // first factor parameters at w = t:  (r-p)w - a,  (r-q)w - b,  rw
    // second factor: 1-(r-p)(w+1)+a,  1-(r-q)(w+1)+b,  2-r(w+1)
    PolyBB al1 = alin(Fe(r - p) * w, Fe(-1)), be1 = blin(Fe(r - q) * w, Fe(-1));
    PolyBB al2 = alin(Fe(1) - Fe(r - p) * (w + Fe(1)), Fe(1));
    PolyBB be2 = blin(Fe(1) - Fe(r - q) * (w + Fe(1)), Fe(1));
    Fe ga1 = Fe(r) * w, ga2 = Fe(2) - Fe(r) * (w + Fe(1));

    std::vector<PolyBB> C1{PolyBB(PolyFe(Fe(1)))}, C2{PolyBB(PolyFe(Fe(1)))};
    for (long n = 0; n < N; ++n) {
        Fe d1 = (ga1 + Fe(n)) * Fe(n + 1), d2 = (ga2 + Fe(n)) * Fe(n + 1);
        PolyBB s1 = (al1 + PolyBB(PolyFe(Fe(n)))) * (be1 + PolyBB(PolyFe(Fe(n))));
        PolyBB s2 = (al2 + PolyBB(PolyFe(Fe(n)))) * (be2 + PolyBB(PolyFe(Fe(n))));
        C1.push_back(C1.back() * s1 * PolyBB(PolyFe(Fe(1) / d1)));
        C2.push_back(C2.back() * s2 * PolyBB(PolyFe(Fe(1) / d2)));
    }
    PolyBB out;
    Fe xp(1);
    for (long k = 0; k <= N; ++k) {
        for (long n = 0; n <= k; ++n) out += C1[n] * C2[k - n] * PolyBB(PolyFe(xp));
        xp *= x;
    }
    return out;
}

struct Solution {
    Triple pqr;
    Rat half_p, half_q, half_r;  // actual (possibly half-integer) parameters
    Fe a, b, x;
    RatFunc<Fe> R;
    std::string type;        // "typeA" or "typeB"
    bool phi_vanishes = false;
};

struct SolveResult {
    std::vector<Solution> sols;
    bool complete = true;
    std::vector<std::string> warnings;
};

// the ratio from P(w); requires p + q <= r - 1
inline RatFunc<Fe> closed_form_R(const Triple& t, const Fe& a, const Fe& b,
                                 const Fe& x) {
    const auto [p, q, r] = t;
    PF P = p_poly(t, a, b, x);
    if (P.deg() != r)
        throw std::runtime_error("closed_form_R: P does not reach degree r");
    Fe scale = pow_fe(Fe(1) - x, r - p - q - 1);
    return RatFunc<Fe>(pochhammer_poly(PF::linear(Fe(0), Fe(r)), r) * scale, P);
}

// fallback via the full contiguous product (works for p + q = r as well)
inline RatFunc<Fe> closed_form_R_contig(const Triple& t, const Fe& a, const Fe& b,
                                        const Fe& x) {
    auto A = contig_product(t, a, b, x);
    if (!A.a12.is_zero())
        throw std::runtime_error("closed_form_R_contig: not a solution");
    PF phi22 = phi22_from_product(A, t, a, b);
    Fe scale = pow_fe(x, -t.r) * pow_fe(x - Fe(1), t.r - t.p - t.q);
    return RatFunc<Fe>(pochhammer_poly(PF::linear(Fe(0), Fe(t.r)), t.r) * scale, phi22);
}

inline SolveResult solve_ab(const Triple& t, const Fe& x) {
    SolveResult out;
    const auto [p, q, r] = t;
    std::vector<PolyBB> E;
    for (long w = 1; w <= r; ++w) E.push_back(phi_bivariate(t, w, x));

    // eliminate b against E_1
    if (E[0].is_zero()) {
        out.complete = false;
        out.warnings.push_back("pivot criterion vanished identically");
        return out;
    }
    PolyFe G;
    bool any = false;
    for (size_t i = 1; i < E.size(); ++i) {
        if (E[i].is_zero()) continue;
        PolyFe Ri = detail::resultant_b_interp(E[0], E[i]);
        if (Ri.is_zero()) continue;
        G = any ? poly_gcd(G, Ri) : Ri.monic();
        any = true;
    }
    if (!any) {
        out.complete = false;
        out.warnings.push_back("all eliminants vanished: possible infinite family");
        return out;
    }
    // candidates: roots of G, plus the points where every criterion loses its
    // leading b-coefficient at once (there the resultant can miss a root)
    std::vector<Fe> cand_a;
    auto push_roots = [&](const PolyFe& f) {
        if (f.deg() < 1) return;
        auto fr = field_roots(f, x.D);
        if (!fr.complete) {
            out.complete = false;
            out.warnings.push_back("root outside the working quadratic field");
        }
        for (auto& root : fr.roots) cand_a.push_back(root);
    };
    push_roots(G);
    PolyFe L = E[0].lc().monic();
    for (size_t i = 1; i < E.size() && L.deg() >= 1; ++i)
        if (!E[i].is_zero()) L = poly_gcd(L, E[i].lc());
    push_roots(L);

    std::set<std::string> seen;
    for (const Fe& a0 : cand_a) {
        if (!seen.insert(a0.str()).second) continue;
        // gcd of all specialized criteria as polynomials in b
        PolyFe H;
        bool first = true;
        bool all_zero = true;
        for (auto& Ei : E) {
            PolyFe h = detail::eval_inner(Ei, a0);
            if (h.is_zero()) continue;
            all_zero = false;
            H = first ? h.monic() : poly_gcd(H, h);
            first = false;
        }
        if (all_zero) {
            out.complete = false;
            out.warnings.push_back("criteria vanish for all b at a = " + a0.str());
            continue;
        }
        if (H.deg() < 1) continue;
        auto frb = field_roots(H, x.D);
        if (!frb.complete) {
            out.complete = false;
            out.warnings.push_back("b-root outside the working quadratic field");
        }
        for (auto& b0 : frb.roots) {
            if (!phi_poly(t, a0, b0, x).is_zero()) continue;
            // for p = q the function is symmetric in (a, b): keep a <= b
            if (p == q && (a0 - b0).sign() > 0) continue;
            Solution s;
            s.pqr = t;
            s.half_p = Rat(p); s.half_q = Rat(q); s.half_r = Rat(r);
            s.a = a0;
            s.b = b0;
            s.x = x;
            s.R = closed_form_R(t, a0, b0, x);
            s.type = "typeA";  // integer p,q with p+q+r even
            s.phi_vanishes = true;
            out.sols.push_back(s);
        }
    }
    // canonical order: by a then b
    std::sort(out.sols.begin(), out.sols.end(), [](const Solution& l, const Solution& r2) {
        int c = (l.a - r2.a).sign();
        if (c != 0) return c < 0;
        return (l.b - r2.b).sign() < 0;
    });
    return out;
}

// ---------------------------------------------------------------------------
// numeric certificates

inline BigFloat eval_rf_bf(const RatFunc<Fe>& R, const BigFloat& w, long prec) {
    auto horner = [&](const PF& f) {
        BigFloat s = BigFloat::zero(prec);
        for (long i = f.deg(); i >= 0; --i) s = s * w + BigFloat(f.coeff(i), prec);
        return s;
    };
    return horner(R.num) / horner(R.den);
}

inline BigFloat eval_f(const Lambda& l, const BigFloat& w, long prec) {
    return gauss_2f1(BigFloat(l.p, prec) * w + BigFloat(l.a, prec),
                     BigFloat(l.q, prec) * w + BigFloat(l.b, prec),
                     BigFloat(l.r, prec) * w, BigFloat(l.x, prec), prec)
        .value;
}

// relative discrepancy of f(w+1)/f(w) against R(w)
inline BigFloat ratio_discrepancy(const Lambda& l, const RatFunc<Fe>& R,
                                  const BigFloat& w, long prec) {
    BigFloat lhs = eval_f(l, w + BigFloat(Rat(1), prec), prec) / eval_f(l, w, prec);
    BigFloat rhs = eval_rf_bf(R, w, prec);
    return bf_abs(lhs - rhs) / bf_abs(rhs);
}

inline Lambda to_lambda(const Solution& s) {
    return {s.half_p, s.half_q, s.half_r, s.a, s.b, s.x};
}

// ---------------------------------------------------------------------------
// half-integer recovery: R(2w) R(2w+1) inversion

inline RatFunc<Fe> duplicate_R(const RatFunc<Fe>& R) {
    RatFunc<Fe> r2 = R.scale_arg(Fe(2));                 // R(2w)
    RatFunc<Fe> r21 = R.shift(Fe(1)).scale_arg(Fe(2));   // R(2w+1)
    return r2 * r21;
}

// split the roots of a monic polynomial into pairs {c, c + 1/2} and return
// the doubled first elements; empty if the pairing fails
inline std::optional<std::vector<Fe>> unpair_roots(const PF& f, long Dhint) {
    auto fr = field_roots(f, Dhint);
    if (!fr.complete) return std::nullopt;
    std::vector<Fe> pool = fr.roots;  // already listed with multiplicity
    if (static_cast<long>(pool.size()) != f.deg() || pool.size() % 2) return std::nullopt;
    std::vector<Fe> halves;
    std::vector<bool> used(pool.size(), false);
    for (size_t i = 0; i < pool.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (size_t j = 0; j < pool.size(); ++j) {
            if (j == i || used[j]) continue;
            if (pool[j] - pool[i] == Fe(rat(1, 2))) {
                // roots of R(w) at w0 show up here at w0/2 and (w0-1)/2
                used[i] = used[j] = true;
                halves.push_back(pool[j] * Fe(2));
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return halves;
}

// attempt to realize an integer solution as the duplication of a half-integer
// one with parameters (p/2, q/2, r/2; a, b; x)
inline std::optional<Solution> undouble(const Solution& s) {
    const auto [p, q, r] = s.pqr;
    if (!(p % 2) || !(q % 2) || (r % 2)) return std::nullopt;
    // R = d P/Q with P, Q monic; need d a perfect square in the field
    Fe lead = s.R.num.lc();
    auto d = sqrt_exact_fe(lead);
    if (!d) return std::nullopt;
    auto us = unpair_roots(s.R.num.monic(), s.x.D);
    auto vs = unpair_roots(s.R.den, s.x.D);
    if (!us || !vs) return std::nullopt;
    // roots of the half ratio's numerator are at -u/1 after doubling the
    // paired shifts; assemble R_half = d * prod(w - c)/prod(w - c')
    RatFunc<Fe> half(poly_from_roots(*us) * *d, poly_from_roots(*vs));
    if (duplicate_R(half) != s.R) {
        // the square root sign may need flipping
        half = RatFunc<Fe>(poly_from_roots(*us) * (Fe(0) - *d), poly_from_roots(*vs));
        if (duplicate_R(half) != s.R) return std::nullopt;
    }
    Solution h = s;
    h.half_p = rat(p, 2);
    h.half_q = rat(q, 2);
    h.half_r = rat(r, 2);
    h.R = half;
    h.type = "typeB";
    return h;
}

// ---------------------------------------------------------------------------
// driver

struct SearchResult {
    std::vector<Solution> sols;
    bool complete = true;
    std::vector<std::string> warnings;
};

inline std::vector<Triple> admissible_triples(long rmax) {
    std::vector<Triple> ts;
    for (long r = 3; r <= rmax; ++r)
        for (long p = 1; p < r; ++p)
            for (long q = 1; q <= p; ++q) {
                long e = r - p - q;
                if (e > 0 && e % 2 == 0) ts.push_back({p, q, r});
            }
    return ts;
}

inline SearchResult search(long rmax, bool half = false) {
    SearchResult out;
    for (const Triple& t : admissible_triples(rmax)) {
        auto cx = candidate_x(t);
        if (!cx.complete) out.complete = false;
        for (auto& w : cx.warnings)
            if (w.find("no admissible") == std::string::npos) out.warnings.push_back(w);
        for (const Fe& x : cx.roots) {
            auto sr = solve_ab(t, x);
            if (!sr.complete) out.complete = false;
            out.warnings.insert(out.warnings.end(), sr.warnings.begin(), sr.warnings.end());
            for (auto& s : sr.sols) {
                // a solution at (2p, 2q, 2r) with the same (a, b, x) is just the
                // duplication of one at (p, q, r); report primitive ones only
                if (t.p % 2 == 0 && t.q % 2 == 0 && t.r % 2 == 0 &&
                    phi_poly({t.p / 2, t.q / 2, t.r / 2}, s.a, s.b, s.x).is_zero())
                    continue;
                out.sols.push_back(s);
            }
        }
    }
    if (half) {
        // half-integer parameters up to r <= rmax arise from integer triples
        // up to 2 rmax with odd p, q and even r
        SearchResult big = search(2 * rmax, false);
        if (!big.complete) out.complete = false;
        for (auto& s : big.sols) {
            if (auto h = undouble(s)) out.sols.push_back(*h);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// symmetry reduction into the standard half-strip 0 < p < r, q <= p (by the
// swap), 0 < x < 1

inline Lambda apply_sym(int k, const Lambda& l) {
    switch (k) {
        case 0: return {l.q, l.p, l.r, l.b, l.a, l.x};
        case 1: return {l.r - l.p, l.r - l.q, l.r, -l.a, -l.b, l.x};
        case 2: return {l.p, l.r - l.q, l.r, l.a, -l.b, l.x / (l.x - Fe(1))};
        case 3: return {l.r - l.p, l.q, l.r, -l.a, l.b, l.x / (l.x - Fe(1))};
    }
    throw std::invalid_argument("apply_sym: index out of range");
}

struct Reduced {
    Lambda lam;
    std::vector<int> trace;  // symmetry indices applied, in order
};

inline Reduced reduce_symmetry(Lambda l) {
    Reduced out{l, {}};
    auto& cur = out.lam;
    if (cur.x == Fe(0)) throw std::domain_error("reduce_symmetry: x = 0 excluded");
    auto step = [&](int k) {
        cur = apply_sym(k, cur);
        out.trace.push_back(k);
    };
    // first get 0 < p < r, possibly by the swap
    if (!(cur.p > 0 && cur.p < cur.r)) {
        if (!(cur.q > 0 && cur.q < cur.r))
            throw std::domain_error("reduce_symmetry: neither upper slope lies in (0, r)");
        step(0);
    }
    // then q < r and x in (0, 1): the half-strip.  Note q <= 0 is allowed.
    if (cur.x.sign() < 0) {
        step(cur.q >= cur.r ? 2 : 3);
    } else if (cur.q >= cur.r) {
        step(1);
    }
    // finally prefer q <= p when both slopes sit in (0, r)
    if (cur.q > cur.p && cur.q < cur.r && cur.q > 0) step(0);
    return out;
}

}  // namespace gpf
