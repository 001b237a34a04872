#pragma once
// Canonical representation of a rational ratio R(w) as
//   R(w) = S(w+1)/S(w) * d * P(w)/Q(w)
// with P, Q monic and strongly coprime (no root of P differs from a root of Q
// by an integer), and the assembly of the resulting gamma product
//   f(w) = C * S(w) * d^w * prod Gamma(w+u_i) / prod Gamma(w+v_j).

#include "gpf/gpfsearch.hpp"

namespace gpf {

// tq(w) == tp(w + s) for monic tokens of equal degree, s an integer
inline std::optional<long> token_shift(const PF& tp, const PF& tq) {
    long d = tp.deg();
    if (d != tq.deg() || d < 1) return std::nullopt;
    // compare the subleading coefficients: shifting by s adds d*s there
    Fe diff = (tq.coeff(d - 1) - tp.coeff(d - 1)) / Fe(d);
    if (!diff.is_rational() || !is_integer(diff.a)) return std::nullopt;
    Int si = diff.a.get_num();
    if (!si.fits_slong_p()) return std::nullopt;
    long s = si.get_si();
    if (tp.shift(Fe(Rat(si))) != tq) return std::nullopt;
    return s;
}

// split a monic polynomial into monic tokens: linear factors over the working
// quadratic field, then rational quadratic (or conjugate-pair) factors; an
// unresolved remainder is kept as one opaque token and clears the flag
inline std::vector<PF> token_factor(const PF& f, long Dhint, bool& complete) {
    std::vector<PF> toks;
    if (f.deg() < 1) return toks;
    auto fr = field_roots(f, Dhint);
    PF rest = f;
    for (auto& root : fr.roots) {
        PF lin = PF::linear(-root, Fe(1));
        auto [quo, rem] = divmod(rest, lin);
        if (!rem.is_zero()) { complete = false; break; }
        toks.push_back(lin);
        rest = quo;
    }
    if (rest.deg() >= 1) {
        bool rational = true;
        for (auto& c : rest.c) rational = rational && c.is_rational();
        if (rational) {
            PolyQ rq;
            for (auto& c : rest.c) rq.c.push_back(c.a);
            rq.trim();
            auto fac = factor_small(rq);
            for (auto& [g, mult] : fac.factors)
                for (long k = 0; k < mult; ++k) {
                    PF t;
                    for (auto& c : g.c) t.c.push_back(Fe(c));
                    toks.push_back(t);
                }
            if (!fac.complete()) {
                PF t;
                for (auto& c : fac.cofactor.c) t.c.push_back(Fe(c));
                toks.push_back(t.monic());
                complete = false;
            }
        } else {
            toks.push_back(rest.monic());
            complete = false;
        }
    }
    return toks;
}

struct CanonicalRep {
    RatFunc<Fe> S;   // accumulated shift factor
    Fe d;            // dilation (leading constant of R)
    PF P, Q;         // monic, strongly coprime
    bool complete = true;
};

inline CanonicalRep canonicalize(const RatFunc<Fe>& R) {
    if (R.is_zero()) throw std::domain_error("canonicalize: zero ratio");
    CanonicalRep rep;
    rep.d = R.num.lc();  // R.den is monic
    long D = 0;
    for (auto& c : R.num.c) if (!c.is_rational()) D = Fe::join(D, c.D);
    for (auto& c : R.den.c) if (!c.is_rational()) D = Fe::join(D, c.D);
    auto ptoks = token_factor(R.num.monic(), D, rep.complete);
    auto qtoks = token_factor(R.den, D, rep.complete);
    rep.S = RatFunc<Fe>(1);

    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < ptoks.size() && !changed; ++i) {
            for (size_t j = 0; j < qtoks.size() && !changed; ++j) {
                auto s = token_shift(ptoks[i], qtoks[j]);
                if (!s) continue;
                if (*s >= 1) {
                    // root of P sits an integer below the matching root of Q:
                    // both drop and S picks up the bridging factors downstairs
                    PF bridge{Fe(1)};
                    for (long k = 0; k < *s; ++k) bridge *= ptoks[i].shift(Fe(k));
                    rep.S = rep.S / RatFunc<Fe>(bridge);
                } else if (*s <= -1) {
                    PF bridge{Fe(1)};
                    for (long k = 0; k < -*s; ++k) bridge *= qtoks[j].shift(Fe(k));
                    rep.S = rep.S * RatFunc<Fe>(bridge);
                }
                // s == 0 would be a common factor; it cancels outright
                ptoks.erase(ptoks.begin() + i);
                qtoks.erase(qtoks.begin() + j);
                changed = true;
            }
        }
    }
    rep.P = PF{Fe(1)};
    rep.Q = PF{Fe(1)};
    for (auto& t : ptoks) rep.P *= t;
    for (auto& t : qtoks) rep.Q *= t;
    // reassembly invariant: S(w+1)/S(w) * d * P/Q == R
    RatFunc<Fe> back =
        rep.S.shift(Fe(1)) / rep.S * RatFunc<Fe>(rep.d) * RatFunc<Fe>(rep.P, rep.Q);
    if (back != R) throw std::logic_error("canonicalize: reassembly mismatch");
    return rep;
}

// strong coprimality: gcd(P(w), Q(w+j)) = 1 for every integer j
inline bool strongly_coprime(const PF& P, const PF& Q) {
    if (P.deg() < 1 || Q.deg() < 1) return true;
    // crude bound on how far apart roots can sit: Cauchy bounds of both
    auto bound = [](const PF& f) {
        double m = 0;
        for (auto& c : f.c) m = std::max(m, std::abs(c.to_double()));
        double l = std::abs(f.lc().to_double());
        return 1.0 + m / l;
    };
    long J = static_cast<long>(bound(P) + bound(Q)) + 2;
    for (long j = -J; j <= J; ++j)
        if (poly_gcd(P, Q.shift(Fe(j))).deg() > 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// gamma product assembly

struct GammaProduct {
    RatFunc<Fe> S;
    Fe d;
    std::vector<Rat> u, v;
    std::vector<long> s;  // s_i = r u_i
    long r = 0;
    Fe constant;             // exact when constant_exact
    bool constant_exact = false;
    BigFloat constant_num;   // numeric value regardless
};

struct assemble_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::optional<Rat> snap_rational(const BigFloat& c, long bits = 200) {
    Rat exact = bf_to_rat_exact(c);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(bits));
    Rat eps = Rat(1) / Rat(scale);
    Rat cand = simplest_between(exact - eps, exact + eps);
    if (mpz_sizeinbase(cand.get_num().get_mpz_t(), 2) > 64) return std::nullopt;
    if (mpz_sizeinbase(cand.get_den().get_mpz_t(), 2) > 64) return std::nullopt;
    return cand;
}

// snap to "rational" or "rational * sqrt(D)"
inline std::optional<Fe> snap_constant(const BigFloat& c, long D, long bits = 200) {
    if (auto q = snap_rational(c, bits)) return Fe(*q);
    if (D > 1) {
        BigFloat sq = BigFloat::zero(c.prec());
        mpfr_sqrt_ui(sq.v, static_cast<unsigned long>(D), MPFR_RNDN);
        if (auto q = snap_rational(c / sq, bits)) return Fe(Rat(0), *q, D);
    }
    return std::nullopt;
}

inline BigFloat eval_gamma_product_core(const GammaProduct& g, const BigFloat& w,
                                        long prec) {
    // S(w) d^w prod Gamma(w+u) / prod Gamma(w+v), without the constant
    BigFloat out = eval_rf_bf(g.S, w, prec);
    out *= bf_pow(BigFloat(g.d, prec), w);
    for (auto& u : g.u) out *= gamma_fn(w + BigFloat(u, prec), prec);
    for (auto& v : g.v) out /= gamma_fn(w + BigFloat(v, prec), prec);
    return out;
}

inline GammaProduct assemble_gpf(const Lambda& l, const RatFunc<Fe>& R,
                                 long prec = default_prec()) {
    if (!is_integer(l.r) || l.r <= 0)
        throw assemble_error("assemble_gpf: r must be a positive integer");
    auto rep = canonicalize(R);
    if (!rep.complete) throw assemble_error("assemble_gpf: unresolved factors");
    GammaProduct g;
    g.S = rep.S;
    g.d = rep.d;
    g.r = floor_int(l.r).get_si();
    if (rep.P.deg() != rep.Q.deg())
        throw assemble_error("assemble_gpf: gamma counts differ (m != n)");
    bool okroots = true;
    auto collect = [&](const PF& f, std::vector<Rat>& dst) {
        auto fr = field_roots(f);
        if (!fr.complete || static_cast<long>(fr.roots.size()) != std::max(f.deg(), 0L))
            okroots = false;
        for (auto& root : fr.roots) {
            if (!root.is_rational()) { okroots = false; continue; }
            dst.push_back(Rat(-root.a));
        }
    };
    collect(rep.P, g.u);
    collect(rep.Q, g.v);
    if (!okroots) throw assemble_error("assemble_gpf: non-rational gamma shifts");
    std::sort(g.u.begin(), g.u.end());
    std::sort(g.v.begin(), g.v.end());
    // u_i = s_i / r with the s_i integral and distinct mod r
    std::set<Int> residues;
    for (auto& u : g.u) {
        Rat su = u * Rat(g.r);
        if (!is_integer(su)) throw assemble_error("assemble_gpf: u_i not in (1/r)Z");
        Int si = su.get_num();
        g.s.push_back(si.get_si());
        if (!residues.insert(mod_int(si, Int(g.r))).second)
            throw assemble_error("assemble_gpf: s_i repeat mod r");
    }
    // balance: sum u - sum v + s0 = 0, where S ~ S0 w^{s0}
    long s0 = g.S.num.deg() - g.S.den.deg();
    Rat bal(s0);
    for (auto& u : g.u) bal += u;
    for (auto& v : g.v) bal -= v;
    if (bal != 0) throw assemble_error("assemble_gpf: gamma shifts unbalanced");

    // normalizing constant, from a reference point clear of all poles
    Rat wlo(0);
    for (auto& u : g.u) wlo = std::min(wlo, Rat(-u));
    for (auto& v : g.v) wlo = std::min(wlo, Rat(-v));
    BigFloat w0 = BigFloat(rat(3, 2) - wlo, prec);
    BigFloat fval = eval_f(l, w0, prec);
    g.constant_num = fval / eval_gamma_product_core(g, w0, prec);
    long D = Fe::join(g.d.is_rational() ? 0 : g.d.D, l.x.is_rational() ? 0 : l.x.D);
    long bits = std::min(200L, prec - 40);
    if (auto c = snap_constant(g.constant_num, D, bits)) {
        g.constant = *c;
        g.constant_exact = true;
    }
    return g;
}

// relative deviation of the assembled product from the hypergeometric value
inline BigFloat gpf_discrepancy(const Lambda& l, const GammaProduct& g,
                                const BigFloat& w, long prec) {
    BigFloat lhs = eval_f(l, w, prec);
    BigFloat c = g.constant_exact ? BigFloat(g.constant, prec) : g.constant_num;
    BigFloat rhs = c * eval_gamma_product_core(g, w, prec);
    return bf_abs(lhs - rhs) / bf_abs(rhs);
}

}  // namespace gpf
