#pragma once
// Gauss contiguous step matrices, their lattice-path products A(w), the
// principal parts B_i (w -> infinity limits), and the spectral polynomials
// Delta, X, Y whose Y-roots in (0,1) are the only admissible x.

#include "gpf/hyperseries.hpp"
#include "gpf/poly.hpp"
#include "gpf/roots.hpp"

#include <array>

namespace gpf {

template <class T>
struct Mat2 {
    T a11, a12, a21, a22;

    friend Mat2 operator*(const Mat2& A, const Mat2& B) {
        return {A.a11 * B.a11 + A.a12 * B.a21, A.a11 * B.a12 + A.a12 * B.a22,
                A.a21 * B.a11 + A.a22 * B.a21, A.a21 * B.a12 + A.a22 * B.a22};
    }
    friend bool operator==(const Mat2& A, const Mat2& B) {
        return A.a11 == B.a11 && A.a12 == B.a12 && A.a21 == B.a21 && A.a22 == B.a22;
    }
    T det() const { return a11 * a22 - a12 * a21; }
    static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
    Mat2 pow(long n) const {
        Mat2 out = identity(), b = *this;
        while (n) {
            if (n & 1) out = out * b;
            b = b * b;
            n >>= 1;
        }
        return out;
    }
};

using RF = RatFunc<Fe>;     // rational functions of w over the working field
using PF = Poly<Fe>;

// The three raising matrices with symbolic parameter polynomials
// (al, be, ga are polynomials in w after the substitution a = alpha(w))
// and z = x a field constant.
//   A1 = [ 1,                     be z / ga                          ]
//        [ -ga/((al+1)(z-1)),     (ga - al - 1 - be z)/((al+1)(z-1)) ]
//   A2 = A1 with al <-> be
//   A3 = [ ga(ga-al-be)/((ga-al)(ga-be)),  -al be (z-1)/((ga-al)(ga-be)) ]
//        [ ga(ga+1)/((ga-al)(ga-be)z),     ga(ga+1)(z-1)/((ga-al)(ga-be)z) ]
inline Mat2<RF> step_matrix_sym(int i, const PF& al, const PF& be, const PF& ga,
                                const Fe& x) {
    if (x == Fe(0) || x == Fe(1))
        throw std::domain_error("step_matrix: degenerate substitution z in {0,1}");
    RF A(al), B(be), G(ga), z{x}, one(1);
    if (i == 2) std::swap(A, B);
    if (i == 1 || i == 2) {
        RF d = (A + one) * (z - one);
        return {one, B * z / G, -G / d, (G - A - one - B * z) / d};
    }
    if (i == 3) {
        RF d = (G - A) * (G - B);
        return {G * (G - A - B) / d, -A * B * (z - one) / d,
                G * (G + one) / (d * z), G * (G + one) * (z - one) / (d * z)};
    }
    throw std::invalid_argument("step_matrix: index must be 1, 2 or 3");
}

struct Triple {
    long p, q, r;
};

// alpha(w) = (p w + a, q w + b; r w) as polynomials in w
inline std::array<PF, 3> alpha_polys(const Triple& t, const Fe& a, const Fe& b) {
    return {PF::linear(a, Fe(t.p)), PF::linear(b, Fe(t.q)), PF::linear(Fe(0), Fe(t.r))};
}

inline Mat2<RF> step_matrix(int i, const Triple& t, const Fe& a, const Fe& b,
                            const Fe& x) {
    auto [al, be, ga] = alpha_polys(t, a, b);
    return step_matrix_sym(i, al, be, ga, x);
}

// Path-ordered product along the standard staircase: first all gamma-raises,
// then all beta-raises, then all alpha-raises:
//   A = [A1(al+p-1,be+q,ga+r)...A1(al,be+q,ga+r)]
//       [A2(al,be+q-1,ga+r)...A2(al,be,ga+r)]
//       [A3(al,be,ga+r-1)...A3(al,be,ga)]
inline Mat2<RF> contig_product_sym(const Triple& t, const PF& al, const PF& be,
                                   const PF& ga, const Fe& x) {
    if (t.p < 1 || t.p > t.r || t.q < 1 || t.q > t.r)
        throw std::domain_error("contig_product: need 1 <= p,q <= r");
    Mat2<RF> M = Mat2<RF>::identity();
    for (long k = 0; k < t.r; ++k)
        M = step_matrix_sym(3, al, be, ga + PF(Fe(k)), x) * M;
    for (long k = 0; k < t.q; ++k)
        M = step_matrix_sym(2, al, be + PF(Fe(k)), ga + PF(Fe(t.r)), x) * M;
    for (long k = 0; k < t.p; ++k)
        M = step_matrix_sym(1, al + PF(Fe(k)), be + PF(Fe(t.q)), ga + PF(Fe(t.r)), x) * M;
    return M;
}

inline Mat2<RF> contig_product(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    auto [al, be, ga] = alpha_polys(t, a, b);
    return contig_product_sym(t, al, be, ga, x);
}

// det A(w) = x^{-r} (x-1)^{r-p-q} (rw)_r (rw+1)_r
//            / ( (pw+a+1)_p (qw+b+1)_q ((r-p)w-a)_{r-p} ((r-q)w-b)_{r-q} )
inline RF detA_formula(const Triple& t, const Fe& a, const Fe& b, const Fe& x) {
    const auto [p, q, r] = t;
    PF rw = PF::linear(Fe(0), Fe(r));
    PF num = pochhammer_poly(rw, r) * pochhammer_poly(rw + PF(Fe(1)), r);
    PF den = pochhammer_poly(PF::linear(a + Fe(1), Fe(p)), p) *
             pochhammer_poly(PF::linear(b + Fe(1), Fe(q)), q) *
             pochhammer_poly(PF::linear(-a, Fe(r - p)), r - p) *
             pochhammer_poly(PF::linear(-b, Fe(r - q)), r - q);
    Fe scale = pow_fe(x, -r) * pow_fe(x - Fe(1), r - p - q);
    return RF(num * scale, den);
}

// phi_22^{(r)}(w) recovered from the (2,2) entry of A(w):
//   A22 = (rw+1)_r phi22 / ( (pw+a+1)_p (qw+b+1)_q ((r-p)w-a)_{r-p} ((r-q)w-b)_{r-q} )
inline PF phi22_from_product(const Mat2<RF>& A, const Triple& t, const Fe& a,
                             const Fe& b) {
    const auto [p, q, r] = t;
    PF den = pochhammer_poly(PF::linear(a + Fe(1), Fe(p)), p) *
             pochhammer_poly(PF::linear(b + Fe(1), Fe(q)), q) *
             pochhammer_poly(PF::linear(-a, Fe(r - p)), r - p) *
             pochhammer_poly(PF::linear(-b, Fe(r - q)), r - q);
    PF rw1 = pochhammer_poly(PF::linear(Fe(1), Fe(r)), r);
    RF phi = A.a22 * RF(den, rw1);
    if (phi.den.deg() != 0)
        throw std::runtime_error("phi22 extraction: unexpected denominator");
    return phi.num * (Fe(1) / phi.den.lc());
}

// ---------------------------------------------------------------------------
// Spectral polynomials: Delta, and Z+- = X +- Y sqrt(Delta) expanded in the
// quotient ring Q[z][s]/(s^2 - Delta).

struct SpectralPolys {
    PolyQ Delta, X, Y;
    Triple pqr;
};

namespace detail {
// element X + Y s with s^2 = Delta
struct QuotElem {
    PolyQ X, Y;
};
inline QuotElem qmul(const QuotElem& u, const QuotElem& v, const PolyQ& Delta) {
    return {u.X * v.X + u.Y * v.Y * Delta, u.X * v.Y + u.Y * v.X};
}
inline QuotElem qpow(QuotElem base, long n, const PolyQ& Delta) {
    QuotElem out{PolyQ{Rat(1)}, PolyQ()};
    while (n) {
        if (n & 1) out = qmul(out, base, Delta);
        base = qmul(base, base, Delta);
        n >>= 1;
    }
    return out;
}
}  // namespace detail

inline SpectralPolys spectral_polys(const Triple& t) {
    const auto [p, q, r] = t;
    // Delta(z) = (p-q)^2 z^2 - 2{(p+q)r - 2pq} z + r^2
    PolyQ Delta(std::vector<Rat>{Rat(r * r), Rat(-2 * ((p + q) * r - 2 * p * q)),
                                 Rat((p - q) * (p - q))});
    using detail::QuotElem;
    // Z+ = {r+(p-q)z + s}^p {r-(p-q)z + s}^q {(2r-p-q)z - r - s}^{r-p-q}
    QuotElem f1{PolyQ(std::vector<Rat>{Rat(r), Rat(p - q)}), PolyQ{Rat(1)}};
    QuotElem f2{PolyQ(std::vector<Rat>{Rat(r), Rat(q - p)}), PolyQ{Rat(1)}};
    QuotElem f3{PolyQ(std::vector<Rat>{Rat(-r), Rat(2 * r - p - q)}), PolyQ{Rat(-1)}};
    QuotElem Z = detail::qmul(detail::qpow(f1, p, Delta),
                              detail::qpow(f2, q, Delta), Delta);
    if (r - p - q < 0) throw std::domain_error("spectral_polys: need p + q <= r");
    Z = detail::qmul(Z, detail::qpow(f3, r - p - q, Delta), Delta);
    return {Delta, Z.X, Z.Y, t};
}

// ---------------------------------------------------------------------------
// Principal parts over Q(z) (Table of B_i) and the closed form of their
// product B1^p B2^q B3^r.

using RFz = RatFunc<Rat>;  // rational functions of z

inline Mat2<RFz> principal_part(int i, const Triple& t) {
    const auto [p, q, r] = t;
    PolyQ z = PolyQ::var();
    PolyQ one{Rat(1)};
    auto C = [](const Rat& c) { return RFz(c); };
    if (i == 1 || i == 2) {
        long pp = (i == 1) ? p : q, qq = (i == 1) ? q : p;
        return {C(Rat(1)), RFz(z * rat(qq, r)),
                RFz(-one * Rat(r), (z - one) * Rat(pp)),
                RFz(PolyQ(std::vector<Rat>{Rat(r - pp), Rat(-qq)}), (z - one) * Rat(pp))};
    }
    if (i == 3) {
        Rat d = Rat((r - p) * (r - q));
        return {C(Rat(r * (r - p - q)) / d), RFz(-(z - one) * (Rat(p * q) / d)),
                RFz(one * (Rat(r * r) / d), z), RFz((z - one) * (Rat(r * r) / d), z)};
    }
    throw std::invalid_argument("principal_part: index must be 1, 2 or 3");
}

// B1^p B2^q B3^r, plus an exact check against the closed form
//   c [[X - {r-(p+q)z} Y, 2(pq/r) z(z-1) Y], [-2r Y, X + {r-(p+q)z} Y]],
//   c = r^r / (2^r p^p q^q (r-p)^{r-p} (r-q)^{r-q} z^r).
inline Mat2<RFz> principal_product(const Triple& t) {
    const auto [p, q, r] = t;
    Mat2<RFz> prod = principal_part(1, t).pow(p) * principal_part(2, t).pow(q) *
                     principal_part(3, t).pow(r);
    return prod;
}

inline Mat2<RFz> principal_closed_form(const Triple& t) {
    const auto [p, q, r] = t;
    SpectralPolys sp = spectral_polys(t);
    PolyQ z = PolyQ::var(), one{Rat(1)};
    PolyQ lin(std::vector<Rat>{Rat(r), Rat(-(p + q))});  // r - (p+q) z
    Rat cnum = pow_rat(Rat(r), r);
    Rat cden = pow_rat(Rat(2), r) * pow_rat(Rat(p), p) * pow_rat(Rat(q), q) *
               pow_rat(Rat(r - p), r - p) * pow_rat(Rat(r - q), r - q);
    PolyQ zr{Rat(1)};
    for (long i = 0; i < r; ++i) zr *= z;
    RFz c(PolyQ{cnum}, zr * cden);
    return {c * RFz(sp.X - lin * sp.Y), c * RFz(z * (z - one) * sp.Y * rat(2 * p * q, r)),
            c * RFz(-sp.Y * Rat(2 * r)), c * RFz(sp.X + lin * sp.Y)};
}

}  // namespace gpf
