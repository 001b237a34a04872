#include <catch2/catch_amalgamated.hpp>

#include "gpf/contiguous.hpp"

#include <random>

using namespace gpf;

namespace {

// generic path product: apply steps in the given order, tracking the offsets
// of alpha, beta, gamma accumulated so far
Mat2<RF> path_product(const std::vector<int>& steps, const Triple& t, const Fe& a,
                      const Fe& b, const Fe& x) {
    auto [al, be, ga] = alpha_polys(t, a, b);
    long i = 0, j = 0, k = 0;
    Mat2<RF> M = Mat2<RF>::identity();
    for (int s : steps) {
        M = step_matrix_sym(s, al + PF(Fe(i)), be + PF(Fe(j)), ga + PF(Fe(k)), x) * M;
        if (s == 1) ++i;
        else if (s == 2) ++j;
        else ++k;
    }
    return M;
}

RF rf_lin(const Rat& c) { return RF(PF::linear(Fe(c), Fe(1))); }  // w + c

}  // namespace

TEST_CASE("step matrix determinants") {
    Triple t{1, 1, 2};
    Fe a(0), b(rat(1, 4)), x(rat(1, 3));
    auto [al, be, ga] = alpha_polys(t, a, b);
    RF A(al), B(be), G(ga), z{x}, one(1);

    // det A1 = (gamma - alpha - 1)/((alpha+1)(z-1))
    CHECK(step_matrix_sym(1, al, be, ga, x).det() ==
          (G - A - one) / ((A + one) * (z - one)));
    // det A2 = (gamma - beta - 1)/((beta+1)(z-1))
    CHECK(step_matrix_sym(2, al, be, ga, x).det() ==
          (G - B - one) / ((B + one) * (z - one)));
    // det A3 = gamma(gamma+1)(z-1)/((gamma-alpha)(gamma-beta)z)
    CHECK(step_matrix_sym(3, al, be, ga, x).det() ==
          G * (G + one) * (z - one) / ((G - A) * (G - B) * z));
}

TEST_CASE("step matrices are compatible across the lattice") {
    Triple t{1, 1, 2};
    Fe a(0), b(rat(1, 4)), x(rat(1, 3));
    auto [al, be, ga] = alpha_polys(t, a, b);
    PF one{Fe(1)};
    // A_i(par + e_j) A_j(par) == A_j(par + e_i) A_i(par) for all pairs
    auto S = [&](int i, const PF& A, const PF& B, const PF& G) {
        return step_matrix_sym(i, A, B, G, x);
    };
    CHECK(S(1, al, be + one, ga) * S(2, al, be, ga) ==
          S(2, al + one, be, ga) * S(1, al, be, ga));
    CHECK(S(1, al, be, ga + one) * S(3, al, be, ga) ==
          S(3, al + one, be, ga) * S(1, al, be, ga));
    CHECK(S(2, al, be, ga + one) * S(3, al, be, ga) ==
          S(3, al, be + one, ga) * S(2, al, be, ga));
}

TEST_CASE("path independence of the staircase product") {
    std::mt19937 rng(17);
    std::vector<std::tuple<Triple, Fe, Fe, Fe>> cases = {
        {{1, 1, 2}, Fe(0), Fe(rat(1, 4)), Fe(rat(1, 3))},
        {{2, 1, 3}, Fe(rat(1, 5)), Fe(rat(-1, 3)), Fe(rat(2, 7))},
        {{3, 3, 6}, Fe(rat(1, 2), rat(1, 3), 5), Fe(rat(1, 7)), Fe(rat(3, 4), rat(-1, 8), 5)},
    };
    for (auto& [t, a, b, x] : cases) {
        Mat2<RF> ref = contig_product(t, a, b, x);
        std::vector<int> steps;
        for (long i = 0; i < t.p; ++i) steps.push_back(1);
        for (long i = 0; i < t.q; ++i) steps.push_back(2);
        for (long i = 0; i < t.r; ++i) steps.push_back(3);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(steps.begin(), steps.end(), rng);
            CHECK(path_product(steps, t, a, b, x) == ref);
        }
    }
}

TEST_CASE("determinant of the full product matches the closed form") {
    std::vector<std::tuple<Triple, Fe, Fe, Fe>> cases = {
        {{1, 1, 2}, Fe(0), Fe(rat(1, 4)), Fe(rat(1, 3))},
        {{1, 1, 4}, Fe(0), Fe(rat(1, 4)), Fe(rat(8, 9))},
        {{2, 2, 6}, Fe(0), Fe(rat(1, 3)), Fe(rat(3, 4)) * (Fe(3) - Fe(rat(0), rat(1), 3))},
        {{3, 1, 6}, Fe(0), Fe(rat(1, 6)), Fe(4) * (Fe(rat(0), rat(1), 5) - Fe(2))},
        {{4, 2, 6}, Fe(rat(2, 5)), Fe(rat(-1, 7)), Fe(rat(5, 8))},
    };
    for (auto& [t, a, b, x] : cases) {
        CHECK(contig_product(t, a, b, x).det() == detA_formula(t, a, b, x));
    }
}

TEST_CASE("product vanishes in the upper-right entry exactly on a known solution") {
    // (p,q,r;a,b;x) = (1,1,4; 0, 1/4; 8/9) has ratio
    //   R(w) = (4/3)(w + 1/2)(w + 3/4) / ((w + 2/3)(w + 7/12))
    Triple t{1, 1, 4};
    Fe a(0), b(rat(1, 4)), x(rat(8, 9));
    Mat2<RF> A = contig_product(t, a, b, x);
    CHECK(A.a12.is_zero());

    PF phi22 = phi22_from_product(A, t, a, b);
    CHECK(phi22.deg() == t.r);
    // R(w) = x^{-r} (x-1)^{r-p-q} (rw)_r / phi22(w)
    Fe scale = pow_fe(x, -t.r) * pow_fe(x - Fe(1), t.r - t.p - t.q);
    RF R(pochhammer_poly(PF::linear(Fe(0), Fe(4)), 4) * scale, phi22);
    RF known = RF(Fe(rat(4, 3))) * rf_lin(rat(1, 2)) * rf_lin(rat(3, 4)) /
               (rf_lin(rat(2, 3)) * rf_lin(rat(7, 12)));
    CHECK(R == known);

    // perturbing b off the solution leaves a nonzero upper-right entry
    CHECK(!contig_product(t, a, Fe(rat(1, 5)), x).a12.is_zero());
    // and perturbing x likewise
    CHECK(!contig_product(t, a, b, Fe(rat(7, 9))).a12.is_zero());
}

TEST_CASE("spectral polynomials") {
    SECTION("(1,1,4)") {
        auto sp = spectral_polys({1, 1, 4});
        // Delta = 16 - 12 z
        CHECK(sp.Delta == PolyQ(std::vector<Rat>{Rat(16), Rat(-12)}));
        CHECK(sp.Y.eval(Rat(0)) == Rat(512));   // (2r)^{r-1}
        CHECK(sp.Y.eval(Rat(1)) == Rat(-16));   // -2^{r-1} p^p q^q (r-p-q)^{r-p-q-1}
        CHECK(sp.Y.deg() <= 4 - 1 - 1);         // p = q drops the top coefficient
        // the unique root of Y in (0,1) is x = 8/9
        CHECK(sp.Y.eval(rat(8, 9)) == Rat(0));
        // X^2 - Delta Y^2 = Z+ Z- = prod of factor norms
        PolyQ z = PolyQ::var();
        PolyQ n1 = PolyQ(std::vector<Rat>{Rat(4), Rat(0)});  // r + (p-q) z = 4
        PolyQ f1 = n1 * n1 - sp.Delta;
        PolyQ f3n(std::vector<Rat>{Rat(-4), Rat(6)});        // (2r-p-q) z - r
        PolyQ f3 = f3n * f3n - sp.Delta;
        CHECK(sp.X * sp.X - sp.Delta * sp.Y * sp.Y == f1 * f1 * f3 * f3);
    }
    SECTION("(1,1,2): balanced triple has constant Y") {
        auto sp = spectral_polys({1, 1, 2});
        CHECK(sp.Y.deg() == 0);  // no root at all, in particular none in [0,1)
        CHECK(sp.X == PolyQ(std::vector<Rat>{Rat(8), Rat(-4)}));
    }
    SECTION("conjugate-product identity for asymmetric triples") {
        for (Triple t : {Triple{2, 1, 5}, Triple{3, 1, 6}, Triple{3, 2, 7}}) {
            auto sp = spectral_polys(t);
            const auto [p, q, r] = t;
            PolyQ n1(std::vector<Rat>{Rat(r), Rat(p - q)});
            PolyQ n2(std::vector<Rat>{Rat(r), Rat(q - p)});
            PolyQ n3(std::vector<Rat>{Rat(-r), Rat(2 * r - p - q)});
            PolyQ prod{Rat(1)};
            for (long i = 0; i < p; ++i) prod *= n1 * n1 - sp.Delta;
            for (long i = 0; i < q; ++i) prod *= n2 * n2 - sp.Delta;
            for (long i = 0; i < r - p - q; ++i) prod *= n3 * n3 - sp.Delta;
            CHECK(sp.X * sp.X - sp.Delta * sp.Y * sp.Y == prod);
            CHECK(sp.Y.deg() <= r - 1);
        }
    }
}

TEST_CASE("principal parts") {
    for (Triple t : {Triple{1, 1, 4}, Triple{3, 1, 6}, Triple{2, 2, 6}}) {
        auto B1 = principal_part(1, t), B2 = principal_part(2, t),
             B3 = principal_part(3, t);
        CHECK(B1 * B2 == B2 * B1);
        CHECK(B1 * B3 == B3 * B1);
        CHECK(B2 * B3 == B3 * B2);
        CHECK(principal_product(t) == principal_closed_form(t));
    }
    SECTION("principal part is the w -> infinity limit of the step matrix") {
        // substitute large w and compare numerically at z = 1/3
        Triple t{2, 1, 5};
        Fe a(rat(1, 7)), b(rat(-2, 9)), x(rat(1, 3));
        auto [al, be, ga] = alpha_polys(t, a, b);
        for (int i : {1, 2, 3}) {
            auto A = step_matrix_sym(i, al, be, ga, x);
            auto B = principal_part(i, t);
            Fe w(Rat(1000000));
            auto near = [&](const RF& f, const RatFunc<Rat>& g) {
                double fv = f.eval(w).to_double();
                double gv = g.eval(x).to_double();
                return std::abs(fv - gv) < 1e-4 * (1.0 + std::abs(gv));
            };
            CHECK(near(A.a11, B.a11));
            CHECK(near(A.a12, B.a12));
            CHECK(near(A.a21, B.a21));
            CHECK(near(A.a22, B.a22));
        }
    }
}
