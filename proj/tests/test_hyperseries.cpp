#include <catch2/catch_amalgamated.hpp>

#include "gpf/hyperseries.hpp"

#include <random>

using namespace gpf;

static BigFloat bfq(long n, long d, long prec = 426) { return BigFloat(rat(n, d), prec); }

TEST_CASE("gauss_2f1 basics") {
    long prec = 426;
    SECTION("x = 0 gives 1") {
        auto r = gauss_2f1(bfq(1, 3, prec), bfq(5, 7, prec), bfq(9, 2, prec),
                           BigFloat(Rat(0), prec), prec);
        CHECK(r.value == BigFloat(Rat(1), prec));
    }
    SECTION("2F1(1,1;2;x) = -log(1-x)/x") {
        BigFloat x = bfq(1, 2, prec);
        auto r = gauss_2f1(bfq(1, 1, prec), bfq(1, 1, prec), bfq(2, 1, prec), x, prec);
        BigFloat oracle = -bf_log(BigFloat(Rat(1), prec) - x) / x;  // = 2 ln 2
        CHECK(bf_abs(r.value - oracle) < r.error_bound + bf_pow2(-400, prec));
        CHECK(bf_abs(r.value - oracle) < bf_pow2(-390, prec));
    }
    SECTION("first closed-form verification row at w=2") {
        auto lhs = gauss_2f1(bfq(-1, 4, prec), bfq(1, 4, prec), bfq(2, 1, prec),
                             bfq(-1, 3, prec), prec);
        BigFloat rhs = bf_pow(bfq(8, 9, prec), bfq(1, 2, prec)) *
                       gamma_fn(bfq(4, 3, prec), prec) * gamma_fn(bfq(2, 1, prec), prec) /
                       (gamma_fn(bfq(3, 2, prec), prec) * gamma_fn(bfq(11, 6, prec), prec));
        CHECK((bf_abs(lhs.value - rhs) / bf_abs(rhs)).to_double() < 1e-30);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(gauss_2f1(bfq(1, 1), bfq(1, 1), bfq(2, 1), bfq(3, 2)),
                        divergence_error);
        CHECK_THROWS_AS(gauss_2f1(bfq(1, 1), bfq(1, 1), bfq(-2, 1), bfq(1, 2)),
                        pole_error);
    }
    SECTION("precision ladder: doubling precision preserves leading bits") {
        auto lo = gauss_2f1(bfq(1, 3, 256), bfq(2, 5, 256), bfq(7, 4, 256), bfq(-9, 10, 256), 256);
        auto hi = gauss_2f1(bfq(1, 3, 512), bfq(2, 5, 512), bfq(7, 4, 512), bfq(-9, 10, 512), 512);
        CHECK(bf_abs(lo.value - hi.value) < bf_pow2(-248, 512) * bf_abs(hi.value));
    }
    SECTION("Euler and Pfaff transformations numerically") {
        std::mt19937 rng(3);
        long p = 256;
        for (int t = 0; t < 50; ++t) {
            BigFloat a = bfq(static_cast<long>(rng() % 13) - 6, 1 + rng() % 4, p);
            BigFloat b = bfq(static_cast<long>(rng() % 13) - 6, 1 + rng() % 4, p);
            // keep c away from non-positive integers
            BigFloat c = bfq(static_cast<long>(rng() % 10) * 2 + 1, 2, p);
            BigFloat x = bfq(static_cast<long>(rng() % 17) - 8, 20 + rng() % 10, p);
            if (x.is_zero()) continue;
            BigFloat one(Rat(1), p);
            auto f = gauss_2f1(a, b, c, x, p);
            // Euler: (1-x)^{c-a-b} 2F1(c-a, c-b; c; x)
            auto e = gauss_2f1(c - a, c - b, c, x, p);
            BigFloat euler = bf_pow(one - x, c - a - b) * e.value;
            CHECK((bf_abs(f.value - euler) / bf_abs(f.value)).to_double() < 1e-60);
            // Pfaff: (1-x)^{-a} 2F1(a, c-b; c; x/(x-1))
            auto pf = gauss_2f1(a, c - b, c, x / (x - one), p);
            BigFloat pfaff = bf_pow(one - x, -a) * pf.value;
            CHECK((bf_abs(f.value - pfaff) / bf_abs(f.value)).to_double() < 1e-60);
        }
    }
}

TEST_CASE("gamma_fn") {
    long p = 426;
    CHECK(bf_abs(gamma_fn(bfq(1, 1, p), p) - BigFloat(Rat(1), p)).to_double() < 1e-70);
    CHECK(bf_abs(gamma_fn(bfq(5, 1, p), p) - BigFloat(Rat(24), p)).to_double() < 1e-70);
    BigFloat sqrtpi = bf_sqrt(bf_pi(p));
    CHECK((bf_abs(gamma_fn(bfq(1, 2, p), p) - sqrtpi) / sqrtpi).to_double() < 1e-100);
    CHECK_THROWS_AS(gamma_fn(bfq(-3, 1, p), p), pole_error);

    SECTION("recurrence and precision ladder") {
        std::mt19937 rng(5);
        for (int t = 0; t < 50; ++t) {
            // build w with guard bits so only the Gamma evaluations round
            BigFloat w = bfq(1 + rng() % 200, 1 + rng() % 16, 320);
            BigFloat lhs = gamma_fn(w + BigFloat(Rat(1), 320), 256);
            BigFloat rhs = w * gamma_fn(w, 256);
            CHECK(bf_abs(lhs - rhs) < bf_pow2(-252, 256) * bf_abs(rhs));
        }
        BigFloat a = gamma_fn(bfq(4, 3, 256), 256) /
                     (gamma_fn(bfq(3, 2, 256), 256) * gamma_fn(bfq(11, 6, 256), 256));
        BigFloat b = gamma_fn(bfq(4, 3, 512), 512) /
                     (gamma_fn(bfq(3, 2, 512), 512) * gamma_fn(bfq(11, 6, 512), 512));
        CHECK(bf_abs(a - b) < bf_pow2(-248, 512) * bf_abs(b));
    }
}

TEST_CASE("terminating_F") {
    Fe beta(rat(2, 3)), gamma(rat(-1, 5)), x(rat(4, 7));
    CHECK(terminating_F(0, beta, gamma, x) == Fe(1));
    CHECK(terminating_F(1, beta, gamma, x) == gamma - beta * x);
    // F_2(0; 0; x) vanishes identically (beta, gamma integers, 0 <= -beta <= -gamma <= k-1)
    CHECK(terminating_F(2, Fe(0), Fe(0), x) == Fe(0));
    CHECK(terminating_F_poly(2, Rat(0), Rat(0)).is_zero());

    SECTION("contiguous derivative identities, symbolic x") {
        std::mt19937 rng(9);
        for (long k = 1; k <= 6; ++k) {
            Rat b = rat(static_cast<long>(rng() % 15) - 7, 1 + rng() % 5);
            Rat g = rat(static_cast<long>(rng() % 15) - 7, 1 + rng() % 5);
            Poly<Rat> F = terminating_F_poly(k, b, g);
            // d/dz F_k(b;g;z) = -k b F_{k-1}(b+1; g+1; z)
            CHECK(F.derivative() ==
                  terminating_F_poly(k - 1, Rat(b + 1), Rat(g + 1)) * Rat(Rat(-k) * b));
            // z d/dz F_k = (g+k-1) F_k(b; g-1; z) - (g-1) F_k(b; g; z)
            Poly<Rat> lhs = Poly<Rat>::var() * F.derivative();
            Poly<Rat> rhs = terminating_F_poly(k, b, Rat(g - 1)) * Rat(g + Rat(k) - 1) -
                            F * Rat(g - 1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dihedral closed form via terminating Appell F3") {
    // F3 at (0,0) arguments
    CHECK(appell_f3(Fe(2), Fe(1), Fe(-1), Fe(3), Fe(rat(5, 2)), Fe(0), Fe(0)) == Fe(1));
    // S_00 = 1
    CHECK(appell_f3_terminating(0, 0, Fe(3), Fe(rat(1, 2))) == Fe(1));

    long p = 426;
    BigFloat w(Rat(3), p), x(rat(1, 2), p);
    BigFloat one(Rat(1), p);
    BigFloat shalf = bf_sqrt(bfq(1, 2, p));
    for (auto [i, j] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 1}}) {
        // 2F1(w/2 + i, (w-1)/2 + j; w; x) = S_ij(w;x) ((1 + sqrt(1-x))/2)^{1-w}
        auto lhs = gauss_2f1(w / BigFloat(2) + BigFloat(i),
                             (w - one) / BigFloat(2) + BigFloat(j), w, x, p);
        Fe sij = appell_f3_terminating(i, j, Fe(3), Fe(rat(1, 2)));
        BigFloat rhs = BigFloat(sij, p) * bf_pow((one + shalf) / BigFloat(2), one - w);
        CHECK((bf_abs(lhs.value - rhs) / bf_abs(rhs)).to_double() < 1e-25);
    }
}
