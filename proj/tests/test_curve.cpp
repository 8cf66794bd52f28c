#include <doctest.h>

#include <random>

#include "curve.hpp"
#include "derive.hpp"

using namespace permtri;

namespace {

std::mt19937_64 rng(0xcafe0c0deu);

FqElem random_elem(const BaseField& F) { return FqElem(rng() % F.q()); }

// Evaluates one reference coefficient polynomial numerically.
FqElem eval_reference(const BaseField& F, const symbolic::Poly& poly, const CaseTuple& t,
                      FqElem k) {
    std::array<FqElem, symbolic::num_vars> vals{};
    vals[symbolic::var_index('A')] = t.A;
    vals[symbolic::var_index('B')] = t.B;
    vals[symbolic::var_index('C')] = t.C;
    vals[symbolic::var_index('D')] = t.D;
    vals[symbolic::var_index('k')] = k;
    return poly.eval(F, vals);
}

} // namespace

TEST_CASE("curve coefficients at the unit pair") {
    ExtField F{BaseField{3}};
    CurveCoeffs c = gamma_coeffs(F, {1, 0, 1, 0});
    CHECK(c.g[2][2] == 1);
}

TEST_CASE("numeric coefficients match the symbolic reference") {
    const auto& ref = symbolic::reference_gammas();
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        ExtField F{BaseField{m}};
        for (int t = 0; t < 1000; ++t) {
            CaseTuple tup{random_elem(F.base()), random_elem(F.base()),
                          random_elem(F.base()), random_elem(F.base())};
            CurveCoeffs c = gamma_coeffs(F, tup);
            for (const auto& [key, poly] : ref) {
                CHECK(c.g[key.first][key.second] == eval_reference(F.base(), poly, tup, F.k()));
            }
        }
    }
}

TEST_CASE("coefficient symmetry makes the curve symmetric") {
    ExtField F{BaseField{4}};
    for (int t = 0; t < 200; ++t) {
        CaseTuple tup{random_elem(F.base()), random_elem(F.base()), random_elem(F.base()),
                      random_elem(F.base())};
        CurveCoeffs c = gamma_coeffs(F, tup);
        CHECK(c.g[2][1] == c.g[1][2]);
        CHECK(c.g[2][0] == c.g[0][2]);
        CHECK(c.g[1][0] == c.g[0][1]);
        // L(x,y) = L(y,x) numerically
        const BaseField& B = F.base();
        FqElem x = random_elem(B), y = random_elem(B);
        auto L = [&](FqElem u, FqElem v) {
            FqElem acc = 0;
            for (int j = 0; j < 3; ++j)
                for (int l = 0; l < 3; ++l)
                    acc ^= B.mul(c.g[j][l], B.mul(B.pow(u, j), B.pow(v, l)));
            return acc;
        };
        CHECK(L(x, y) == L(y, x));
    }
}

TEST_CASE("point count separates permutation pairs at q = 8") {
    ExtField F{BaseField{3}};

    CHECK(count_points_off_diagonal(F.base(), gamma_coeffs(F, {1, 0, 1, 0})) == 0);

    // any non-permutation pair must leave rational points off the diagonal
    PpBruteTester brute(F);
    int nonpp = 0, withpoints = 0;
    for (std::uint32_t pa = 1; pa < 64; ++pa) {
        for (std::uint32_t pb = 1; pb < 64; ++pb) {
            PairAB p{F.unpack(pa), F.unpack(pb)};
            if (p.alpha.is_zero() || p.beta.is_zero()) continue;
            if (!brute(p)) {
                ++nonpp;
                std::uint64_t n =
                    count_points_off_diagonal(F.base(), gamma_coeffs(F, coords(p)));
                if (n > 0) ++withpoints;
            }
        }
    }
    CHECK(nonpp > 0);
    // pairs where g has a pole can vanish on the curve side, all others cannot;
    // the exact equivalence is covered by the mu-test comparison below
    CHECK(withpoints > 0);
}

TEST_CASE("curve criterion equals the mu criterion away from poles, q = 8") {
    ExtField F{BaseField{3}};
    MuPermTester mu_test(F);
    for (std::uint32_t pa = 1; pa < 64; ++pa) {
        for (std::uint32_t pb = 1; pb < 64; ++pb) {
            PairAB p{F.unpack(pa), F.unpack(pb)};
            if (p.alpha.is_zero() || p.beta.is_zero()) continue;
            bool pole = false;
            bool perm = mu_test.run(p, pole);
            if (pole) continue;
            std::uint64_t n = count_points_off_diagonal(F.base(), gamma_coeffs(F, coords(p)));
            CHECK((n == 0) == perm);
        }
    }
}

TEST_CASE("splitting analysis") {
    ExtField F8{BaseField{3}};
    const BaseField& B8 = F8.base();

    SUBCASE("rejects zero pairs") {
        CHECK_THROWS_AS(split_analysis(F8, {0, 0, 1, 0}), Error);
        CHECK_THROWS_AS(split_analysis(F8, {1, 0, 0, 0}), Error);
    }

    SUBCASE("degenerate-conic family detected at odd degree, rational at even") {
        bool checked = false;
        for (FqElem b = 1; b < F8.q() && !checked; ++b) {
            for (FqElem a : B8.solve_quadratic(1, b, B8.mul(F8.k(), B8.mul(b, b)) ^ b)) {
                CaseTuple t{a, b, FqElem(a ^ b ^ 1), b};
                if ((t.A == 0 && t.B == 0) || (t.C == 0 && t.D == 0)) continue;
                SplitReport r = split_analysis(F8, t);
                CHECK(r.type == SplitType::not_split_nonrational);
                REQUIRE(r.witness.has_value());
                CHECK(r.witness->case_id == 5);
                checked = true;
                break;
            }
        }
        CHECK(checked);

        ExtField F16{BaseField{4}};
        const BaseField& B16 = F16.base();
        checked = false;
        for (FqElem b = 1; b < F16.q() && !checked; ++b) {
            for (FqElem a : B16.solve_quadratic(1, b, B16.mul(F16.k(), B16.mul(b, b)) ^ b)) {
                CaseTuple t{a, b, FqElem(a ^ b ^ 1), b};
                if ((t.A == 0 && t.B == 0) || (t.C == 0 && t.D == 0)) continue;
                SplitReport r = split_analysis(F16, t);
                CHECK(r.type == SplitType::has_rational_component);
                checked = true;
                break;
            }
        }
        CHECK(checked);
    }

    SUBCASE("agreement with the classifier on the full q = 8 sweep") {
        for (std::uint32_t pa = 1; pa < 64; ++pa) {
            for (std::uint32_t pb = 1; pb < 64; ++pb) {
                PairAB p{F8.unpack(pa), F8.unpack(pb)};
                if (p.alpha.is_zero() || p.beta.is_zero()) continue;
                SplitReport r = split_analysis(F8, coords(p));
                bool cond = classify(F8, p).condition != Condition::none;
                CHECK((r.type == SplitType::not_split_nonrational) == cond);
                if (r.witness) CHECK(case_predicate(F8, r.witness->case_id, coords(p)));
            }
        }
    }

    SUBCASE("reports serialize to JSON") {
        SplitReport r = split_analysis(F8, {6, 0, 5, 0});
        std::string json = to_json(r);
        CHECK(json.find("not_split_nonrational") != std::string::npos);
        CHECK(json.find("\"case_id\":1") != std::string::npos);
        CHECK(json.find("xi") != std::string::npos);
    }
}
