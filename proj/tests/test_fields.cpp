#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fields.hpp"

using namespace permtri;

namespace {

std::mt19937_64 rng(0x5eedf1e1d5u);

FqElem random_elem(const BaseField& F) { return FqElem(rng() % F.q()); }
FqElem random_nonzero(const BaseField& F) { return FqElem(1 + rng() % (F.q() - 1)); }

Fq2 random_fq2(const ExtField& F) { return {random_elem(F.base()), random_elem(F.base())}; }

} // namespace

TEST_CASE("base field construction") {
    BaseField f3(3);
    CHECK(f3.modulus() == 0xb);  // t^3 + t + 1 has the smallest encoding
    CHECK(f3.q() == 8);

    BaseField explicit3(3, 0xb);
    CHECK(explicit3.q() == 8);

    CHECK_THROWS_AS(BaseField(3, 0xf), Error);   // (t+1)(t^2+1)
    CHECK_THROWS_AS(BaseField(3, 0x13), Error);  // degree 4, not 3
    CHECK_THROWS_AS(BaseField(1), Error);
    CHECK_THROWS_AS(BaseField(25), Error);

    try {
        BaseField(3, 0xf);
        FAIL("reducible modulus accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::reducible_modulus);
    }
    try {
        BaseField(3, 0x13);
        FAIL("degree mismatch accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degree_mismatch);
    }
}

TEST_CASE("GF(8) arithmetic anchors") {
    BaseField F(3);
    CHECK(F.mul(2, 4) == 3);  // t * t^2 = t + 1
    CHECK(F.inv(2) == 5);     // t * (t^2 + 1) = 1
    CHECK(F.mul(2, F.inv(2)) == 1);
    CHECK_THROWS_AS(F.inv(0), Error);

    CHECK(F.trace(0) == 0);
    CHECK(F.trace(1) == 1);
    CHECK(F.trace(2) == 0);
}

TEST_CASE("table and shift-xor multipliers agree") {
    for (unsigned m : {3u, 5u, 8u, 11u, 16u}) {
        BaseField F(m);
        for (int i = 0; i < 1000; ++i) {
            FqElem a = random_elem(F), b = random_elem(F);
            CHECK(F.mul(a, b) == F.mul_shift_xor(a, b));
        }
    }
}

TEST_CASE("field axioms on random triples") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        BaseField F(m);
        for (int i = 0; i < 1000; ++i) {
            FqElem a = random_elem(F), b = random_elem(F), c = random_elem(F);
            CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, FqElem(b ^ c)) == (F.mul(a, b) ^ F.mul(a, c)));
        }
        for (FqElem a = 1; a < F.q(); ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    }
}

TEST_CASE("square, square root and quartic root") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        BaseField F(m);
        for (FqElem z = 0; z < F.q(); ++z) {
            CHECK(F.mul(F.sqrt(z), F.sqrt(z)) == z);
            CHECK(F.pow(F.quartic_root(z), 4) == z);
        }
    }
}

TEST_CASE("trace is linear, Frobenius-invariant and balanced") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        BaseField F(m);
        std::uint32_t zeros = 0;
        for (FqElem z = 0; z < F.q(); ++z) {
            int t = F.trace(z);
            CHECK((t == 0 || t == 1));
            CHECK(F.trace(F.mul(z, z)) == t);
            if (t == 0) ++zeros;
        }
        CHECK(zeros == F.q() / 2);
        for (int i = 0; i < 1000; ++i) {
            FqElem y = random_elem(F), z = random_elem(F);
            CHECK(F.trace(y ^ z) == (F.trace(y) ^ F.trace(z)));
        }
    }
}

TEST_CASE("quadratic solver") {
    BaseField F(3);
    CHECK(F.solve_quadratic(1, 1, 0) == std::vector<FqElem>{0, 1});
    CHECK(F.solve_quadratic(0, 1, 5) == std::vector<FqElem>{5});
    for (FqElem c = 0; c < F.q(); ++c)
        if (F.trace(c) == 1) CHECK(F.solve_quadratic(1, 1, c).empty());
    CHECK_THROWS_AS(F.solve_quadratic(0, 0, 3), Error);

    // b = 0: a unique square root
    auto r = F.solve_quadratic(1, 0, 5);
    REQUIRE(r.size() == 1);
    CHECK(F.mul(r[0], r[0]) == 5);
}

TEST_CASE("quadratic solver root-count law") {
    for (unsigned m : {3u, 4u, 5u, 6u}) {
        BaseField F(m);
        for (int i = 0; i < 1000; ++i) {
            FqElem a = random_nonzero(F), b = random_nonzero(F), c = random_elem(F);
            auto roots = F.solve_quadratic(a, b, c);
            FqElem w = F.mul(F.mul(a, c), F.inv(F.mul(b, b)));
            if (F.trace(w) == 0) {
                REQUIRE(roots.size() == 2);
                CHECK(roots[0] != roots[1]);
            } else {
                CHECK(roots.empty());
            }
            for (FqElem root : roots)
                CHECK((F.mul(a, F.mul(root, root)) ^ F.mul(b, root) ^ c) == 0);
        }
    }
}

TEST_CASE("Artin-Schreier roots at even degree") {
    BaseField F(4);
    for (FqElem w = 0; w < F.q(); ++w) {
        if (F.trace(w) != 0) continue;
        FqElem s = F.artin_schreier_root(w);
        CHECK((F.mul(s, s) ^ s) == w);
    }
}

TEST_CASE("extension tower construction") {
    ExtField F{BaseField{3}};
    CHECK(F.k() == 1);  // the smallest trace-1 element of GF(8)
    CHECK(F.q() == 8);

    CHECK_THROWS_AS(ExtField(BaseField{3}, 2), Error);  // trace(2) = 0

    ExtField F16{BaseField{4}};
    CHECK(F16.base().trace(F16.k()) == 1);
    for (FqElem z = 1; z < F16.k(); ++z) CHECK(F16.base().trace(z) == 0);
}

TEST_CASE("extension arithmetic") {
    for (unsigned m : {3u, 4u, 5u}) {
        ExtField F{BaseField{m}};
        Fq2 i{0, 1};
        CHECK(F.mul(i, i) == Fq2{F.k(), 1});       // i^2 = k + i
        CHECK(F.pow(i, F.q()) == Fq2{1, 1});       // i^q = i + 1
        CHECK(F.frobenius(i) == Fq2{1, 1});
        CHECK(F.norm(i) == F.k());

        for (int t = 0; t < 200; ++t) {
            Fq2 z = random_fq2(F);
            CHECK(F.frobenius(F.frobenius(z)) == z);
            if (!z.is_zero()) {
                CHECK(F.mul(z, F.inv(z)) == F.one());
                CHECK(F.pow(z, std::uint64_t(F.q()) * F.q() - 1) == F.one());
                CHECK(F.base().pow(F.norm(z), F.q() - 1) == 1);
            }
            Fq2 w = random_fq2(F);
            CHECK(F.norm(F.mul(z, w)) == F.base().mul(F.norm(z), F.norm(w)));
        }
        Fq2 a{random_elem(F.base()), 0};
        CHECK(F.frobenius(a) == a);
        CHECK(F.norm(a) == F.base().mul(a.a, a.a));
        CHECK_THROWS_AS(F.inv(Fq2{0, 0}), Error);
    }
}

TEST_CASE("norm-one subgroup") {
    for (unsigned m : {3u, 4u, 5u}) {
        ExtField F{BaseField{m}};
        const auto& mu = F.mu();
        REQUIRE(mu.size() == F.q() + 1);

        std::set<std::uint32_t> packed;
        int in_base = 0;
        for (Fq2 u : mu) {
            packed.insert(F.pack(u));
            CHECK(F.mul(u, F.frobenius(u)) == F.one());  // u^{q+1} = 1
            if (u.in_base()) {
                ++in_base;
                CHECK(u == F.one());
            }
        }
        CHECK(packed.size() == F.q() + 1);  // injectivity of phi on GF(q) u {inf}
        CHECK(in_base == 1);

        CHECK(F.phi(infinity_point) == F.one());
        for (std::uint32_t idx = 0; idx < mu.size(); ++idx)
            CHECK(F.mu_index(mu[idx]) == idx);
        CHECK(F.mu_index(Fq2{2, 0}) == ExtField::npos);  // norm(2) = 4 != 1
    }
}

TEST_CASE("phi at zero in the GF(8) tower") {
    ExtField F{BaseField{3}};
    Fq2 i{0, 1};
    Fq2 expected = F.mul(i, F.inv(F.add(i, F.one())));
    CHECK(F.phi(FqElem{0}) == expected);
    CHECK(F.pow(expected, F.q() + 1) == F.one());
}

TEST_CASE("hex and pair serialization") {
    CHECK(to_hex(0xb) == "0xb");
    CHECK(parse_hex("0xb") == 0xb);
    CHECK(parse_hex("1F") == 0x1f);
    CHECK_THROWS_AS(parse_hex(""), Error);
    CHECK_THROWS_AS(parse_hex("0x"), Error);
    CHECK_THROWS_AS(parse_hex("zz"), Error);
    CHECK_THROWS_AS(parse_hex("0x1ffffffff"), Error);

    CHECK(to_string(Fq2{6, 0}) == "0x6+i*0x0");
    CHECK(parse_fq2("0x6+i*0x5") == Fq2{6, 5});
    CHECK_THROWS_AS(parse_fq2("0x6"), Error);

    for (int i = 0; i < 100; ++i) {
        std::uint32_t v = std::uint32_t(rng());
        CHECK(parse_hex(to_hex(v)) == v);
        Fq2 z{std::uint32_t(rng()) & 0xffffff, std::uint32_t(rng()) & 0xffffff};
        CHECK(parse_fq2(to_string(z)) == z);
    }
}
