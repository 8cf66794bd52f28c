#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "permtri.h"

namespace {

struct Tower {
    permtri_tower* t = nullptr;
    Tower(uint32_t m, const char* mod = nullptr, const char* k = nullptr) {
        REQUIRE(permtri_tower_create(m, mod, k, &t) == PERMTRI_OK);
    }
    ~Tower() { permtri_tower_free(t); }
    operator permtri_tower*() const { return t; }
};

struct CStr {
    char* s = nullptr;
    ~CStr() { permtri_string_free(s); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_CASE("tower lifecycle and defaults") {
    Tower t(3);
    CHECK(permtri_tower_m(t) == 3);
    CHECK(permtri_tower_q(t) == 8);
    CHECK(permtri_tower_modulus(t) == 0xb);
    CHECK(permtri_tower_k(t) == 1);

    permtri_tower* out = nullptr;
    CHECK(permtri_tower_create(3, "0xf", nullptr, &out) == PERMTRI_ERR_REDUCIBLE_MODULUS);
    CHECK(permtri_tower_create(3, "0x13", nullptr, &out) == PERMTRI_ERR_DEGREE_MISMATCH);
    CHECK(permtri_tower_create(3, nullptr, "0x2", &out) == PERMTRI_ERR_BAD_TRACE);
    CHECK(permtri_tower_create(3, "zz", nullptr, &out) == PERMTRI_ERR_PARSE);
    CHECK(permtri_tower_create(99, nullptr, nullptr, &out) == PERMTRI_ERR_BAD_ARG);
    permtri_tower_free(nullptr);  // must be a no-op
}

TEST_CASE("status strings and version") {
    CHECK(std::string(permtri_strerror(PERMTRI_OK)) == "ok");
    CHECK(permtri_strerror(PERMTRI_ERR_BAD_TRACE) != nullptr);
    CHECK(permtri_version() != nullptr);
}

TEST_CASE("scalar arithmetic through the C surface") {
    Tower t(3);
    uint32_t r = 0;
    CHECK(permtri_fq_mul(t, 2, 4, &r) == PERMTRI_OK);
    CHECK(r == 3);
    CHECK(permtri_fq_inv(t, 2, &r) == PERMTRI_OK);
    CHECK(r == 5);
    CHECK(permtri_fq_inv(t, 0, &r) == PERMTRI_ERR_DIVISION_BY_ZERO);
    CHECK(permtri_fq_mul(t, 8, 1, &r) == PERMTRI_ERR_BAD_ARG);  // out of range

    int tr = -1;
    CHECK(permtri_fq_trace(t, 1, &tr) == PERMTRI_OK);
    CHECK(tr == 1);

    uint32_t roots[2];
    int count = 0;
    CHECK(permtri_fq_solve_quadratic(t, 1, 1, 0, roots, &count) == PERMTRI_OK);
    CHECK(count == 2);
    CHECK(roots[0] == 0);
    CHECK(roots[1] == 1);
    CHECK(permtri_fq_solve_quadratic(t, 0, 0, 1, roots, &count) ==
          PERMTRI_ERR_DEGENERATE_EQUATION);

    uint32_t sq = 0;
    CHECK(permtri_fq_sqrt(t, 5, &sq) == PERMTRI_OK);
    CHECK(permtri_fq_mul(t, sq, sq, &r) == PERMTRI_OK);
    CHECK(r == 5);
    CHECK(permtri_fq_quartic_root(t, 5, &sq) == PERMTRI_OK);
    CHECK(permtri_fq_pow(t, sq, 4, &r) == PERMTRI_OK);
    CHECK(r == 5);
}

TEST_CASE("extension arithmetic through the C surface") {
    Tower t(3);
    uint32_t a = 0, b = 0;
    CHECK(permtri_fq2_mul(t, 0, 1, 0, 1, &a, &b) == PERMTRI_OK);  // i * i
    CHECK(a == permtri_tower_k(t));
    CHECK(b == 1);

    CHECK(permtri_fq2_pow(t, 0, 1, 8, &a, &b) == PERMTRI_OK);  // i^q
    CHECK(a == 1);
    CHECK(b == 1);

    CHECK(permtri_fq2_frobenius(t, 3, 4, &a, &b) == PERMTRI_OK);
    CHECK(a == 7);
    CHECK(b == 4);

    uint32_t n = 0;
    CHECK(permtri_fq2_norm(t, 0, 1, &n) == PERMTRI_OK);
    CHECK(n == permtri_tower_k(t));

    CHECK(permtri_fq2_inv(t, 0, 0, &a, &b) == PERMTRI_ERR_DIVISION_BY_ZERO);
    CHECK(permtri_fq2_add(t, 3, 4, 5, 6, &a, &b) == PERMTRI_OK);
    CHECK(a == 6);
    CHECK(b == 2);
}

TEST_CASE("pair verdicts through the C surface") {
    Tower t(3);

    int cond = -1, case_id = -1;
    CHECK(permtri_classify(t, 6, 0, 5, 0, &cond, &case_id) == PERMTRI_OK);
    CHECK(cond == 2);
    CHECK(case_id == 1);
    CHECK(permtri_classify(t, 0, 0, 5, 0, &cond, &case_id) == PERMTRI_ERR_ZERO_COEFFICIENT);

    int verdict = -1;
    CHECK(permtri_is_perm_mu(t, 1, 0, 1, 0, &verdict) == PERMTRI_OK);
    CHECK(verdict == 1);
    CHECK(permtri_is_pp_bruteforce(t, 1, 0, 1, 0, &verdict) == PERMTRI_OK);
    CHECK(verdict == 1);

    uint32_t fa = 1, fb = 1;
    CHECK(permtri_eval_f(t, 1, 0, 1, 0, 0, 0, &fa, &fb) == PERMTRI_OK);
    CHECK(fa == 0);
    CHECK(fb == 0);

    int defined = -1;
    uint32_t ga = 0, gb = 0;
    CHECK(permtri_eval_g(t, 1, 0, 1, 0, 1, 0, &defined, &ga, &gb) == PERMTRI_OK);
    CHECK(defined == 1);
    CHECK(permtri_eval_g(t, 1, 0, 1, 0, 2, 0, &defined, &ga, &gb) == PERMTRI_ERR_NOT_ON_MU);
}

TEST_CASE("curve analysis through the C surface") {
    Tower t(3);
    uint32_t gamma[9];
    CHECK(permtri_gamma_coeffs(t, 1, 0, 1, 0, gamma) == PERMTRI_OK);
    CHECK(gamma[3 * 2 + 2] == 1);

    uint64_t count = 99;
    CHECK(permtri_count_points_off_diagonal(t, 1, 0, 1, 0, &count) == PERMTRI_OK);
    CHECK(count == 0);

    CStr json;
    CHECK(permtri_split_analysis(t, 6, 0, 5, 0, &json.s) == PERMTRI_OK);
    std::string s = json.s;
    CHECK(s.find("not_split_nonrational") != std::string::npos);
    CHECK(permtri_split_analysis(t, 0, 0, 1, 0, &json.s) == PERMTRI_ERR_ZERO_COEFFICIENT);
}

TEST_CASE("verify-pair report") {
    Tower t(3);
    CStr json;
    int consistent = 0;
    REQUIRE(permtri_verify_pair(t, 1, 0, 1, 0, &json.s, &consistent) == PERMTRI_OK);
    CHECK(consistent == 1);
    std::string s = json.s;
    CHECK(s.find("\"condition\": \"COND1\"") != std::string::npos);
    CHECK(s.find("\"case_id\": 3") != std::string::npos);
    CHECK(s.find("\"consistent\": true") != std::string::npos);
}

TEST_CASE("enumeration artifact determinism") {
    Tower t(3);
    std::string p1 = "/tmp/permtri_capi_w1.csv";
    std::string p2 = "/tmp/permtri_capi_w3.csv";

    CStr s1, s2;
    REQUIRE(permtri_enumerate(t, "mu", 1, "csv", p1.c_str(), &s1.s) == PERMTRI_OK);
    REQUIRE(permtri_enumerate(t, "mu", 3, "csv", p2.c_str(), &s2.s) == PERMTRI_OK);
    CHECK(slurp(p1) == slurp(p2));
    CHECK(std::string(s1.s) == std::string(s2.s));
    CHECK(std::string(s1.s).find("\"mismatches\": 0") != std::string::npos);

    std::string head = slurp(p1).substr(0, slurp(p1).find('\n'));
    CHECK(head == "q,alpha_hex_a,alpha_hex_b,beta_hex_a,beta_hex_b,condition,case_id");

    // json artifact carries summary + pairs
    std::string pj = "/tmp/permtri_capi.json";
    CStr s3;
    REQUIRE(permtri_enumerate(t, "condition", 1, "json", pj.c_str(), &s3.s) == PERMTRI_OK);
    std::string doc = slurp(pj);
    CHECK(doc.find("\"pairs\"") != std::string::npos);
    CHECK(doc.find("\"pp_count\": 63") != std::string::npos);

    CHECK(permtri_enumerate(t, "nonsense", 1, "csv", nullptr, &s3.s) == PERMTRI_ERR_BAD_ARG);
    std::remove(p1.c_str());
    std::remove(p2.c_str());
    std::remove(pj.c_str());
}

TEST_CASE("enumeration budget guard") {
    Tower t(7);  // q = 128: a brute-force sweep would need ~2^42 evaluations
    CStr s;
    CHECK(permtri_enumerate(t, "bruteforce", 1, "csv", nullptr, &s.s) ==
          PERMTRI_ERR_RESOURCE_LIMIT);

    // PERMTRI_BUDGET overrides the default allowance in both directions
    setenv("PERMTRI_BUDGET", "1", 1);
    Tower small(3);
    CStr s2;
    CHECK(permtri_enumerate(small, "condition", 1, "csv", nullptr, &s2.s) ==
          PERMTRI_ERR_RESOURCE_LIMIT);
    unsetenv("PERMTRI_BUDGET");
    CHECK(permtri_enumerate(small, "condition", 1, "csv", nullptr, &s2.s) == PERMTRI_OK);
}

TEST_CASE("symbolic reports are deterministic") {
    CStr first, second;
    int ok1 = 0, ok2 = 0;
    REQUIRE(permtri_symbolic_run("chains", &first.s, &ok1) == PERMTRI_OK);
    REQUIRE(permtri_symbolic_run("chains", &second.s, &ok2) == PERMTRI_OK);
    CHECK(ok1 == 1);
    CHECK(ok2 == 1);
    CHECK(std::string(first.s) == std::string(second.s));
}

TEST_CASE("symbolic suites through the C surface") {
    CStr json;
    int ok = 0;
    REQUIRE(permtri_symbolic_run("curve", &json.s, &ok) == PERMTRI_OK);
    CHECK(ok == 1);
    std::string s = json.s;
    CHECK(s.find("curve_coefficients") != std::string::npos);
    CHECK(permtri_symbolic_run("bogus", &json.s, &ok) == PERMTRI_ERR_BAD_ARG);
}
