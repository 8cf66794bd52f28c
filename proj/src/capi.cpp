#include "permtri.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include <json.hpp>

#include "chains.hpp"
#include "classifier.hpp"
#include "curve.hpp"
#include "derive.hpp"
#include "errors.hpp"
#include "fields.hpp"
#include "trinomial.hpp"

using namespace permtri;

struct permtri_tower {
    ExtField ext;
};

namespace {

constexpr const char* kVersion = "1.0.0";

permtri_status map_errc(Errc code) {
    switch (code) {
        case Errc::bad_argument: return PERMTRI_ERR_BAD_ARG;
        case Errc::parse_error: return PERMTRI_ERR_PARSE;
        case Errc::reducible_modulus: return PERMTRI_ERR_REDUCIBLE_MODULUS;
        case Errc::degree_mismatch: return PERMTRI_ERR_DEGREE_MISMATCH;
        case Errc::bad_trace: return PERMTRI_ERR_BAD_TRACE;
        case Errc::division_by_zero: return PERMTRI_ERR_DIVISION_BY_ZERO;
        case Errc::degenerate_equation: return PERMTRI_ERR_DEGENERATE_EQUATION;
        case Errc::not_on_mu: return PERMTRI_ERR_NOT_ON_MU;
        case Errc::bad_divisor: return PERMTRI_ERR_BAD_DIVISOR;
        case Errc::zero_coefficient: return PERMTRI_ERR_ZERO_COEFFICIENT;
        case Errc::resource_limit: return PERMTRI_ERR_RESOURCE_LIMIT;
        case Errc::non_terminating: return PERMTRI_ERR_NON_TERMINATING;
        case Errc::inexact_division: return PERMTRI_ERR_INEXACT_DIVISION;
        case Errc::zero_degree: return PERMTRI_ERR_ZERO_DEGREE;
        case Errc::io_error: return PERMTRI_ERR_IO;
        default: return PERMTRI_ERR_INTERNAL;
    }
}

template <typename Fn>
permtri_status wrap(Fn&& fn) {
    try {
        fn();
        return PERMTRI_OK;
    } catch (const Error& e) {
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        return PERMTRI_ERR_RESOURCE_LIMIT;
    } catch (...) {
        return PERMTRI_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const ExtField& ext_of(const permtri_tower* t) {
    if (!t) raise(Errc::bad_argument, "null tower handle");
    return t->ext;
}

FqElem checked_fq(const ExtField& F, std::uint32_t v) {
    if (v >= F.q()) raise(Errc::bad_argument, "element out of range for GF(q)");
    return v;
}

Fq2 checked_fq2(const ExtField& F, std::uint32_t a, std::uint32_t b) {
    return {checked_fq(F, a), checked_fq(F, b)};
}

std::uint64_t work_budget() {
    if (const char* env = std::getenv("PERMTRI_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end && end != env && v > 0) return static_cast<std::uint64_t>(v);
    }
    return 50'000'000'000ull;  // 5e10 element operations
}

nlohmann::json pair_record(const ExtField& F, const PairAB& p, const Classification& cls) {
    nlohmann::json j;
    j["q"] = F.q();
    j["alpha_hex_a"] = to_hex(p.alpha.a);
    j["alpha_hex_b"] = to_hex(p.alpha.b);
    j["beta_hex_a"] = to_hex(p.beta.a);
    j["beta_hex_b"] = to_hex(p.beta.b);
    j["condition"] = to_string(cls.condition);
    j["case_id"] = cls.case_id;
    return j;
}

} // namespace

extern "C" {

const char* permtri_strerror(permtri_status status) {
    switch (status) {
        case PERMTRI_OK: return "ok";
        case PERMTRI_ERR_BAD_ARG: return "bad argument";
        case PERMTRI_ERR_PARSE: return "parse error";
        case PERMTRI_ERR_REDUCIBLE_MODULUS: return "modulus is reducible";
        case PERMTRI_ERR_DEGREE_MISMATCH: return "modulus degree mismatch";
        case PERMTRI_ERR_BAD_TRACE: return "tower constant must have trace 1";
        case PERMTRI_ERR_DIVISION_BY_ZERO: return "division by zero";
        case PERMTRI_ERR_DEGENERATE_EQUATION: return "degenerate equation";
        case PERMTRI_ERR_NOT_ON_MU: return "element is not a (q+1)-st root of unity";
        case PERMTRI_ERR_BAD_DIVISOR: return "d must divide q-1";
        case PERMTRI_ERR_ZERO_COEFFICIENT: return "alpha and beta must be nonzero";
        case PERMTRI_ERR_RESOURCE_LIMIT: return "projected work exceeds the budget";
        case PERMTRI_ERR_NON_TERMINATING: return "substitution would not terminate";
        case PERMTRI_ERR_INEXACT_DIVISION: return "polynomial division left a remainder";
        case PERMTRI_ERR_ZERO_DEGREE: return "resultant argument has degree zero";
        case PERMTRI_ERR_IO: return "i/o error";
        case PERMTRI_ERR_INCONSISTENT: return "internal verdicts disagree";
        default: return "internal error";
    }
}

const char* permtri_version(void) { return kVersion; }

permtri_status permtri_tower_create(uint32_t m, const char* modulus_hex, const char* k_hex,
                                    permtri_tower** out) {
    return wrap([&] {
        if (!out) raise(Errc::bad_argument, "null output pointer");
        BaseField base = modulus_hex ? BaseField(m, parse_hex(modulus_hex)) : BaseField(m);
        ExtField ext = k_hex ? ExtField(std::move(base), parse_hex(k_hex))
                             : ExtField(std::move(base));
        *out = new permtri_tower{std::move(ext)};
    });
}

void permtri_tower_free(permtri_tower* tower) { delete tower; }

uint32_t permtri_tower_m(const permtri_tower* t) { return t ? t->ext.m() : 0; }
uint32_t permtri_tower_q(const permtri_tower* t) { return t ? t->ext.q() : 0; }
uint32_t permtri_tower_modulus(const permtri_tower* t) {
    return t ? t->ext.base().modulus() : 0;
}
uint32_t permtri_tower_k(const permtri_tower* t) { return t ? t->ext.k() : 0; }

permtri_status permtri_fq_add(const permtri_tower* t, uint32_t x, uint32_t y, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().add(checked_fq(F, x), checked_fq(F, y));
    });
}

permtri_status permtri_fq_mul(const permtri_tower* t, uint32_t x, uint32_t y, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().mul(checked_fq(F, x), checked_fq(F, y));
    });
}

permtri_status permtri_fq_inv(const permtri_tower* t, uint32_t x, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().inv(checked_fq(F, x));
    });
}

permtri_status permtri_fq_pow(const permtri_tower* t, uint32_t x, uint64_t e, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().pow(checked_fq(F, x), e);
    });
}

permtri_status permtri_fq_sqrt(const permtri_tower* t, uint32_t x, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().sqrt(checked_fq(F, x));
    });
}

permtri_status permtri_fq_quartic_root(const permtri_tower* t, uint32_t x, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().quartic_root(checked_fq(F, x));
    });
}

permtri_status permtri_fq_trace(const permtri_tower* t, uint32_t x, int* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.base().trace(checked_fq(F, x));
    });
}

permtri_status permtri_fq_solve_quadratic(const permtri_tower* t, uint32_t a, uint32_t b,
                                          uint32_t c, uint32_t roots[2], int* count) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        auto rs = F.base().solve_quadratic(checked_fq(F, a), checked_fq(F, b), checked_fq(F, c));
        *count = static_cast<int>(rs.size());
        for (std::size_t i = 0; i < rs.size(); ++i) roots[i] = rs[i];
    });
}

permtri_status permtri_fq2_add(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t ya,
                               uint32_t yb, uint32_t* oa, uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Fq2 r = F.add(checked_fq2(F, xa, xb), checked_fq2(F, ya, yb));
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_fq2_mul(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t ya,
                               uint32_t yb, uint32_t* oa, uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Fq2 r = F.mul(checked_fq2(F, xa, xb), checked_fq2(F, ya, yb));
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_fq2_inv(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t* oa,
                               uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Fq2 r = F.inv(checked_fq2(F, xa, xb));
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_fq2_pow(const permtri_tower* t, uint32_t xa, uint32_t xb, uint64_t e,
                               uint32_t* oa, uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Fq2 r = F.pow(checked_fq2(F, xa, xb), e);
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_fq2_frobenius(const permtri_tower* t, uint32_t xa, uint32_t xb,
                                     uint32_t* oa, uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Fq2 r = F.frobenius(checked_fq2(F, xa, xb));
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_fq2_norm(const permtri_tower* t, uint32_t xa, uint32_t xb, uint32_t* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = F.norm(checked_fq2(F, xa, xb));
    });
}

permtri_status permtri_eval_f(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                              uint32_t bb, uint32_t xa, uint32_t xb, uint32_t* oa, uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        PairAB p{checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)};
        Fq2 r = eval_f(F, p, checked_fq2(F, xa, xb));
        *oa = r.a;
        *ob = r.b;
    });
}

permtri_status permtri_eval_g(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                              uint32_t bb, uint32_t ua, uint32_t ub, int* defined, uint32_t* oa,
                              uint32_t* ob) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        PairAB p{checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)};
        GValue v = eval_g(F, p, checked_fq2(F, ua, ub));
        *defined = v.defined ? 1 : 0;
        *oa = v.value.a;
        *ob = v.value.b;
    });
}

permtri_status permtri_is_perm_mu(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                  uint32_t bb, int* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = is_perm_mu(F, {checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)}) ? 1 : 0;
    });
}

permtri_status permtri_is_pp_bruteforce(const permtri_tower* t, uint32_t aa, uint32_t ab,
                                        uint32_t ba, uint32_t bb, int* out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        *out = is_pp_bruteforce(F, {checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)}) ? 1 : 0;
    });
}

permtri_status permtri_classify(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                uint32_t bb, int* condition, int* case_id) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        Classification c = classify(F, {checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)});
        *condition = c.condition == Condition::none ? 0 : (c.condition == Condition::cond1 ? 1 : 2);
        *case_id = c.case_id;
    });
}

permtri_status permtri_gamma_coeffs(const permtri_tower* t, uint32_t A, uint32_t B, uint32_t C,
                                    uint32_t D, uint32_t gamma[9]) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        CaseTuple tup{checked_fq(F, A), checked_fq(F, B), checked_fq(F, C), checked_fq(F, D)};
        CurveCoeffs c = gamma_coeffs(F, tup);
        for (int j = 0; j < 3; ++j)
            for (int l = 0; l < 3; ++l) gamma[3 * j + l] = c.g[j][l];
    });
}

permtri_status permtri_count_points_off_diagonal(const permtri_tower* t, uint32_t A, uint32_t B,
                                                 uint32_t C, uint32_t D, uint64_t* count) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        CaseTuple tup{checked_fq(F, A), checked_fq(F, B), checked_fq(F, C), checked_fq(F, D)};
        *count = count_points_off_diagonal(F.base(), gamma_coeffs(F, tup));
    });
}

permtri_status permtri_split_analysis(const permtri_tower* t, uint32_t A, uint32_t B, uint32_t C,
                                      uint32_t D, char** json_out) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        CaseTuple tup{checked_fq(F, A), checked_fq(F, B), checked_fq(F, C), checked_fq(F, D)};
        *json_out = dup_string(to_json(split_analysis(F, tup)));
    });
}

permtri_status permtri_verify_pair(const permtri_tower* t, uint32_t aa, uint32_t ab, uint32_t ba,
                                   uint32_t bb, char** json_out, int* consistent) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        PairAB p{checked_fq2(F, aa, ab), checked_fq2(F, ba, bb)};
        require_nonzero(p);

        Classification cls = classify(F, p);
        bool cond_pp = cls.condition != Condition::none;

        MuPermTester mu_test(F);
        bool had_pole = false;
        bool mu_pp = mu_test.run(p, had_pole);

        bool have_brute = 2 * F.m() <= 16;
        bool brute_pp = false;
        if (have_brute) brute_pp = is_pp_bruteforce(F, p);

        CaseTuple tup = coords(p);
        SplitReport split = split_analysis(F, tup);
        std::uint64_t points = count_points_off_diagonal(F.base(), gamma_coeffs(F, tup));

        // The condition <-> permutation equivalence is a theorem for m >= 3;
        // the mu test against brute force and against the point count holds
        // for every tower.
        bool ok = true;
        if (have_brute && brute_pp != mu_pp) ok = false;
        if (!had_pole && (points == 0) != mu_pp) ok = false;
        if (F.m() >= 3) {
            if (cond_pp != mu_pp) ok = false;
            if ((split.type == SplitType::not_split_nonrational) != cond_pp) ok = false;
        }

        nlohmann::json j;
        j["q"] = F.q();
        j["alpha"] = to_string(p.alpha);
        j["beta"] = to_string(p.beta);
        nlohmann::json v;
        v["pp_bruteforce"] = have_brute ? nlohmann::json(brute_pp) : nlohmann::json(nullptr);
        v["perm_mu"] = mu_pp;
        v["g_has_pole"] = had_pole;
        v["condition"] = to_string(cls.condition);
        v["case_id"] = cls.case_id;
        v["split_type"] = to_string(split.type);
        v["points_off_diagonal"] = points;
        j["verdicts"] = v;
        j["consistent"] = ok;
        *json_out = dup_string(j.dump(2));
        if (consistent) *consistent = ok ? 1 : 0;
    });
}

permtri_status permtri_enumerate(const permtri_tower* t, const char* mode_str, uint32_t workers,
                                 const char* format_str, const char* out_path,
                                 char** summary_json) {
    return wrap([&] {
        const ExtField& F = ext_of(t);
        std::string mode_name = mode_str ? mode_str : "condition";
        EnumMode mode;
        if (mode_name == "bruteforce") mode = EnumMode::bruteforce;
        else if (mode_name == "mu") mode = EnumMode::mu;
        else if (mode_name == "condition") mode = EnumMode::condition;
        else raise(Errc::bad_argument, "mode must be bruteforce, mu or condition");

        std::string format = format_str ? format_str : "csv";
        if (format != "csv" && format != "json")
            raise(Errc::bad_argument, "format must be csv or json");

        std::uint64_t qsq_nz = std::uint64_t(F.q()) * F.q() - 1;
        std::uint64_t per_pair = mode == EnumMode::bruteforce ? std::uint64_t(F.q()) * F.q()
                                 : mode == EnumMode::mu       ? F.q() + 1
                                                              : 1;
        std::uint64_t projected = qsq_nz * qsq_nz * per_pair;
        if (projected > work_budget())
            raise(Errc::resource_limit, "projected work exceeds PERMTRI_BUDGET");

        EnumSummary summary;
        auto packed = enumerate_packed(F, mode, workers, summary);

        nlohmann::json pairs = nlohmann::json::array();
        std::string csv = "q,alpha_hex_a,alpha_hex_b,beta_hex_a,beta_hex_b,condition,case_id\n";
        if (out_path) {
            for (std::uint64_t pv : packed) {
                PairAB p{F.unpack(std::uint32_t(pv >> 32)), F.unpack(std::uint32_t(pv))};
                Classification cls = classify(F, p);
                if (format == "json") {
                    pairs.push_back(pair_record(F, p, cls));
                } else {
                    csv += std::to_string(F.q()) + ',' + to_hex(p.alpha.a) + ',' +
                           to_hex(p.alpha.b) + ',' + to_hex(p.beta.a) + ',' + to_hex(p.beta.b) +
                           ',' + to_string(cls.condition) + ',' + std::to_string(cls.case_id) +
                           '\n';
                }
            }
        }

        nlohmann::json jsummary;
        jsummary["q"] = F.q();
        jsummary["mode"] = mode_name;
        jsummary["total_pairs_checked"] = summary.total;
        jsummary["pp_count"] = summary.pp_count;
        jsummary["cond1_count"] = summary.cond1_count;
        jsummary["cond2_count"] = summary.cond2_count;
        jsummary["mismatches"] = summary.mismatches;

        if (out_path) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) raise(Errc::io_error, std::string("cannot open ") + out_path);
            if (format == "csv") {
                out << csv;
            } else {
                nlohmann::json doc;
                doc["summary"] = jsummary;
                doc["pairs"] = pairs;
                out << doc.dump(2) << '\n';
            }
            if (!out.good()) raise(Errc::io_error, std::string("write failed: ") + out_path);
        }
        if (summary_json) *summary_json = dup_string(jsummary.dump(2));
    });
}

permtri_status permtri_symbolic_run(const char* suite_str, char** json_out, int* all_passed) {
    return wrap([&] {
        std::string suite = suite_str ? suite_str : "all";
        std::vector<symbolic::DerivationReport> reports;
        if (suite == "curve" || suite == "all")
            reports.push_back(symbolic::verify_curve_derivation());
        if (suite == "conics" || suite == "all")
            reports.push_back(symbolic::verify_two_conics_obstruction());
        if (suite == "chains" || suite == "all") {
            auto chain_reports = symbolic::verify_case_chains();
            reports.insert(reports.end(), chain_reports.begin(), chain_reports.end());
        }
        if (reports.empty())
            raise(Errc::bad_argument, "suite must be curve, conics, chains or all");

        bool ok = true;
        nlohmann::json j;
        j["suite"] = suite;
        j["reports"] = nlohmann::json::array();
        for (const auto& rep : reports) {
            j["reports"].push_back(nlohmann::json::parse(rep.to_json()));
            ok = ok && rep.passed;
        }
        j["all_passed"] = ok;
        if (json_out) *json_out = dup_string(j.dump(2));
        if (all_passed) *all_passed = ok ? 1 : 0;
    });
}

void permtri_string_free(char* s) { std::free(s); }

} // extern "C"
