#ifndef PERMTRI_CLASSIFIER_HPP
#define PERMTRI_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trinomial.hpp"

namespace permtri {

enum class Condition { none, cond1, cond2 };

const char* to_string(Condition c);

/// Coordinates of a pair: alpha = A + iB, beta = C + iD.
struct CaseTuple {
    FqElem A = 0, B = 0, C = 0, D = 0;

    friend bool operator==(const CaseTuple&, const CaseTuple&) = default;
};

inline CaseTuple coords(const PairAB& p) { return {p.alpha.a, p.alpha.b, p.beta.a, p.beta.b}; }
inline PairAB pair_from(const CaseTuple& t) { return {{t.A, t.B}, {t.C, t.D}}; }

/// beta = alpha^{q-1} and Tr(1 + 1/alpha^{q+1}) = 0.
/// The power identity is tested as beta * alpha = alpha^q, avoiding inversion.
bool cond1(const ExtField& F, const PairAB& p);

/// beta(1 + alpha^{q+1} + beta^{q+1}) + alpha^{2q} = 0, beta^{q+1} != 1,
/// and Tr(beta^{q+1} / alpha^{q+1}) = 0.
bool cond2(const ExtField& F, const PairAB& p);

/// Recovered free parameters of a splitting family member.
/// xi/eta/kbar are meaningful only where the family uses them.
struct CaseParams {
    int case_id = 0;
    FqElem xi = 0;
    FqElem eta = 0;
    FqElem kbar = 0;
    CaseTuple coords;
};

/// Membership in one of the five parameterized splitting families, with the
/// recovered parameters on success. case_id in 1..5; coordinates with
/// alpha = 0 or beta = 0 never match.
std::optional<CaseParams> case_match(const ExtField& F, int case_id, const CaseTuple& t);

inline bool case_predicate(const ExtField& F, int case_id, const CaseTuple& t) {
    return case_match(F, case_id, t).has_value();
}

/// All tuples of the given family, by direct substitution of the closed-form
/// parameterization over its free variables. Deterministic order.
std::vector<CaseTuple> case_generate(const ExtField& F, int case_id);

struct Classification {
    Condition condition = Condition::none;
    int case_id = 0;  // 0 when condition == none
};

/// Condition verdict plus the matching splitting case:
/// cond2 with beta in GF(q) -> case 1, otherwise case 2;
/// cond1 with beta in GF(q) -> case 3, else case 4 when alpha + alpha^q
/// differs from beta + beta^q (i.e. B != D) and case 5 when they agree.
Classification classify(const ExtField& F, const PairAB& p);

enum class EnumMode { bruteforce, mu, condition };

struct EnumSummary {
    std::uint64_t total = 0;       // pairs with alpha*beta != 0
    std::uint64_t pp_count = 0;    // pairs passing the selected mode
    std::uint64_t cond1_count = 0;
    std::uint64_t cond2_count = 0;
    std::uint64_t mismatches = 0;  // selected mode vs condition disagreements
};

/// Sweeps every pair with alpha*beta != 0 and returns those passing the
/// selected test, packed as (pack(alpha) << 32) | pack(beta), sorted.
/// The condition verdict is always computed alongside, so the summary can
/// report cross-mode mismatches. workers = 0 uses the hardware parallelism.
std::vector<std::uint64_t> enumerate_packed(const ExtField& F, EnumMode mode,
                                            unsigned workers, EnumSummary& summary);

/// Convenience wrapper returning pairs.
std::vector<PairAB> enumerate_pp_pairs(const ExtField& F, EnumMode mode, unsigned workers = 0);

} // namespace permtri

#endif
