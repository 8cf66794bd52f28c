#ifndef PERMTRI_TRINOMIAL_HPP
#define PERMTRI_TRINOMIAL_HPP

#include <cstdint>
#include <vector>

#include "fields.hpp"

namespace permtri {

/// Coefficient pair of f(x) = x + alpha*x^{q(q-1)+1} + beta*x^{2(q-1)+1}.
/// Both entries must be nonzero.
struct PairAB {
    Fq2 alpha;
    Fq2 beta;

    friend bool operator==(const PairAB&, const PairAB&) = default;
};

inline void require_nonzero(const PairAB& p) {
    if (p.alpha.is_zero() || p.beta.is_zero())
        raise(Errc::zero_coefficient, "alpha and beta must both be nonzero");
}

/// General shape x^r * h(x^{(q-1)/d}) over the base field, d | q-1.
/// r is accepted for any r >= 1: the criterion below does not need an
/// upper bound on r, so none is enforced.
struct GeneralTrinomialSpec {
    std::uint64_t r = 1;
    std::uint32_t d = 1;
    std::vector<FqElem> h;  // h[j] = coefficient of x^j
};

/// Evaluates f at x by square-and-multiply; f(0) = 0.
Fq2 eval_f(const ExtField& F, const PairAB& p, Fq2 x);

/// Value of the fractional map g(u) = (alpha^q u^3 + u^2 + beta^q) / (beta u^3 + u + alpha)
/// on mu_{q+1}. A vanishing denominator is reported as undefined.
struct GValue {
    bool defined = false;
    Fq2 value{};
};

/// Requires u^{q+1} = 1.
GValue eval_g(const ExtField& F, const PairAB& p, Fq2 u);

/// True iff g is defined on all of mu_{q+1} and its q+1 values are distinct.
bool is_perm_mu(const ExtField& F, const PairAB& p);

/// True iff f hits every element of GF(q^2); limited to q <= 2^8.
bool is_pp_bruteforce(const ExtField& F, const PairAB& p);

/// Criterion for x^r h(x^{(q-1)/d}): gcd(r, (q-1)/d) = 1 and
/// u -> u^r h(u)^{(q-1)/d} permutes the d-th roots of unity.
bool is_pp_general_shape(const BaseField& F, const GeneralTrinomialSpec& spec);

/// Reusable mu-permutation tester; holds per-worker scratch so sweeps do
/// not reallocate. Not thread-safe; give each worker its own instance.
class MuPermTester {
public:
    explicit MuPermTester(const ExtField& F);
    bool operator()(const PairAB& p);
    /// As above but also reports whether g had a pole on mu_{q+1}.
    bool run(const PairAB& p, bool& had_pole);

private:
    const ExtField& F_;
    std::vector<Fq2> mu2_, mu3_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
};

/// Reusable brute-force permutation tester over GF(q^2); q <= 2^8.
class PpBruteTester {
public:
    explicit PpBruteTester(const ExtField& F);
    bool operator()(const PairAB& p);

private:
    const ExtField& F_;
    std::vector<std::uint32_t> seen_;
    std::uint32_t epoch_ = 0;
};

} // namespace permtri

#endif
