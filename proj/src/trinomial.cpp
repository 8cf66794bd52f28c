#include "trinomial.hpp"

#include <numeric>

namespace permtri {

Fq2 eval_f(const ExtField& F, const PairAB& p, Fq2 x) {
    require_nonzero(p);
    Fq2 t1 = F.mul(p.alpha, F.pow(x, F.exp_main()));
    Fq2 t2 = F.mul(p.beta, F.pow(x, F.exp_low()));
    return F.add(x, F.add(t1, t2));
}

GValue eval_g(const ExtField& F, const PairAB& p, Fq2 u) {
    require_nonzero(p);
    if (!F.on_mu(u)) raise(Errc::not_on_mu, "argument of g must satisfy u^{q+1} = 1");
    Fq2 u2 = F.sq(u);
    Fq2 u3 = F.mul(u2, u);
    Fq2 den = F.add(F.mul(p.beta, u3), F.add(u, p.alpha));
    if (den.is_zero()) return {};
    Fq2 num = F.add(F.mul(F.frobenius(p.alpha), u3), F.add(u2, F.frobenius(p.beta)));
    return {true, F.mul(num, F.inv(den))};
}

MuPermTester::MuPermTester(const ExtField& F) : F_(F) {
    const auto& mu = F.mu();
    mu2_.reserve(mu.size());
    mu3_.reserve(mu.size());
    for (Fq2 u : mu) {
        Fq2 u2 = F.sq(u);
        mu2_.push_back(u2);
        mu3_.push_back(F.mul(u2, u));
    }
    seen_.assign(mu.size(), 0);
}

bool MuPermTester::run(const PairAB& p, bool& had_pole) {
    const auto& mu = F_.mu();
    Fq2 aq = F_.frobenius(p.alpha);
    Fq2 bq = F_.frobenius(p.beta);
    ++epoch_;
    had_pole = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        Fq2 den = F_.add(F_.mul(p.beta, mu3_[i]), F_.add(mu[i], p.alpha));
        if (den.is_zero()) {
            had_pole = true;
            return false;
        }
        Fq2 num = F_.add(F_.mul(aq, mu3_[i]), F_.add(mu2_[i], bq));
        Fq2 v = F_.mul(num, F_.inv(den));
        std::uint32_t idx = F_.mu_index(v);
        if (idx == ExtField::npos) raise(Errc::internal, "g left mu_{q+1}");
        if (seen_[idx] == epoch_) return false;
        seen_[idx] = epoch_;
    }
    return true;
}

bool MuPermTester::operator()(const PairAB& p) {
    bool pole = false;
    return run(p, pole);
}

bool is_perm_mu(const ExtField& F, const PairAB& p) {
    require_nonzero(p);
    MuPermTester tester(F);
    return tester(p);
}

PpBruteTester::PpBruteTester(const ExtField& F) : F_(F) {
    if (2 * F.m() > 16)
        raise(Errc::resource_limit, "brute-force permutation test limited to q <= 2^8");
    F.pow_main_table();
    seen_.assign(std::size_t(1) << (2 * F.m()), 0);
}

bool PpBruteTester::operator()(const PairAB& p) {
    const auto& pmain = F_.pow_main_table();
    const auto& plow = F_.pow_low_table();
    ++epoch_;
    // pack() is coordinatewise, so xor of packed values is field addition
    for (std::uint32_t v = 0; v < pmain.size(); ++v) {
        std::uint32_t fx = v ^ F_.pack(F_.mul(p.alpha, F_.unpack(pmain[v]))) ^
                           F_.pack(F_.mul(p.beta, F_.unpack(plow[v])));
        if (seen_[fx] == epoch_) return false;
        seen_[fx] = epoch_;
    }
    return true;
}

bool is_pp_bruteforce(const ExtField& F, const PairAB& p) {
    require_nonzero(p);
    PpBruteTester tester(F);
    return tester(p);
}

bool is_pp_general_shape(const BaseField& F, const GeneralTrinomialSpec& spec) {
    std::uint32_t qm1 = F.q() - 1;
    if (spec.d == 0 || qm1 % spec.d != 0)
        raise(Errc::bad_divisor, "d must divide q - 1");
    if (spec.r == 0) raise(Errc::bad_argument, "r must be positive");
    std::uint32_t s = qm1 / spec.d;
    if (std::gcd(spec.r, std::uint64_t(s)) != 1) return false;

    // mu_d through a generator of GF(q)*.
    FqElem z = F.pow(F.generator(), s);
    std::vector<std::uint8_t> seen(F.q(), 0);
    FqElem u = 1;
    for (std::uint32_t j = 0; j < spec.d; ++j) {
        FqElem hu = 0;
        for (std::size_t t = spec.h.size(); t-- > 0;) hu = F.mul(hu, u) ^ spec.h[t];
        if (hu == 0) return false;  // image leaves mu_d
        FqElem w = F.mul(F.pow(u, spec.r % qm1), F.pow(hu, s));  // u^{q-1} = 1 on mu_d
        if (seen[w]) return false;
        seen[w] = 1;
        u = F.mul(u, z);
    }
    return true;
}

} // namespace permtri
