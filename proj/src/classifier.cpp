#include "classifier.hpp"

#include <algorithm>
#include <optional>
#include <thread>

namespace permtri {

const char* to_string(Condition c) {
    switch (c) {
        case Condition::cond1: return "COND1";
        case Condition::cond2: return "COND2";
        default: return "NONE";
    }
}

bool cond1(const ExtField& F, const PairAB& p) {
    require_nonzero(p);
    if (F.mul(p.beta, p.alpha) != F.frobenius(p.alpha)) return false;
    const BaseField& B = F.base();
    return B.trace(1 ^ B.inv(F.norm(p.alpha))) == 0;
}

bool cond2(const ExtField& F, const PairAB& p) {
    require_nonzero(p);
    const BaseField& B = F.base();
    FqElem na = F.norm(p.alpha);
    FqElem nb = F.norm(p.beta);
    Fq2 lhs = F.add(F.mul(p.beta, F.from_base(1 ^ na ^ nb)), F.sq(F.frobenius(p.alpha)));
    if (!lhs.is_zero()) return false;
    if (nb == 1) return false;
    return B.trace(B.mul(nb, B.inv(na))) == 0;
}

namespace {

using MatchResult = std::optional<CaseParams>;

MatchResult case1(const ExtField& F, const CaseTuple& t) {
    if (t.B != 0 || t.D != 0 || t.A == 0 || t.C == 0) return {};
    const BaseField& B = F.base();
    for (FqElem xi : B.solve_quadratic(1, 1, t.A)) {
        if (xi == 0 || xi == 1) continue;
        if (B.mul(xi, xi) != t.C) continue;
        if (B.trace(B.mul(xi, B.inv(xi ^ 1))) != 0) return {};
        return CaseParams{1, xi, 0, 0, t};
    }
    return {};
}

MatchResult case2(const ExtField& F, const CaseTuple& t) {
    const BaseField& B = F.base();
    if (t.D == 0) return {};
    FqElem xi = B.quartic_root(t.C);
    FqElem eta = B.quartic_root(t.D);
    FqElem kbar = B.quartic_root(F.k());
    FqElem eta2 = B.mul(eta, eta);
    FqElem w = B.mul(eta2, kbar) ^ B.mul(xi, eta) ^ B.mul(xi, xi) ^ 1;
    if (w == 0 || w == eta2) return {};
    FqElem root = B.mul(eta, kbar) ^ eta ^ xi;
    if (t.A != B.mul(B.mul(root, root), w)) return {};
    if (t.B != B.mul(eta2, w)) return {};
    FqElem b2 = B.mul(t.B, t.B);
    FqElem d2 = B.mul(t.D, t.D);
    FqElem arg = B.mul(t.B, B.inv(t.D)) ^ 1 ^ B.inv(d2) ^ B.mul(t.D, B.inv(b2));
    if (B.trace(arg) != 1) return {};
    return CaseParams{2, xi, eta, kbar, t};
}

MatchResult case3(const ExtField& F, const CaseTuple& t) {
    if (t.B != 0 || t.D != 0 || t.C != 1 || t.A == 0) return {};
    const BaseField& B = F.base();
    if (B.trace(1 ^ B.inv(t.A)) != 0) return {};
    return CaseParams{3, 0, 0, 0, t};
}

MatchResult case4(const ExtField& F, const CaseTuple& t) {
    const BaseField& B = F.base();
    if (t.D == 0 || t.B == 0 || t.B == t.D) return {};
    if ((B.mul(F.k(), B.mul(t.D, t.D)) ^ B.mul(t.C, t.C) ^ B.mul(t.C, t.D) ^ 1) != 0) return {};
    if (t.A != B.mul(B.mul(t.B, t.C ^ t.D ^ 1), B.inv(t.D))) return {};
    if (B.trace(1 ^ B.mul(t.D, B.inv(B.mul(t.B, t.B)))) != 0) return {};
    return CaseParams{4, 0, 0, 0, t};
}

MatchResult case5(const ExtField& F, const CaseTuple& t) {
    if (F.m() % 2 == 0) return {};
    if (t.B == 0 || t.D != t.B) return {};
    if (t.C != (t.A ^ t.B ^ 1)) return {};
    const BaseField& B = F.base();
    FqElem lhs = B.mul(t.A, t.A) ^ B.mul(t.A, t.B) ^ B.mul(F.k(), B.mul(t.B, t.B)) ^ t.B;
    if (lhs != 0) return {};
    return CaseParams{5, 0, 0, 0, t};
}

} // namespace

std::optional<CaseParams> case_match(const ExtField& F, int case_id, const CaseTuple& t) {
    switch (case_id) {
        case 1: return case1(F, t);
        case 2: return case2(F, t);
        case 3: return case3(F, t);
        case 4: return case4(F, t);
        case 5: return case5(F, t);
        default: raise(Errc::bad_argument, "case_id must be in 1..5");
    }
}

std::vector<CaseTuple> case_generate(const ExtField& F, int case_id) {
    const BaseField& B = F.base();
    std::uint32_t q = F.q();
    std::vector<CaseTuple> out;
    switch (case_id) {
        case 1:
            for (FqElem xi = 2; xi < q; ++xi) {
                if (B.trace(B.mul(xi, B.inv(xi ^ 1))) != 0) continue;
                out.push_back({FqElem(B.mul(xi, xi) ^ xi), 0, B.mul(xi, xi), 0});
            }
            break;
        case 2: {
            FqElem kbar = B.quartic_root(F.k());
            for (FqElem xi = 0; xi < q; ++xi) {
                for (FqElem eta = 1; eta < q; ++eta) {
                    FqElem eta2 = B.mul(eta, eta);
                    FqElem w = B.mul(eta2, kbar) ^ B.mul(xi, eta) ^ B.mul(xi, xi) ^ 1;
                    if (w == 0 || w == eta2) continue;
                    FqElem root = B.mul(eta, kbar) ^ eta ^ xi;
                    CaseTuple t{B.mul(B.mul(root, root), w), B.mul(eta2, w),
                                B.pow(xi, 4), B.pow(eta, 4)};
                    FqElem b2 = B.mul(t.B, t.B);
                    FqElem d2 = B.mul(t.D, t.D);
                    FqElem arg = B.mul(t.B, B.inv(t.D)) ^ 1 ^ B.inv(d2) ^ B.mul(t.D, B.inv(b2));
                    if (B.trace(arg) == 1) out.push_back(t);
                }
            }
            break;
        }
        case 3:
            for (FqElem a = 1; a < q; ++a)
                if (B.trace(1 ^ B.inv(a)) == 0) out.push_back({a, 0, 1, 0});
            break;
        case 4:
            for (FqElem d = 1; d < q; ++d) {
                FqElem kd2 = B.mul(F.k(), B.mul(d, d));
                for (FqElem c = 0; c < q; ++c) {
                    if ((kd2 ^ B.mul(c, c) ^ B.mul(c, d) ^ 1) != 0) continue;
                    for (FqElem b = 1; b < q; ++b) {
                        if (b == d) continue;
                        if (B.trace(1 ^ B.mul(d, B.inv(B.mul(b, b)))) != 0) continue;
                        out.push_back({B.mul(B.mul(b, FqElem(c ^ d ^ 1)), B.inv(d)), b, c, d});
                    }
                }
            }
            break;
        case 5:
            if (F.m() % 2 == 0) break;
            for (FqElem b = 1; b < q; ++b) {
                FqElem rhs = B.mul(F.k(), B.mul(b, b)) ^ b;
                for (FqElem a : B.solve_quadratic(1, b, rhs))
                    out.push_back({a, b, FqElem(a ^ b ^ 1), b});
            }
            break;
        default:
            raise(Errc::bad_argument, "case_id must be in 1..5");
    }
    return out;
}

Classification classify(const ExtField& F, const PairAB& p) {
    require_nonzero(p);
    if (cond1(F, p)) {
        int c = p.beta.in_base() ? 3 : (p.alpha.b != p.beta.b ? 4 : 5);
        return {Condition::cond1, c};
    }
    if (cond2(F, p)) return {Condition::cond2, p.beta.in_base() ? 1 : 2};
    return {Condition::none, 0};
}

namespace {

// One worker's pass over a range of packed alpha values.
struct SweepState {
    std::vector<std::uint64_t> pairs;
    EnumSummary summary;
};

void sweep_range(const ExtField& F, EnumMode mode, std::uint32_t lo, std::uint32_t hi,
                 SweepState& st) {
    const BaseField& B = F.base();
    std::uint32_t qsq = std::uint32_t(1) << (2 * F.m());

    MuPermTester mu_test(F);
    std::optional<PpBruteTester> brute;
    if (mode == EnumMode::bruteforce) brute.emplace(F);

    for (std::uint32_t pa = lo; pa < hi; ++pa) {
        Fq2 alpha = F.unpack(pa);
        if (alpha.is_zero()) continue;
        Fq2 frob_a = F.frobenius(alpha);
        FqElem na = F.norm(alpha);
        FqElem inv_na = B.inv(na);
        bool trace1_ok = B.trace(1 ^ inv_na) == 0;
        Fq2 a2q = F.sq(frob_a);
        for (std::uint32_t pb = 1; pb < qsq; ++pb) {
            Fq2 beta = F.unpack(pb);
            if (beta.is_zero()) continue;
            PairAB pair{alpha, beta};

            bool c1 = trace1_ok && F.mul(beta, alpha) == frob_a;
            bool c2 = false;
            if (!c1) {
                FqElem nb = F.norm(beta);
                Fq2 lhs = F.add(F.mul(beta, F.from_base(1 ^ na ^ nb)), a2q);
                c2 = lhs.is_zero() && nb != 1 && B.trace(B.mul(nb, inv_na)) == 0;
            }
            bool by_condition = c1 || c2;

            bool verdict;
            switch (mode) {
                case EnumMode::mu: verdict = mu_test(pair); break;
                case EnumMode::bruteforce: verdict = (*brute)(pair); break;
                default: verdict = by_condition; break;
            }

            ++st.summary.total;
            if (c1) ++st.summary.cond1_count;
            if (c2) ++st.summary.cond2_count;
            if (verdict != by_condition) ++st.summary.mismatches;
            if (verdict) {
                ++st.summary.pp_count;
                st.pairs.push_back(std::uint64_t(pa) << 32 | pb);
            }
        }
    }
}

} // namespace

std::vector<std::uint64_t> enumerate_packed(const ExtField& F, EnumMode mode,
                                            unsigned workers, EnumSummary& summary) {
    std::uint32_t qsq = std::uint32_t(1) << (2 * F.m());
    if (mode == EnumMode::bruteforce && F.q() > 256)
        raise(Errc::resource_limit, "brute-force enumeration limited to q <= 2^8");
    F.mu();  // materialize shared caches before the workers start

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, 64);

    std::vector<SweepState> states(workers);
    if (workers == 1) {
        sweep_range(F, mode, 1, qsq, states[0]);
    } else {
        std::vector<std::thread> threads;
        std::uint32_t span = (qsq - 1 + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::uint32_t lo = 1 + w * span;
            std::uint32_t hi = std::min(qsq, lo + span);
            if (lo >= hi) break;
            threads.emplace_back(
                [&F, mode, lo, hi, &st = states[w]] { sweep_range(F, mode, lo, hi, st); });
        }
        for (auto& t : threads) t.join();
    }

    std::vector<std::uint64_t> pairs;
    summary = EnumSummary{};
    for (auto& st : states) {
        pairs.insert(pairs.end(), st.pairs.begin(), st.pairs.end());
        summary.total += st.summary.total;
        summary.pp_count += st.summary.pp_count;
        summary.cond1_count += st.summary.cond1_count;
        summary.cond2_count += st.summary.cond2_count;
        summary.mismatches += st.summary.mismatches;
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<PairAB> enumerate_pp_pairs(const ExtField& F, EnumMode mode, unsigned workers) {
    EnumSummary summary;
    auto packed = enumerate_packed(F, mode, workers, summary);
    std::vector<PairAB> out;
    out.reserve(packed.size());
    for (std::uint64_t pv : packed)
        out.push_back({F.unpack(std::uint32_t(pv >> 32)), F.unpack(std::uint32_t(pv))});
    return out;
}

} // namespace permtri
