#include "curve.hpp"

#include <json.hpp>

namespace permtri {

CurveCoeffs gamma_coeffs(const ExtField& F, const CaseTuple& t) {
    const BaseField& B = F.base();
    FqElem k = F.k();
    FqElem k2 = B.mul(k, k);
    FqElem k3 = B.mul(k2, k);
    // s1 = A^2 + AB + C^2 + CD, s2 = B^2 + D^2: every coefficient is a
    // k-polynomial combination of these two plus low-order terms.
    FqElem s1 = B.mul(t.A, t.A ^ t.B) ^ B.mul(t.C, t.C ^ t.D);
    FqElem s2 = B.mul(t.B, t.B) ^ B.mul(t.D, t.D);

    CurveCoeffs c;
    FqElem g22 = s1 ^ B.mul(k, s2) ^ t.D ^ 1;
    FqElem g21 = g22 ^ t.B ^ t.D;
    FqElem g11 = g22 ^ t.D;
    FqElem g20 = B.mul(k ^ 1, s1) ^ B.mul(k2 ^ k, s2) ^ t.A ^ t.C ^ B.mul(t.D, k) ^ t.D ^ k;
    FqElem g10 = B.mul(k, s1) ^ B.mul(k2, s2) ^ t.A ^ B.mul(t.B, k) ^ k;
    FqElem g00 = B.mul(k2, s1) ^ B.mul(k3, s2) ^ t.C ^ B.mul(t.D, k2) ^ B.mul(t.D, k) ^ t.D ^ k2;

    c.g[2][2] = g22;
    c.g[2][1] = c.g[1][2] = g21;
    c.g[1][1] = g11;
    c.g[2][0] = c.g[0][2] = g20;
    c.g[1][0] = c.g[0][1] = g10;
    c.g[0][0] = g00;
    return c;
}

std::uint64_t count_points_off_diagonal(const BaseField& F, const CurveCoeffs& c) {
    std::uint64_t count = 0;
    for (FqElem x = 0; x < F.q(); ++x) {
        FqElem x2 = F.mul(x, x);
        FqElem r2 = F.mul(c.g[2][2], x2) ^ F.mul(c.g[1][2], x) ^ c.g[0][2];
        FqElem r1 = F.mul(c.g[2][1], x2) ^ F.mul(c.g[1][1], x) ^ c.g[0][1];
        FqElem r0 = F.mul(c.g[2][0], x2) ^ F.mul(c.g[1][0], x) ^ c.g[0][0];
        for (FqElem y = 0; y < F.q(); ++y) {
            FqElem v = F.mul(F.mul(r2, y) ^ r1, y) ^ r0;
            if (v == 0 && x != y) ++count;
        }
    }
    return count;
}

const char* to_string(SplitType t) {
    switch (t) {
        case SplitType::four_lines: return "four_lines";
        case SplitType::two_conics_swapped: return "two_conics_swapped";
        case SplitType::cubic_has_rational_component: return "cubic_has_rational_component";
        case SplitType::degenerate_conic_pair: return "degenerate_conic_pair";
        case SplitType::not_split_nonrational: return "not_split_nonrational";
        default: return "has_rational_component";
    }
}

namespace {

// Shape of case 1 or case 3/4 with the rationality trace condition dropped:
// the components exist but are defined over GF(q).
bool four_lines_shape(const ExtField& F, const CaseTuple& t) {
    const BaseField& B = F.base();
    if (t.B == 0 && t.D == 0 && t.A != 0 && t.C != 0) {
        for (FqElem xi : B.solve_quadratic(1, 1, t.A))
            if (xi != 0 && xi != 1 && B.mul(xi, xi) == t.C) return true;
    }
    if (t.D != 0) {
        FqElem xi = B.quartic_root(t.C);
        FqElem eta = B.quartic_root(t.D);
        FqElem kbar = B.quartic_root(F.k());
        FqElem eta2 = B.mul(eta, eta);
        FqElem w = B.mul(eta2, kbar) ^ B.mul(xi, eta) ^ B.mul(xi, xi) ^ 1;
        if (w != 0 && w != eta2) {
            FqElem root = B.mul(eta, kbar) ^ eta ^ xi;
            if (t.A == B.mul(B.mul(root, root), w) && t.B == B.mul(eta2, w)) return true;
        }
    }
    return false;
}

bool swapped_conics_shape(const ExtField& F, const CaseTuple& t) {
    const BaseField& B = F.base();
    if (t.B == 0 && t.D == 0 && t.C == 1 && t.A != 0) return true;
    if (t.D != 0 && t.B != 0 && t.B != t.D &&
        (B.mul(F.k(), B.mul(t.D, t.D)) ^ B.mul(t.C, t.C) ^ B.mul(t.C, t.D) ^ 1) == 0 &&
        t.A == B.mul(B.mul(t.B, t.C ^ t.D ^ 1), B.inv(t.D)))
        return true;
    return false;
}

} // namespace

SplitReport split_analysis(const ExtField& F, const CaseTuple& t) {
    if ((t.A == 0 && t.B == 0) || (t.C == 0 && t.D == 0))
        raise(Errc::zero_coefficient, "alpha and beta must both be nonzero");

    for (int id = 1; id <= 5; ++id) {
        if (auto w = case_match(F, id, t))
            return {SplitType::not_split_nonrational, w};
    }

    const BaseField& B = F.base();
    CurveCoeffs c = gamma_coeffs(F, t);
    if (c.g[2][2] != 0) {
        if (four_lines_shape(F, t)) return {SplitType::four_lines, {}};
        if (swapped_conics_shape(F, t)) return {SplitType::two_conics_swapped, {}};
        return {SplitType::has_rational_component, {}};
    }

    if (t.B != t.D) return {SplitType::cubic_has_rational_component, {}};

    // gamma_22 = 0 with B = D forces (A+C+1)(A+B+C+1) = 0. The case-5 shape
    // at even m yields a rational line pair; the A+C+1 = 0 conic is reported
    // as a degenerate pair exactly when it splits (over GF(q), necessarily).
    if (t.B != 0 && (t.A ^ t.C ^ 1) == 0) {
        FqElem constant = t.A ^ B.mul(t.B, F.k()) ^ t.B ^ 1;
        if (B.mul(t.A, t.A) == B.mul(t.B, constant))
            return {SplitType::degenerate_conic_pair, {}};
    }
    return {SplitType::has_rational_component, {}};
}

std::string to_json(const SplitReport& report) {
    nlohmann::json j;
    j["split_type"] = to_string(report.type);
    if (report.witness) {
        j["case_id"] = report.witness->case_id;
        nlohmann::json w;
        w["A"] = to_hex(report.witness->coords.A);
        w["B"] = to_hex(report.witness->coords.B);
        w["C"] = to_hex(report.witness->coords.C);
        w["D"] = to_hex(report.witness->coords.D);
        if (report.witness->case_id == 1 || report.witness->case_id == 2)
            w["xi"] = to_hex(report.witness->xi);
        if (report.witness->case_id == 2) {
            w["eta"] = to_hex(report.witness->eta);
            w["kbar"] = to_hex(report.witness->kbar);
        }
        j["witness_params"] = w;
    } else {
        j["case_id"] = nullptr;
        j["witness_params"] = nullptr;
    }
    return j.dump();
}

} // namespace permtri
