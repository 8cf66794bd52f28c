#include "derive.hpp"

namespace permtri::symbolic {

namespace {

const int X = var_index('x');
const int Y = var_index('y');
const int I = var_index('i');

struct RationalPieces {
    Poly num;  // numerator of g(phi(t)) after clearing (t+i+1)^3
    Poly den;  // denominator, cleared the same way
};

// alpha^q (t+i)^3 + (t+i)^2 (t+i+1) + beta^q (t+i+1)^3   over
// beta    (t+i)^3 + (t+i)  (t+i+1)^2 + alpha   (t+i+1)^3
RationalPieces g_of_phi(int t) {
    Poly A = Poly::var(var_index('A'));
    Poly B = Poly::var(var_index('B'));
    Poly C = Poly::var(var_index('C'));
    Poly D = Poly::var(var_index('D'));
    Poly i = Poly::var(I);

    Poly alpha = A + i * B;
    Poly alpha_q = A + B + i * B;
    Poly beta = C + i * D;
    Poly beta_q = C + D + i * D;

    Poly tn = Poly::var(t) + i;              // t + i
    Poly td = Poly::var(t) + i + Poly::one();  // t + i + 1
    Poly tn2 = tn * tn;
    Poly tn3 = tn2 * tn;
    Poly td2 = td * td;
    Poly td3 = td2 * td;

    RationalPieces r;
    r.num = alpha_q * tn3 + tn2 * td + beta_q * td3;
    r.den = beta * tn3 + tn * td2 + alpha * td3;
    return r;
}

} // namespace

std::map<std::pair<unsigned, unsigned>, Poly> derive_curve() {
    RationalPieces gx = g_of_phi(X);
    RationalPieces gy = g_of_phi(Y);

    Poly cross = gx.num * gy.den + gy.num * gx.den;
    cross = substitute(cross, Monomial::var(I, 2), Poly::var(I) + Poly::var(var_index('k')));

    Poly L = exact_div(cross, Poly::var(X) + Poly::var(Y));
    if (L.degree(I) != 0)
        raise(Errc::internal, "curve polynomial retained the extension generator");
    return coefficients2(L, X, Y);
}

const Poly& curve_polynomial() {
    static const Poly L = [] {
        Poly acc;
        for (const auto& [key, coeff] : derive_curve()) {
            Monomial mx = key.first ? Monomial::var(X, key.first) : Monomial::one();
            Monomial my = key.second ? Monomial::var(Y, key.second) : Monomial::one();
            acc = acc + coeff.mul_monomial(mx * my);
        }
        return acc;
    }();
    return L;
}

const std::map<std::pair<unsigned, unsigned>, Poly>& reference_gammas() {
    static const std::map<std::pair<unsigned, unsigned>, Poly> table = [] {
        const char* g22 = "A^2 + A*B + B^2*k + C^2 + C*D + D^2*k + D + 1";
        const char* g21 = "A^2 + A*B + B^2*k + B + C^2 + C*D + D^2*k + 1";
        const char* g20 =
            "A^2*k + A^2 + A*B*k + A*B + A + B^2*k^2 + B^2*k + C^2*k"
            " + C^2 + C*D*k + C*D + C + D^2*k^2 + D^2*k + D*k + D + k";
        const char* g11 = "A^2 + A*B + B^2*k + C^2 + C*D + D^2*k + 1";
        const char* g10 = "A^2*k + A*B*k + A + B^2*k^2 + B*k + C^2*k + C*D*k + D^2*k^2 + k";
        const char* g00 =
            "A^2*k^2 + A*B*k^2 + B^2*k^3 + C^2*k^2 + C*D*k^2 + C + D^2*k^3"
            " + D*k^2 + D*k + D + k^2";
        std::map<std::pair<unsigned, unsigned>, Poly> t;
        t[{2, 2}] = Poly::parse(g22);
        t[{2, 1}] = Poly::parse(g21);
        t[{1, 2}] = Poly::parse(g21);
        t[{2, 0}] = Poly::parse(g20);
        t[{0, 2}] = Poly::parse(g20);
        t[{1, 1}] = Poly::parse(g11);
        t[{1, 0}] = Poly::parse(g10);
        t[{0, 1}] = Poly::parse(g10);
        t[{0, 0}] = Poly::parse(g00);
        return t;
    }();
    return table;
}

} // namespace permtri::symbolic
