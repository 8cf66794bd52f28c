#ifndef PERMTRI_SYMBOLIC_HPP
#define PERMTRI_SYMBOLIC_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "fields.hpp"

namespace permtri::symbolic {

/// The fixed variable set, in canonical order. The extension generator i and
/// the line/conic unknowns a..e live alongside the pair coordinates so the
/// scripted derivations can eliminate them by resultants.
/// e is declared for completeness of the variable set but no derivation
/// uses it.
inline constexpr int num_vars = 13;
inline constexpr char var_names[num_vars + 1] = "xyABCDikabcde";

int var_index(char name);

/**
 * Monomial in the 13 variables, packed into four 64-bit words of 16-bit
 * exponent lanes. Lane 0 holds the total degree and occupies the most
 * significant position, so plain word-wise comparison realizes the graded
 * lexicographic order on the canonical variable list.
 */
struct Monomial {
    std::array<std::uint64_t, 4> w{};

    static Monomial one() { return {}; }
    static Monomial var(int v, unsigned e = 1);

    unsigned exponent(int v) const {
        int slot = v + 1;
        return unsigned(w[slot >> 2] >> ((3 - (slot & 3)) * 16)) & 0xffffu;
    }
    unsigned degree() const { return unsigned(w[0] >> 48); }

    bool is_one() const { return w[0] == 0 && w[1] == 0 && w[2] == 0 && w[3] == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int j = 0; j < 4; ++j) r.w[j] = w[j] + o.w[j];
        return r;
    }

    /// Per-lane >=; exponents stay below 2^15, so the borrow trick is exact.
    bool divisible_by(const Monomial& o) const {
        constexpr std::uint64_t high = 0x8000800080008000ull;
        for (int j = 0; j < 4; ++j)
            if ((((w[j] | high) - o.w[j]) & high) != high) return false;
        return true;
    }

    Monomial div(const Monomial& o) const {
        Monomial r;
        for (int j = 0; j < 4; ++j) r.w[j] = w[j] - o.w[j];
        return r;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.w <=> b.w; }

    std::string str() const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (std::uint64_t v : m.w) {
            h ^= v;
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return std::size_t(h);
    }
};

/**
 * Sparse multivariate polynomial over GF(2): a term set in descending
 * graded-lex order. Addition is symmetric difference; no zero terms are
 * stored, and equality is structural.
 */
class Poly {
public:
    Poly() = default;

    static Poly zero() { return {}; }
    static Poly one() { return from_monomial(Monomial::one()); }
    static Poly var(int v, unsigned e = 1) { return from_monomial(Monomial::var(v, e)); }
    static Poly from_monomial(const Monomial& m);
    /// Builds from an unsorted term list, cancelling duplicate pairs.
    static Poly from_terms(std::vector<Monomial> terms);

    /// Parses the plus-separated monomial format, e.g. "A^2*B*k + C + 1".
    static Poly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].is_one(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    const Monomial& lead() const { return terms_.front(); }

    Poly operator+(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly mul_monomial(const Monomial& m) const;

    friend bool operator==(const Poly&, const Poly&) = default;
    friend auto operator<=>(const Poly& a, const Poly& b) { return a.terms_ <=> b.terms_; }

    unsigned degree(int v) const;
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }

    /// Coefficient of v^e, as a polynomial in the remaining variables.
    Poly coeff_of(int v, unsigned e) const;

    /// Substitutes values for all 13 variables in the given field.
    FqElem eval(const BaseField& F, const std::array<FqElem, num_vars>& vals) const;

    /// Content hash of the canonical form; stable across runs.
    std::uint64_t hash() const;

    std::string str() const;

private:
    std::vector<Monomial> terms_;  // descending, duplicate-free
};

/// Replaces every term divisible by mono with (term/mono)*rep until no term
/// is divisible. Requires the total degree of rep in mono's variables to be
/// smaller than mono's degree, which guarantees the loop terminates.
Poly substitute(const Poly& pol, const Monomial& mono, const Poly& rep);

/// Partition of pol by the exponent pair of (v1, v2); reassembling
/// sum coeff * v1^j * v2^l gives back pol exactly.
std::map<std::pair<unsigned, unsigned>, Poly> coefficients2(const Poly& pol, int v1, int v2);

/// Resultant with respect to var: the determinant of the Sylvester matrix
/// over the polynomial ring in the remaining variables. Both arguments must
/// have positive degree in var. Small systems expand the determinant
/// directly; larger ones run the subresultant remainder sequence, which
/// yields the same value (signs vanish over GF(2)) without the matrix-sized
/// intermediate swell.
Poly resultant(const Poly& u, const Poly& v, int var);

/// The same resultant computed from the Sylvester matrix itself (cofactor
/// expansion below size 7, fraction-free elimination above). Serves as the
/// second route for cross-checking `resultant`.
Poly resultant_sylvester(const Poly& u, const Poly& v, int var);

/// Exact quotient; raises inexact_division when den does not divide num.
Poly exact_div(const Poly& num, const Poly& den);

/// Exact quotient, or nothing when den does not divide num.
std::optional<Poly> try_div(const Poly& num, const Poly& den);

/// Determinant of a dense square polynomial matrix (row-major). Exposed for
/// cross-checking the two elimination strategies against each other.
Poly determinant_bareiss(std::vector<std::vector<Poly>> M);
Poly determinant_cofactor(const std::vector<std::vector<Poly>>& M);

} // namespace permtri::symbolic

#endif
