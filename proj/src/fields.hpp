#ifndef PERMTRI_FIELDS_HPP
#define PERMTRI_FIELDS_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace permtri {

/// Element of GF(2^m): bit j holds the coefficient of x^j, value < 2^m.
using FqElem = std::uint32_t;

/// Element of GF(q^2) in the tower basis {1, i}: value a + i*b with a, b in GF(q).
struct Fq2 {
    FqElem a = 0;
    FqElem b = 0;

    friend bool operator==(const Fq2&, const Fq2&) = default;
    bool is_zero() const { return a == 0 && b == 0; }
    bool in_base() const { return b == 0; }
};

/**
 * GF(2^m) defined by an irreducible modulus bitmask, 2 <= m <= 24.
 *
 * Multiplication uses log/antilog tables for m <= 16 and a carryless
 * shift-xor multiply with modular reduction otherwise. Both paths are
 * exposed so they can be checked against each other.
 */
class BaseField {
public:
    static constexpr unsigned min_degree = 2;
    static constexpr unsigned max_degree = 24;

    /// Constructs GF(2^m) with the smallest-encoding irreducible modulus.
    explicit BaseField(unsigned m);
    /// Constructs GF(2^m) with the given modulus; rejects reducible input.
    BaseField(unsigned m, std::uint32_t modulus);

    unsigned m() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t q() const { return q_; }
    FqElem generator() const { return gen_; }
    bool has_tables() const { return !log_.empty(); }

    static bool is_irreducible(std::uint32_t poly, unsigned degree);
    static std::uint32_t smallest_irreducible(unsigned degree);

    FqElem add(FqElem x, FqElem y) const { return x ^ y; }

    FqElem mul(FqElem x, FqElem y) const {
        if (!log_.empty()) {
            if (x == 0 || y == 0) return 0;
            return exp_[log_[x] + log_[y]];
        }
        return mul_shift_xor(x, y);
    }

    /// Carryless-multiply-and-reduce path, available at every m.
    FqElem mul_shift_xor(FqElem x, FqElem y) const;

    FqElem sq(FqElem x) const { return mul(x, x); }
    FqElem inv(FqElem x) const;
    FqElem pow(FqElem x, std::uint64_t e) const;

    /// Unique square root: x^(2^(m-1)).
    FqElem sqrt(FqElem x) const;
    /// Unique fourth root (x -> x^4 is a bijection in characteristic 2).
    FqElem quartic_root(FqElem x) const { return sqrt(sqrt(x)); }

    /// Absolute trace onto GF(2).
    int trace(FqElem x) const {
        if (!trace_.empty()) return trace_[x];
        return trace_slow(x);
    }

    /// Solves T^2 + T = w; requires trace(w) == 0.
    FqElem artin_schreier_root(FqElem w) const;

    /// All GF(q) roots of a*T^2 + b*T + c, sorted ascending.
    /// Rejects the degenerate case a == b == 0.
    std::vector<FqElem> solve_quadratic(FqElem a, FqElem b, FqElem c) const;

private:
    void init();
    int trace_slow(FqElem x) const;
    FqElem find_generator() const;

    unsigned m_ = 0;
    std::uint32_t mod_ = 0;
    std::uint32_t q_ = 0;
    FqElem gen_ = 0;
    std::vector<std::uint16_t> log_;  // index: element, value: discrete log (m <= 16)
    std::vector<std::uint16_t> exp_;  // doubled so log sums index directly
    std::vector<std::uint8_t> trace_;
    // Echelonized image of T -> T^2 + T, for root extraction at even m.
    std::vector<std::uint32_t> as_img_;
    std::vector<std::uint32_t> as_pre_;
};

/// Marker for the point at infinity accepted by ExtField::phi.
inline constexpr std::optional<FqElem> infinity_point = std::nullopt;

/**
 * GF(q^2) = GF(q)[i] / (i^2 + i + k) with trace(k) = 1, so i^q = i + 1 and
 * the Frobenius, norm and the norm-one subgroup mu_{q+1} have closed forms
 * in the (a, b) coordinates.
 */
class ExtField {
public:
    /// Uses the smallest-encoding trace-1 element as k.
    explicit ExtField(BaseField base);
    /// Explicit k; rejects trace(k) == 0.
    ExtField(BaseField base, FqElem k);

    const BaseField& base() const { return base_; }
    FqElem k() const { return k_; }
    std::uint32_t q() const { return base_.q(); }
    unsigned m() const { return base_.m(); }
    /// Exponent q(q-1)+1 of the Frobenius-twisted trinomial term.
    std::uint64_t exp_main() const { return e_main_; }
    /// Exponent 2(q-1)+1 of the low trinomial term.
    std::uint64_t exp_low() const { return e_low_; }

    Fq2 add(Fq2 x, Fq2 y) const { return {x.a ^ y.a, x.b ^ y.b}; }

    Fq2 mul(Fq2 x, Fq2 y) const {
        const BaseField& F = base_;
        FqElem aa = F.mul(x.a, y.a);
        FqElem bb = F.mul(x.b, y.b);
        FqElem cross = F.mul(x.a, y.b) ^ F.mul(x.b, y.a);
        return {aa ^ F.mul(k_, bb), cross ^ bb};
    }

    Fq2 sq(Fq2 x) const { return mul(x, x); }

    /// (a + ib)^q = (a + b) + ib.
    Fq2 frobenius(Fq2 x) const { return {x.a ^ x.b, x.b}; }

    /// z * z^q = a^2 + ab + k b^2, always in GF(q).
    FqElem norm(Fq2 x) const {
        const BaseField& F = base_;
        return F.mul(x.a, x.a ^ x.b) ^ F.mul(k_, F.mul(x.b, x.b));
    }

    Fq2 inv(Fq2 x) const {
        if (x.is_zero()) raise(Errc::division_by_zero, "inverse of zero in GF(q^2)");
        FqElem n = base_.inv(norm(x));
        Fq2 c = frobenius(x);
        return {base_.mul(c.a, n), base_.mul(c.b, n)};
    }

    Fq2 pow(Fq2 x, std::uint64_t e) const;

    Fq2 one() const { return {1, 0}; }
    Fq2 from_base(FqElem x) const { return {x, 0}; }

    /// Packs an element into a single index < q^2.
    std::uint32_t pack(Fq2 x) const { return x.a | (x.b << base_.m()); }
    Fq2 unpack(std::uint32_t v) const { return {v & (q() - 1), v >> base_.m()}; }

    /// phi(x) = (x + i) / (x + i + 1) for x in GF(q); phi(infinity) = 1.
    /// A bijection from GF(q) u {infinity} onto mu_{q+1}.
    Fq2 phi(std::optional<FqElem> x) const;

    /// The q+1 norm-one elements: 1 first, then phi(0), phi(1), ...
    const std::vector<Fq2>& mu() const;

    /// Index of z within mu(), or npos when z^{q+1} != 1.
    static constexpr std::uint32_t npos = 0xffffffffu;
    std::uint32_t mu_index(Fq2 z) const;

    bool on_mu(Fq2 z) const { return mu_index(z) != npos; }

    /// x -> x^{q(q-1)+1} table over all of GF(q^2); only for 2m <= 16.
    const std::vector<std::uint32_t>& pow_main_table() const;
    /// x -> x^{2(q-1)+1} table over all of GF(q^2); only for 2m <= 16.
    const std::vector<std::uint32_t>& pow_low_table() const;

private:
    // Lazily built lookup structures, shared through a stable address so the
    // context stays movable.
    struct Caches {
        std::once_flag mu_once;
        std::vector<Fq2> mu;
        std::vector<std::uint32_t> mu_dense;    // packed -> index+1 (small fields)
        std::vector<std::uint64_t> mu_sorted;   // (packed << 32) | index otherwise
        std::once_flag pow_once;
        std::vector<std::uint32_t> pow_main;
        std::vector<std::uint32_t> pow_low;
    };

    BaseField base_;
    FqElem k_ = 0;
    std::uint64_t e_main_ = 0;
    std::uint64_t e_low_ = 0;
    std::unique_ptr<Caches> caches_{new Caches};
};

// --- serialization ----------------------------------------------------------

/// Lowercase hex with 0x prefix, e.g. 0xb.
std::string to_hex(std::uint32_t v);
/// Accepts an optional 0x/0X prefix; rejects empty or non-hex input.
std::uint32_t parse_hex(const std::string& s);

/// "a+i*b" with hex parts, e.g. "0x6+i*0x0".
std::string to_string(Fq2 z);
Fq2 parse_fq2(const std::string& s);

} // namespace permtri

#endif
