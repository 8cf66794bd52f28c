#include "fields.hpp"

#include <algorithm>
#include <cstdio>

namespace permtri {

// --- irreducibility ----------------------------------------------------------

namespace {

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// Remainder of a modulo b in GF(2)[x].
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    unsigned db = poly_degree(b);
    while (a && poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    return a;
}

} // namespace

bool BaseField::is_irreducible(std::uint32_t poly, unsigned degree) {
    if (poly_degree(poly) != degree || degree == 0) return false;
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        for (std::uint64_t cand = std::uint64_t(1) << d; cand < (std::uint64_t(2) << d); ++cand) {
            if (poly_mod(poly, cand) == 0) return false;
        }
    }
    return true;
}

std::uint32_t BaseField::smallest_irreducible(unsigned degree) {
    // Even encodings are divisible by x, so odd candidates suffice.
    for (std::uint64_t cand = (std::uint64_t(1) << degree) + 1;
         cand < (std::uint64_t(2) << degree); cand += 2) {
        if (is_irreducible(static_cast<std::uint32_t>(cand), degree))
            return static_cast<std::uint32_t>(cand);
    }
    raise(Errc::internal, "no irreducible polynomial found");
}

// --- construction ------------------------------------------------------------

BaseField::BaseField(unsigned m) {
    if (m < min_degree || m > max_degree)
        raise(Errc::bad_argument, "extension degree out of supported range");
    m_ = m;
    q_ = std::uint32_t(1) << m;
    mod_ = smallest_irreducible(m);
    init();
}

BaseField::BaseField(unsigned m, std::uint32_t modulus) {
    if (m < min_degree || m > max_degree)
        raise(Errc::bad_argument, "extension degree out of supported range");
    if (poly_degree(modulus) != m)
        raise(Errc::degree_mismatch, "modulus degree does not match m");
    if (!is_irreducible(modulus, m))
        raise(Errc::reducible_modulus, "modulus factors over GF(2)");
    m_ = m;
    q_ = std::uint32_t(1) << m;
    mod_ = modulus;
    init();
}

void BaseField::init() {
    gen_ = find_generator();

    if (m_ <= 16) {
        log_.assign(q_, 0);
        exp_.assign(2 * (q_ - 1), 0);
        FqElem cur = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = static_cast<std::uint16_t>(cur);
            exp_[i + q_ - 1] = static_cast<std::uint16_t>(cur);
            log_[cur] = static_cast<std::uint16_t>(i);
            cur = mul_shift_xor(cur, gen_);
        }
        trace_.assign(q_, 0);
        for (std::uint32_t z = 0; z < q_; ++z)
            trace_[z] = static_cast<std::uint8_t>(trace_slow(z));
    }

    // Echelonize the image of T -> T^2 + T so roots can be read off later.
    as_img_.clear();
    as_pre_.clear();
    for (unsigned j = 0; j < m_; ++j) {
        FqElem pre = FqElem(1) << j;
        FqElem img = mul_shift_xor(pre, pre) ^ pre;
        for (std::size_t r = 0; r < as_img_.size(); ++r) {
            unsigned pivot = poly_degree(as_img_[r]);
            if (img >> pivot & 1) {
                img ^= as_img_[r];
                pre ^= as_pre_[r];
            }
        }
        if (img != 0) {
            as_img_.push_back(img);
            as_pre_.push_back(pre);
            // keep rows sorted by pivot descending for a single forward pass
            for (std::size_t r = as_img_.size(); r-- > 1;) {
                if (poly_degree(as_img_[r]) > poly_degree(as_img_[r - 1])) {
                    std::swap(as_img_[r], as_img_[r - 1]);
                    std::swap(as_pre_[r], as_pre_[r - 1]);
                }
            }
        }
    }
}

// --- arithmetic ---------------------------------------------------------------

FqElem BaseField::mul_shift_xor(FqElem x, FqElem y) const {
    std::uint64_t acc = 0;
    std::uint64_t a = x;
    for (std::uint32_t b = y; b; b >>= 1, a <<= 1)
        if (b & 1) acc ^= a;
    for (int j = 2 * int(m_) - 2; j >= int(m_); --j)
        if (acc >> j & 1) acc ^= std::uint64_t(mod_) << (j - m_);
    return static_cast<FqElem>(acc);
}

FqElem BaseField::inv(FqElem x) const {
    if (x == 0) raise(Errc::division_by_zero, "inverse of zero in GF(q)");
    if (!log_.empty()) return exp_[(q_ - 1) - log_[x]];
    return pow(x, q_ - 2);
}

FqElem BaseField::pow(FqElem x, std::uint64_t e) const {
    FqElem r = 1;
    FqElem b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FqElem BaseField::sqrt(FqElem x) const {
    FqElem r = x;
    for (unsigned j = 0; j + 1 < m_; ++j) r = mul(r, r);
    return r;
}

int BaseField::trace_slow(FqElem x) const {
    FqElem acc = 0;
    FqElem cur = x;
    for (unsigned j = 0; j < m_; ++j) {
        acc ^= cur;
        cur = mul_shift_xor(cur, cur);
    }
    return int(acc & 1);
}

FqElem BaseField::find_generator() const {
    // Prime factors of q-1 by trial division; q <= 2^24 keeps this instant.
    std::uint32_t n = q_ - 1;
    std::uint32_t primes[16];
    int np = 0;
    for (std::uint32_t p = 2; std::uint64_t(p) * p <= n; ++p) {
        if (n % p == 0) {
            primes[np++] = p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes[np++] = n;

    for (FqElem g = 2; g < q_; ++g) {
        bool ok = true;
        for (int i = 0; i < np && ok; ++i) {
            FqElem r = 1, b = g;
            std::uint32_t e = (q_ - 1) / primes[i];
            while (e) {
                if (e & 1) r = mul_shift_xor(r, b);
                b = mul_shift_xor(b, b);
                e >>= 1;
            }
            if (r == 1) ok = false;
        }
        if (ok) return g;
    }
    raise(Errc::internal, "no multiplicative generator found");
}

FqElem BaseField::artin_schreier_root(FqElem w) const {
    if (trace(w) != 0) raise(Errc::bad_argument, "T^2+T=w requires trace(w)=0");
    if (m_ % 2 == 1) {
        // Half trace: sum of w^(4^j), j = 0 .. (m-1)/2.
        FqElem h = 0, cur = w;
        for (unsigned j = 0; 2 * j < m_; ++j) {
            h ^= cur;
            cur = mul(mul(cur, cur), mul(cur, cur));
        }
        return h;
    }
    FqElem res = w, pre = 0;
    for (std::size_t r = 0; r < as_img_.size(); ++r) {
        unsigned pivot = poly_degree(as_img_[r]);
        if (res >> pivot & 1) {
            res ^= as_img_[r];
            pre ^= as_pre_[r];
        }
    }
    if (res != 0) raise(Errc::internal, "trace-zero element missing from Artin-Schreier image");
    return pre;
}

std::vector<FqElem> BaseField::solve_quadratic(FqElem a, FqElem b, FqElem c) const {
    if (a == 0 && b == 0)
        raise(Errc::degenerate_equation, "a and b both zero in quadratic solve");
    if (a == 0) return {mul(c, inv(b))};
    if (b == 0) return {sqrt(mul(c, inv(a)))};
    // T = (b/a) S turns the equation into S^2 + S = ac / b^2.
    FqElem w = mul(mul(a, c), inv(mul(b, b)));
    if (trace(w) != 0) return {};
    FqElem s = artin_schreier_root(w);
    FqElem scale = mul(b, inv(a));
    FqElem r0 = mul(s, scale);
    FqElem r1 = r0 ^ scale;
    if (r0 > r1) std::swap(r0, r1);
    return {r0, r1};
}

// --- extension ---------------------------------------------------------------

namespace {

FqElem smallest_trace_one(const BaseField& F) {
    for (FqElem z = 1; z < F.q(); ++z)
        if (F.trace(z) == 1) return z;
    raise(Errc::internal, "trace is onto, unreachable");
}

} // namespace

ExtField::ExtField(BaseField base) : base_(std::move(base)) {
    k_ = smallest_trace_one(base_);
    std::uint64_t q = base_.q();
    e_main_ = q * (q - 1) + 1;
    e_low_ = 2 * (q - 1) + 1;
}

ExtField::ExtField(BaseField base, FqElem k) : base_(std::move(base)) {
    if (base_.trace(k) != 1)
        raise(Errc::bad_trace, "k must have trace 1 for i^2 + i + k to be irreducible");
    k_ = k;
    std::uint64_t q = base_.q();
    e_main_ = q * (q - 1) + 1;
    e_low_ = 2 * (q - 1) + 1;
}

Fq2 ExtField::pow(Fq2 x, std::uint64_t e) const {
    Fq2 r = one();
    Fq2 b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Fq2 ExtField::phi(std::optional<FqElem> x) const {
    if (!x) return one();
    Fq2 num{*x, 1};
    Fq2 den{FqElem(*x ^ 1), 1};  // x + i + 1; never zero for x in GF(q)
    return mul(num, inv(den));
}

const std::vector<Fq2>& ExtField::mu() const {
    Caches& c = *caches_;
    std::call_once(c.mu_once, [this, &c] {
        c.mu.reserve(q() + 1);
        c.mu.push_back(one());
        for (FqElem x = 0; x < q(); ++x) c.mu.push_back(phi(x));
        if (2 * m() <= 20) {
            c.mu_dense.assign(std::size_t(1) << (2 * m()), 0);
            for (std::uint32_t i = 0; i < c.mu.size(); ++i)
                c.mu_dense[pack(c.mu[i])] = i + 1;
        } else {
            c.mu_sorted.reserve(c.mu.size());
            for (std::uint32_t i = 0; i < c.mu.size(); ++i)
                c.mu_sorted.push_back(std::uint64_t(pack(c.mu[i])) << 32 | i);
            std::sort(c.mu_sorted.begin(), c.mu_sorted.end());
        }
    });
    return c.mu;
}

std::uint32_t ExtField::mu_index(Fq2 z) const {
    mu();
    const Caches& c = *caches_;
    std::uint32_t p = pack(z);
    if (!c.mu_dense.empty()) {
        std::uint32_t v = c.mu_dense[p];
        return v == 0 ? npos : v - 1;
    }
    auto it = std::lower_bound(c.mu_sorted.begin(), c.mu_sorted.end(), std::uint64_t(p) << 32);
    if (it == c.mu_sorted.end() || (*it >> 32) != p) return npos;
    return static_cast<std::uint32_t>(*it & 0xffffffffu);
}

const std::vector<std::uint32_t>& ExtField::pow_main_table() const {
    Caches& c = *caches_;
    std::call_once(c.pow_once, [this, &c] {
        if (2 * m() > 16)
            raise(Errc::resource_limit, "power tables limited to q^2 <= 2^16");
        std::size_t n = std::size_t(1) << (2 * m());
        c.pow_main.resize(n);
        c.pow_low.resize(n);
        for (std::uint32_t v = 0; v < n; ++v) {
            Fq2 z = unpack(v);
            c.pow_main[v] = pack(pow(z, e_main_));
            c.pow_low[v] = pack(pow(z, e_low_));
        }
    });
    return c.pow_main;
}

const std::vector<std::uint32_t>& ExtField::pow_low_table() const {
    pow_main_table();
    return caches_->pow_low;
}

// --- serialization ------------------------------------------------------------

std::string to_hex(std::uint32_t v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", v);
    return buf;
}

std::uint32_t parse_hex(const std::string& s) {
    std::size_t pos = 0;
    if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) pos = 2;
    if (pos >= s.size()) raise(Errc::parse_error, "empty hex literal: '" + s + "'");
    std::uint64_t v = 0;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else raise(Errc::parse_error, "invalid hex literal: '" + s + "'");
        v = v << 4 | unsigned(d);
        if (v > 0xffffffffull) raise(Errc::parse_error, "hex literal out of range: '" + s + "'");
    }
    return static_cast<std::uint32_t>(v);
}

std::string to_string(Fq2 z) { return to_hex(z.a) + "+i*" + to_hex(z.b); }

Fq2 parse_fq2(const std::string& s) {
    auto sep = s.find("+i*");
    if (sep == std::string::npos)
        raise(Errc::parse_error, "expected 'a+i*b' form: '" + s + "'");
    return {parse_hex(s.substr(0, sep)), parse_hex(s.substr(sep + 3))};
}

} // namespace permtri
