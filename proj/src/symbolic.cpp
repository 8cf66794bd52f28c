#include "symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace permtri::symbolic {

int var_index(char name) {
    for (int v = 0; v < num_vars; ++v)
        if (var_names[v] == name) return v;
    raise(Errc::bad_argument, std::string("unknown variable '") + name + "'");
}

Monomial Monomial::var(int v, unsigned e) {
    if (v < 0 || v >= num_vars) raise(Errc::bad_argument, "variable index out of range");
    if (e >= 0x8000u) raise(Errc::bad_argument, "exponent too large");
    Monomial m;
    int slot = v + 1;
    m.w[slot >> 2] |= std::uint64_t(e) << ((3 - (slot & 3)) * 16);
    m.w[0] |= std::uint64_t(e) << 48;
    return m;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (int v = 0; v < num_vars; ++v) {
        unsigned e = exponent(v);
        if (e == 0) continue;
        if (!s.empty()) s += '*';
        s += var_names[v];
        if (e > 1) {
            s += '^';
            s += std::to_string(e);
        }
    }
    return s;
}

Poly Poly::from_monomial(const Monomial& m) {
    Poly p;
    p.terms_.push_back(m);
    return p;
}

Poly Poly::from_terms(std::vector<Monomial> terms) {
    std::sort(terms.begin(), terms.end(), std::greater<>());
    Poly p;
    p.terms_.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) p.terms_.push_back(terms[i]);
        i = j;
    }
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i] == o.terms_[j]) {
            ++i;
            ++j;
        } else if (terms_[i] > o.terms_[j]) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    r.terms_.insert(r.terms_.end(), terms_.begin() + i, terms_.end());
    r.terms_.insert(r.terms_.end(), o.terms_.begin() + j, o.terms_.end());
    return r;
}

Poly Poly::mul_monomial(const Monomial& m) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const Monomial& t : terms_) r.terms_.push_back(t * m);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    const Poly& small = terms_.size() <= o.terms_.size() ? *this : o;
    const Poly& large = terms_.size() <= o.terms_.size() ? o : *this;
    if (small.terms_.size() == 1) return large.mul_monomial(small.terms_[0]);

    std::unordered_set<Monomial, MonomialHash> acc;
    acc.reserve(small.terms_.size() * large.terms_.size() / 2 + 8);
    for (const Monomial& s : small.terms_) {
        for (const Monomial& t : large.terms_) {
            auto [it, inserted] = acc.insert(s * t);
            if (!inserted) acc.erase(it);
        }
    }
    std::vector<Monomial> terms(acc.begin(), acc.end());
    std::sort(terms.begin(), terms.end(), std::greater<>());
    Poly r;
    r.terms_ = std::move(terms);
    return r;
}

unsigned Poly::degree(int v) const {
    unsigned d = 0;
    for (const Monomial& t : terms_) d = std::max(d, t.exponent(v));
    return d;
}

Poly Poly::coeff_of(int v, unsigned e) const {
    std::vector<Monomial> out;
    for (const Monomial& t : terms_) {
        if (t.exponent(v) != e) continue;
        Monomial m = t.div(Monomial::var(v, e));
        out.push_back(m);
    }
    return from_terms(std::move(out));
}

FqElem Poly::eval(const BaseField& F, const std::array<FqElem, num_vars>& vals) const {
    FqElem acc = 0;
    for (const Monomial& t : terms_) {
        FqElem prod = 1;
        for (int v = 0; v < num_vars && prod; ++v) {
            unsigned e = t.exponent(v);
            if (e) prod = F.mul(prod, F.pow(vals[v], e));
        }
        acc ^= prod;
    }
    return acc;
}

std::uint64_t Poly::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const Monomial& t : terms_) {
        for (std::uint64_t w : t.w) {
            for (int b = 0; b < 8; ++b) {
                h ^= (w >> (8 * b)) & 0xff;
                h *= 0x100000001b3ull;
            }
        }
    }
    return h;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const Monomial& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.str();
    }
    return s;
}

Poly Poly::parse(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned.push_back(c);
    if (cleaned.empty()) raise(Errc::parse_error, "empty polynomial literal");

    std::vector<Monomial> terms;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t end = cleaned.find('+', pos);
        if (end == std::string::npos) end = cleaned.size();
        std::string_view term(cleaned.data() + pos, end - pos);
        if (term.empty()) raise(Errc::parse_error, "empty term in polynomial literal");
        if (term == "0") {  // the zero polynomial prints as "0"
            if (end == cleaned.size()) break;
            pos = end + 1;
            continue;
        }

        Monomial m = Monomial::one();
        std::size_t fpos = 0;
        while (fpos < term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string_view::npos) fend = term.size();
            std::string_view factor = term.substr(fpos, fend - fpos);
            if (factor == "1") {
                // multiplicative identity
            } else {
                int v = var_index(factor[0]);
                unsigned e = 1;
                if (factor.size() > 1) {
                    if (factor[1] != '^' || factor.size() < 3)
                        raise(Errc::parse_error, "bad factor: '" + std::string(factor) + "'");
                    e = 0;
                    for (std::size_t i = 2; i < factor.size(); ++i) {
                        if (!std::isdigit(static_cast<unsigned char>(factor[i])))
                            raise(Errc::parse_error, "bad exponent: '" + std::string(factor) + "'");
                        e = e * 10 + unsigned(factor[i] - '0');
                    }
                }
                m = m * Monomial::var(v, e);
            }
            fpos = fend + 1;
        }
        terms.push_back(m);
        if (end == cleaned.size()) break;
        pos = end + 1;
    }
    return from_terms(std::move(terms));
}

Poly substitute(const Poly& pol, const Monomial& mono, const Poly& rep) {
    if (mono.is_one()) raise(Errc::bad_argument, "substitution target must be non-constant");
    for (const Monomial& t : rep.terms()) {
        unsigned deg_in_vars = 0;
        for (int v = 0; v < num_vars; ++v)
            if (mono.exponent(v) > 0) deg_in_vars += t.exponent(v);
        if (deg_in_vars >= mono.degree())
            raise(Errc::non_terminating,
                  "replacement does not lower the degree in the substituted variables");
    }

    Poly cur = pol;
    for (;;) {
        std::vector<Monomial> rest;
        Poly replaced;
        bool any = false;
        for (const Monomial& t : cur.terms()) {
            if (t.divisible_by(mono)) {
                any = true;
                replaced = replaced + rep.mul_monomial(t.div(mono));
            } else {
                rest.push_back(t);
            }
        }
        if (!any) return cur;
        cur = Poly::from_terms(std::move(rest)) + replaced;
    }
}

std::map<std::pair<unsigned, unsigned>, Poly> coefficients2(const Poly& pol, int v1, int v2) {
    std::map<std::pair<unsigned, unsigned>, std::vector<Monomial>> buckets;
    for (const Monomial& t : pol.terms()) {
        unsigned e1 = t.exponent(v1);
        unsigned e2 = t.exponent(v2);
        Monomial m = t;
        if (e1) m = m.div(Monomial::var(v1, e1));
        if (e2) m = m.div(Monomial::var(v2, e2));
        buckets[{e1, e2}].push_back(m);
    }
    std::map<std::pair<unsigned, unsigned>, Poly> out;
    for (auto& [key, terms] : buckets) {
        Poly p = Poly::from_terms(std::move(terms));
        if (!p.is_zero()) out.emplace(key, std::move(p));
    }
    return out;
}

namespace {

bool divide_impl(const Poly& num, const Poly& den, Poly& out) {
    Poly rem = num;
    std::vector<Monomial> quot;
    const Monomial& dl = den.lead();
    while (!rem.is_zero()) {
        const Monomial& lt = rem.lead();
        if (!lt.divisible_by(dl)) return false;
        Monomial q = lt.div(dl);
        quot.push_back(q);
        rem = rem + den.mul_monomial(q);
    }
    // leading terms strictly decrease, so the quotient arrives ordered
    out = Poly::from_terms(std::move(quot));
    return true;
}

} // namespace

Poly exact_div(const Poly& num, const Poly& den) {
    if (den.is_zero()) raise(Errc::division_by_zero, "division by the zero polynomial");
    Poly out;
    if (!divide_impl(num, den, out))
        raise(Errc::inexact_division, "polynomial division left a remainder");
    return out;
}

std::optional<Poly> try_div(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    Poly out;
    if (!divide_impl(num, den, out)) return std::nullopt;
    return out;
}

Poly determinant_cofactor(const std::vector<std::vector<Poly>>& M) {
    std::size_t n = M.size();
    if (n == 0) return Poly::one();
    if (n == 1) return M[0][0];
    // expansion along the first remaining row, tracking live columns in a mask
    struct Rec {
        const std::vector<std::vector<Poly>>& M;
        Poly run(std::size_t row, std::uint32_t colmask) {
            std::size_t n = M.size();
            if (row == n) return Poly::one();
            Poly acc;
            for (std::size_t c = 0; c < n; ++c) {
                if (!(colmask >> c & 1)) continue;
                if (M[row][c].is_zero()) continue;
                acc = acc + M[row][c] * run(row + 1, colmask & ~(std::uint32_t(1) << c));
            }
            return acc;
        }
    } rec{M};
    return rec.run(0, (std::uint32_t(1) << n) - 1);
}

Poly determinant_bareiss(std::vector<std::vector<Poly>> M) {
    std::size_t n = M.size();
    if (n == 0) return Poly::one();
    Poly prev = Poly::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly::zero();  // column vanishes on the minor
            std::swap(M[k], M[swap_row]);            // sign is irrelevant over GF(2)
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly t = M[i][j] * M[k][k] + M[i][k] * M[k][j];
                M[i][j] = exact_div(t, prev);
            }
            M[i][k] = Poly::zero();
        }
        prev = M[k][k];
    }
    return M[n - 1][n - 1];
}

namespace {

Poly poly_pow(const Poly& base, unsigned e) {
    Poly r = Poly::one();
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
}

// Pseudo-remainder: lc(v)^{deg u - deg v + 1} * u reduced modulo v in var.
Poly prem(Poly r, const Poly& v, int var) {
    unsigned dv = v.degree(var);
    Poly lcv = v.coeff_of(var, dv);
    int e = int(r.degree(var)) - int(dv) + 1;
    while (!r.is_zero() && r.degree(var) >= dv) {
        unsigned dr = r.degree(var);
        Poly lcr = r.coeff_of(var, dr);
        r = lcv * r + (lcr * v).mul_monomial(Monomial::var(var, dr - dv));
        --e;
    }
    while (e-- > 0) r = lcv * r;
    return r;
}

// Subresultant polynomial remainder sequence. Equals the Sylvester
// determinant up to sign, which vanishes over GF(2); the divisions are
// exact by the subresultant theorem.
Poly resultant_prs(Poly a, Poly b, int var) {
    if (a.degree(var) < b.degree(var)) std::swap(a, b);
    Poly g = Poly::one();
    Poly h = Poly::one();
    for (;;) {
        unsigned da = a.degree(var);
        unsigned db = b.degree(var);
        unsigned delta = da - db;
        Poly r = prem(a, b, var);
        a = b;
        b = exact_div(r, g * poly_pow(h, delta));
        if (b.is_zero()) return Poly::zero();
        g = a.coeff_of(var, a.degree(var));
        h = delta == 0 ? h : exact_div(poly_pow(g, delta), poly_pow(h, delta - 1));
        if (b.degree(var) == 0) break;
    }
    unsigned d = a.degree(var);
    return exact_div(poly_pow(b, d), poly_pow(h, d - 1));
}

} // namespace

Poly resultant(const Poly& u, const Poly& v, int var) {
    unsigned du = u.degree(var);
    unsigned dv = v.degree(var);
    if (u.is_zero() || v.is_zero() || du == 0 || dv == 0)
        raise(Errc::zero_degree, "resultant requires positive degree in the chosen variable");

    std::size_t n = du + dv;
    if (n > 6) return resultant_prs(u, v, var);

    std::vector<Poly> uc(du + 1), vc(dv + 1);
    for (unsigned e = 0; e <= du; ++e) uc[e] = u.coeff_of(var, e);
    for (unsigned e = 0; e <= dv; ++e) vc[e] = v.coeff_of(var, e);

    std::vector<std::vector<Poly>> S(n, std::vector<Poly>(n));
    for (unsigned r = 0; r < dv; ++r)
        for (unsigned j = 0; j <= du; ++j) S[r][r + j] = uc[du - j];
    for (unsigned r = 0; r < du; ++r)
        for (unsigned j = 0; j <= dv; ++j) S[dv + r][r + j] = vc[dv - j];
    return determinant_cofactor(S);
}

Poly resultant_sylvester(const Poly& u, const Poly& v, int var) {
    unsigned du = u.degree(var);
    unsigned dv = v.degree(var);
    if (u.is_zero() || v.is_zero() || du == 0 || dv == 0)
        raise(Errc::zero_degree, "resultant requires positive degree in the chosen variable");

    std::vector<Poly> uc(du + 1), vc(dv + 1);
    for (unsigned e = 0; e <= du; ++e) uc[e] = u.coeff_of(var, e);
    for (unsigned e = 0; e <= dv; ++e) vc[e] = v.coeff_of(var, e);

    std::size_t n = du + dv;
    std::vector<std::vector<Poly>> S(n, std::vector<Poly>(n));
    for (unsigned r = 0; r < dv; ++r)
        for (unsigned j = 0; j <= du; ++j) S[r][r + j] = uc[du - j];
    for (unsigned r = 0; r < du; ++r)
        for (unsigned j = 0; j <= dv; ++j) S[dv + r][r + j] = vc[dv - j];
    if (n <= 6) return determinant_cofactor(S);
    return determinant_bareiss(std::move(S));
}

} // namespace permtri::symbolic
