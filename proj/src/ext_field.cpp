#include "qc4/ext_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "qc4/errors.hpp"

namespace qc4 {

namespace {

// Raw GF(4)[x] helpers used only while searching for the field modulus.
// Polynomials are coefficient vectors, constant term first, not normalized.

std::vector<Gf4> raw_rem(std::vector<Gf4> f, const std::vector<Gf4>& g) {
    const auto degg = static_cast<int>(g.size()) - 1;
    const Gf4 lead_inv = g.back().inverse();
    for (int i = static_cast<int>(f.size()) - 1; i >= degg; --i) {
        const Gf4 q = f[static_cast<std::size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        for (int j = 0; j <= degg; ++j)
            f[static_cast<std::size_t>(i - degg + j)] += q * g[static_cast<std::size_t>(j)];
    }
    f.resize(static_cast<std::size_t>(degg));
    return f;
}

std::vector<Gf4> raw_mulmod(const std::vector<Gf4>& a, const std::vector<Gf4>& b,
                            const std::vector<Gf4>& mod) {
    std::vector<Gf4> prod(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return raw_rem(std::move(prod), mod);
}

bool raw_is_one(const std::vector<Gf4>& f) {
    if (f.empty() || f[0] != gf4_one) return false;
    return std::all_of(f.begin() + 1, f.end(), [](Gf4 c) { return c.is_zero(); });
}

std::vector<Gf4> raw_powmod(std::vector<Gf4> base, std::uint64_t e, const std::vector<Gf4>& mod) {
    std::vector<Gf4> result(mod.size() - 1);
    result[0] = gf4_one;
    while (e > 0) {
        if (e & 1) result = raw_mulmod(result, base, mod);
        base = raw_mulmod(base, base, mod);
        e >>= 1;
    }
    return result;
}

bool raw_divides(const std::vector<Gf4>& d, const std::vector<Gf4>& f) {
    const auto rem = raw_rem(f, d);
    return std::all_of(rem.begin(), rem.end(), [](Gf4 c) { return c.is_zero(); });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const std::vector<Gf4>& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= deg; ++d) {
        const std::uint32_t count = 1u << (2 * d);  // 4^d monic candidates
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            std::vector<Gf4> divisor(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j < d; ++j)
                divisor[static_cast<std::size_t>(j)] =
                    Gf4(static_cast<std::uint8_t>((idx >> (2 * j)) & 3u));
            divisor[static_cast<std::size_t>(d)] = gf4_one;
            if (raw_divides(divisor, f)) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
            primes.push_back(p);
            while (x % p == 0) x /= p;
        }
    }
    if (x > 1) primes.push_back(x);
    return primes;
}

// The residue class of x has order exactly 4^m - 1 in GF(4)[x]/(f).
bool residue_is_primitive(const std::vector<Gf4>& f) {
    const int deg = static_cast<int>(f.size()) - 1;
    const std::uint64_t group = (1ull << (2 * deg)) - 1;
    std::vector<Gf4> x(static_cast<std::size_t>(deg));
    if (deg == 1) {
        x[0] = f[0];  // residue of x; negation is the identity in characteristic 2
        if (x[0].is_zero()) return false;
    } else {
        x[1] = gf4_one;
    }
    for (std::uint64_t p : prime_factors(group)) {
        if (raw_is_one(raw_powmod(x, group / p, f))) return false;
    }
    return true;
}

std::vector<Gf4> find_canonical_modulus(int m) {
    // Lexicographic sweep over the low coefficients, constant term first.
    const std::uint64_t total = 1ull << (2 * m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<Gf4> cand(static_cast<std::size_t>(m) + 1);
        std::uint64_t rest = idx;
        for (int j = m - 1; j >= 0; --j) {  // most significant digit of idx lands in c_0
            cand[static_cast<std::size_t>(j)] = Gf4(static_cast<std::uint8_t>(rest & 3u));
            rest >>= 2;
        }
        cand[static_cast<std::size_t>(m)] = gf4_one;
        if (!is_irreducible(cand)) continue;
        if (!residue_is_primitive(cand)) continue;
        return cand;
    }
    throw Error("no primitive polynomial found (degree " + std::to_string(m) + ")");
}

std::uint32_t scale_packed(std::uint32_t bits, Gf4 s, int m) {
    if (s.is_zero()) return 0;
    if (s == gf4_one) return bits;
    std::uint32_t out = 0;
    for (int j = 0; j < m; ++j) {
        const Gf4 c = Gf4(static_cast<std::uint8_t>((bits >> (2 * j)) & 3u)) * s;
        out |= static_cast<std::uint32_t>(c.value()) << (2 * j);
    }
    return out;
}

}  // namespace

ExtField::ExtField(int m) : m_(m), order_(1u << (2 * m)) {
    modulus_ = find_canonical_modulus(m);

    // Packed low part of the modulus: x^m = sum of these coefficients.
    std::uint32_t modlow = 0;
    for (int j = 0; j < m_; ++j)
        modlow |= static_cast<std::uint32_t>(modulus_[static_cast<std::size_t>(j)].value())
                  << (2 * j);

    const std::uint32_t group = order_ - 1;
    exp_.assign(group, 0);
    log_.assign(order_, 0);

    // alpha is the residue class of x (for m = 1 that is the constant term of
    // the modulus itself, i.e. w).
    std::uint32_t alpha_bits = (m_ == 1) ? modlow : 4u;  // 4u = coefficient 1 at alpha^1
    alpha_ = ExtElement(static_cast<std::uint8_t>(m_), alpha_bits);

    std::uint32_t cur = 1;  // alpha^0
    for (std::uint32_t i = 0; i < group; ++i) {
        if (i > 0 && (cur == 1 || log_[cur] != 0)) throw Error("field table construction hit a repeat");
        exp_[i] = cur;
        log_[cur] = i;
        // multiply by alpha: shift coefficients, fold the overflow through the modulus
        if (m_ == 1) {
            cur = static_cast<std::uint32_t>((Gf4(static_cast<std::uint8_t>(cur)) *
                                              Gf4(static_cast<std::uint8_t>(alpha_bits)))
                                                 .value());
        } else {
            const std::uint32_t overflow = (cur >> (2 * (m_ - 1))) & 3u;
            cur = (cur << 2) & (order_ - 1);
            if (overflow) cur ^= scale_packed(modlow, Gf4(static_cast<std::uint8_t>(overflow)), m_);
        }
    }
    gf4_gen_log_ = group / 3;
}

const ExtField& ExtField::get(int m) {
    if (m < 1) throw InvalidArgumentError("extension degree must be >= 1");
    if (m > max_degree)
        throw InvalidArgumentError("extension degree " + std::to_string(m) + " exceeds supported maximum " +
                                   std::to_string(max_degree));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ExtField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, std::unique_ptr<ExtField>(new ExtField(m))).first;
    return *it->second;
}

std::string ExtField::modulus_symbols() const {
    std::string s;
    for (Gf4 c : modulus_) s += c.symbol();
    return s;
}

ExtElement ExtField::from_coeffs(std::span<const Gf4> coeffs) const {
    if (static_cast<int>(coeffs.size()) != m_)
        throw InvalidArgumentError("expected " + std::to_string(m_) + " coefficients");
    std::uint32_t bits = 0;
    for (int j = 0; j < m_; ++j)
        bits |= static_cast<std::uint32_t>(coeffs[static_cast<std::size_t>(j)].value()) << (2 * j);
    return ExtElement(static_cast<std::uint8_t>(m_), bits);
}

ExtElement ExtField::from_index(std::uint32_t idx) const {
    if (idx >= order_) throw InvalidArgumentError("element index out of range");
    return ExtElement(static_cast<std::uint8_t>(m_), idx);
}

ExtElement ExtField::from_power(std::uint64_t e) const {
    return ExtElement(static_cast<std::uint8_t>(m_), exp_[e % (order_ - 1)]);
}

ExtElement ExtField::embed_gf4(Gf4 x) const {
    switch (x.value()) {
        case 0: return zero();
        case 1: return one();
        case 2: return from_power(gf4_gen_log_);
        default: return from_power(2ull * gf4_gen_log_);
    }
}

ExtElement ExtField::primitive_nth_root(int n) const {
    if (n < 1 || (order_ - 1) % static_cast<std::uint32_t>(n) != 0)
        throw InvalidArgumentError("length " + std::to_string(n) + " does not divide 4^" +
                                   std::to_string(m_) + " - 1");
    return from_power((order_ - 1) / static_cast<std::uint32_t>(n));
}

std::uint32_t ExtField::mul_bits(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t group = order_ - 1;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % group];
}

std::uint32_t ExtField::log_of(std::uint32_t bits) const { return log_[bits]; }

const ExtField& ExtElement::field() const {
    if (is_null()) throw InvalidArgumentError("operation on detached field element");
    return ExtField::get(m_);
}

std::vector<Gf4> ExtElement::coeffs() const {
    std::vector<Gf4> out(static_cast<std::size_t>(m_));
    for (int j = 0; j < m_; ++j) out[static_cast<std::size_t>(j)] = coeff(j);
    return out;
}

std::string ExtElement::symbols() const {
    std::string s;
    for (int j = 0; j < m_; ++j) s += coeff(j).symbol();
    return s;
}

namespace {
void require_same_field(const ExtElement& a, const ExtElement& b) {
    if (a.is_null() || b.is_null())
        throw InvalidArgumentError("operation on detached field element");
    if (a.m() != b.m())
        throw InvalidArgumentError("field mismatch: GF(4^" + std::to_string(a.m()) + ") vs GF(4^" +
                                   std::to_string(b.m()) + ")");
}
}  // namespace

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    require_same_field(a, b);
    return ExtElement(a.m_, a.bits_ ^ b.bits_);
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    require_same_field(a, b);
    return ExtElement(a.m_, a.field().mul_bits(a.bits_, b.bits_));
}

ExtElement ExtElement::inverse() const {
    if (is_zero()) throw InvalidArgumentError("division by zero in GF(4^" + std::to_string(m_) + ")");
    const ExtField& f = field();
    const std::uint32_t group = f.order() - 1;
    return f.from_power(group - f.log_of(bits_));
}

ExtElement ExtElement::pow(std::int64_t e) const {
    const ExtField& f = field();
    if (is_zero()) {
        if (e < 0) throw InvalidArgumentError("division by zero in GF(4^" + std::to_string(m_) + ")");
        return e == 0 ? f.one() : f.zero();
    }
    const std::int64_t group = f.order() - 1;
    std::int64_t r = (static_cast<std::int64_t>(f.log_of(bits_)) * (e % group)) % group;
    if (r < 0) r += group;
    return f.from_power(static_cast<std::uint64_t>(r));
}

ExtElement ExtElement::frobenius() const {
    if (is_zero()) return *this;
    const ExtField& f = field();
    const std::uint64_t group = f.order() - 1;
    return f.from_power((4ull * f.log_of(bits_)) % group);
}

Gf4 ExtElement::trace_to_base() const {
    const ExtField& f = field();
    ExtElement acc = f.zero();
    ExtElement it = *this;
    for (int i = 0; i < m_; ++i) {
        acc += it;
        it = it.frobenius();
    }
    return acc.to_gf4();
}

bool ExtElement::is_in_gf4() const {
    if (is_null()) return false;
    if (is_zero()) return true;
    const ExtField& f = field();
    return f.log_of(bits_) % ((f.order() - 1) / 3) == 0;
}

Gf4 ExtElement::to_gf4() const {
    if (is_zero()) return gf4_zero;
    const ExtField& f = field();
    const std::uint32_t t = (f.order() - 1) / 3;
    const std::uint32_t l = f.log_of(bits_);
    if (l % t != 0)
        throw InvalidArgumentError("element " + symbols() + " does not lie in the GF(4) subfield");
    switch (l / t) {
        case 0: return gf4_one;
        case 1: return gf4_w;
        default: return gf4_W;
    }
}

std::uint32_t ExtElement::mult_order() const {
    if (is_zero()) throw InvalidArgumentError("multiplicative order of zero");
    const ExtField& f = field();
    const std::uint32_t group = f.order() - 1;
    return group / std::gcd(group, f.log_of(bits_));
}

Basis::Basis(int m, std::vector<ExtElement> elements, std::string description)
    : m_(m), elements_(std::move(elements)), description_(std::move(description)) {
    if (static_cast<int>(elements_.size()) != m_)
        throw InvalidArgumentError("basis needs exactly " + std::to_string(m_) + " elements");
    coord_rows_ = Gf4Mat(static_cast<std::size_t>(m_), static_cast<std::size_t>(m_));
    for (int j = 0; j < m_; ++j) {
        if (elements_[static_cast<std::size_t>(j)].m() != m_)
            throw InvalidArgumentError("basis element from the wrong field");
        for (int i = 0; i < m_; ++i)
            coord_rows_.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
                elements_[static_cast<std::size_t>(j)].coeff(i);
    }
    if (!coord_rows_.is_invertible())
        throw InvalidArgumentError("invalid basis: elements are GF(4)-dependent");
    expansion_matrix_ = coord_rows_.transposed().inverse();
}

Basis Basis::polynomial(int m) {
    const ExtField& f = ExtField::get(m);
    std::vector<ExtElement> elems;
    elems.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) elems.push_back(f.from_power(static_cast<std::uint64_t>(j)));
    return Basis(m, std::move(elems), "poly");
}

bool Basis::is_polynomial_basis() const {
    return coord_rows_ == Gf4Mat::identity(static_cast<std::size_t>(m_));
}

std::vector<Gf4> Basis::expand(const ExtElement& x) const {
    if (x.m() != m_) throw InvalidArgumentError("basis/field mismatch in expansion");
    std::vector<Gf4> out(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i) {
        Gf4 acc;
        for (int j = 0; j < m_; ++j)
            acc += expansion_matrix_.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) *
                   x.coeff(j);
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

ExtElement Basis::recombine(std::span<const Gf4> coords) const {
    if (static_cast<int>(coords.size()) != m_)
        throw InvalidArgumentError("expected " + std::to_string(m_) + " coordinates");
    const ExtField& f = field();
    ExtElement acc = f.zero();
    for (int j = 0; j < m_; ++j)
        acc += f.embed_gf4(coords[static_cast<std::size_t>(j)]) * elements_[static_cast<std::size_t>(j)];
    return acc;
}

}  // namespace qc4
