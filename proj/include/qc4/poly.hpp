// Univariate polynomials over GF(4) or GF(4^m), constant term first.
//
// The coefficient vector is kept normalized (no trailing zeros); the zero
// polynomial is the empty vector and its degree is a distinct "none" value,
// never -1. Coefficient types must provide +, *, inverse(), is_zero() and ==.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qc4/errors.hpp"
#include "qc4/ext_field.hpp"
#include "qc4/gf4.hpp"

namespace qc4 {

template <class F>
class Poly {
   public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly zero() { return Poly(); }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    const std::vector<F>& coeffs() const { return c_; }
    const F& lead() const {
        if (c_.empty()) throw InvalidArgumentError("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_one() const {
        return c_.size() == 1 && !c_[0].is_zero() && c_[0] == c_[0] * c_[0].inverse();
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

   private:
    std::vector<F> c_;
};

using PolyGf4 = Poly<Gf4>;
using PolyExt = Poly<ExtElement>;

template <class F>
Poly<F> poly_add(const Poly<F>& a, const Poly<F>& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    if (ac.empty()) return b;
    if (bc.empty()) return a;
    std::vector<F> out;
    out.reserve(std::max(ac.size(), bc.size()));
    for (std::size_t i = 0; i < std::max(ac.size(), bc.size()); ++i) {
        if (i < ac.size() && i < bc.size())
            out.push_back(ac[i] + bc[i]);
        else
            out.push_back(i < ac.size() ? ac[i] : bc[i]);
    }
    return Poly<F>(std::move(out));
}

template <class F>
Poly<F> poly_mul(const Poly<F>& a, const Poly<F>& b) {
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    if (ac.empty() || bc.empty()) return Poly<F>();
    const F zero = ac[0] + ac[0];
    std::vector<F> out(ac.size() + bc.size() - 1, zero);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i].is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return Poly<F>(std::move(out));
}

template <class F>
Poly<F> poly_scale(const Poly<F>& a, const F& s) {
    std::vector<F> out(a.coeffs());
    for (auto& c : out) c *= s;
    return Poly<F>(std::move(out));
}

// (quotient, remainder) with a = q*b + r and deg r < deg b.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const Poly<F>& a, const Poly<F>& b) {
    if (b.is_zero()) throw InvalidArgumentError("polynomial division by zero");
    if (a.is_zero()) return {Poly<F>(), Poly<F>()};
    std::vector<F> rem(a.coeffs());
    const auto& bc = b.coeffs();
    const int db = *b.degree();
    const F lead_inv = b.lead().inverse();
    const F zero = rem[0] + rem[0];
    std::vector<F> quot;
    if (static_cast<int>(rem.size()) - 1 >= db)
        quot.assign(rem.size() - static_cast<std::size_t>(db), zero);
    for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
        const F q = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] += q * bc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<F>(std::move(quot)), Poly<F>(std::move(rem))};
}

template <class F>
Poly<F> poly_mod(const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(a, b).second;
}

template <class F>
Poly<F> poly_monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.lead().inverse());
}

// Monic greatest common divisor; gcd(f, 0) is the monic scaling of f.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

// Reduction modulo x^n - 1: fold coefficient i onto i mod n.
template <class F>
Poly<F> poly_mod_xn_minus_1(const Poly<F>& a, int n) {
    if (n < 1) throw InvalidArgumentError("modulus length must be positive");
    const auto& ac = a.coeffs();
    if (static_cast<int>(ac.size()) <= n) return a;
    const F zero = ac[0] + ac[0];
    std::vector<F> out(static_cast<std::size_t>(n), zero);
    for (std::size_t i = 0; i < ac.size(); ++i) out[i % static_cast<std::size_t>(n)] += ac[i];
    return Poly<F>(std::move(out));
}

template <class F>
F poly_eval(const Poly<F>& f, const F& x) {
    const auto& c = f.coeffs();
    if (c.empty()) return x + x;  // zero of the right field
    F acc = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// x^n - 1 over the coefficient domain of `like` (any nonzero element works).
template <class F>
Poly<F> poly_xn_minus_1(int n, const F& one) {
    const F zero = one + one;
    std::vector<F> c(static_cast<std::size_t>(n) + 1, zero);
    c[0] = one;  // -1 = 1 in characteristic 2
    c[static_cast<std::size_t>(n)] = one;
    return Poly<F>(std::move(c));
}

// Monic product prod_{z in exponents} (x - gamma^z); gamma must have order n.
PolyExt poly_from_roots(const std::vector<int>& exponents, const ExtElement& gamma, int n);

// Evaluate a GF(4)-coefficient polynomial at a point of GF(4^m).
ExtElement poly_eval_ext(const PolyGf4& f, const ExtElement& x);

PolyExt poly_embed(const PolyGf4& f, const ExtField& field);
// Throws unless every coefficient lies in the embedded GF(4).
PolyGf4 poly_project_gf4(const PolyExt& f);

// The conjugate-reversal gcd of Theorem-4 type self-orthogonality tests:
// dagger(g) = GCD(conj(g_0) + sum_{r=1..n-1} conj(g_{n-r}) x^r, x^n - 1),
// returned monic. Requires deg g < n; GF(4) coefficients only.
PolyGf4 dagger(const PolyGf4& g, int n);

std::string poly_symbols(const PolyGf4& f);
PolyGf4 poly_gf4_from_symbols(const std::string& s);

}  // namespace qc4
