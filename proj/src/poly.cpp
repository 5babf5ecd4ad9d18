#include "qc4/poly.hpp"

#include <algorithm>

namespace qc4 {

PolyExt poly_from_roots(const std::vector<int>& exponents, const ExtElement& gamma, int n) {
    if (gamma.is_zero() || static_cast<int>(gamma.mult_order()) != n)
        throw InvalidArgumentError("root base does not have order " + std::to_string(n));
    const ExtField& f = gamma.field();
    PolyExt acc(std::vector<ExtElement>{f.one()});
    std::vector<int> sorted(exponents);
    std::sort(sorted.begin(), sorted.end());
    for (int z : sorted) {
        if (z < 0 || z >= n)
            throw InvalidArgumentError("root exponent " + std::to_string(z) + " outside {0.." +
                                       std::to_string(n - 1) + "}");
        // x - gamma^z = x + gamma^z
        PolyExt lin(std::vector<ExtElement>{gamma.pow(z), f.one()});
        acc = poly_mul(acc, lin);
    }
    return acc;
}

ExtElement poly_eval_ext(const PolyGf4& f, const ExtElement& x) {
    return poly_eval(poly_embed(f, x.field()), x);
}

PolyExt poly_embed(const PolyGf4& f, const ExtField& field) {
    std::vector<ExtElement> out;
    out.reserve(f.coeffs().size());
    for (Gf4 c : f.coeffs()) out.push_back(field.embed_gf4(c));
    return PolyExt(std::move(out));
}

PolyGf4 poly_project_gf4(const PolyExt& f) {
    std::vector<Gf4> out;
    out.reserve(f.coeffs().size());
    for (const ExtElement& c : f.coeffs()) out.push_back(c.to_gf4());
    return PolyGf4(std::move(out));
}

PolyGf4 dagger(const PolyGf4& g, int n) {
    if (n < 1) throw InvalidArgumentError("dagger needs a positive length");
    if (g.degree().value_or(-1) >= n)
        throw InvalidArgumentError("dagger requires deg g < n");
    const auto& gc = g.coeffs();
    auto coeff = [&](int i) { return i < static_cast<int>(gc.size()) ? gc[static_cast<std::size_t>(i)] : gf4_zero; };
    std::vector<Gf4> rev(static_cast<std::size_t>(n));
    rev[0] = coeff(0).conj();
    for (int r = 1; r < n; ++r) rev[static_cast<std::size_t>(r)] = coeff(n - r).conj();
    return poly_gcd(PolyGf4(std::move(rev)), poly_xn_minus_1(n, gf4_one));
}

std::string poly_symbols(const PolyGf4& f) {
    std::string s;
    for (Gf4 c : f.coeffs()) s += c.symbol();
    return s;
}

PolyGf4 poly_gf4_from_symbols(const std::string& s) {
    std::vector<Gf4> c;
    c.reserve(s.size());
    for (char ch : s) c.push_back(Gf4::from_symbol(ch));
    return PolyGf4(std::move(c));
}

}  // namespace qc4
