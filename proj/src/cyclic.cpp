#include "qc4/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qc4/errors.hpp"

namespace qc4 {

CosetPartition cyclotomic_cosets(int n, int q) {
    if (n < 1) throw InvalidArgumentError("coset length must be >= 1");
    if (q < 2) throw InvalidArgumentError("coset multiplier must be >= 2");
    if (std::gcd(q, n) != 1)
        throw InvalidArgumentError("gcd(q, n) must be 1 for cosets to partition (q=" +
                                   std::to_string(q) + ", n=" + std::to_string(n) + ")");
    CosetPartition p;
    p.n = n;
    p.q = q;
    p.coset_index.assign(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (p.coset_index[static_cast<std::size_t>(s)] >= 0) continue;
        std::vector<int> orbit;
        int z = s;
        do {
            orbit.push_back(z);
            p.coset_index[static_cast<std::size_t>(z)] = static_cast<int>(p.cosets.size());
            z = static_cast<int>((static_cast<long long>(z) * q) % n);
        } while (z != s);
        std::sort(orbit.begin(), orbit.end());
        p.cosets.push_back(std::move(orbit));
    }
    return p;
}

std::vector<int> coset_closure(const std::vector<int>& s, const CosetPartition& partition) {
    std::set<int> out;
    for (int z : s) {
        if (z < 0 || z >= partition.n)
            throw InvalidArgumentError("set element " + std::to_string(z) + " outside {0..n-1}");
        const auto& orbit = partition.coset_of(z);
        out.insert(orbit.begin(), orbit.end());
    }
    return std::vector<int>(out.begin(), out.end());
}

bool is_coset_closed(const std::vector<int>& s, const CosetPartition& partition) {
    return coset_closure(s, partition) == [&] {
        std::vector<int> sorted(s);
        std::sort(sorted.begin(), sorted.end());
        return sorted;
    }();
}

namespace {

std::vector<int> sorted_unique_in_range(std::vector<int> v, int n, const char* what) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw InvalidArgumentError(std::string(what) + " contains duplicates");
    if (!v.empty() && (v.front() < 0 || v.back() >= n))
        throw InvalidArgumentError(std::string(what) + " has elements outside {0..n-1}");
    return v;
}

std::vector<int> complement_of(const std::vector<int>& sorted, int n) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - sorted.size());
    std::size_t i = 0;
    for (int z = 0; z < n; ++z) {
        if (i < sorted.size() && sorted[i] == z)
            ++i;
        else
            out.push_back(z);
    }
    return out;
}

// Smallest degree m with n | 4^m - 1 (the splitting field of x^n - 1).
int splitting_degree(int n) {
    for (int m = 1; m <= ExtField::max_degree; ++m) {
        if (((1ll << (2 * m)) - 1) % n == 0) return m;
    }
    throw InvalidArgumentError("length " + std::to_string(n) + " does not divide 4^m - 1 for any m <= " +
                               std::to_string(ExtField::max_degree));
}

}  // namespace

CyclicCodeSpec CyclicCodeSpec::from_zeros(int m, int n, std::vector<int> zeros) {
    if (n < 1) throw InvalidArgumentError("code length must be >= 1");
    if (m < 1) throw InvalidArgumentError("coefficient field degree must be >= 1");
    CyclicCodeSpec s;
    s.m = m;
    s.n = n;
    s.zeros = sorted_unique_in_range(std::move(zeros), n, "zero set");
    s.nonzeros = complement_of(s.zeros, n);
    return s;
}

CyclicCodeSpec CyclicCodeSpec::from_nonzeros(int m, int n, std::vector<int> nonzeros) {
    if (n < 1) throw InvalidArgumentError("code length must be >= 1");
    auto sorted = sorted_unique_in_range(std::move(nonzeros), n, "nonzero set");
    return from_zeros(m, n, complement_of(sorted, n));
}

const PolyGf4& CyclicCode::generator_gf4() const {
    if (spec_.m != 1)
        throw InvalidArgumentError("GF(4) generator requested from a GF(4^" +
                                   std::to_string(spec_.m) + ") code");
    return generator_gf4_;
}

Gf4Mat CyclicCode::genmatrix_gf4() const {
    const PolyGf4& g = generator_gf4();
    Gf4Mat mat(static_cast<std::size_t>(k_), static_cast<std::size_t>(spec_.n));
    const auto& gc = g.coeffs();
    for (int t = 0; t < k_; ++t)
        for (std::size_t j = 0; j < gc.size(); ++j)
            mat.at(static_cast<std::size_t>(t), static_cast<std::size_t>(t) + j) = gc[j];
    return mat;
}

std::vector<std::vector<ExtElement>> CyclicCode::genmatrix_ext() const {
    const ExtField& f = splitting_field();
    const auto& gc = generator_ext_.coeffs();
    std::vector<std::vector<ExtElement>> rows;
    rows.reserve(static_cast<std::size_t>(k_));
    for (int t = 0; t < k_; ++t) {
        std::vector<ExtElement> row(static_cast<std::size_t>(spec_.n), f.zero());
        for (std::size_t j = 0; j < gc.size(); ++j) row[static_cast<std::size_t>(t) + j] = gc[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ExtElement> CyclicCode::codeword(const PolyExt& msg) const {
    if (msg.degree().value_or(-1) >= k_)
        throw InvalidArgumentError("message degree must be below the code dimension");
    const ExtField& f = splitting_field();
    PolyExt c = poly_mul(msg, generator_ext_);
    std::vector<ExtElement> out(static_cast<std::size_t>(spec_.n), f.zero());
    const auto& cc = c.coeffs();
    for (std::size_t i = 0; i < cc.size(); ++i) out[i] = cc[i];
    return out;
}

CyclicCode code_from_zeros(const CyclicCodeSpec& spec) {
    CyclicCode code;
    code.spec_ = spec;

    if (spec.m > 1) {
        // Roots live in the coefficient field itself.
        if (((1ll << (2 * spec.m)) - 1) % spec.n != 0)
            throw InvalidArgumentError("length " + std::to_string(spec.n) + " does not divide 4^" +
                                       std::to_string(spec.m) + " - 1");
        code.splitting_m_ = spec.m;
    } else {
        code.splitting_m_ = splitting_degree(spec.n);
        const auto partition = cyclotomic_cosets(spec.n, 4);
        if (!is_coset_closed(spec.zeros, partition))
            throw InvalidArgumentError(
                "zero set is not a union of cyclotomic cosets mod " + std::to_string(spec.n) +
                "; the generator polynomial would not have GF(4) coefficients");
    }

    const ExtField& split = ExtField::get(code.splitting_m_);
    code.gamma_ = split.primitive_nth_root(spec.n);
    code.generator_ext_ = poly_from_roots(spec.zeros, code.gamma_, spec.n);
    code.k_ = spec.n - static_cast<int>(spec.zeros.size());
    if (spec.m == 1) code.generator_gf4_ = poly_project_gf4(code.generator_ext_);
    return code;
}

MaximalFactor maximal_factor(const CyclicCode& code, const CosetPartition& partition) {
    if (partition.n != code.n()) throw InvalidArgumentError("partition length mismatch");
    const auto& zeros = code.spec().zeros;
    std::set<int> zset(zeros.begin(), zeros.end());

    MaximalFactor out;
    for (const auto& coset : partition.cosets) {
        const bool inside = std::all_of(coset.begin(), coset.end(),
                                        [&](int z) { return zset.count(z) > 0; });
        if (inside) out.z_q.insert(out.z_q.end(), coset.begin(), coset.end());
    }
    std::sort(out.z_q.begin(), out.z_q.end());

    const PolyExt g_q_ext = poly_from_roots(out.z_q, code.gamma(), code.n());
    PolyGf4 projected;
    try {
        projected = poly_project_gf4(g_q_ext);
    } catch (const InvalidArgumentError&) {
        throw Error("maximal factor has a coefficient outside GF(4); coset bookkeeping is broken");
    }
    out.g_q = std::move(projected);

    std::vector<int> rest;
    std::set_difference(zeros.begin(), zeros.end(), out.z_q.begin(), out.z_q.end(),
                        std::back_inserter(rest));
    out.g_q_prime = poly_from_roots(rest, code.gamma(), code.n());

    if (poly_mul(g_q_ext, out.g_q_prime) != code.generator_ext())
        throw Error("maximal factor does not divide the generator exactly");
    return out;
}

CyclicCode trace_code(const CyclicCode& code, const CosetPartition& partition) {
    const MaximalFactor mf = maximal_factor(code, partition);
    return code_from_zeros(CyclicCodeSpec::from_zeros(1, code.n(), mf.z_q));
}

std::vector<Gf4> trace_vector(const std::vector<ExtElement>& word) {
    std::vector<Gf4> out;
    out.reserve(word.size());
    for (const auto& x : word) out.push_back(x.trace_to_base());
    return out;
}

std::vector<int> hermitian_dual_zero_set(const std::vector<int>& nonzeros, int n) {
    std::set<int> out;
    for (int s : nonzeros) {
        if (s < 0 || s >= n)
            throw InvalidArgumentError("set element " + std::to_string(s) + " outside {0..n-1}");
        out.insert(((-2 * s) % n + n) % n);
    }
    return std::vector<int>(out.begin(), out.end());
}

CyclicCode hermitian_dual_code(const CyclicCode& code) {
    if (code.m() != 1)
        throw InvalidArgumentError("hermitian dual is defined here for GF(4) codes only");
    return code_from_zeros(CyclicCodeSpec::from_zeros(
        1, code.n(), hermitian_dual_zero_set(code.spec().nonzeros, code.n())));
}

int bch_bound(const std::vector<int>& zeros, int n) {
    if (zeros.empty()) return 1;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int z : zeros) {
        if (z < 0 || z >= n)
            throw InvalidArgumentError("zero " + std::to_string(z) + " outside {0..n-1}");
        in[static_cast<std::size_t>(z)] = true;
    }
    if (static_cast<int>(zeros.size()) == n) return n + 1;  // zero code
    int best = 0;
    int run = 0;
    // walk two laps to catch runs that wrap around
    for (int i = 0; i < 2 * n; ++i) {
        if (in[static_cast<std::size_t>(i % n)]) {
            run = std::min(run + 1, n);
            best = std::max(best, run);
        } else {
            run = 0;
        }
    }
    return best + 1;
}

}  // namespace qc4
