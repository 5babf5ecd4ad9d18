// Cyclic codes over GF(4) and GF(4^m): cyclotomic cosets, zero/nonzero sets,
// generator polynomial and matrix, the maximal GF(4) factor, trace codes,
// hermitian duals and the BCH bound.
#pragma once

#include <vector>

#include "qc4/ext_field.hpp"
#include "qc4/matrix.hpp"
#include "qc4/poly.hpp"

namespace qc4 {

struct CosetPartition {
    int n = 0;
    int q = 4;
    std::vector<std::vector<int>> cosets;  // ordered by minimum element, each sorted
    std::vector<int> coset_index;          // z -> position in cosets

    const std::vector<int>& coset_of(int z) const { return cosets[static_cast<std::size_t>(coset_index[static_cast<std::size_t>(z)])]; }
};

// Orbits of {0..n-1} under multiplication by q mod n; requires gcd(q, n) = 1.
CosetPartition cyclotomic_cosets(int n, int q = 4);

// Union of all cosets meeting S.
std::vector<int> coset_closure(const std::vector<int>& s, const CosetPartition& partition);
bool is_coset_closed(const std::vector<int>& s, const CosetPartition& partition);

// A cyclic code of length n over GF(4^m), given by its zero set. m = 1 means a
// plain GF(4) code whose roots live in the smallest extension with
// n | 4^m' - 1; for m > 1 the length must divide 4^m - 1.
struct CyclicCodeSpec {
    int m = 1;
    int n = 0;
    std::vector<int> zeros;     // sorted
    std::vector<int> nonzeros;  // sorted complement

    static CyclicCodeSpec from_zeros(int m, int n, std::vector<int> zeros);
    static CyclicCodeSpec from_nonzeros(int m, int n, std::vector<int> nonzeros);

    friend bool operator==(const CyclicCodeSpec& a, const CyclicCodeSpec& b) = default;
};

class CyclicCode {
   public:
    const CyclicCodeSpec& spec() const { return spec_; }
    int m() const { return spec_.m; }
    int n() const { return spec_.n; }
    int k() const { return k_; }

    const ExtField& splitting_field() const { return ExtField::get(splitting_m_); }
    const ExtElement& gamma() const { return gamma_; }

    // Generator over the splitting field (always available).
    const PolyExt& generator_ext() const { return generator_ext_; }
    // Generator with GF(4) coefficients; only for m = 1 codes.
    const PolyGf4& generator_gf4() const;

    // k x n generator matrix whose rows are the cyclic shifts x^t g(x).
    Gf4Mat genmatrix_gf4() const;  // m = 1 only
    std::vector<std::vector<ExtElement>> genmatrix_ext() const;

    // c(x) = msg(x) * g(x) as a length-n coefficient vector; deg msg < k.
    std::vector<ExtElement> codeword(const PolyExt& msg) const;

   private:
    friend CyclicCode code_from_zeros(const CyclicCodeSpec& spec);
    CyclicCodeSpec spec_;
    int splitting_m_ = 1;
    int k_ = 0;
    ExtElement gamma_;
    PolyExt generator_ext_;
    PolyGf4 generator_gf4_;  // valid when m == 1
};

CyclicCode code_from_zeros(const CyclicCodeSpec& spec);

struct MaximalFactor {
    PolyGf4 g_q;              // product over Z_q, projected to GF(4)
    std::vector<int> z_q;     // union of cosets wholly contained in the zero set
    PolyExt g_q_prime;        // cofactor with g = g_q * g_q_prime over the splitting field
};

MaximalFactor maximal_factor(const CyclicCode& code, const CosetPartition& partition);

// T_m(C): the GF(4) cyclic code generated by g_q, of dimension n - deg g_q.
CyclicCode trace_code(const CyclicCode& code, const CosetPartition& partition);

// Coordinatewise trace of a codeword down to GF(4).
std::vector<Gf4> trace_vector(const std::vector<ExtElement>& word);

// Zero set {-2s mod n : s in S} of the hermitian dual of the GF(4) cyclic code
// with nonzero set S.
std::vector<int> hermitian_dual_zero_set(const std::vector<int>& nonzeros, int n);

CyclicCode hermitian_dual_code(const CyclicCode& code);  // m = 1 only

// L + 1 where L is the longest cyclic run of consecutive integers in zeros.
int bch_bound(const std::vector<int>& zeros, int n);

}  // namespace qc4
