#pragma once

#include "ncinv/errors.hpp"
#include "ncinv/skew_algebra.hpp"

#include <string>
#include <vector>

namespace ncinv {

// x = a_1 - 1/(a_2 - 1/(... - 1/a_N)), a_1 >= 1 and a_i >= 2 afterwards.
struct HJExpansion {
    std::vector<long> entries;
    Rational value() const;
    std::string str() const;  // "[a1, a2, ...]"
};

HJExpansion hj_expand(long num, long den);

// Generators u^{i_k} v^{j_k} of k[u,v]^{1/n(1,a)}, driven by n/(n-a) = [beta_1..beta_{d-2}].
struct TypeAData {
    int n = 0, a = 0, d = 0;
    std::vector<long> beta;  // beta[0] is beta_1
    std::vector<long> i_series, j_series;  // i_series[0] is i_1

    Monomial exponent(int k) const { return {static_cast<int>(i_series[k - 1]), static_cast<int>(j_series[k - 1])}; }
    long b(int m) const { return beta[m - 1]; }  // 1-based beta
};

TypeAData typeA_data(int n, int a);

// Generators of k[u,v]^{D_{m,q}} driven by m/(m-q) = [beta_1..beta_{d-2}].
struct TypeDData {
    int m = 0, q = 0, d = 0;
    std::vector<long> alpha;  // m/q, the resolution graph labels
    std::vector<long> beta;
    std::vector<long> s_series, t_series, r_series;  // length d-1

    // (u^{2qs_k} + (-1)^{t_k} v^{2qs_k})(uv)^{r_k} for k < d, then (uv)^{2(m-q)}; in the commutative plane.
    std::vector<AlgebraElt> generators() const;
};

TypeDData typeD_data(int m, int q);

enum class NCBranch { n_gt_k, n_lt_k };

// Series for the noncommutative invariants of k_{-1}[u,v]^{G_{n,k}}, n and k odd and coprime.
// n > k: d-1 entries, generators x_1..x_{d-1} and (uv)^{2k}.
// n < k: d entries, generators x_1..x_d.
struct NCSeries {
    int n = 0, k = 0, d = 0;
    NCBranch branch = NCBranch::n_gt_k;
    std::vector<long> gamma;  // n/(n+k)/2
    std::vector<long> beta;
    std::vector<long> r_series, s_series, t_series;
    // Which beta feeds the recurrence for s_i: "beta_i" or "beta_{i-1}".
    std::string indexing;

    // (u^{ns} + (-1)^{r+ns} v^{ns})(uv)^r
    static AlgebraElt basis_element(int n, long r, long s);
    std::vector<AlgebraElt> generators() const;
    std::vector<int> generator_degrees() const;
};

NCSeries nc_series(int n, int k);

// Non-negative c with (r, s, t) = sum c_i (r_i, s_i, t_i), by the greedy
// recursion: take the first i with r_i <= r and subtract.
std::vector<long> decompose_triple(const NCSeries& S, long r, long s, long t);

std::string branch_name(NCBranch b);

}  // namespace ncinv
