#include "ncinv/hj_series.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace ncinv {

Rational HJExpansion::value() const {
    if (entries.empty()) throw std::invalid_argument("empty continued fraction");
    Rational x(entries.back());
    for (size_t i = entries.size() - 1; i-- > 0;) x = Rational(entries[i]) - 1 / x;
    return x;
}

std::string HJExpansion::str() const {
    std::string s = "[";
    for (size_t i = 0; i < entries.size(); ++i) s += (i ? ", " : "") + std::to_string(entries[i]);
    return s + "]";
}

HJExpansion hj_expand(long num, long den) {
    if (num <= 0 || den <= 0) throw std::invalid_argument("continued fraction needs positive numerator and denominator");
    HJExpansion out;
    long p = num, q = den;
    while (true) {
        long a = (p + q - 1) / q;  // ceiling
        out.entries.push_back(a);
        long rem = a * q - p;  // value of a - p/q is rem/q
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    if (out.value() != Rational(num, den)) throw InternalInconsistency("continued fraction does not reconstruct its input");
    return out;
}

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InternalInconsistency(what);
}

}  // namespace

TypeAData typeA_data(int n, int a) {
    if (!(1 <= a && a < n) || std::gcd(n, a) != 1) throw std::invalid_argument("type A data needs 1 <= a < n and gcd(a, n) = 1");
    TypeAData D;
    D.n = n;
    D.a = a;
    D.beta = hj_expand(n, n - a).entries;
    D.d = static_cast<int>(D.beta.size()) + 2;
    D.i_series = {n, n - a};
    D.j_series = {0, 1};
    for (int k = 3; k <= D.d; ++k) {
        long b = D.b(k - 2);
        D.i_series.push_back(b * D.i_series[k - 2] - D.i_series[k - 3]);
        D.j_series.push_back(b * D.j_series[k - 2] - D.j_series[k - 3]);
    }
    require(D.i_series.back() == 0 && D.j_series.back() == n, "type A series do not end at (0, n)");
    for (int k = 1; k <= D.d; ++k) {
        require(D.i_series[k - 1] >= 0 && D.j_series[k - 1] >= 0, "type A exponent is negative");
        require((D.i_series[k - 1] + a * D.j_series[k - 1]) % n == 0, "type A monomial is not invariant");
    }
    return D;
}

TypeDData typeD_data(int m, int q) {
    if (!(1 < q && q < m) || std::gcd(m, q) != 1) throw std::invalid_argument("type D data needs 1 < q < m and gcd(m, q) = 1");
    TypeDData D;
    D.m = m;
    D.q = q;
    D.alpha = hj_expand(m, q).entries;
    D.beta = hj_expand(m, m - q).entries;
    D.d = static_cast<int>(D.beta.size()) + 2;
    auto b = [&](int i) { return D.beta[i - 1]; };
    D.s_series = {1, 1};
    D.t_series = {b(1), b(1) - 1};
    for (int k = 3; k <= D.d - 1; ++k) {
        if (k == 3) {
            D.s_series.push_back(b(2));
            D.t_series.push_back(b(2) * (b(1) - 1) - 1);
        } else {
            D.s_series.push_back(b(k - 1) * D.s_series[k - 2] - D.s_series[k - 3]);
            D.t_series.push_back(b(k - 1) * D.t_series[k - 2] - D.t_series[k - 3]);
        }
    }
    for (int k = 0; k < D.d - 1; ++k) {
        D.r_series.push_back(static_cast<long>(m - q) * D.t_series[k] - static_cast<long>(q) * D.s_series[k]);
        require(D.r_series.back() >= 0, "type D r-series entry is negative");
    }
    return D;
}

std::vector<AlgebraElt> TypeDData::generators() const {
    std::vector<AlgebraElt> out;
    for (int k = 0; k < d - 1; ++k) {
        int e = static_cast<int>(2 * q * s_series[k]), r = static_cast<int>(r_series[k]);
        AlgebraElt x = AlgebraElt::monomial(e + r, r);
        x.add_term({r, e + r}, CycloScalar(t_series[k] % 2 ? -1 : 1));
        out.push_back(x);
    }
    out.push_back(AlgebraElt::monomial(2 * (m - q), 2 * (m - q)));
    return out;
}

std::string branch_name(NCBranch b) { return b == NCBranch::n_gt_k ? "n_gt_k" : "n_lt_k"; }

namespace {

// Runs the shared three-term recurrence; beta_at(i) supplies the multiplier for entry i (1-based),
// returning 0 when it is out of range.
bool run_recurrence(NCSeries& S, int len, long s1, long s2, long t1, long t2, const std::function<long(int)>& beta_at) {
    S.s_series = {s1, s2};
    S.t_series = {t1, t2};
    for (int i = 3; i <= len; ++i) {
        long b = beta_at(i);
        if (b == 0) return false;
        S.s_series.push_back(b * S.s_series[i - 2] - S.s_series[i - 3]);
        S.t_series.push_back(b * S.t_series[i - 2] - S.t_series[i - 3]);
    }
    S.r_series.clear();
    for (int i = 0; i < len; ++i) {
        long twice = static_cast<long>(S.k) * S.t_series[i] - static_cast<long>(S.n) * S.s_series[i];
        if (twice % 2 != 0) return false;
        S.r_series.push_back(twice / 2);
    }
    return true;
}

void check_nc(const NCSeries& S) {
    const auto &r = S.r_series, &s = S.s_series, &t = S.t_series;
    size_t L = r.size();
    long n = S.n, k = S.k;
    require(L >= 2, "series too short");
    for (size_t i = 0; i + 1 < L; ++i) {
        require(r[i] > r[i + 1], "r-series is not strictly decreasing");
        require(r[i] * s[i + 1] - r[i + 1] * s[i] == k, "r/s cross identity fails");
        require(r[i] * t[i + 1] - r[i + 1] * t[i] == n, "r/t cross identity fails");
    }
    require(r[L - 1] == 0 && r[L - 2] == 1, "r-series does not end with 1, 0");
    require(s[L - 1] == k && t[L - 1] == n, "s and t do not end at k and n");
    for (size_t i = 0; i < L; ++i) require(2 * r[i] + n * s[i] == k * t[i], "2r + ns = kt fails");
    if (S.branch == NCBranch::n_lt_k) require(r[0] == (3 * k - n) / 2 && r[1] == (k - n) / 2, "r_1, r_2 differ from (3k-n)/2, (k-n)/2");
}

}  // namespace

NCSeries nc_series(int n, int k) {
    if (n <= 0 || k <= 0 || n % 2 == 0 || k % 2 == 0) throw std::invalid_argument("noncommutative series need odd positive n and k");
    if (std::gcd(n, k) != 1) throw std::invalid_argument("noncommutative series need coprime n and k");
    if (n == k) throw std::invalid_argument("noncommutative series need n != k");
    NCSeries S;
    S.n = n;
    S.k = k;
    S.gamma = hj_expand(n, (n + k) / 2).entries;
    S.d = static_cast<int>(S.gamma.size()) + 1;
    S.beta = S.gamma;
    int len;
    long t1, t2;
    if (n > k) {
        S.branch = NCBranch::n_gt_k;
        if (S.beta.size() >= 3) S.beta[2] += 1;
        len = S.d - 1;
        t1 = 2 * S.beta[1] + 1;
        t2 = 2 * S.beta[1] - 1;
    } else {
        S.branch = NCBranch::n_lt_k;
        S.beta[1] += 2;
        len = S.d;
        t1 = 3;
        t2 = 1;
    }
    auto beta = [&](int i) -> long { return i >= 1 && i <= static_cast<int>(S.beta.size()) ? S.beta[i - 1] : 0; };
    // The n > k block is indexed by beta_i; for n < k pick whichever indexing reaches (s, t) = (k, n).
    std::vector<std::pair<std::string, std::function<long(int)>>> choices{
        {"beta_i", [&](int i) { return beta(i); }}, {"beta_{i-1}", [&](int i) { return beta(i - 1); }}};
    if (S.branch == NCBranch::n_lt_k) std::swap(choices[0], choices[1]);
    for (auto& [name, f] : choices) {
        if (!run_recurrence(S, len, 1, 1, t1, t2, f)) continue;
        if (S.s_series.back() != k || S.t_series.back() != n) continue;
        S.indexing = name;
        break;
    }
    if (S.indexing.empty()) throw InternalInconsistency("no recurrence indexing reaches s = k, t = n");
    check_nc(S);
    return S;
}

AlgebraElt NCSeries::basis_element(int n, long r, long s) {
    // product taken in k_{-1}[u,v], so reordering signs are included
    auto A = AlgebraSpec::quantum(CycloScalar(-1));
    int e = static_cast<int>(n * s);
    AlgebraElt head = AlgebraElt::monomial(e, 0);
    head.add_term({0, e}, CycloScalar((r + n * s) % 2 ? -1 : 1));
    return mul(A, head, power(A, AlgebraElt::monomial(1, 1), static_cast<int>(r)));
}

std::vector<AlgebraElt> NCSeries::generators() const {
    std::vector<AlgebraElt> out;
    for (size_t i = 0; i < r_series.size(); ++i) out.push_back(basis_element(n, r_series[i], s_series[i]));
    if (branch == NCBranch::n_gt_k) out.push_back(power(AlgebraSpec::quantum(CycloScalar(-1)), AlgebraElt::monomial(1, 1), 2 * k));
    return out;
}

std::vector<int> NCSeries::generator_degrees() const {
    std::vector<int> out;
    for (size_t i = 0; i < r_series.size(); ++i) out.push_back(static_cast<int>(n * s_series[i] + 2 * r_series[i]));
    if (branch == NCBranch::n_gt_k) out.push_back(4 * k);
    return out;
}

std::vector<long> decompose_triple(const NCSeries& S, long r, long s, long t) {
    if (2 * r + S.n * s != S.k * t || r < 0 || r >= 2L * S.k || s < 1 || t < 1)
        throw std::invalid_argument("triple needs 2r + ns = kt, 0 <= r < 2k and s, t >= 1");
    const auto &R = S.r_series, &Ss = S.s_series, &T = S.t_series;
    std::vector<long> c(R.size(), 0);
    while (r > 0) {
        size_t i = 0;
        while (i < R.size() && R[i] > r) ++i;
        r -= R[i];
        s -= Ss[i];
        t -= T[i];
        c[i] += 1;
        if (s < 0 || t < 0) throw std::invalid_argument("greedy decomposition left a negative remainder");
    }
    // r = 0 forces s = mk, t = mn; the last entry is (0, k, n)
    size_t last = R.size() - 1;
    if (s % S.k != 0 || s / S.k * S.n != t) throw std::invalid_argument("no decomposition: remainder is not a multiple of (0, k, n)");
    c[last] += s / S.k;
    return c;
}

}  // namespace ncinv
