#include "ncinv/scalars.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace ncinv {

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string IntPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs[i];
        if (c == 0) continue;
        Integer a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1 || i == 0) out += a.get_str();
        if (i > 0) {
            if (a != 1) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

long euler_phi(long m) {
    long r = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long mod_floor(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

namespace {

IntPolynomial exact_divide(IntPolynomial a, const IntPolynomial& b) {
    // b is monic
    int db = b.degree();
    IntPolynomial q;
    if (a.degree() < db) return q;
    q.coeffs.assign(a.degree() - db + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        Integer c = a.coeffs[i];
        if (c == 0) continue;
        q.coeffs[i - db] = c;
        for (int j = 0; j <= db; ++j) a.coeffs[i - db + j] -= c * b.coeffs[j];
    }
    a.trim();
    if (!a.coeffs.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

// Per-order data: Phi_m, its sparse support, and the table of all m-th roots.
struct Field {
    long m = 1;
    int phi = 1;
    std::vector<Integer> poly;                   // Phi_m, low first, monic
    std::vector<std::pair<int, Integer>> tail;   // nonzero (i, c_i) for i < phi
    std::vector<CycloScalar> roots;              // w^e for 0 <= e < m
};

std::mutex field_mutex;
std::map<long, std::unique_ptr<Field>> field_cache;
std::map<long, IntPolynomial> cyclo_cache;

IntPolynomial cyclotomic_locked(long m) {
    auto it = cyclo_cache.find(m);
    if (it != cyclo_cache.end()) return it->second;
    IntPolynomial num;
    num.coeffs.assign(m + 1, 0);
    num.coeffs[0] = -1;
    num.coeffs[m] = 1;
    IntPolynomial den;
    den.coeffs = {1};
    for (long d = 1; d < m; ++d)
        if (m % d == 0) den = multiply(den, cyclotomic_locked(d));
    IntPolynomial r = exact_divide(num, den);
    cyclo_cache.emplace(m, r);
    return r;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(long m) {
    if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(field_mutex);
    return cyclotomic_locked(m);
}

struct CycloAccess {
    static const Field& field(long m);
    static CycloScalar make(long m, std::vector<Integer> num, Integer den) {
        CycloScalar r;
        r.m_ = m;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        r.normalize();
        return r;
    }
    static const std::vector<Integer>& num(const CycloScalar& x) { return x.num_; }
    static const Integer& den(const CycloScalar& x) { return x.den_; }
};

const Field& CycloAccess::field(long m) {
    {
        std::lock_guard<std::mutex> lock(field_mutex);
        auto it = field_cache.find(m);
        if (it != field_cache.end()) return *it->second;
    }
    IntPolynomial p = cyclotomic_polynomial(m);
    auto f = std::make_unique<Field>();
    f->m = m;
    f->phi = p.degree();
    f->poly = p.coeffs;
    for (int i = 0; i < f->phi; ++i)
        if (p.coeffs[i] != 0) f->tail.emplace_back(i, p.coeffs[i]);
    // Roots by repeated multiplication by x: shift, then fold x^phi back.
    std::vector<Integer> cur(f->phi, 0);
    cur[0] = 1;
    f->roots.reserve(m);
    for (long e = 0; e < m; ++e) {
        CycloScalar r;
        r.m_ = m;
        r.num_ = cur;
        r.den_ = 1;
        r.normalize();
        f->roots.push_back(std::move(r));
        Integer top = cur[f->phi - 1];
        for (int i = f->phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (auto& [i, c] : f->tail) cur[i] -= top * c;
    }
    std::lock_guard<std::mutex> lock(field_mutex);
    auto [it, inserted] = field_cache.emplace(m, std::move(f));
    return *it->second;
}

CycloScalar::CycloScalar() : num_{0} {}
CycloScalar::CycloScalar(long v) : num_{Integer(v)} {}
CycloScalar::CycloScalar(const Rational& v) : num_{v.get_num()}, den_(v.get_den()) {}

CycloScalar CycloScalar::root_of_unity(long m, long e) {
    if (m < 1) throw std::invalid_argument("root of unity order must be positive");
    e = mod_floor(e, m);
    long g = std::gcd(e, m);
    long mm = m / g, ee = e / g;
    if (mm == 1) return CycloScalar(1);
    if (mm == 2) return CycloScalar(-1);
    return CycloAccess::field(mm).roots[ee];
}

void CycloScalar::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& c : num_) c = -c;
    }
    Integer g = den_;
    for (auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    bool all_zero = true;
    for (auto& c : num_)
        if (c != 0) all_zero = false;
    if (all_zero) {
        m_ = 1;
        num_.assign(1, 0);
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
    if (m_ != 1) {
        bool rational = true;
        for (size_t i = 1; i < num_.size(); ++i)
            if (num_[i] != 0) {
                rational = false;
                break;
            }
        if (rational) {
            m_ = 1;
            num_.resize(1);
        }
    }
}

std::vector<Rational> CycloScalar::coeffs() const {
    std::vector<Rational> r;
    r.reserve(num_.size());
    for (auto& c : num_) {
        Rational q(c, den_);
        q.canonicalize();
        r.push_back(q);
    }
    return r;
}

Rational CycloScalar::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(num_.size())) return 0;
    Rational q(num_[i], den_);
    q.canonicalize();
    return q;
}

bool CycloScalar::is_zero() const { return m_ == 1 && num_[0] == 0; }
bool CycloScalar::is_one() const { return m_ == 1 && num_[0] == 1 && den_ == 1; }

Rational CycloScalar::to_rational() const {
    if (m_ != 1) throw std::logic_error("cyclotomic value is not rational: " + str());
    Rational q(num_[0], den_);
    q.canonicalize();
    return q;
}

CycloScalar CycloScalar::promote(long M) const {
    if (M % m_ != 0) throw std::invalid_argument("promotion target is not a multiple of the order");
    if (M == m_ || m_ == 1) {
        if (m_ == 1 && M != 1) {
            // rationals stay at order 1 by the canonical form
        }
        return *this;
    }
    const Field& F = CycloAccess::field(M);
    long step = M / m_;
    std::vector<Integer> out(F.phi, 0);
    for (size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        const CycloScalar& r = F.roots[(i * step) % M];
        const auto& rn = CycloAccess::num(r);
        // roots are integral, so their stored denominator is 1
        for (size_t j = 0; j < rn.size(); ++j)
            if (rn[j] != 0) out[j] += num_[i] * rn[j];
    }
    CycloScalar r;
    r.m_ = M;
    r.num_ = std::move(out);
    r.den_ = den_;
    r.normalize();
    return r;
}

namespace {

// Bring two elements to a common order, returning that order.
long common_order(const CycloScalar& a, const CycloScalar& b) {
    return lcm_long(a.order(), b.order());
}

}  // namespace

CycloScalar CycloScalar::operator-() const {
    CycloScalar r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long M = common_order(*this, o);
    if (m_ != M && m_ != 1) *this = promote(M);
    const CycloScalar* rhs = &o;
    CycloScalar tmp;
    if (o.m_ != M && o.m_ != 1) {
        tmp = o.promote(M);
        rhs = &tmp;
    }
    if (m_ == 1 && M != 1) {
        num_.resize(CycloAccess::field(M).phi, 0);
        m_ = M;
    }
    if (den_ == rhs->den_) {
        for (size_t i = 0; i < rhs->num_.size(); ++i) num_[i] += rhs->num_[i];
    } else {
        Integer g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), rhs->den_.get_mpz_t());
        Integer fa = rhs->den_ / g, fb = den_ / g;
        for (auto& c : num_) c *= fa;
        for (size_t i = 0; i < rhs->num_.size(); ++i) num_[i] += rhs->num_[i] * fb;
        den_ *= fa;
    }
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

void CycloScalar::mul_rational(const Integer& n, const Integer& d) {
    for (auto& c : num_) c *= n;
    den_ *= d;
    normalize();
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    if (is_zero() || o.is_zero()) return *this = CycloScalar();
    if (o.m_ == 1) {
        mul_rational(o.num_[0], o.den_);
        return *this;
    }
    if (m_ == 1) {
        CycloScalar r = o;
        r.mul_rational(num_[0], den_);
        return *this = r;
    }
    long M = common_order(*this, o);
    CycloScalar a = m_ == M ? *this : promote(M);
    CycloScalar b = o.m_ == M ? o : o.promote(M);
    const Field& F = CycloAccess::field(M);
    int phi = F.phi;
    std::vector<Integer> prod(2 * phi - 1, 0);
    for (int i = 0; i < phi; ++i) {
        if (a.num_[i] == 0) continue;
        for (int j = 0; j < phi; ++j)
            if (b.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
    for (int t = 2 * phi - 2; t >= phi; --t) {
        if (prod[t] == 0) continue;
        Integer c = prod[t];
        prod[t] = 0;
        for (auto& [i, pc] : F.tail) mpz_submul(prod[t - phi + i].get_mpz_t(), c.get_mpz_t(), pc.get_mpz_t());
    }
    prod.resize(phi);
    m_ = M;
    num_ = std::move(prod);
    den_ = a.den_ * b.den_;
    normalize();
    return *this;
}

namespace {

using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q b + r.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    QPoly q;
    qtrim(a);
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {q, a};
    q.assign(a.size() - db, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        if (a[i] == 0) continue;
        Rational c = a[i] / b[db];
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    qtrim(a);
    return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qtrim(a);
    return a;
}

}  // namespace

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (m_ == 1) {
        CycloScalar r;
        r.num_[0] = den_;
        r.den_ = num_[0];
        r.normalize();
        return r;
    }
    const Field& F = CycloAccess::field(m_);
    // Extended Euclid on (a, Phi): track s with s*a = r (mod Phi).
    QPoly r0, r1;
    for (auto& c : F.poly) r0.push_back(Rational(c));
    for (auto& c : num_) r1.push_back(Rational(c, den_));
    for (auto& c : r1) c.canonicalize();
    qtrim(r1);
    QPoly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = qdivmod(r0, r1);
        QPoly s = qsub(s0, qmul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r1.empty()) throw std::logic_error("cyclotomic polynomial is reducible against element");
    Rational c = r1[0];
    std::vector<Rational> inv(F.phi, 0);
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / c;
    Integer den = 1;
    for (auto& x : inv) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> num(F.phi);
    for (int i = 0; i < F.phi; ++i) num[i] = inv[i].get_num() * (den / inv[i].get_den());
    return CycloAccess::make(m_, std::move(num), den);
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& o) {
    if (o.is_zero()) throw DivisionByZero();
    return *this *= o.inverse();
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ == b.m_) return a.den_ == b.den_ && a.num_ == b.num_;
    if (a.m_ == 1 || b.m_ == 1) return false;
    long M = lcm_long(a.m_, b.m_);
    CycloScalar pa = a.promote(M), pb = b.promote(M);
    return pa.m_ == pb.m_ && pa.den_ == pb.den_ && pa.num_ == pb.num_;
}

CycloScalar CycloScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloScalar base = *this, r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

long CycloScalar::root_order() const {
    if (is_zero()) return 0;
    // Roots of unity in Q(w_m) have order dividing lcm(2, m).
    long L = lcm_long(2, m_);
    if (!pow(L).is_one()) return 0;
    for (long r = 1; r <= L; ++r)
        if (L % r == 0 && pow(r).is_one()) return r;
    return 0;
}

std::string rational_str(const Rational& r) {
    Rational q = r;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string CycloScalar::str() const {
    if (m_ == 1) return rational_str(to_rational());
    std::string s = "[";
    auto cs = coeffs();
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ", ";
        s += rational_str(cs[i]);
    }
    return s + "]@" + std::to_string(m_);
}

CycloScalar cyclo_arith(const CycloScalar& a, const CycloScalar& b, CycloOp op) {
    switch (op) {
        case CycloOp::add: return a + b;
        case CycloOp::sub: return a - b;
        case CycloOp::mul: return a * b;
        case CycloOp::div: return a / b;
        case CycloOp::pow: {
            Rational e = b.to_rational();
            if (e.get_den() != 1) throw std::invalid_argument("exponent must be an integer");
            return a.pow(e.get_num().get_si());
        }
    }
    throw std::invalid_argument("unknown operation");
}

Rational gen_binomial(const Rational& alpha, long k) {
    if (k < 0) throw std::invalid_argument("binomial index must be non-negative");
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= (alpha - i);
    r /= Rational(factorial(k));
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace ncinv
