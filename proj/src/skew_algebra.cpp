#include "ncinv/skew_algebra.hpp"

namespace ncinv {

AlgebraSpec AlgebraSpec::quantum(const CycloScalar& q) {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    AlgebraSpec s;
    s.kind_ = AlgebraKind::quantum;
    s.q_ = q;
    s.q_order_ = q.root_order();
    if (s.q_order_ > 0) {
        auto table = std::make_shared<std::vector<CycloScalar>>();
        CycloScalar p(1);
        for (long e = 0; e < s.q_order_; ++e) {
            table->push_back(p);
            p *= q;
        }
        s.q_powers_ = table;
    }
    return s;
}

AlgebraSpec AlgebraSpec::jordan() {
    AlgebraSpec s;
    s.kind_ = AlgebraKind::jordan;
    return s;
}

CycloScalar AlgebraSpec::q_pow(long e) const {
    if (q_powers_) return (*q_powers_)[mod_floor(e, q_order_)];
    return q_.pow(e);
}

std::string AlgebraSpec::str() const {
    if (is_jordan()) return "jordan";
    return "quantum(" + q_.str() + ")";
}

AlgebraElt AlgebraElt::monomial(int i, int j, const CycloScalar& c) {
    AlgebraElt a;
    if (!c.is_zero()) a.terms_.emplace(Monomial{i, j}, c);
    return a;
}

CycloScalar AlgebraElt::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? CycloScalar() : it->second;
}

void AlgebraElt::add_term(const Monomial& m, const CycloScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int AlgebraElt::degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (auto& [m, c] : terms_)
        if (m.degree() != d) throw std::logic_error("element is not homogeneous");
    return d;
}

bool AlgebraElt::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

AlgebraElt& AlgebraElt::operator+=(const AlgebraElt& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

AlgebraElt& AlgebraElt::operator-=(const AlgebraElt& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

AlgebraElt& AlgebraElt::operator*=(const CycloScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= c;
    return *this;
}

AlgebraElt AlgebraElt::operator-() const {
    AlgebraElt r = *this;
    for (auto& [m, x] : r.terms_) x = -x;
    return r;
}

bool AlgebraElt::operator==(const AlgebraElt& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (auto& [m, c] : terms_) {
        if (!(m == it->first) || !(c == it->second)) return false;
        ++it;
    }
    return true;
}

std::string AlgebraElt::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (m.i) s += " * u^" + std::to_string(m.i);
        if (m.j) s += " * v^" + std::to_string(m.j);
    }
    return s;
}

namespace {

// k! C(c+k-1, k) C(b, k): coefficient of u^{c+k} v^{b-k} in v^b u^c.
Integer jordan_coeff(int b, int c, int k) {
    if (c == 0) return k == 0 ? 1 : 0;
    return factorial(k) * binomial(c + k - 1, k) * binomial(b, k);
}

}  // namespace

void mul_monomials_into(const AlgebraSpec& spec, const Monomial& a, const Monomial& b, const CycloScalar& c,
                        AlgebraElt& out) {
    if (spec.is_quantum()) {
        long e = static_cast<long>(a.j) * b.i;
        if (e == 0 || spec.is_commutative())
            out.add_term({a.i + b.i, a.j + b.j}, c);
        else
            out.add_term({a.i + b.i, a.j + b.j}, c * spec.q_pow(e));
        return;
    }
    int kmax = b.i == 0 ? 0 : a.j;
    for (int k = 0; k <= kmax; ++k) {
        Integer w = jordan_coeff(a.j, b.i, k);
        if (w == 0) continue;
        out.add_term({a.i + b.i + k, a.j - k + b.j}, c * CycloScalar(Rational(w)));
    }
}

AlgebraElt reorder(const AlgebraSpec& spec, int i, int j) {
    AlgebraElt out;
    mul_monomials_into(spec, {0, i}, {j, 0}, CycloScalar(1), out);
    return out;
}

AlgebraElt mul(const AlgebraSpec& spec, const AlgebraElt& a, const AlgebraElt& b) {
    AlgebraElt out;
    for (auto& [ma, ca] : a.terms())
        for (auto& [mb, cb] : b.terms()) mul_monomials_into(spec, ma, mb, ca * cb, out);
    return out;
}

AlgebraElt power(const AlgebraSpec& spec, const AlgebraElt& a, int e) {
    if (e < 0) throw std::invalid_argument("negative power in the algebra");
    AlgebraElt r = AlgebraElt::scalar(CycloScalar(1)), base = a;
    while (e > 0) {
        if (e & 1) r = mul(spec, r, base);
        e >>= 1;
        if (e) base = mul(spec, base, base);
    }
    return r;
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

bool mat_equal(const Mat2& x, const Mat2& y) {
    for (int i = 0; i < 4; ++i)
        if (!(x[i] == y[i])) return false;
    return true;
}

CycloScalar mat_det(const Mat2& x) { return x[0] * x[3] - x[1] * x[2]; }

Mat2 mat_identity() { return {CycloScalar(1), CycloScalar(0), CycloScalar(0), CycloScalar(1)}; }

std::string mat_str(const Mat2& x) {
    return "[[" + x[0].str() + ", " + x[1].str() + "], [" + x[2].str() + ", " + x[3].str() + "]]";
}

namespace {

// Words of length two indexed 2x + y with u = 0, v = 1.
std::array<CycloScalar, 4> relation_vector(const AlgebraSpec& spec) {
    if (spec.is_jordan()) return {CycloScalar(-1), CycloScalar(-1), CycloScalar(1), CycloScalar(0)};
    return {CycloScalar(0), -spec.q(), CycloScalar(1), CycloScalar(0)};
}

std::string violated_constraint(const AlgebraSpec& spec) {
    if (spec.is_jordan()) return "Jordan plane automorphisms must have the form [[a, b], [0, a]]";
    if (spec.q_is_minus_one()) return "k_{-1}[u,v] admits only diagonal or antidiagonal automorphisms";
    return "quantum plane with q != +-1 admits only diagonal automorphisms";
}

}  // namespace

CycloScalar relation_scalar(const AlgebraSpec& spec, const Mat2& M) {
    if (mat_det(M).is_zero()) throw InvalidAutomorphism("matrix is not invertible");
    // image of u is (a, c), image of v is (b, d) in the basis (u, v)
    std::array<std::array<CycloScalar, 2>, 2> img = {{{M[0], M[2]}, {M[1], M[3]}}};
    auto r = relation_vector(spec);
    std::array<CycloScalar, 4> out;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const CycloScalar& w = r[2 * x + y];
            if (w.is_zero()) continue;
            for (int p = 0; p < 2; ++p)
                for (int s = 0; s < 2; ++s) out[2 * p + s] += w * img[x][p] * img[y][s];
        }
    // r has coefficient 1 on vu, so the scalar is read there
    CycloScalar lambda = out[2];
    for (int w = 0; w < 4; ++w)
        if (!(out[w] == lambda * r[w])) throw InvalidAutomorphism(violated_constraint(spec));
    return lambda;
}

void check_automorphism(const AlgebraSpec& spec, const Mat2& M) { relation_scalar(spec, M); }

AlgebraElt apply_aut_unchecked(const AlgebraSpec& spec, const Mat2& M, const AlgebraElt& a) {
    const CycloScalar &A = M[0], &B = M[1], &C = M[2], &D = M[3];
    AlgebraElt out;
    if (B.is_zero() && C.is_zero()) {
        for (auto& [m, c] : a.terms()) out.add_term(m, c * A.pow(m.i) * D.pow(m.j));
        return out;
    }
    if (A.is_zero() && D.is_zero() && spec.is_quantum()) {
        // (c v)^i (b u)^j = c^i b^j q^{ij} u^j v^i
        for (auto& [m, c] : a.terms())
            out.add_term({m.j, m.i}, c * C.pow(m.i) * B.pow(m.j) * spec.q_pow(static_cast<long>(m.i) * m.j));
        return out;
    }
    AlgebraElt gu, gv;
    gu.add_term({1, 0}, A);
    gu.add_term({0, 1}, C);
    gv.add_term({1, 0}, B);
    gv.add_term({0, 1}, D);
    for (auto& [m, c] : a.terms()) out += mul(spec, power(spec, gu, m.i), power(spec, gv, m.j)) * c;
    return out;
}

AlgebraElt apply_aut(const AlgebraSpec& spec, const Mat2& M, const AlgebraElt& a) {
    check_automorphism(spec, M);
    return apply_aut_unchecked(spec, M, a);
}

}  // namespace ncinv
