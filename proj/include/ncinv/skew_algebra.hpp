#pragma once

#include "ncinv/scalars.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncinv {

enum class AlgebraKind { quantum, jordan };

// k_q[u,v] (vu = q uv) or k_J[u,v] (vu = uv + u^2). q = 1 is the commutative plane.
class AlgebraSpec {
  public:
    static AlgebraSpec quantum(const CycloScalar& q);
    static AlgebraSpec jordan();

    AlgebraKind kind() const { return kind_; }
    bool is_jordan() const { return kind_ == AlgebraKind::jordan; }
    bool is_quantum() const { return kind_ == AlgebraKind::quantum; }
    const CycloScalar& q() const { return q_; }
    bool is_commutative() const { return is_quantum() && q_.is_one(); }
    bool q_is_minus_one() const { return is_quantum() && q_ == CycloScalar(-1); }
    // Multiplicative order of q when it is a root of unity, else 0.
    long q_order() const { return q_order_; }
    // q^e, from a table when q is a root of unity.
    CycloScalar q_pow(long e) const;
    std::string str() const;

  private:
    AlgebraKind kind_ = AlgebraKind::quantum;
    CycloScalar q_{1};
    long q_order_ = 1;
    std::shared_ptr<const std::vector<CycloScalar>> q_powers_;
};

struct Monomial {
    int i = 0;  // exponent of u
    int j = 0;  // exponent of v
    int degree() const { return i + j; }
    auto operator<=>(const Monomial&) const = default;
};

class AlgebraElt {
  public:
    using Terms = std::map<Monomial, CycloScalar>;

    AlgebraElt() = default;
    static AlgebraElt monomial(int i, int j, const CycloScalar& c = CycloScalar(1));
    static AlgebraElt scalar(const CycloScalar& c) { return monomial(0, 0, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    CycloScalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const CycloScalar& c);
    // Degree of a homogeneous element; -1 for zero, throws if inhomogeneous.
    int degree() const;
    bool is_homogeneous() const;

    AlgebraElt& operator+=(const AlgebraElt& o);
    AlgebraElt& operator-=(const AlgebraElt& o);
    AlgebraElt& operator*=(const CycloScalar& c);
    friend AlgebraElt operator+(AlgebraElt a, const AlgebraElt& b) { return a += b; }
    friend AlgebraElt operator-(AlgebraElt a, const AlgebraElt& b) { return a -= b; }
    friend AlgebraElt operator*(AlgebraElt a, const CycloScalar& c) { return a *= c; }
    friend AlgebraElt operator*(const CycloScalar& c, AlgebraElt a) { return a *= c; }
    AlgebraElt operator-() const;
    bool operator==(const AlgebraElt& o) const;

    // "c * u^i * v^j + ..." in (i,j)-lex order.
    std::string str() const;

  private:
    Terms terms_;
};

// Normal form of v^i u^j.
AlgebraElt reorder(const AlgebraSpec& spec, int i, int j);
AlgebraElt mul(const AlgebraSpec& spec, const AlgebraElt& a, const AlgebraElt& b);
AlgebraElt power(const AlgebraSpec& spec, const AlgebraElt& a, int e);

// Product of two monomials without building elements.
void mul_monomials_into(const AlgebraSpec& spec, const Monomial& a, const Monomial& b, const CycloScalar& c,
                        AlgebraElt& out);

// [[a, b], [c, d]] acting by g.u = a u + c v, g.v = b u + d v.
using Mat2 = std::array<CycloScalar, 4>;
Mat2 mat_mul(const Mat2& x, const Mat2& y);
bool mat_equal(const Mat2& x, const Mat2& y);
CycloScalar mat_det(const Mat2& x);
Mat2 mat_identity();
std::string mat_str(const Mat2& x);

struct InvalidAutomorphism : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar by which M acts on the defining relation lifted to the free algebra.
// Throws InvalidAutomorphism naming the violated constraint when M does not
// preserve the relation span.
CycloScalar relation_scalar(const AlgebraSpec& spec, const Mat2& M);
void check_automorphism(const AlgebraSpec& spec, const Mat2& M);

AlgebraElt apply_aut(const AlgebraSpec& spec, const Mat2& M, const AlgebraElt& a);
// Skips the validity check; for callers that already checked M.
AlgebraElt apply_aut_unchecked(const AlgebraSpec& spec, const Mat2& M, const AlgebraElt& a);

}  // namespace ncinv
