#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ncinv {

using Rational = mpq_class;
using Integer = mpz_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Coefficients low degree first; the zero polynomial is the empty vector.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    void trim();
    std::string str() const;
    bool operator==(const IntPolynomial&) const = default;
};

long euler_phi(long m);
long lcm_long(long a, long b);
long mod_floor(long a, long m);

// Phi_m as exact quotient of x^m - 1 by Phi_d over the proper divisors d.
IntPolynomial cyclotomic_polynomial(long m);

// Element of Q(w_m) in the power basis 1, w, ..., w^{phi(m)-1} modulo Phi_m.
// Stored as integer numerators over one positive denominator in lowest terms.
// Elements whose non-constant coordinates vanish are kept at order 1, so the
// rational subfield has a single representation.
class CycloScalar {
  public:
    CycloScalar();
    CycloScalar(long v);
    CycloScalar(const Rational& v);

    // w_m^e for any integer e; the order is reduced to the exact order of the root.
    static CycloScalar root_of_unity(long m, long e);

    long order() const { return m_; }
    std::vector<Rational> coeffs() const;
    Rational coeff(int i) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const { return m_ == 1; }
    Rational to_rational() const;

    // Same value written in Q(w_M); requires order() | M.
    CycloScalar promote(long M) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator/=(const CycloScalar& o);
    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }
    friend bool operator==(const CycloScalar& a, const CycloScalar& b);

    CycloScalar inverse() const;
    CycloScalar pow(long e) const;

    // Smallest r > 0 with x^r = 1, or 0 when x is not a root of unity.
    long root_order() const;

    // "p/q" for rationals, "[c0, c1, ...]@m" otherwise.
    std::string str() const;

  private:
    long m_ = 1;
    std::vector<Integer> num_;
    Integer den_ = 1;

    void normalize();
    void mul_rational(const Integer& n, const Integer& d);
    friend struct CycloAccess;
};

enum class CycloOp { add, sub, mul, div, pow };
CycloScalar cyclo_arith(const CycloScalar& a, const CycloScalar& b, CycloOp op);

// alpha (alpha-1) ... (alpha-k+1) / k!
Rational gen_binomial(const Rational& alpha, long k);
Integer binomial(long n, long k);
Integer factorial(long n);

std::string rational_str(const Rational& r);

}  // namespace ncinv
