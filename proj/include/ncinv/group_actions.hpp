#pragma once

#include "ncinv/errors.hpp"
#include "ncinv/skew_algebra.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ncinv {

enum class AutShape { diagonal, antidiagonal, jordan_triangular, general };
std::string shape_name(AutShape s);

// Monomial matrix whose nonzero entries are w_L^{e1}, w_L^{e2}: diag(a, d) when
// !anti, otherwise b (top right) = w^{e1} and c (bottom left) = w^{e2}.
struct RootForm {
    long order = 1;
    bool anti = false;
    long e1 = 0, e2 = 0;
    bool operator==(const RootForm&) const = default;
};

struct GradedAut {
    Mat2 matrix = mat_identity();
    AutShape shape = AutShape::diagonal;
    std::optional<RootForm> roots;

    static GradedAut from_matrix(const Mat2& m);
    static GradedAut from_roots(long L, bool anti, long e1, long e2);
    bool is_identity() const;
    std::string str() const;
};

GradedAut compose(const GradedAut& x, const GradedAut& y);  // matrix product x y
// g.a, using exponent arithmetic when g carries a root form.
AlgebraElt act(const AlgebraSpec& spec, const GradedAut& g, const AlgebraElt& a);
// g.(u^i v^j) = c * u^p v^s for monomial matrices; returns (monomial, scalar).
std::pair<Monomial, CycloScalar> act_on_monomial(const AlgebraSpec& spec, const GradedAut& g, const Monomial& m);

struct TrivialGroup {};
struct CyclicDiag {
    int n, a;
};
struct Gnk {
    int n, k;
};
// D_{m,q} = < diag(w^{2(m-q)}, w^{-2(m-q)}), antidiag(w^q, w^q) >, w of order 4q(m-q).
struct DihedralMQ {
    int m, q;
};

class GroupSpec {
  public:
    using Variant = std::variant<TrivialGroup, CyclicDiag, Gnk, DihedralMQ>;

    static GroupSpec trivial(const AlgebraSpec& ambient);
    // Requires 1 <= a < n; gcd(a, n) = 1 unless raw is set.
    static GroupSpec cyclic(const AlgebraSpec& ambient, int n, int a, bool raw = false);
    static GroupSpec gnk(int n, int k);  // ambient quantum(-1)
    static GroupSpec dihedral(int m, int q);  // ambient quantum(1)

    const Variant& variant() const { return variant_; }
    const AlgebraSpec& ambient() const { return ambient_; }
    // Order of the fixed root w in which all elements are written.
    long root_order() const { return root_order_; }
    std::vector<GradedAut> generators() const;
    std::string str() const;

    const CyclicDiag* as_cyclic() const { return std::get_if<CyclicDiag>(&variant_); }
    const Gnk* as_gnk() const { return std::get_if<Gnk>(&variant_); }

  private:
    Variant variant_;
    AlgebraSpec ambient_ = AlgebraSpec::quantum(CycloScalar(1));
    long root_order_ = 1;
};

struct TruncatedSeries {
    std::vector<CycloScalar> coeffs;  // degrees 0..N
    long N() const { return static_cast<long>(coeffs.size()) - 1; }
    bool operator==(const TruncatedSeries& o) const { return coeffs == o.coeffs; }
    std::string str() const;
};

using Poly = std::vector<CycloScalar>;  // low degree first

struct RationalFunction {
    Poly numerator, denominator;
    TruncatedSeries expand(long N) const;
    std::string str() const;
};

// Series of integer coefficients of prod(1 - t^e) style rational functions.
std::vector<Integer> expand_integer_rational(const std::vector<Integer>& num, const std::vector<Integer>& den, long N);

struct TraceResult {
    TruncatedSeries series;
    std::optional<RationalFunction> closed_form;
};

TraceResult trace(const AlgebraSpec& spec, const GradedAut& g, long N);
// Trace of g on A_d by acting on the monomial basis.
CycloScalar trace_degree(const AlgebraSpec& spec, const GradedAut& g, int d);

struct InfiniteOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool is_quasi_reflection_closed_form(const AlgebraSpec& spec, const GradedAut& g);
// (1 - t) Tr(g) is checked for the shape 1/(1 - lambda t), lambda != 1, through degree N.
bool is_quasi_reflection_series(const AlgebraSpec& spec, const GradedAut& g, long N = 6);
// Closed form, confirmed against the series oracle; disagreement throws InternalInconsistency.
bool is_quasi_reflection(const AlgebraSpec& spec, const GradedAut& g);

CycloScalar hdet(const AlgebraSpec& spec, const GradedAut& g);

std::vector<GradedAut> enumerate_group(const GroupSpec& G);

struct GroupReport {
    long order = 0;
    bool is_small = false;
    bool is_small_closed_form = false;
    bool has_closed_form = false;
    bool hdet_trivial = false;
    bool gorenstein_flag = false;
    std::optional<bool> commutative_invariants_flag;
};

GroupReport group_report(const GroupSpec& G);
// k != 2 mod 4 and gcd(n, k) <= 2.
bool gnk_is_small_closed_form(int n, int k);

}  // namespace ncinv
