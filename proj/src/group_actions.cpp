#include "ncinv/group_actions.hpp"

#include <numeric>
#include <set>
#include <tuple>

namespace ncinv {

std::string shape_name(AutShape s) {
    switch (s) {
        case AutShape::diagonal: return "diagonal";
        case AutShape::antidiagonal: return "antidiagonal";
        case AutShape::jordan_triangular: return "jordan_triangular";
        case AutShape::general: return "general";
    }
    return "general";
}

GradedAut GradedAut::from_matrix(const Mat2& m) {
    GradedAut g;
    g.matrix = m;
    if (m[1].is_zero() && m[2].is_zero())
        g.shape = AutShape::diagonal;
    else if (m[0].is_zero() && m[3].is_zero())
        g.shape = AutShape::antidiagonal;
    else if (m[2].is_zero() && m[0] == m[3])
        g.shape = AutShape::jordan_triangular;
    else
        g.shape = AutShape::general;
    return g;
}

GradedAut GradedAut::from_roots(long L, bool anti, long e1, long e2) {
    GradedAut g;
    RootForm r{L, anti, mod_floor(e1, L), mod_floor(e2, L)};
    CycloScalar x = CycloScalar::root_of_unity(L, r.e1), y = CycloScalar::root_of_unity(L, r.e2);
    if (anti) {
        g.matrix = {CycloScalar(0), x, y, CycloScalar(0)};
        g.shape = AutShape::antidiagonal;
    } else {
        g.matrix = {x, CycloScalar(0), CycloScalar(0), y};
        g.shape = AutShape::diagonal;
    }
    g.roots = r;
    return g;
}

bool GradedAut::is_identity() const {
    if (roots) return !roots->anti && roots->e1 == 0 && roots->e2 == 0;
    return mat_equal(matrix, mat_identity());
}

std::string GradedAut::str() const { return mat_str(matrix); }

GradedAut compose(const GradedAut& x, const GradedAut& y) {
    if (x.roots && y.roots) {
        long L = lcm_long(x.roots->order, y.roots->order);
        long fx = L / x.roots->order, fy = L / y.roots->order;
        long a1 = x.roots->e1 * fx, a2 = x.roots->e2 * fx;
        long b1 = y.roots->e1 * fy, b2 = y.roots->e2 * fy;
        bool xa = x.roots->anti, ya = y.roots->anti;
        if (!xa && !ya) return GradedAut::from_roots(L, false, a1 + b1, a2 + b2);
        if (!xa && ya) return GradedAut::from_roots(L, true, a1 + b1, a2 + b2);
        if (xa && !ya) return GradedAut::from_roots(L, true, a1 + b2, a2 + b1);
        return GradedAut::from_roots(L, false, a1 + b2, a2 + b1);
    }
    return GradedAut::from_matrix(mat_mul(x.matrix, y.matrix));
}

std::pair<Monomial, CycloScalar> act_on_monomial(const AlgebraSpec& spec, const GradedAut& g, const Monomial& m) {
    if (g.shape == AutShape::diagonal) {
        if (g.roots)
            return {m, CycloScalar::root_of_unity(g.roots->order, g.roots->e1 * m.i + g.roots->e2 * m.j)};
        return {m, g.matrix[0].pow(m.i) * g.matrix[3].pow(m.j)};
    }
    if (g.shape == AutShape::antidiagonal && spec.is_quantum()) {
        // (c v)^i (b u)^j = c^i b^j q^{ij} u^j v^i
        CycloScalar qp = spec.q_pow(static_cast<long>(m.i) * m.j);
        if (g.roots)
            return {{m.j, m.i},
                    CycloScalar::root_of_unity(g.roots->order, g.roots->e2 * m.i + g.roots->e1 * m.j) * qp};
        return {{m.j, m.i}, g.matrix[2].pow(m.i) * g.matrix[1].pow(m.j) * qp};
    }
    throw std::invalid_argument("automorphism is not a monomial matrix for this algebra");
}

namespace {

bool is_monomial_action(const AlgebraSpec& spec, const GradedAut& g) {
    return g.shape == AutShape::diagonal || (g.shape == AutShape::antidiagonal && spec.is_quantum());
}

}  // namespace

AlgebraElt act(const AlgebraSpec& spec, const GradedAut& g, const AlgebraElt& a) {
    if (!is_monomial_action(spec, g)) return apply_aut_unchecked(spec, g.matrix, a);
    AlgebraElt out;
    for (auto& [m, c] : a.terms()) {
        auto [m2, s] = act_on_monomial(spec, g, m);
        out.add_term(m2, c * s);
    }
    return out;
}

GroupSpec GroupSpec::trivial(const AlgebraSpec& ambient) {
    GroupSpec G;
    G.variant_ = TrivialGroup{};
    G.ambient_ = ambient;
    G.root_order_ = 1;
    return G;
}

GroupSpec GroupSpec::cyclic(const AlgebraSpec& ambient, int n, int a, bool raw) {
    if (n < 2 || a < 1 || a >= n) throw std::invalid_argument("cyclic group 1/n(1,a) needs 1 <= a < n");
    if (!raw && std::gcd(a, n) != 1) throw std::invalid_argument("cyclic group 1/n(1,a) needs gcd(a, n) = 1");
    GroupSpec G;
    G.variant_ = CyclicDiag{n, a};
    G.ambient_ = ambient;
    G.root_order_ = n;
    for (auto& g : G.generators()) check_automorphism(ambient, g.matrix);
    return G;
}

GroupSpec GroupSpec::gnk(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("G_{n,k} needs positive n and k");
    GroupSpec G;
    G.variant_ = Gnk{n, k};
    G.ambient_ = AlgebraSpec::quantum(CycloScalar(-1));
    G.root_order_ = 2L * n * k;
    return G;
}

GroupSpec GroupSpec::dihedral(int m, int q) {
    if (!(1 < q && q < m) || std::gcd(m, q) != 1) throw std::invalid_argument("D_{m,q} needs 1 < q < m, gcd(m,q) = 1");
    GroupSpec G;
    G.variant_ = DihedralMQ{m, q};
    G.ambient_ = AlgebraSpec::quantum(CycloScalar(1));
    G.root_order_ = 4L * q * (m - q);
    return G;
}

std::vector<GradedAut> GroupSpec::generators() const {
    long L = root_order_;
    if (std::holds_alternative<TrivialGroup>(variant_)) return {GradedAut::from_roots(1, false, 0, 0)};
    if (auto c = std::get_if<CyclicDiag>(&variant_)) return {GradedAut::from_roots(L, false, 1, c->a)};
    if (auto g = std::get_if<Gnk>(&variant_))
        return {GradedAut::from_roots(L, false, 2L * g->k, -2L * g->k), GradedAut::from_roots(L, true, g->n, g->n)};
    auto d = std::get<DihedralMQ>(variant_);
    return {GradedAut::from_roots(L, false, 2L * (d.m - d.q), -2L * (d.m - d.q)),
            GradedAut::from_roots(L, true, d.q, d.q)};
}

std::string GroupSpec::str() const {
    if (std::holds_alternative<TrivialGroup>(variant_)) return "trivial";
    if (auto c = std::get_if<CyclicDiag>(&variant_))
        return "1/" + std::to_string(c->n) + "(1," + std::to_string(c->a) + ")";
    if (auto g = std::get_if<Gnk>(&variant_)) return "G_{" + std::to_string(g->n) + "," + std::to_string(g->k) + "}";
    auto d = std::get<DihedralMQ>(variant_);
    return "D_{" + std::to_string(d.m) + "," + std::to_string(d.q) + "}";
}

std::string TruncatedSeries::str() const {
    std::string s;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) s += ", ";
        s += coeffs[i].str();
    }
    return "[" + s + "]";
}

TruncatedSeries RationalFunction::expand(long N) const {
    if (denominator.empty() || denominator[0].is_zero())
        throw std::invalid_argument("denominator must have nonzero constant term");
    CycloScalar inv0 = denominator[0].inverse();
    TruncatedSeries s;
    s.coeffs.assign(N + 1, CycloScalar());
    for (long n = 0; n <= N; ++n) {
        CycloScalar acc = n < static_cast<long>(numerator.size()) ? numerator[n] : CycloScalar();
        for (long i = 1; i < static_cast<long>(denominator.size()) && i <= n; ++i)
            if (!denominator[i].is_zero()) acc -= denominator[i] * s.coeffs[n - i];
        s.coeffs[n] = acc * inv0;
    }
    return s;
}

namespace {

std::string poly_str(const Poly& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += "(" + p[i].str() + ")";
        if (i) s += "*t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string RationalFunction::str() const { return "(" + poly_str(numerator) + ") / (" + poly_str(denominator) + ")"; }

std::vector<Integer> expand_integer_rational(const std::vector<Integer>& num, const std::vector<Integer>& den, long N) {
    if (den.empty() || (den[0] != 1 && den[0] != -1)) throw std::invalid_argument("denominator constant must be +-1");
    std::vector<Integer> s(N + 1, 0);
    for (long n = 0; n <= N; ++n) {
        Integer acc = n < static_cast<long>(num.size()) ? num[n] : Integer(0);
        for (long i = 1; i < static_cast<long>(den.size()) && i <= n; ++i) acc -= den[i] * s[n - i];
        s[n] = acc * den[0];
    }
    return s;
}

CycloScalar trace_degree(const AlgebraSpec& spec, const GradedAut& g, int d) {
    CycloScalar t;
    if (is_monomial_action(spec, g)) {
        for (int i = 0; i <= d; ++i) {
            Monomial m{i, d - i};
            if (g.shape == AutShape::antidiagonal && m.i != m.j) continue;
            t += act_on_monomial(spec, g, m).second;
        }
        return t;
    }
    for (int i = 0; i <= d; ++i) {
        Monomial m{i, d - i};
        t += apply_aut_unchecked(spec, g.matrix, AlgebraElt::monomial(i, d - i)).coeff(m);
    }
    return t;
}

namespace {

std::optional<RationalFunction> trace_closed_form(const AlgebraSpec& spec, const GradedAut& g) {
    const Mat2& M = g.matrix;
    RationalFunction f;
    f.numerator = {CycloScalar(1)};
    if (g.shape == AutShape::diagonal) {
        f.denominator = {CycloScalar(1), -(M[0] + M[3]), M[0] * M[3]};
        return f;
    }
    if (spec.is_commutative()) {
        f.denominator = {CycloScalar(1), -(M[0] + M[3]), mat_det(M)};
        return f;
    }
    if (g.shape == AutShape::antidiagonal && spec.q_is_minus_one()) {
        f.denominator = {CycloScalar(1), CycloScalar(0), M[1] * M[2]};
        return f;
    }
    if (g.shape == AutShape::jordan_triangular && spec.is_jordan()) {
        f.denominator = {CycloScalar(1), CycloScalar(-2) * M[0], M[0] * M[0]};
        return f;
    }
    return std::nullopt;
}

}  // namespace

TraceResult trace(const AlgebraSpec& spec, const GradedAut& g, long N) {
    check_automorphism(spec, g.matrix);
    TraceResult r;
    r.series.coeffs.reserve(N + 1);
    for (long d = 0; d <= N; ++d) r.series.coeffs.push_back(trace_degree(spec, g, static_cast<int>(d)));
    r.closed_form = trace_closed_form(spec, g);
    if (r.closed_form && !(r.closed_form->expand(N) == r.series))
        throw InternalInconsistency("closed-form trace disagrees with the degreewise trace");
    return r;
}

namespace {

bool is_root_of_unity(const CycloScalar& x) { return x.root_order() > 0; }

void require_finite_order(const AlgebraSpec& spec, const GradedAut& g) {
    if (g.roots) return;
    const Mat2& M = g.matrix;
    switch (g.shape) {
        case AutShape::diagonal:
            if (!is_root_of_unity(M[0]) || !is_root_of_unity(M[3]))
                throw InfiniteOrder("eigenvalue is not a root of unity");
            return;
        case AutShape::antidiagonal:
            if (!is_root_of_unity(M[1] * M[2])) throw InfiniteOrder("bc is not a root of unity");
            return;
        case AutShape::jordan_triangular:
            throw InfiniteOrder("a nontrivial unipotent part has infinite order");
        case AutShape::general: {
            (void)spec;
            Mat2 P = M;
            for (int r = 1; r <= 1024; ++r) {
                if (mat_equal(P, mat_identity())) return;
                P = mat_mul(P, M);
            }
            throw InfiniteOrder("matrix has no power equal to the identity below 1025");
        }
    }
}

}  // namespace

bool is_quasi_reflection_closed_form(const AlgebraSpec& spec, const GradedAut& g) {
    check_automorphism(spec, g.matrix);
    require_finite_order(spec, g);
    const Mat2& M = g.matrix;
    if (g.shape == AutShape::diagonal) return M[0].is_one() != M[3].is_one();
    if (spec.is_jordan()) return false;
    if (g.shape == AutShape::antidiagonal && spec.q_is_minus_one()) return M[1] * M[2] == CycloScalar(-1);
    if (spec.is_commutative()) {
        // exactly one eigenvalue equal to 1
        CycloScalar p1 = CycloScalar(1) - (M[0] + M[3]) + mat_det(M);
        return p1.is_zero() && !mat_equal(M, mat_identity());
    }
    throw InvalidAutomorphism("no quasi-reflection rule for this shape");
}

bool is_quasi_reflection_series(const AlgebraSpec& spec, const GradedAut& g, long N) {
    std::vector<CycloScalar> c;
    for (long d = 0; d <= N; ++d) c.push_back(trace_degree(spec, g, static_cast<int>(d)));
    std::vector<CycloScalar> s{c[0]};
    for (long d = 1; d <= N; ++d) s.push_back(c[d] - c[d - 1]);
    if (!s[0].is_one()) return false;
    CycloScalar lambda = s[1];
    if (lambda.is_one()) return false;
    CycloScalar p = lambda;
    for (long d = 2; d <= N; ++d) {
        p *= lambda;
        if (!(s[d] == p)) return false;
    }
    return true;
}

bool is_quasi_reflection(const AlgebraSpec& spec, const GradedAut& g) {
    bool closed = is_quasi_reflection_closed_form(spec, g);
    bool series = is_quasi_reflection_series(spec, g);
    if (closed != series) throw InternalInconsistency("quasi-reflection closed form disagrees with the trace series");
    return closed;
}

CycloScalar hdet(const AlgebraSpec& spec, const GradedAut& g) {
    if (g.roots && spec.is_quantum()) {
        CycloScalar w = CycloScalar::root_of_unity(g.roots->order, g.roots->e1 + g.roots->e2);
        if (!g.roots->anti) return w;
        // (bu)(cv) - q (cv)(bu) = bc (uv - q vu), a multiple of vu - q uv only for q = +-1
        if (spec.q_is_minus_one()) return w;
        if (spec.is_commutative()) return -w;
    }
    return relation_scalar(spec, g.matrix);
}

namespace {

// Element key in a common root order M.
std::tuple<bool, long, long> element_key(const RootForm& r, long M) {
    long f = M / r.order;
    return {r.anti, mod_floor(r.e1 * f, M), mod_floor(r.e2 * f, M)};
}

std::vector<GradedAut> closure(const std::vector<GradedAut>& gens, long L) {
    std::vector<GradedAut> elems{GradedAut::from_roots(L, false, 0, 0)};
    std::set<std::tuple<bool, long, long>> seen{element_key(*elems[0].roots, L)};
    for (size_t i = 0; i < elems.size(); ++i)
        for (auto& s : gens) {
            GradedAut x = compose(elems[i], s);
            if (seen.insert(element_key(*x.roots, L)).second) elems.push_back(x);
        }
    return elems;
}

}  // namespace

std::vector<GradedAut> enumerate_group(const GroupSpec& G) {
    long L = G.root_order();
    std::vector<GradedAut> elems;
    if (auto c = G.as_cyclic()) {
        for (long t = 0; t < c->n; ++t) elems.push_back(GradedAut::from_roots(L, false, t, t * c->a));
    } else if (auto gk = G.as_gnk()) {
        long n = gk->n, k = gk->k;
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < k; ++j) elems.push_back(GradedAut::from_roots(L, false, 2 * (n * j + k * i), 2 * (n * j - k * i)));
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < k; ++j)
                elems.push_back(GradedAut::from_roots(L, true, (2 * j + 1) * n + 2 * k * i, (2 * j + 1) * n - 2 * k * i));
    } else {
        return closure(G.generators(), L);
    }
    // Drop repeats (they occur when the pair is not canonical), then verify closure.
    std::set<std::tuple<bool, long, long>> seen;
    std::vector<GradedAut> unique;
    for (auto& x : elems)
        if (seen.insert(element_key(*x.roots, L)).second) unique.push_back(x);
    for (auto& x : unique)
        for (auto& s : G.generators())
            if (!seen.count(element_key(*compose(x, s).roots, L)))
                throw InternalInconsistency("enumerated element list of " + G.str() + " is not closed");
    return unique;
}

bool gnk_is_small_closed_form(int n, int k) { return k % 4 != 2 && std::gcd(n, k) <= 2; }

GroupReport group_report(const GroupSpec& G) {
    const AlgebraSpec& A = G.ambient();
    auto elems = enumerate_group(G);
    GroupReport r;
    r.order = static_cast<long>(elems.size());
    r.is_small = true;
    r.hdet_trivial = true;
    for (auto& g : elems) {
        if (g.is_identity()) continue;
        if (is_quasi_reflection(A, g)) r.is_small = false;
        if (!hdet(A, g).is_one()) r.hdet_trivial = false;
    }
    if (auto c = G.as_cyclic()) {
        r.has_closed_form = true;
        r.is_small_closed_form = std::gcd(c->n, c->a) == 1;
    } else if (auto gk = G.as_gnk()) {
        r.has_closed_form = true;
        r.is_small_closed_form = gnk_is_small_closed_form(gk->n, gk->k);
        r.commutative_invariants_flag = gk->n % 2 == 0 || gk->k % 2 == 0;
    } else if (std::holds_alternative<TrivialGroup>(G.variant())) {
        r.has_closed_form = true;
        r.is_small_closed_form = true;
    }
    if (r.has_closed_form && r.is_small != r.is_small_closed_form)
        throw InternalInconsistency("brute-force smallness disagrees with the closed form for " + G.str());
    r.gorenstein_flag = r.hdet_trivial;
    return r;
}

}  // namespace ncinv
