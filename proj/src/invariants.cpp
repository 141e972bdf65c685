#include "ncinv/invariants.hpp"

#include "ncinv/hj_series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncinv {

SparseVec to_vec(const AlgebraElt& a, int d) {
    SparseVec v;
    for (auto& [m, c] : a.terms()) {
        if (m.degree() != d) throw std::invalid_argument("element is not homogeneous of degree " + std::to_string(d));
        v[m.i] = c;
    }
    return v;
}

AlgebraElt from_vec(const SparseVec& v, int d) {
    AlgebraElt a;
    for (auto& [i, c] : v) a.add_term({static_cast<int>(i), d - static_cast<int>(i)}, c);
    return a;
}

std::vector<AlgebraElt> fixed_space(const AlgebraSpec& spec, const GroupSpec& G, int d) {
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<SparseVec> rows;
    for (auto& g : G.generators()) {
        // column t holds g.(u^t v^{d-t}) - u^t v^{d-t}; transpose into rows
        std::map<long, SparseVec> byrow;
        for (int t = 0; t <= d; ++t) {
            AlgebraElt img = act(spec, g, AlgebraElt::monomial(t, d - t));
            img -= AlgebraElt::monomial(t, d - t);
            for (auto& [m, c] : img.terms()) byrow[m.i][t] = c;
        }
        for (auto& [s, r] : byrow) rows.push_back(std::move(r));
    }
    std::vector<AlgebraElt> out;
    for (auto& v : nullspace(rows, d + 1)) out.push_back(from_vec(v, d));
    return out;
}

namespace {

bool exponent_path(const AlgebraSpec& spec, const GradedAut& g, long L) {
    if (!g.roots || L % g.roots->order != 0) return false;
    if (!g.roots->anti) return spec.is_quantum() || g.roots->e1 == g.roots->e2;
    return spec.is_commutative() || (spec.q_is_minus_one() && L % 2 == 0);
}

}  // namespace

TruncatedSeries molien(const AlgebraSpec& spec, const GroupSpec& G, long N) {
    if (N < 0) throw std::invalid_argument("truncation degree must be non-negative");
    auto elems = enumerate_group(G);
    long L = G.root_order();
    // hist[d][e] counts contributions w_L^e to the degree-d trace sum
    std::vector<std::vector<long>> hist(N + 1, std::vector<long>(L, 0));
    std::vector<CycloScalar> rest(N + 1, CycloScalar(0));
    for (auto& g : elems) {
        if (exponent_path(spec, g, L)) {
            const RootForm& r = *g.roots;
            long M = L / r.order;
            long e1 = ((r.e1 * M) % L + L) % L, e2 = ((r.e2 * M) % L + L) % L;
            if (!r.anti) {
                for (long d = 0; d <= N; ++d)
                    for (long i = 0; i <= d; ++i) hist[d][(e1 * i + e2 * (d - i)) % L]++;
            } else {
                // only u^i v^i survives: (bc)^i, times q^{i^2} = (-1)^i when q = -1
                long step = (e1 + e2 + (spec.is_commutative() ? 0 : L / 2)) % L;
                for (long i = 0; 2 * i <= N; ++i) hist[2 * i][(step * i) % L]++;
            }
        } else {
            auto t = trace(spec, g, N).series.coeffs;
            for (long d = 0; d <= N; ++d) rest[d] += t[d];
        }
    }
    TruncatedSeries out;
    CycloScalar order(static_cast<long>(elems.size()));
    for (long d = 0; d <= N; ++d) {
        CycloScalar s = rest[d];
        for (long e = 0; e < L; ++e)
            if (hist[d][e]) s += CycloScalar(hist[d][e]) * CycloScalar::root_of_unity(L, e);
        s /= order;
        if (!s.is_rational()) throw InternalInconsistency("Molien coefficient in degree " + std::to_string(d) + " is not rational");
        out.coeffs.push_back(s);
    }
    return out;
}

std::vector<long> molien_dims(const AlgebraSpec& spec, const GroupSpec& G, long N) {
    std::vector<long> out;
    for (auto& c : molien(spec, G, N).coeffs) {
        Rational r = c.to_rational();
        if (r.get_den() != 1 || r < 0) throw InternalInconsistency("Molien coefficient " + r.get_str() + " is not a dimension");
        out.push_back(r.get_num().get_si());
    }
    return out;
}

AlgebraElt reynolds(const AlgebraSpec& spec, const GroupSpec& G, const AlgebraElt& a, bool normalized) {
    AlgebraElt s;
    auto elems = enumerate_group(G);
    for (auto& g : elems) s += act(spec, g, a);
    if (normalized) s *= CycloScalar(Rational(1, static_cast<long>(elems.size())));
    return s;
}

bool is_invariant(const AlgebraSpec& spec, const GroupSpec& G, const AlgebraElt& a) {
    for (auto& g : G.generators())
        if (!(act(spec, g, a) == a)) return false;
    return true;
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::typeA_formula: return "typeA_formula";
        case Provenance::typeD_formula: return "typeD_formula";
        case Provenance::jordan_formula: return "jordan_formula";
        case Provenance::nc_formula: return "nc_formula";
        case Provenance::brute_force: return "brute_force";
    }
    return "unknown";
}

SubalgebraSpan::SubalgebraSpan(AlgebraSpec spec, std::vector<AlgebraElt> gens) : spec_(std::move(spec)) {
    ech_.emplace_back();
    ech_[0].insert({{0, CycloScalar(1)}});
    basis_.push_back({AlgebraElt::scalar(CycloScalar(1))});
    for (auto& g : gens) add_generator(g);
}

void SubalgebraSpan::add_generator(const AlgebraElt& g) {
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) throw std::invalid_argument("generators must be nonzero, homogeneous and of positive degree");
    int d = g.degree();
    if (computed() > d) throw std::logic_error("generator added below the computed range");
    gens_.push_back(g);
    gdeg_.push_back(d);
    if (computed() == d && ech_[d].insert(to_vec(g, d))) basis_[d].push_back(g);
}

void SubalgebraSpan::extend_to(int d) {
    while (computed() < d) {
        int e = computed() + 1;
        Echelon ech;
        std::vector<AlgebraElt> basis;
        for (size_t x = 0; x < gens_.size(); ++x) {
            if (gdeg_[x] > e) continue;
            for (auto& b : basis_[e - gdeg_[x]]) {
                AlgebraElt p = mul(spec_, b, gens_[x]);
                if (ech.insert(to_vec(p, e))) basis.push_back(std::move(p));
            }
        }
        ech_.push_back(std::move(ech));
        basis_.push_back(std::move(basis));
    }
}

long SubalgebraSpan::dim(int d) {
    extend_to(d);
    return static_cast<long>(ech_[d].rank());
}

const std::vector<AlgebraElt>& SubalgebraSpan::basis(int d) {
    extend_to(d);
    return basis_[d];
}

bool SubalgebraSpan::contains(const AlgebraElt& a, int d) {
    extend_to(d);
    return ech_[d].contains(to_vec(a, d));
}

GenerationReport verify_generation(const AlgebraSpec& spec, const GroupSpec& G, const std::vector<AlgebraElt>& gens, long N) {
    GenerationReport rep;
    rep.molien_dims = molien_dims(spec, G, N);
    SubalgebraSpan span(spec, gens);
    for (long d = 0; d <= N; ++d) {
        rep.span_dims.push_back(span.dim(static_cast<int>(d)));
        if (rep.success && rep.span_dims[d] != rep.molien_dims[d]) {
            rep.success = false;
            rep.first_failure = static_cast<int>(d);
        }
    }
    return rep;
}

GeneratorSet brute_force_generators(const AlgebraSpec& spec, const GroupSpec& G) {
    GeneratorSet out;
    out.provenance = Provenance::brute_force;
    long L = G.root_order();
    long N = 2 * L + 8;
    auto md = molien_dims(spec, G, N);
    SubalgebraSpan span(spec, {});
    int maxdeg = 0;
    for (int d = 1;; ++d) {
        if (d > N) {
            N *= 2;
            md = molien_dims(spec, G, N);
        }
        long have = span.dim(d);
        if (have > md[d]) throw InternalInconsistency("generated span exceeds the Molien dimension in degree " + std::to_string(d));
        if (have < md[d]) {
            for (auto& f : fixed_space(spec, G, d)) {
                if (span.contains(f, d)) continue;
                span.add_generator(f);
                out.generators.push_back(f);
                out.degrees.push_back(d);
                if (span.dim(d) == md[d]) break;
            }
            if (span.dim(d) != md[d]) throw InternalInconsistency("fixed space and Molien series disagree in degree " + std::to_string(d));
            maxdeg = d;
        }
        if (maxdeg > 0 && d >= 2 * maxdeg + L) break;
    }
    return out;
}

namespace {

GeneratorSet jordan_generators(int n) {
    GeneratorSet out;
    out.provenance = Provenance::jordan_formula;
    Rational fact(1);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) fact *= i;
        Rational c = Rational(i % 2 ? -1 : 1) / fact;
        out.generators.push_back(AlgebraElt::monomial(n - i, i, CycloScalar(c)));
        out.degrees.push_back(n);
    }
    return out;
}

}  // namespace

GeneratorSet generator_set(const AlgebraSpec& spec, const GroupSpec& G) {
    if (!group_report(G).is_small) throw std::invalid_argument("generator sets are only provided for small groups");
    GeneratorSet out;
    if (auto c = G.as_cyclic(); c && std::gcd(c->n, c->a) == 1) {
        if (spec.is_jordan()) {
            out = jordan_generators(c->n);
        } else {
            auto D = typeA_data(c->n, c->a);
            out.provenance = Provenance::typeA_formula;
            for (int k = 1; k <= D.d; ++k) {
                auto m = D.exponent(k);
                out.generators.push_back(AlgebraElt::monomial(m.i, m.j));
                out.degrees.push_back(m.degree());
            }
        }
    } else if (auto g = G.as_gnk(); g && g->n % 2 && g->k % 2 && g->n != g->k && std::gcd(g->n, g->k) == 1) {
        auto S = nc_series(g->n, g->k);
        out.provenance = Provenance::nc_formula;
        out.generators = S.generators();
        out.degrees = S.generator_degrees();
    } else if (auto dm = std::get_if<DihedralMQ>(&G.variant())) {
        auto D = typeD_data(dm->m, dm->q);
        out.provenance = Provenance::typeD_formula;
        out.generators = D.generators();
        for (auto& x : out.generators) out.degrees.push_back(x.degree());
    } else {
        out = brute_force_generators(spec, G);
    }
    for (auto& x : out.generators)
        if (!is_invariant(spec, G, x)) throw InternalInconsistency("generator " + x.str() + " is not invariant");
    return out;
}

std::vector<AlgebraElt> gnk_basis(int n, int k, int d) {
    if (n <= 0 || k <= 0 || n % 2 == 0 || k % 2 == 0 || std::gcd(n, k) != 1) throw std::invalid_argument("gnk_basis needs odd coprime n and k");
    if (d < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<AlgebraElt> out;
    if (d % k != 0) return out;
    if (d % (4 * k) == 0) out.push_back(power(AlgebraSpec::quantum(CycloScalar(-1)), AlgebraElt::monomial(1, 1), d / 2));
    for (long s = 1; n * s <= d; ++s) {
        if ((d - n * s) % 2) continue;
        out.push_back(NCSeries::basis_element(n, (d - n * s) / 2, s));
    }
    return out;
}

std::string ThetaTarget::str() const {
    if (kind == cyclic) return "1/" + std::to_string(first) + "(1," + std::to_string(second) + ")";
    return "D_{" + std::to_string(first) + "," + std::to_string(second) + "}";
}

GroupSpec ThetaTarget::group() const {
    if (kind == cyclic) return GroupSpec::cyclic(AlgebraSpec::quantum(CycloScalar(1)), first, second);
    return GroupSpec::dihedral(first, second);
}

std::pair<int, int> theta_pair(int n, int k) {
    if (n % 2) return {n + k / 2, n};
    return {n / 2 + k, n / 2};
}

std::pair<int, int> eta_pair(int m, int q) {
    if ((m - q) % 2 == 0) return {q, 2 * (m - q)};
    return {2 * q, m - q};
}

ThetaReport theta_correspondence(int n, int k, long N) {
    if (n <= 0 || k <= 0 || std::gcd(n, k) != 1 || (n % 2 && k % 2) || k % 4 == 2)
        throw std::invalid_argument("theta correspondence needs gcd(n,k) = 1, n or k even and k != 2 mod 4");
    ThetaReport rep;
    rep.N = N;
    if (n == 1) rep.target = {ThetaTarget::cyclic, 2 * k, k + 1};
    else if (n == 2) rep.target = {ThetaTarget::cyclic, 4 * k, 2 * k + 1};
    else {
        auto [m, q] = theta_pair(n, k);
        rep.target = {ThetaTarget::dihedral, m, q};
    }
    auto src = GroupSpec::gnk(n, k);
    auto tgt = rep.target.group();
    rep.source_series = molien_dims(src.ambient(), src, N);
    rep.target_series = molien_dims(tgt.ambient(), tgt, N);
    rep.series_equal = rep.source_series == rep.target_series;
    rep.source_degrees = generator_set(src.ambient(), src).degrees;
    rep.target_degrees = generator_set(tgt.ambient(), tgt).degrees;
    std::sort(rep.source_degrees.begin(), rep.source_degrees.end());
    std::sort(rep.target_degrees.begin(), rep.target_degrees.end());
    rep.degrees_equal = rep.source_degrees == rep.target_degrees;
    if (rep.target.kind == ThetaTarget::cyclic && rep.target.second == rep.target.first - 1) {
        long m = rep.target.first;
        std::vector<Integer> num(2 * m + 1, 0), den{1};
        num[0] = 1;
        num[2 * m] = -1;
        auto times = [&](long e) {  // den *= (1 - t^e)
            std::vector<Integer> r(den.size() + e, 0);
            for (size_t i = 0; i < den.size(); ++i) {
                r[i] += den[i];
                r[i + e] -= den[i];
            }
            den = r;
        };
        times(m);
        times(m);
        times(2);
        for (auto& c : expand_integer_rational(num, den, N)) rep.kleinian_series.push_back(c.get_si());
        rep.kleinian_equal = rep.kleinian_series == rep.source_series;
    }
    return rep;
}

}  // namespace ncinv
