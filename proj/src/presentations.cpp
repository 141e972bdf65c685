#include "ncinv/presentations.hpp"

#include "ncinv/hj_series.hpp"
#include "ncinv/invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace ncinv {

int Presentation::word_degree(const FreeWord& w) const {
    int d = 0;
    for (int x : w) {
        if (x < 0 || x >= static_cast<int>(degrees.size())) throw std::invalid_argument("word uses an unknown generator index " + std::to_string(x));
        d += degrees[x];
    }
    return d;
}

void Presentation::validate() const {
    if (names.size() != degrees.size()) throw std::invalid_argument("generator names and degrees differ in length");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("generator degrees must be positive");
    for (auto& r : relations) {
        if (r.empty()) throw std::invalid_argument("empty relation");
        int d = word_degree(r.begin()->first);
        for (auto& [w, c] : r)
            if (word_degree(w) != d) throw std::invalid_argument("relation " + poly_str(r) + " is not homogeneous");
    }
}

std::string Presentation::word_str(const FreeWord& w) const {
    if (w.empty()) return "1";
    bool letters = true;
    for (auto& n : names) letters = letters && n.size() == 1;
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!letters && i) out += " ";
        out += names[w[i]];
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string Presentation::poly_str(const FreePoly& p) const {
    // words in the order of the map, with rational coefficients written inline
    std::string out;
    for (auto& [w, c] : p) {
        std::string body = word_str(w);
        bool neg = false;
        std::string coeff;
        if (c.is_rational()) {
            Rational r = c.to_rational();
            neg = r < 0;
            if (neg) r = -r;
            if (r != 1 || w.empty()) coeff = r.get_str();
        } else {
            coeff = "(" + c.str() + ")";
        }
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        out += coeff + (w.empty() ? "" : body);
    }
    return out.empty() ? "0" : out;
}

std::string Presentation::str() const {
    std::string out = "<";
    for (size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i] + " (deg " + std::to_string(degrees[i]) + ")";
    out += " | ";
    for (size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : "") + poly_str(relations[i]);
    return out + ">";
}

namespace {

void add(FreePoly& p, const FreeWord& w, const CycloScalar& c) {
    auto [it, ins] = p.try_emplace(w, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    } else if (c.is_zero()) {
        p.erase(it);
    }
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::string> letter_names(int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) out.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i)) : "X" + std::to_string(i));
    return out;
}

}  // namespace

Presentation jordan_presentation(int n) {
    if (n < 2) throw std::invalid_argument("the Jordan presentation needs n >= 2");
    Presentation P;
    P.names = letter_names(n + 1);
    P.degrees.assign(n + 1, n);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            FreePoly r;
            for (int k = 0; k <= j; ++k) add(r, {j - k, i}, CycloScalar(binom(n - i, k)));
            for (int l = 0; l <= i; ++l) add(r, {i - l, j}, CycloScalar(-binom(n - j, l)));
            P.relations.push_back(r);
        }
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j) {
            FreePoly r;
            add(r, {i, j}, CycloScalar(i));
            add(r, {i - 1, j + 1}, CycloScalar(-(j + 1)));
            add(r, {i - 1, j}, CycloScalar(n - 1 - (j - i)));
            P.relations.push_back(r);
        }
    P.validate();
    return P;
}

long quantum_long_exponent(int n, int a, int k, int l) {
    auto D = typeA_data(n, a);
    if (!(2 <= k + 1 && k + 1 < l - 1 && l - 1 <= D.d - 1)) throw std::invalid_argument("long relations need 2 <= k+1 < l-1 <= d-1");
    auto i = [&](int m) { return D.i_series[m - 1]; };
    auto j = [&](int m) { return D.j_series[m - 1]; };
    auto gamma = [&](int m) { return D.b(m - 1) - 2 + (m == k + 1) + (m == l - 1); };
    long r = 0;
    for (int m = k + 1; m <= l - 1; ++m) r += i(m) * j(m) * gamma(m) * (gamma(m) - 1) / 2;
    for (int m = k + 2; m <= l - 1; ++m)
        for (int s = k + 1; s <= m - 1; ++s) r += i(m) * j(s) * gamma(m) * gamma(s);
    return r - i(l) * j(k);
}

Presentation quantum_presentation(int n, int a, const CycloScalar& q) {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    auto D = typeA_data(n, a);
    Presentation P;
    for (int k = 1; k <= D.d; ++k) {
        P.names.push_back("x" + std::to_string(k));
        P.degrees.push_back(D.exponent(k).degree());
    }
    auto i = [&](int m) { return D.i_series[m - 1]; };
    auto j = [&](int m) { return D.j_series[m - 1]; };
    for (int k = 1; k <= D.d; ++k)
        for (int l = k + 1; l <= D.d; ++l) {
            FreePoly r;
            add(r, {l - 1, k - 1}, CycloScalar(1));
            add(r, {k - 1, l - 1}, -q.pow(i(k) * j(l) - i(l) * j(k)));
            P.relations.push_back(r);
        }
    for (int k = 2; k <= D.d - 1; ++k) {
        long b = D.b(k - 1);
        FreePoly r;
        add(r, FreeWord(b, k - 1), CycloScalar(1));
        add(r, {k - 2, k}, -q.pow(i(k) * j(k) * b * (b - 1) / 2 - i(k + 1) * j(k - 1)));
        P.relations.push_back(r);
    }
    for (int k = 1; k <= D.d; ++k)
        for (int l = k + 3; l <= D.d; ++l) {
            FreePoly r;
            add(r, {k - 1, l - 1}, q.pow(quantum_long_exponent(n, a, k, l)));
            FreeWord rhs;
            for (int m = k + 1; m <= l - 1; ++m) {
                long g = D.b(m - 1) - 2 + (m == k + 1) + (m == l - 1);
                rhs.insert(rhs.end(), g, m - 1);
            }
            add(r, rhs, CycloScalar(-1));
            P.relations.push_back(r);
        }
    P.validate();
    return P;
}

Presentation gnk73_presentation() {
    Presentation P;
    P.names = {"a", "b", "c", "d"};
    P.degrees = {15, 9, 21, 12};
    enum { a, b, c, d };
    auto rel = [&](std::vector<std::pair<FreeWord, long>> terms) {
        FreePoly r;
        for (auto& [w, k] : terms) add(r, w, CycloScalar(k));
        P.relations.push_back(r);
    };
    rel({{{b, a}, 1}, {{a, b}, 1}, {{d, d}, 4}});
    rel({{{c, a}, 1}, {{a, c}, 1}, {{b, b, b, b}, -2}, {{d, d, d}, -4}});
    rel({{{c, b}, 1}, {{b, c}, 1}, {{b, b, d}, -2}});
    rel({{{d, a}, 1}, {{a, d}, -1}});
    rel({{{d, b}, 1}, {{b, d}, -1}});
    rel({{{d, c}, 1}, {{c, d}, -1}});
    rel({{{a, a}, 1}, {{b, b, d}, 1}});
    rel({{{a, b, b}, 1}, {{c, d}, 1}, {{b, d, d}, 1}});
    rel({{{a, c}, 1}, {{a, b, d}, 1}, {{b, b, b, b}, -1}});
    P.validate();
    return P;
}

AlgebraElt eval_word(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const FreeWord& w) {
    AlgebraElt r = AlgebraElt::scalar(CycloScalar(1));
    for (int x : w) {
        if (x < 0 || x >= static_cast<int>(assignment.size())) throw std::invalid_argument("word uses an unassigned generator");
        r = mul(spec, r, assignment[x]);
    }
    return r;
}

AlgebraElt eval_poly(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const FreePoly& p) {
    AlgebraElt r;
    for (auto& [w, c] : p) r += eval_word(spec, assignment, w) * c;
    return r;
}

EvalReport eval_relations(const AlgebraSpec& spec, const std::vector<AlgebraElt>& assignment, const Presentation& pres) {
    if (assignment.size() != pres.degrees.size()) throw std::invalid_argument("assignment length differs from the generator count");
    for (size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i].is_zero() || !assignment[i].is_homogeneous() || assignment[i].degree() != pres.degrees[i])
            throw std::invalid_argument("assigned element for " + pres.names[i] + " does not have degree " + std::to_string(pres.degrees[i]));
    EvalReport rep;
    for (auto& r : pres.relations) {
        rep.values.push_back(eval_poly(spec, assignment, r));
        rep.vanishes.push_back(rep.values.back().is_zero());
        rep.all_zero = rep.all_zero && rep.vanishes.back();
    }
    return rep;
}

QuotientBuilder::QuotientBuilder(std::vector<int> degrees) : deg_(std::move(degrees)) {
    for (int d : deg_)
        if (d < 1) throw std::invalid_argument("generator degrees must be positive");
    std_.push_back({FreeWord{}});
    col_to_std_.push_back({{0, 0}});
    offset_.push_back(std::vector<long>(deg_.size(), -1));
    ech_.emplace_back();
}

void QuotientBuilder::add_relation(const FreePoly& rho) {
    if (rho.empty()) return;
    int e = 0;
    for (int x : rho.begin()->first) e += deg_.at(x);
    for (auto& [w, c] : rho) {
        int f = 0;
        for (int x : w) f += deg_.at(x);
        if (f != e) throw std::invalid_argument("relation is not homogeneous");
    }
    if (e <= finalized()) throw std::logic_error("relation added below the finalized range");
    pending_[e].push_back(rho);
}

SparseVec QuotientBuilder::append(const SparseVec& v, int e, int x) const {
    SparseVec out;
    long base = offset_.at(e + deg_[x]).at(x);
    for (auto& [s, c] : v) out[base + s] = c;
    return out;
}

SparseVec QuotientBuilder::reduce_at(SparseVec cols, int e) const {
    ech_.at(e).reduce(cols);
    SparseVec out;
    const auto& m = col_to_std_.at(e);
    for (auto& [col, c] : cols) out[m.at(col)] = c;
    return out;
}

long QuotientBuilder::step() {
    int e = finalized() + 1;
    std::vector<long> off(deg_.size(), -1);
    long ncols = 0;
    for (size_t x = 0; x < deg_.size(); ++x) {
        if (deg_[x] > e) continue;
        off[x] = ncols;
        ncols += dim(e - deg_[x]);
    }
    offset_.push_back(off);
    Echelon ech;
    for (auto& [rd, rels] : pending_) {
        if (rd > e) break;
        for (auto& rho : rels)
            for (auto& s : std_[e - rd]) {
                SparseVec row;
                for (auto& [w, c] : rho) {
                    FreeWord full = s;
                    full.insert(full.end(), w.begin(), w.end());
                    // normal form of all letters but the last, then place the last as a column
                    FreeWord head(full.begin(), full.end() - 1);
                    SparseVec v = normal_form(head);
                    int hd = e - deg_[full.back()];
                    axpy(row, c, append(v, hd, full.back()));
                }
                ech.insert(std::move(row));
            }
    }
    std::vector<FreeWord> words;
    std::map<long, long> c2s;
    for (size_t x = 0; x < deg_.size(); ++x) {
        if (off[x] < 0) continue;
        const auto& prev = std_[e - deg_[x]];
        for (size_t p = 0; p < prev.size(); ++p) {
            long col = off[x] + static_cast<long>(p);
            if (ech.is_pivot(col)) continue;
            c2s[col] = static_cast<long>(words.size());
            FreeWord w = prev[p];
            w.push_back(static_cast<int>(x));
            words.push_back(std::move(w));
        }
    }
    std_.push_back(std::move(words));
    col_to_std_.push_back(std::move(c2s));
    ech_.push_back(std::move(ech));
    return dim(e);
}

SparseVec QuotientBuilder::normal_form(const FreeWord& w) const {
    SparseVec v{{0, CycloScalar(1)}};
    int e = 0;
    for (int x : w) {
        int f = e + deg_.at(x);
        if (f > finalized()) throw std::logic_error("normal form requested beyond the finalized range");
        v = reduce_at(append(v, e, x), f);
        e = f;
    }
    return v;
}

std::vector<long> truncated_quotient_dims(const Presentation& pres, long N) {
    pres.validate();
    QuotientBuilder qb(pres.degrees);
    for (auto& r : pres.relations) qb.add_relation(r);
    std::vector<long> out{1};
    for (long e = 1; e <= N; ++e) out.push_back(qb.step());
    return out;
}

PresentationReport verify_presentation(const AlgebraSpec& spec, const GroupSpec& G, const Presentation& pres,
                                       const std::vector<AlgebraElt>& assignment, long N) {
    PresentationReport rep;
    rep.eval = eval_relations(spec, assignment, pres);
    rep.quotient_dims = truncated_quotient_dims(pres, N);
    rep.molien_dims = molien_dims(spec, G, N);
    for (long d = 0; d <= N; ++d)
        if (rep.quotient_dims[d] != rep.molien_dims[d]) {
            rep.first_failure = static_cast<int>(d);
            break;
        }
    rep.success = rep.eval.all_zero && rep.first_failure < 0;
    return rep;
}

PresentationReport verify_presentation(const AlgebraSpec& spec, const GroupSpec& G, const Presentation& pres, long N) {
    return verify_presentation(spec, G, pres, generator_set(spec, G).generators, N);
}

Presentation discover_relations(const AlgebraSpec& spec, const std::vector<AlgebraElt>& gens, const std::vector<std::string>& names, long N) {
    Presentation P;
    P.names = names;
    for (auto& g : gens) {
        if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) throw std::invalid_argument("generators must be nonzero, homogeneous and of positive degree");
        P.degrees.push_back(g.degree());
    }
    if (P.names.size() != gens.size()) P.names = letter_names(static_cast<int>(gens.size()));
    QuotientBuilder qb(P.degrees);
    std::map<FreeWord, AlgebraElt> value{{FreeWord{}, AlgebraElt::scalar(CycloScalar(1))}};
    for (long e = 1; e <= N; ++e) {
        // standard words at degree e before any relation of degree e is imposed
        QuotientBuilder trial = qb;
        trial.step();
        const auto& words = trial.standard_words(static_cast<int>(e));
        std::vector<SparseVec> cols;
        for (auto& w : words) {
            FreeWord head(w.begin(), w.end() - 1);
            auto it = value.find(w);
            if (it == value.end()) it = value.emplace(w, mul(spec, value.at(head), gens[w.back()])).first;
            cols.push_back(to_vec(it->second, static_cast<int>(e)));
        }
        // kernel of the evaluation map: rows indexed by monomials
        std::map<long, SparseVec> byrow;
        for (size_t c = 0; c < cols.size(); ++c)
            for (auto& [m, v] : cols[c]) byrow[m][static_cast<long>(c)] = v;
        std::vector<SparseVec> rows;
        for (auto& [m, r] : byrow) rows.push_back(std::move(r));
        for (auto& kv : nullspace(rows, static_cast<long>(cols.size()))) {
            FreePoly rho;
            for (auto& [c, v] : kv) add(rho, words[c], v);
            P.relations.push_back(rho);
            qb.add_relation(rho);
        }
        qb.step();
    }
    return P;
}

}  // namespace ncinv
