#include <doctest.h>

#include "ncinv/hj_series.hpp"
#include "ncinv/invariants.hpp"
#include "ncinv/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

using namespace ncinv;

namespace {

CycloScalar w(long m, long e = 1) { return CycloScalar::root_of_unity(m, e); }
const AlgebraSpec qm = AlgebraSpec::quantum(CycloScalar(-1));
const AlgebraSpec J = AlgebraSpec::jordan();

// Parses relations written such as "ca + 3ba + 3a^2 - ac" over single-letter generators.
FreePoly parse(const std::string& text) {
    FreePoly out;
    size_t p = 0;
    auto skip = [&] {
        while (p < text.size() && text[p] == ' ') ++p;
    };
    int sign = 1;
    while (true) {
        skip();
        if (p >= text.size()) break;
        if (text[p] == '+' || text[p] == '-') {
            sign = text[p] == '-' ? -1 : 1;
            ++p;
            skip();
        }
        long c = 0;
        bool digits = false;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) c = 10 * c + (text[p++] - '0'), digits = true;
        if (!digits) c = 1;
        FreeWord word;
        while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) {
            int g = text[p++] - 'a';
            int e = 1;
            if (p < text.size() && text[p] == '^') {
                ++p;
                e = 0;
                while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) e = 10 * e + (text[p++] - '0');
            }
            word.insert(word.end(), e, g);
        }
        auto [it, ins] = out.try_emplace(word, CycloScalar(sign * c));
        if (!ins) it->second += CycloScalar(sign * c);
        sign = 1;
    }
    return out;
}

// Same relations up to order.
bool same_relations(const std::vector<FreePoly>& a, const std::vector<FreePoly>& b) {
    if (a.size() != b.size()) return false;
    for (auto& x : b)
        if (std::count(a.begin(), a.end(), x) != std::count(b.begin(), b.end(), x)) return false;
    return true;
}

std::vector<AlgebraElt> jordan_y(int n) { return generator_set(J, GroupSpec::cyclic(J, n, 1)).generators; }

Rational fact(long n) {
    Rational r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// (1 - t^30 - t^33 - t^36 + t^48 + t^51) / ((1-t^15)(1-t^9)(1-t^21)(1-t^12))
std::vector<long> gnk73_series(long N) {
    std::vector<Integer> num(52, 0), den{1};
    num[0] = 1;
    num[30] = num[33] = num[36] = -1;
    num[48] = num[51] = 1;
    for (long e : {15, 9, 21, 12}) {
        std::vector<Integer> r(den.size() + e, 0);
        for (size_t i = 0; i < den.size(); ++i) r[i] += den[i], r[i + e] -= den[i];
        den = r;
    }
    std::vector<long> out;
    for (auto& c : expand_integer_rational(num, den, N)) out.push_back(c.get_si());
    return out;
}

}  // namespace

TEST_SUITE("presentations") {
    TEST_CASE("Jordan presentations match the reference displays") {
        auto P2 = jordan_presentation(2);
        CHECK(same_relations(P2.relations, {parse("ba + 2a^2 - ab"), parse("ca + 2ba + a^2 - ac"), parse("cb + b^2 - bc"), parse("b^2 - 2ac + ab")}));
        auto P3 = jordan_presentation(3);
        CHECK(same_relations(P3.relations, {parse("ba + 3a^2 - ab"), parse("ca + 3ba + 3a^2 - ac"), parse("da + 3ca + 3ba + a^2 - ad"),
                                              parse("cb + 2b^2 + ab - bc - ac"), parse("db + 2cb + b^2 - bd"), parse("dc + c^2 - cd"),
                                              parse("b^2 - 2ac + 2ab"), parse("bc - 3ad + ac"), parse("2c^2 - 3bd + 2bc")}));
        CHECK(P2.degrees == std::vector<int>{2, 2, 2});
        CHECK_THROWS_AS(jordan_presentation(1), std::invalid_argument);
    }

    TEST_CASE("Jordan relation counts") {
        for (int n = 2; n <= 8; ++n) CHECK(jordan_presentation(n).relations.size() == static_cast<size_t>(binom(n + 1, 2) + binom(n, 2)));
    }

    TEST_CASE("Jordan relations vanish on the y_i") {
        for (int n = 2; n <= 6; ++n) {
            auto y = jordan_y(n);
            CHECK(eval_relations(J, y, jordan_presentation(n)).all_zero);
            // both sides of the first family equal (-1)^{i+j}/(i! j!) u^{2n-i-j} v^{i+j}
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    AlgebraElt lhs, rhs;
                    for (int k = 0; k <= j; ++k) lhs += mul(J, y[j - k], y[i]) * CycloScalar(binom(n - i, k));
                    for (int l = 0; l <= i; ++l) rhs += mul(J, y[i - l], y[j]) * CycloScalar(binom(n - j, l));
                    Rational c = Rational((i + j) % 2 ? -1 : 1) / (fact(i) * fact(j));
                    AlgebraElt expect = AlgebraElt::monomial(2 * n - i - j, i + j, CycloScalar(c));
                    CHECK(lhs == expect);
                    CHECK(rhs == expect);
                }
            for (int i = 1; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    AlgebraElt lhs = mul(J, y[i], y[j]) * CycloScalar(i);
                    AlgebraElt rhs = mul(J, y[i - 1], y[j + 1]) * CycloScalar(j + 1) - mul(J, y[i - 1], y[j]) * CycloScalar(n - 1 - (j - i));
                    CHECK(lhs == rhs);
                }
        }
    }

    TEST_CASE("Jordan presentations are complete") {
        for (int n = 2; n <= 4; ++n) {
            auto rep = verify_presentation(J, GroupSpec::cyclic(J, n, 1), jordan_presentation(n), 6 * n);
            CHECK(rep.success);
        }
        auto d = truncated_quotient_dims(jordan_presentation(2), 10);
        CHECK(d == std::vector<long>{1, 0, 3, 0, 5, 0, 7, 0, 9, 0, 11});
    }

    TEST_CASE("quantum presentation structure") {
        // Kleinian: d = 3, three commutation relations and one power relation
        for (int n = 2; n <= 8; ++n) {
            auto P = quantum_presentation(n, n - 1, w(5));
            CHECK(P.degrees.size() == 3);
            CHECK(P.relations.size() == 4);
        }
        // commutation exponent i_k j_l - i_l j_k
        auto D = typeA_data(7, 3);
        auto P = quantum_presentation(7, 3, w(7));
        for (int k = 1; k <= D.d; ++k)
            for (int l = k + 1; l <= D.d; ++l) {
                long e = D.i_series[k - 1] * D.j_series[l - 1] - D.i_series[l - 1] * D.j_series[k - 1];
                bool found = false;
                for (auto& r : P.relations)
                    if (r.size() == 2 && r.count({l - 1, k - 1}) && r.count({k - 1, l - 1})) {
                        found = true;
                        CHECK(r.at({k - 1, l - 1}) == -w(7, e));
                    }
                CHECK(found);
            }
        CHECK_THROWS_AS(quantum_presentation(6, 2, w(5)), std::invalid_argument);
    }

    TEST_CASE("quantum relations vanish, including the long family") {
        int long_cases = 0;
        for (int n = 2; n <= 16; ++n)
            for (int a = 1; a < n; ++a) {
                if (std::gcd(n, a) != 1) continue;
                auto D = typeA_data(n, a);
                AlgebraSpec A = AlgebraSpec::quantum(w(2 * n));
                std::vector<AlgebraElt> x;
                for (int k = 1; k <= D.d; ++k) x.push_back(AlgebraElt::monomial(D.exponent(k).i, D.exponent(k).j));
                INFO("n=" << n << " a=" << a);
                CHECK(eval_relations(A, x, quantum_presentation(n, a, w(2 * n))).all_zero);
                if (D.d >= 5) ++long_cases;
            }
        CHECK(long_cases > 0);
    }

    TEST_CASE("quantum presentations are complete") {
        struct Case {
            int n, a;
            long q;
        };
        for (auto c : std::vector<Case>{{5, 2, 5}, {7, 3, 7}, {4, 1, 3}}) {
            AlgebraSpec A = AlgebraSpec::quantum(w(c.q));
            auto rep = verify_presentation(A, GroupSpec::cyclic(A, c.n, c.a), quantum_presentation(c.n, c.a, w(c.q)), 8 * c.n);
            INFO("n=" << c.n << " a=" << c.a);
            CHECK(rep.success);
        }
        AlgebraSpec A7 = AlgebraSpec::quantum(w(7));
        CHECK(verify_presentation(A7, GroupSpec::cyclic(A7, 7, 2), quantum_presentation(7, 2, w(7)), 40).success);
    }

    TEST_CASE("G_{7,3} presentation") {
        auto P = gnk73_presentation();
        CHECK(P.relations.size() == 9);
        auto G = GroupSpec::gnk(7, 3);
        auto gens = generator_set(qm, G).generators;
        // the reference generators
        CHECK(gens[0] == mul(qm, AlgebraElt::monomial(7, 0) - AlgebraElt::monomial(0, 7), power(qm, AlgebraElt::monomial(1, 1), 4)));
        CHECK(gens[1] == mul(qm, AlgebraElt::monomial(7, 0) + AlgebraElt::monomial(0, 7), AlgebraElt::monomial(1, 1)));
        CHECK(gens[2] == AlgebraElt::monomial(21, 0) - AlgebraElt::monomial(0, 21));
        CHECK(gens[3] == power(qm, AlgebraElt::monomial(1, 1), 6));
        auto ev = eval_relations(qm, gens, P);
        for (size_t i = 0; i < ev.values.size(); ++i) {
            INFO(P.poly_str(P.relations[i]) << " -> " << ev.values[i].str());
            CHECK(ev.vanishes[i]);
        }
        CHECK(truncated_quotient_dims(P, 60) == gnk73_series(60));
        CHECK(verify_presentation(qm, G, P, 60).success);
    }

    TEST_CASE("perturbed relations are detected") {
        auto P = gnk73_presentation();
        P.relations[0][{3, 3}] += CycloScalar(1);
        auto gens = generator_set(qm, GroupSpec::gnk(7, 3)).generators;
        auto ev = eval_relations(qm, gens, P);
        CHECK_FALSE(ev.vanishes[0]);
        CHECK_FALSE(ev.all_zero);
        CHECK_THROWS_AS(eval_relations(qm, {gens[1], gens[0], gens[2], gens[3]}, P), std::invalid_argument);
    }

    TEST_CASE("truncated quotient dimensions") {
        Presentation one{{"a"}, {1}, {}};
        for (long d : truncated_quotient_dims(one, 8)) CHECK(d == 1);
        Presentation two{{"a", "b"}, {1, 1}, {}};
        auto d2 = truncated_quotient_dims(two, 8);
        for (long d = 0; d <= 8; ++d) CHECK(d2[d] == (1L << d));
        // commutative polynomial ring in two variables
        two.relations.push_back(parse("ba - ab"));
        auto dc = truncated_quotient_dims(two, 8);
        for (long d = 0; d <= 8; ++d) CHECK(dc[d] == d + 1);
        // mixed degrees: k<a,b>/(ab - ba) with |a| = 1, |b| = 2
        Presentation mixed{{"a", "b"}, {1, 2}, {parse("ba - ab")}};
        auto dm = truncated_quotient_dims(mixed, 10);
        for (long d = 0; d <= 10; ++d) CHECK(dm[d] == d / 2 + 1);
    }

    TEST_CASE("monotone soundness") {
        auto base = jordan_presentation(2);
        auto d0 = truncated_quotient_dims(base, 12);
        // valid additions: combinations and multiples of existing relations
        auto extra = base;
        FreePoly combo = base.relations[0];
        for (auto& [wd, c] : base.relations[1]) combo[wd] += c * CycloScalar(3);
        extra.relations.push_back(combo);
        FreePoly shifted;
        for (auto& [wd, c] : base.relations[2]) {
            FreeWord x = wd;
            x.insert(x.begin(), 1);
            shifted[x] = c;
        }
        extra.relations.push_back(shifted);
        auto d1 = truncated_quotient_dims(extra, 12);
        for (int d = 0; d <= 12; ++d) CHECK(d1[d] <= d0[d]);
        CHECK(d1 == d0);
        // dropping any relation raises some dimension
        for (size_t i = 0; i < base.relations.size(); ++i) {
            auto drop = base;
            drop.relations.erase(drop.relations.begin() + static_cast<long>(i));
            auto dd = truncated_quotient_dims(drop, 12);
            bool raised = false;
            for (int d = 0; d <= 12; ++d) {
                CHECK(dd[d] >= d0[d]);
                raised = raised || dd[d] > d0[d];
            }
            CHECK(raised);
        }
    }

    TEST_CASE("relation discovery") {
        auto y = jordan_y(2);
        auto P = discover_relations(J, y, {"a", "b", "c"}, 12);
        CHECK(P.relations.size() == 4);
        CHECK(truncated_quotient_dims(P, 12) == truncated_quotient_dims(jordan_presentation(2), 12));

        auto gens = generator_set(qm, GroupSpec::gnk(7, 3)).generators;
        auto Q = discover_relations(qm, gens, {"a", "b", "c", "d"}, 40);
        std::multiset<int> found, expected;
        for (auto& r : Q.relations) found.insert(Q.word_degree(r.begin()->first));
        auto R = gnk73_presentation();
        for (auto& r : R.relations) expected.insert(R.word_degree(r.begin()->first));
        CHECK(found == expected);
        CHECK(truncated_quotient_dims(Q, 60) == gnk73_series(60));
    }
}
