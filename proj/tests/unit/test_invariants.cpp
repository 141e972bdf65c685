#include <doctest.h>

#include "ncinv/hj_series.hpp"
#include "ncinv/invariants.hpp"

#include <algorithm>
#include <numeric>

using namespace ncinv;

namespace {

CycloScalar w(long m, long e = 1) { return CycloScalar::root_of_unity(m, e); }
const AlgebraSpec qm = AlgebraSpec::quantum(CycloScalar(-1));
const AlgebraSpec comm = AlgebraSpec::quantum(CycloScalar(1));

AlgebraElt uv_power(int e) { return power(qm, AlgebraElt::monomial(1, 1), e); }

AlgebraElt binom(int i, int j) { return AlgebraElt::monomial(i, j) - AlgebraElt::monomial(j, i); }

bool independent(const std::vector<AlgebraElt>& xs, int d) {
    Echelon e;
    for (auto& x : xs)
        if (!e.insert(to_vec(x, d))) return false;
    return true;
}

std::vector<GroupSpec> sample_groups() {
    std::vector<GroupSpec> out;
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= 7; ++k)
            if (2 * n * k <= 60) out.push_back(GroupSpec::gnk(n, k));
    out.push_back(GroupSpec::dihedral(3, 2));
    out.push_back(GroupSpec::dihedral(5, 2));
    out.push_back(GroupSpec::dihedral(5, 3));
    out.push_back(GroupSpec::cyclic(AlgebraSpec::quantum(w(5)), 5, 2));
    out.push_back(GroupSpec::cyclic(AlgebraSpec::quantum(w(3)), 4, 1));
    out.push_back(GroupSpec::cyclic(comm, 7, 3));
    out.push_back(GroupSpec::cyclic(AlgebraSpec::jordan(), 3, 1));
    out.push_back(GroupSpec::cyclic(AlgebraSpec::quantum(w(4)), 6, 2, true));
    return out;
}

}  // namespace

TEST_SUITE("invariants") {
    TEST_CASE("Molien coefficients equal fixed-space dimensions") {
        for (auto& G : sample_groups()) {
            INFO(G.str());
            auto md = molien_dims(G.ambient(), G, 30);
            for (int d = 0; d <= 30; ++d) CHECK(md[d] == static_cast<long>(fixed_space(G.ambient(), G, d).size()));
        }
    }

    TEST_CASE("fixed space, Molien and Reynolds examples") {
        CHECK(fixed_space(qm, GroupSpec::gnk(3, 1), 1).empty());
        auto C2 = GroupSpec::cyclic(qm, 2, 1);
        CHECK(fixed_space(qm, C2, 2).size() == 3);
        auto F = fixed_space(qm, GroupSpec::gnk(7, 3), 9);
        REQUIRE(F.size() == 1);
        CHECK(F[0] == AlgebraElt::monomial(8, 1) - AlgebraElt::monomial(1, 8));

        auto triv = molien_dims(qm, GroupSpec::trivial(qm), 10);
        for (long d = 0; d <= 10; ++d) CHECK(triv[d] == d + 1);
        auto c2 = molien_dims(qm, C2, 10);
        for (long d = 0; d <= 10; ++d) CHECK(c2[d] == (d % 2 ? 0 : d + 1));

        // (1 - t^30 - t^33 - t^36 + t^48 + t^51) / ((1-t^15)(1-t^9)(1-t^21)(1-t^12))
        std::vector<Integer> num(52, 0), den{1};
        num[0] = 1;
        num[30] = num[33] = num[36] = -1;
        num[48] = num[51] = 1;
        for (long e : {15, 9, 21, 12}) {
            std::vector<Integer> r(den.size() + e, 0);
            for (size_t i = 0; i < den.size(); ++i) r[i] += den[i], r[i + e] -= den[i];
            den = r;
        }
        auto ref = expand_integer_rational(num, den, 60);
        auto md = molien_dims(qm, GroupSpec::gnk(7, 3), 60);
        for (int d = 0; d <= 60; ++d) CHECK(md[d] == ref[d].get_si());

        auto G31 = GroupSpec::gnk(3, 1);
        CHECK(reynolds(qm, G31, AlgebraElt::monomial(3, 1)).is_zero());
        // u^i v^j with i - j = 0 mod n, i + j = 0 mod k: the sum is |G|/2 (u^i v^j + (-1)^{(i+1)(j+1)+1} u^j v^i)
        for (int n = 1; n <= 5; n += 2)
            for (int k = 1; k <= 5; k += 2)
                for (int i = 0; i <= 8; ++i)
                    for (int j = 0; j <= 8; ++j) {
                        if ((i - j) % n || (i + j) % k) continue;
                        int sign = ((i + 1) * (j + 1) + 1) % 2 ? -1 : 1;
                        AlgebraElt expect = (AlgebraElt::monomial(i, j) + AlgebraElt::monomial(j, i, CycloScalar(sign))) * CycloScalar(n * k);
                        CHECK(reynolds(qm, GroupSpec::gnk(n, k), AlgebraElt::monomial(i, j), false) == expect);
                    }
    }

    TEST_CASE("fixed spaces are invariant") {
        for (auto& G : sample_groups())
            for (int d = 0; d <= 12; ++d)
                for (auto& x : fixed_space(G.ambient(), G, d)) CHECK(is_invariant(G.ambient(), G, x));
    }

    TEST_CASE("Reynolds operator is a projection onto invariants") {
        for (auto& G : sample_groups()) {
            INFO(G.str());
            const auto& A = G.ambient();
            long order = static_cast<long>(enumerate_group(G).size());
            for (int d = 0; d <= 6; ++d)
                for (int i = 0; i <= d; ++i) {
                    AlgebraElt a = AlgebraElt::monomial(i, d - i) + AlgebraElt::monomial(d - i, i, CycloScalar(3));
                    AlgebraElt r = reynolds(A, G, a);
                    CHECK(is_invariant(A, G, r));
                    CHECK(reynolds(A, G, r) == r);
                    CHECK(reynolds(A, G, a, false) == r * CycloScalar(order));
                }
        }
    }

    TEST_CASE("gnk_basis spans the invariants of each degree") {
        for (int n = 1; n <= 9; n += 2)
            for (int k = 1; k <= 9; k += 2) {
                if (std::gcd(n, k) != 1) continue;
                auto G = GroupSpec::gnk(n, k);
                auto md = molien_dims(qm, G, 24);
                for (int d = 0; d <= 24; ++d) {
                    INFO("n=" << n << " k=" << k << " d=" << d);
                    auto B = gnk_basis(n, k, d);
                    CHECK(static_cast<long>(B.size()) == md[d]);
                    CHECK(independent(B, d));
                    for (auto& x : B) CHECK(is_invariant(qm, G, x));
                }
            }
    }

    TEST_CASE("gnk_basis for G_{7,3} in degree 21 has two elements") {
        auto B = gnk_basis(7, 3, 21);
        REQUIRE(B.size() == 2);
        CHECK(B[0] == NCSeries::basis_element(7, 7, 1));
        CHECK(B[1] == AlgebraElt::monomial(21, 0) - AlgebraElt::monomial(0, 21));
        CHECK(molien_dims(qm, GroupSpec::gnk(7, 3), 21)[21] == 2);
    }

    TEST_CASE("theta and eta are mutually inverse") {
        int count = 0;
        for (int n = 3; n <= 20; ++n)
            for (int k = 1; k <= 20; ++k) {
                if (std::gcd(n, k) != 1 || (n - k) % 2 == 0 || k % 4 == 2) continue;
                auto [m, q] = theta_pair(n, k);
                CHECK(1 < q);
                CHECK(q < m);
                CHECK(std::gcd(m, q) == 1);
                CHECK(eta_pair(m, q) == std::make_pair(n, k));
                ++count;
            }
        CHECK(count > 0);
        for (int m = 3; m <= 20; ++m)
            for (int q = 2; q < m; ++q) {
                if (std::gcd(m, q) != 1) continue;
                auto [n, k] = eta_pair(m, q);
                CHECK(theta_pair(n, k) == std::make_pair(m, q));
            }
    }

    TEST_CASE("anticommutator of the first two generators for n < k") {
        for (int n = 1; n <= 15; n += 2)
            for (int k = n + 2; k <= 15; k += 2) {
                if (std::gcd(n, k) != 1) continue;
                auto x = nc_series(n, k).generators();
                AlgebraElt lhs = mul(qm, x[0], x[1]) + mul(qm, x[1], x[0]);
                CycloScalar c(((n - 1) / 2) % 2 ? -4 : 4);
                INFO("n=" << n << " k=" << k);
                CHECK(lhs == uv_power(2 * k) * c);
            }
    }

    TEST_CASE("noncommuting invariant witnesses for odd n and k") {
        for (int n = 1; n <= 9; n += 2)
            for (int k = 1; k <= 9; k += 2) {
                int m = 1;
                while (m * k <= n) m += 2;
                int i = (m * k + n) / 2, j = (m * k - n) / 2;
                auto G = GroupSpec::gnk(n, k);
                AlgebraElt a = binom(i, j), b = binom(3 * i, 3 * j);
                INFO("n=" << n << " k=" << k);
                CHECK(is_invariant(qm, G, a));
                CHECK(is_invariant(qm, G, b));
                CHECK_FALSE(mul(qm, a, b) == mul(qm, b, a));
            }
    }

    TEST_CASE("invariants commute when n or k is even") {
        for (int n = 1; n <= 8; ++n)
            for (int k = 1; k <= 8; ++k) {
                if (n % 2 && k % 2) continue;
                auto G = GroupSpec::gnk(n, k);
                std::vector<std::vector<AlgebraElt>> F;
                for (int d = 0; d <= 16; ++d) F.push_back(fixed_space(qm, G, d));
                for (int d1 = 1; d1 <= 16; ++d1)
                    for (int d2 = d1; d1 + d2 <= 16; ++d2)
                        for (auto& a : F[d1])
                            for (auto& b : F[d2]) CHECK((mul(qm, a, b) - mul(qm, b, a)).is_zero());
            }
    }

    TEST_CASE("G_{7,3} generators and the role of (uv)^6") {
        auto G = GroupSpec::gnk(7, 3);
        auto S = generator_set(qm, G);
        CHECK(S.provenance == Provenance::nc_formula);
        CHECK(S.degrees == std::vector<int>{15, 9, 21, 12});
        CHECK(verify_generation(qm, G, S.generators, 60).success);
        auto dropped = S.generators;
        dropped.pop_back();
        auto rep = verify_generation(qm, G, dropped, 60);
        CHECK_FALSE(rep.success);
        CHECK(rep.first_failure == 12);
    }

    TEST_CASE("formula generators generate") {
        for (int n = 3; n <= 15; n += 2) {
            auto G = GroupSpec::gnk(n, 1);
            auto S = generator_set(qm, G);
            CHECK(verify_generation(qm, G, S.generators, 4 * n).success);
        }
        {
            auto G = GroupSpec::gnk(17, 11);
            auto S = generator_set(qm, G);
            CHECK(verify_generation(qm, G, S.generators, 100).success);
        }
        for (int n = 3; n <= 11; n += 2)
            for (int k = 1; k <= 11; k += 2) {
                if (std::gcd(n, k) != 1 || n == k || n * k > 45) continue;
                auto G = GroupSpec::gnk(n, k);
                INFO("n=" << n << " k=" << k);
                CHECK(verify_generation(qm, G, generator_set(qm, G).generators, 40).success);
            }
        for (int m = 3; m <= 8; ++m)
            for (int q = 2; q < m; ++q) {
                if (std::gcd(m, q) != 1) continue;
                auto G = GroupSpec::dihedral(m, q);
                auto S = generator_set(comm, G);
                CHECK(S.provenance == Provenance::typeD_formula);
                INFO("m=" << m << " q=" << q);
                CHECK(verify_generation(comm, G, S.generators, 40).success);
            }
        for (int n = 2; n <= 9; ++n)
            for (int a = 1; a < n; ++a) {
                if (std::gcd(n, a) != 1) continue;
                auto G = GroupSpec::cyclic(AlgebraSpec::quantum(w(5)), n, a);
                auto S = generator_set(G.ambient(), G);
                CHECK(S.provenance == Provenance::typeA_formula);
                CHECK(verify_generation(G.ambient(), G, S.generators, 30).success);
            }
    }

    TEST_CASE("formula generator degrees agree with brute force") {
        for (int m = 3; m <= 7; ++m)
            for (int q = 2; q < m; ++q) {
                if (std::gcd(m, q) != 1) continue;
                auto G = GroupSpec::dihedral(m, q);
                auto f = generator_set(comm, G).degrees, b = brute_force_generators(comm, G).degrees;
                std::sort(f.begin(), f.end());
                INFO("m=" << m << " q=" << q);
                CHECK(f == b);
            }
        for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {5, 3}, {7, 3}, {3, 5}}) {
            auto G = GroupSpec::gnk(n, k);
            auto f = generator_set(qm, G).degrees, b = brute_force_generators(qm, G).degrees;
            std::sort(f.begin(), f.end());
            CHECK(f == b);
        }
    }

    TEST_CASE("small examples") {
        auto J = GroupSpec::cyclic(AlgebraSpec::jordan(), 2, 1);
        auto S = generator_set(AlgebraSpec::jordan(), J);
        CHECK(S.provenance == Provenance::jordan_formula);
        REQUIRE(S.generators.size() == 3);
        CHECK(S.generators[0] == AlgebraElt::monomial(2, 0));
        CHECK(S.generators[1] == AlgebraElt::monomial(1, 1, CycloScalar(-1)));
        CHECK(S.generators[2] == AlgebraElt::monomial(0, 2, CycloScalar(Rational(1, 2))));
        CHECK(verify_generation(AlgebraSpec::jordan(), J, S.generators, 20).success);

        auto C = GroupSpec::cyclic(AlgebraSpec::quantum(w(5)), 3, 2);
        auto T = generator_set(C.ambient(), C);
        REQUIRE(T.generators.size() == 3);
        CHECK(T.generators[0] == AlgebraElt::monomial(3, 0));
        CHECK(T.generators[1] == AlgebraElt::monomial(1, 1));
        CHECK(T.generators[2] == AlgebraElt::monomial(0, 3));

        CHECK_THROWS_AS(generator_set(qm, GroupSpec::gnk(3, 2)), std::invalid_argument);
    }

    TEST_CASE("theta correspondence evidence") {
        for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {1, 4}, {3, 4}, {4, 3}}) {
            auto rep = theta_correspondence(n, k, 40);
            INFO("n=" << n << " k=" << k << " target " << rep.target.str());
            CHECK(rep.series_equal);
            CHECK(rep.degrees_equal);
        }
        auto r21 = theta_correspondence(2, 1, 40);
        REQUIRE(r21.kleinian_series.size() == 41);
        CHECK(r21.kleinian_equal);
        CHECK(theta_correspondence(2, 1).target.str() == "1/4(1,3)");
        CHECK(theta_correspondence(1, 4).target.str() == "1/8(1,5)");
        CHECK(theta_correspondence(3, 4).target.str() == "D_{5,3}");
        CHECK(theta_correspondence(4, 3).target.str() == "D_{5,2}");
        CHECK_THROWS_AS(theta_correspondence(3, 5), std::invalid_argument);
        CHECK_THROWS_AS(theta_correspondence(3, 2), std::invalid_argument);
    }
}
