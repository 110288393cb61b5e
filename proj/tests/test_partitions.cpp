#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exotic/partitions.hpp"

#include "oracles.hpp"

#include <algorithm>

using namespace exotic;

TEST_CASE("partition construction validates") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition(std::vector<unsigned>{}).n() == 0);
    CHECK(Partition({3, 1}).n() == 4);
}

TEST_CASE("dual") {
    CHECK(dual(Partition({5})) == Partition({1, 1, 1, 1, 1}));
    CHECK(dual(Partition({2, 2})) == Partition({2, 2}));
    CHECK(dual(Partition({3, 1})) == Partition({2, 1, 1}));
    for (unsigned n = 0; n <= 12; ++n)
        for (const Partition& lam : all_partitions(n)) {
            CHECK(dual(lam) == exotic_tests::dual_oracle(lam));
            CHECK(dual(dual(lam)) == lam);
        }
}

TEST_CASE("dominance order") {
    const Partition l22({2, 2}), l31({3, 1});
    CHECK(dominance_leq(l22, l31));
    CHECK(!dominance_leq(l31, l22));
    CHECK_THROWS_AS((void)dominance_leq(Partition({2}), Partition({2, 1})),
                    std::invalid_argument);
    for (unsigned n = 1; n <= 8; ++n) {
        const Partition min(std::vector<unsigned>(n, 1)), max({n});
        for (const Partition& lam : all_partitions(n)) {
            CHECK(dominance_leq(min, lam));
            CHECK(dominance_leq(lam, max));
        }
    }
    // duality reverses the order
    for (const Partition& a : all_partitions(6))
        for (const Partition& b : all_partitions(6))
            CHECK(dominance_leq(a, b) == dominance_leq(dual(b), dual(a)));
}

TEST_CASE("dim_nilpotent_orbit") {
    CHECK(dim_nilpotent_orbit(Partition({1, 1, 1, 1})) == 0);
    CHECK(dim_nilpotent_orbit(Partition({2, 1, 1})) == 6); // 16 - (9 + 1)
    for (unsigned n = 1; n <= 10; ++n) {
        for (unsigned k = 0; 2 * k <= n; ++k)
            CHECK(dim_nilpotent_orbit(two_step_partition(n, k)) == 2ul * k * (n - k));
        for (const Partition& lam : all_partitions(n))
            CHECK(dim_nilpotent_orbit(lam) % 2 == 0);
    }
}

TEST_CASE("richardson_partition") {
    CHECK(richardson_partition(Composition({1, 1, 1, 1})) == Partition({4}));
    CHECK(richardson_partition(Composition({4})) == Partition({1, 1, 1, 1}));
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned k = 1; k < n; ++k) {
            const Partition expected =
                dual(Partition({std::max(k, n - k), std::min(k, n - k)}));
            CHECK(richardson_partition(Composition({k, n - k})) == expected);
        }
}

TEST_CASE("flag_dim") {
    CHECK(flag_dim(Composition({7})) == 0);
    CHECK(flag_dim(Composition({1, 1})) == 1);
    for (unsigned n = 2; n <= 9; ++n)
        for (unsigned k = 1; k < n; ++k)
            CHECK(flag_dim(Composition({k, n - k})) == k * (n - k));
}

TEST_CASE("spaltenstein_dim") {
    // a zero nilpotent imposes no condition
    for (const Composition& d :
         {Composition({2, 2}), Composition({1, 3}), Composition({1, 1, 2})})
        CHECK(spaltenstein_dim(Partition(std::vector<unsigned>(4, 1)), d) == flag_dim(d));

    CHECK(spaltenstein_dim(Partition({2, 1, 1}), Composition({2, 2})) == 1);
    CHECK(spaltenstein_dim(Partition({2, 2}), Composition({2, 2})) == 0);
    // empty: (3,1) is not dominated by the Richardson partition (2,2) of P_(2,2)
    CHECK(!spaltenstein_dim(Partition({3, 1}), Composition({2, 2})).has_value());
    CHECK_THROWS_AS((void)spaltenstein_dim(Partition({2}), Composition({1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("spaltenstein_grassmann_dim") {
    CHECK(spaltenstein_grassmann_dim(2, 2, 6) == 0);
    CHECK(spaltenstein_grassmann_dim(0, 3, 7) == 12);
    CHECK(spaltenstein_grassmann_dim(1, 2, 4) == 1);
    CHECK_THROWS_AS((void)spaltenstein_grassmann_dim(3, 2, 6), std::invalid_argument);
    // agrees with the flag-variety formula wherever both apply
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            std::vector<unsigned> parts;
            if (k)
                parts.push_back(k);
            if (n - k)
                parts.push_back(n - k);
            const Composition d(parts);
            for (unsigned ell = 0; ell <= std::min(k, n - k); ++ell)
                CHECK(spaltenstein_dim(two_step_partition(n, ell), d) ==
                      spaltenstein_grassmann_dim(ell, k, n));
        }
}

TEST_CASE("count_ssyt") {
    CHECK(count_ssyt(Partition(std::vector<unsigned>(5, 1)), Composition({5})) == 1);
    CHECK(count_ssyt(Partition({2, 1}), Composition({1, 1, 1})) == 2);
    CHECK(count_ssyt(Partition({2}), Composition({1, 1, 1})) == 0); // size mismatch
    // two-column shapes with Grassmannian weight: singleton when nonempty
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned k = 1; k < n; ++k)
            for (unsigned ell = 0; 2 * ell <= n; ++ell) {
                const unsigned long count =
                    count_ssyt(two_step_partition(n, ell), Composition({k, n - k}));
                const bool nonempty = ell <= std::min(k, n - k);
                CHECK(count == (nonempty ? 1u : 0u));
            }
    // invariance under permuting the weight
    for (const Partition& lam : all_partitions(6)) {
        std::vector<unsigned> d{3, 2, 1};
        const unsigned long base = count_ssyt(lam, Composition(d));
        std::sort(d.begin(), d.end());
        do {
            CHECK(count_ssyt(lam, Composition(d)) == base);
        } while (std::next_permutation(d.begin(), d.end()));
    }
}

TEST_CASE("strict-row convention is the one in force") {
    // With rows strictly increasing, a column pair (1,1) is legal but a row
    // pair (1,1) is not: shape (2) weight (2) has no filling, shape (1,1)
    // weight (2) has one.
    CHECK(count_ssyt(Partition({2}), Composition({2})) == 0);
    CHECK(count_ssyt(Partition({1, 1}), Composition({2})) == 1);
}

TEST_CASE("two_step_partition") {
    CHECK(two_step_partition(4, 0) == Partition({1, 1, 1, 1}));
    CHECK(two_step_partition(4, 1) == Partition({2, 1, 1}));
    CHECK(two_step_partition(4, 2) == Partition({2, 2}));
    CHECK(two_step_partition(4, 1) == dual(Partition({3, 1})));
    CHECK_THROWS_AS((void)two_step_partition(4, 3), std::invalid_argument);
}
