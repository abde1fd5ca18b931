#include <random>

#include "doctest.h"
#include "reesgb/linalg.hpp"

using namespace reesgb;

TEST_CASE("exact ranks on known matrices") {
    CHECK(rank_exact({}) == 0);
    CHECK(rank_exact({{0, 0}, {0, 0}}) == 0);
    CHECK(rank_exact({{1, 2}, {2, 4}}) == 1);
    CHECK(rank_exact({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(rank_exact({{1, 1, 0}, {1, 0, 1}, {1, 0, 0}}) == 3);
    CHECK(rank_exact({{2, 3, 5}, {7, 11, 13}, {9, 14, 18}}) == 2);

    std::vector<std::vector<BigInt>> big(2, std::vector<BigInt>(2));
    big[0] = {BigInt("123456789012345678901234567890"), BigInt(1)};
    big[1] = {BigInt("246913578024691357802469135780"), BigInt(2)};
    CHECK(rank_bareiss(big) == 1);
}

TEST_CASE("three rank routes agree on random matrices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = 1 + static_cast<int>(rng() % 6);
        std::vector<std::vector<long long>> a(rows,
                                              std::vector<long long>(cols));
        std::vector<std::vector<BigRat>> q(rows, std::vector<BigRat>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                a[r][c] = static_cast<long long>(rng() % 7) - 3;
                q[r][c] = a[r][c];
            }
        int bareiss = rank_exact(a);
        int from_kernel = cols - static_cast<int>(kernel_basis(q).size());
        CHECK(bareiss == from_kernel);
        // mod-p rank never exceeds the rational rank, and a large prime
        // almost surely matches on matrices this small
        CHECK(rank_mod_p(a, 2147483629) == bareiss);
        CHECK(rank_mod_p(a, 3) <= bareiss);
    }
}

TEST_CASE("modular rank sees torsion") {
    // diag(2): rank 1 over Q, rank 0 over Z/2
    CHECK(rank_exact({{2}}) == 1);
    CHECK(rank_mod_p({{2}}, 2) == 0);
}

TEST_CASE("rational kernels and primitive vectors") {
    std::vector<std::vector<BigRat>> a{{1, 1, 0}, {0, 1, 1}};
    auto basis = kernel_basis(a);
    REQUIRE(basis.size() == 1);
    auto prim = primitive_integer_vector(basis[0]);
    CHECK(prim == std::vector<BigInt>{BigInt(1), BigInt(-1), BigInt(1)});

    std::vector<BigRat> v{BigRat(-2, 3), BigRat(4, 3), BigRat(-2)};
    CHECK(primitive_integer_vector(v) ==
          std::vector<BigInt>{BigInt(1), BigInt(-2), BigInt(3)});

    std::vector<std::vector<BigRat>> id{{1, 0}, {0, 1}};
    CHECK(kernel_basis(id).empty());
}
