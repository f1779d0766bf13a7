#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bdlrpc/fq_matrix.hpp"

#include <array>
#include <cmath>
#include <set>

using namespace bdlrpc;

namespace {

// All vectors of a subspace, by brute force over its basis combinations.
std::set<std::vector<std::uint32_t>> all_vectors(const FqSubspace& S) {
    const std::uint32_t q = S.q();
    const std::size_t dim = S.dim(), amb = S.ambient();
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> digits(dim, 0);
    while (true) {
        std::vector<std::uint32_t> v(amb, 0);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < amb; ++j)
                v[j] = (v[j] + digits[i] * S.basis().at(i, j)) % q;
        out.insert(v);
        std::size_t pos = 0;
        while (pos < dim && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == dim) break;
    }
    return out;
}

} // namespace

TEST_CASE("prime-field scalar helpers") {
    CHECK(fq_inv(1, 2) == 1);
    CHECK(fq_inv(2, 5) == 3);
    CHECK(fq_inv(4, 7) == 2);
    CHECK_THROWS_AS(fq_inv(0, 5), DivisionByZeroError);
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(31));
    CHECK_FALSE(is_prime_u32(1));
    CHECK_FALSE(is_prime_u32(4));
    CHECK_FALSE(is_prime_u32(91));  // 7 * 13
    CHECK(is_prime_u32(65537));
}

TEST_CASE("construction and validation") {
    CHECK_THROWS_AS(FqMatrix(6, 2, 2), NotPrimeError);
    FqMatrix z(3, 2, 4);
    CHECK(z.is_zero());
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 4);
    FqMatrix id = FqMatrix::identity(3, 3);
    CHECK(id.at(0, 0) == 1);
    CHECK(id.at(0, 1) == 0);
    FqMatrix m = FqMatrix::from_rows(3, {{1, 2}, {4, 5}});  // entries reduced mod 3
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 2);
    CHECK_THROWS_AS(FqMatrix::from_rows(3, {{1, 2}, {1}}), DimensionMismatchError);
}

TEST_CASE("rref and rank on known matrices") {
    // Over F_2: rows (1,1,0), (0,1,1), (1,0,1) sum to zero -> rank 2.
    FqMatrix a = FqMatrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    RrefResult r = rref(a);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.R == FqMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));

    // Over F_3: determinant 2, so full rank.
    FqMatrix b = FqMatrix::from_rows(3, {{1, 0, 0}, {2, 1, 1}, {0, 0, 2}});
    CHECK(rank_of(b) == 3);
    CHECK(rank_of(FqMatrix(5, 3, 3)) == 0);
    CHECK(rank_of(FqMatrix::identity(7, 4)) == 4);
}

TEST_CASE("arithmetic identities on random matrices") {
    Rng rng(17);
    for (std::uint32_t q : {2u, 5u}) {
        for (int i = 0; i < 25; ++i) {
            FqMatrix A = sample_uniform(q, 3, 4, rng);
            FqMatrix B = sample_uniform(q, 4, 2, rng);
            FqMatrix C = sample_uniform(q, 4, 2, rng);
            CHECK(mat_mul(A, mat_add(B, C)) == mat_add(mat_mul(A, B), mat_mul(A, C)));
            CHECK(mat_sub(B, B).is_zero());
            CHECK(mat_add(B, mat_neg(B)).is_zero());
            CHECK(transpose(transpose(A)) == A);
            CHECK(transpose(mat_mul(A, B)) == mat_mul(transpose(B), transpose(A)));
        }
        FqMatrix S = sample_uniform(q, 3, 3, rng);
        CHECK(mat_pow(S, 0) == FqMatrix::identity(q, 3));
        CHECK(mat_pow(S, 3) == mat_mul(S, mat_mul(S, S)));
    }
    CHECK_THROWS_AS(mat_mul(FqMatrix(2, 2, 3), FqMatrix(2, 2, 3)), DimensionMismatchError);
    CHECK_THROWS_AS(mat_add(FqMatrix(2, 2, 3), FqMatrix(3, 2, 3)), DimensionMismatchError);
}

TEST_CASE("stacking and slicing") {
    FqMatrix a = FqMatrix::from_rows(2, {{1, 0}, {0, 1}});
    FqMatrix b = FqMatrix::from_rows(2, {{1, 1}});
    FqMatrix s = stack_rows(a, b);
    CHECK(s.rows() == 3);
    CHECK(s.row(2) == std::vector<std::uint32_t>{1, 1});
    FqMatrix c = concat_cols(a, a);
    CHECK(c.cols() == 4);
    CHECK(c.row(0) == std::vector<std::uint32_t>{1, 0, 1, 0});
    CHECK(s.row_slice(1, 3) == FqMatrix::from_rows(2, {{0, 1}, {1, 1}}));
}

TEST_CASE("inverse and kernel") {
    Rng rng(31);
    for (std::uint32_t q : {2u, 3u, 7u}) {
        // Find a nonsingular 4x4 and verify the inverse.
        FqMatrix A(q, 4, 4);
        do {
            A = sample_uniform(q, 4, 4, rng);
        } while (rank_of(A) < 4);
        CHECK(mat_mul(A, inverse(A)) == FqMatrix::identity(q, 4));
        CHECK(mat_mul(inverse(A), A) == FqMatrix::identity(q, 4));

        // Rank-nullity on random wide matrices, and M k^T = 0 for kernel rows.
        FqMatrix M = sample_uniform(q, 3, 5, rng);
        FqMatrix K = kernel_basis(M);
        CHECK(K.rows() == 5 - rank_of(M));
        if (K.rows() > 0) CHECK(mat_mul(M, transpose(K)).is_zero());
    }
    // Singular and non-square inputs are rejected.
    CHECK_THROWS_AS(inverse(FqMatrix(2, 2, 2)), DimensionMismatchError);
    CHECK_THROWS_AS(inverse(FqMatrix(2, 2, 3)), DimensionMismatchError);
}

TEST_CASE("solve distinguishes unique, none and underdetermined") {
    // x + y = 1, y = 1 over F_2: unique (0, 1).
    FqMatrix M = FqMatrix::from_rows(2, {{1, 1}, {0, 1}});
    SolveResult s = solve(M, {1, 1});
    CHECK(s.kind == SolveKind::Unique);
    CHECK(s.x == std::vector<std::uint32_t>{0, 1});

    // Inconsistent: x + y = 0 and x + y = 1.
    FqMatrix M2 = FqMatrix::from_rows(2, {{1, 1}, {1, 1}});
    CHECK(solve(M2, {0, 1}).kind == SolveKind::None);

    // Underdetermined: one equation, two unknowns.
    FqMatrix M3 = FqMatrix::from_rows(3, {{1, 2}});
    SolveResult u = solve(M3, {1});
    CHECK(u.kind == SolveKind::Underdetermined);
    CHECK(u.kernel.rows() == 1);
    // The particular solution still satisfies the system.
    CHECK((u.x[0] + 2 * u.x[1]) % 3 == 1);

    // Random consistency check: build b = M x and solve.
    Rng rng(77);
    for (int i = 0; i < 40; ++i) {
        FqMatrix A = sample_uniform(5, 4, 3, rng);
        FqMatrix x = sample_uniform(5, 3, 1, rng);
        FqMatrix b = mat_mul(A, x);
        std::vector<std::uint32_t> bv;
        for (std::size_t j = 0; j < 4; ++j) bv.push_back(b.at(j, 0));
        SolveResult r = solve(A, bv);
        REQUIRE(r.kind != SolveKind::None);
        FqMatrix xs(5, 3, 1);
        for (std::size_t j = 0; j < 3; ++j) xs.set(j, 0, r.x[j]);
        CHECK(mat_mul(A, xs) == b);
        if (rank_of(A) == 3) CHECK(r.kind == SolveKind::Unique);
    }
}

TEST_CASE("text round-trip") {
    FqMatrix a = FqMatrix::from_rows(3, {{1, 2, 0}, {0, 1, 1}});
    CHECK(FqMatrix::from_text(a.to_text()) == a);
    CHECK(FqMatrix::from_text(FqMatrix(2, 0, 3).to_text()) == FqMatrix(2, 0, 3));
    CHECK_THROWS_AS(FqMatrix::from_text("garbage"), TextParseError);
    CHECK_THROWS_AS(FqMatrix::from_text("2 1 2\n1\n"), TextParseError);
}

TEST_CASE("subspaces are canonical") {
    // Same span from different generator orders/combinations.
    FqMatrix g1 = FqMatrix::from_rows(2, {{1, 1, 0}, {0, 1, 1}});
    FqMatrix g2 = FqMatrix::from_rows(2, {{1, 0, 1}, {0, 1, 1}, {1, 1, 0}});
    CHECK(FqSubspace::span(g1) == FqSubspace::span(g2));
    FqSubspace s = FqSubspace::span(g1);
    CHECK(s.dim() == 2);
    CHECK(s.contains({1, 0, 1}));
    CHECK_FALSE(s.contains({1, 0, 0}));
    CHECK(s.contains(FqSubspace::span(FqMatrix::from_rows(2, {{1, 1, 0}}))));

    FqSubspace zero(3, 4);
    CHECK(zero.dim() == 0);
    CHECK(zero.ambient() == 4);
    CHECK(zero.contains({0, 0, 0, 0}));

    // grow reports when the dimension actually grew.
    FqSubspace t(2, 3);
    CHECK(t.grow(FqMatrix::from_rows(2, {{1, 1, 0}})));
    CHECK_FALSE(t.grow(FqMatrix::from_rows(2, {{1, 1, 0}})));
    CHECK(t.grow(FqMatrix::from_rows(2, {{0, 0, 1}})));
    CHECK(t.dim() == 2);
}

TEST_CASE("sum and intersection agree with brute-force enumeration") {
    Rng rng(13);
    for (int i = 0; i < 30; ++i) {
        FqSubspace U = row_space(sample_uniform(2, 2, 4, rng));
        FqSubspace V = row_space(sample_uniform(2, 2, 4, rng));
        FqSubspace S = span_sum(U, V);
        FqSubspace I = span_intersect(U, V);
        // Modular identity.
        CHECK(S.dim() + I.dim() == U.dim() + V.dim());
        // Exact membership agreement.
        auto vu = all_vectors(U), vv = all_vectors(V), vi = all_vectors(I);
        for (const auto& v : vi) {
            CHECK(vu.count(v) == 1);
            CHECK(vv.count(v) == 1);
        }
        std::size_t common = 0;
        for (const auto& v : vu) common += vv.count(v);
        CHECK(common == vi.size());
        CHECK(S.contains(U));
        CHECK(S.contains(V));
    }
    CHECK_THROWS_AS(span_sum(FqSubspace(2, 3), FqSubspace(2, 4)), AmbientMismatchError);
    CHECK_THROWS_AS(span_intersect(FqSubspace(2, 3), FqSubspace(3, 3)), AmbientMismatchError);
}

TEST_CASE("uniform sampling: chi-square on F_3 entries") {
    // 3 * 10^5 entries from seeded draws; critical value for df = 2 at
    // alpha = 0.001 is 13.816. The seed is fixed, so this never flakes.
    Rng rng(424242);
    std::array<std::size_t, 3> counts{0, 0, 0};
    const std::size_t draws = 100000;
    for (std::size_t i = 0; i < draws; ++i) {
        FqMatrix m = sample_uniform(3, 1, 3, rng);
        for (std::size_t j = 0; j < 3; ++j) ++counts[m.at(0, j)];
    }
    const double expected = static_cast<double>(draws * 3) / 3.0;
    double chi2 = 0;
    for (std::size_t c : counts) {
        const double dlt = static_cast<double>(c) - expected;
        chi2 += dlt * dlt / expected;
    }
    CHECK(chi2 < 13.816);
}

TEST_CASE("full-rank frequency of random 3x2 matrices over F_2") {
    // Exactly 42 of the 64 matrices have rank 2: expect 0.65625.
    Rng rng(2024);
    const std::size_t trials = 20000;
    std::size_t full = 0;
    for (std::size_t i = 0; i < trials; ++i)
        if (rank_of(sample_uniform(2, 3, 2, rng)) == 2) ++full;
    const double p = 42.0 / 64.0;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    CHECK(std::abs(static_cast<double>(full) / trials - p) < 3 * sigma);
}

TEST_CASE("rng determinism and rejection sampling bounds") {
    Rng a = Rng::derive(99, 4);
    Rng b = Rng::derive(99, 4);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(1);
    for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
    for (int i = 0; i < 100; ++i) CHECK(c.below(1) == 0);
}
