#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bdlrpc/subspace.hpp"

#include <sstream>

using namespace bdlrpc;

TEST_CASE("bounded-degree spaces have dimension exactly d") {
    FieldPtr f = Field::make(2, 8);
    Element alpha = f->gen();
    for (std::uint32_t d = 1; d <= 8; ++d) {
        Subspace v = Subspace::bounded_degree(alpha, d);
        CHECK(v.dim() == d);
        CHECK(v.contains(f->one()));
        CHECK(v.contains(alpha.pow(static_cast<std::int64_t>(d) - 1)));
        if (d < 8) CHECK_FALSE(v.contains(alpha.pow(static_cast<std::int64_t>(d))));
    }
    CHECK_THROWS_AS(Subspace::bounded_degree(alpha, 0), DegreeOutOfRangeError);
    CHECK_THROWS_AS(Subspace::bounded_degree(alpha, 9), DegreeOutOfRangeError);
}

TEST_CASE("product chain V_i . V_j = V_{i+j-1}") {
    FieldPtr f = Field::make(3, 9);
    Element alpha = f->gen();
    for (std::uint32_t i = 1; i <= 4; ++i)
        for (std::uint32_t j = 1; j <= 4; ++j) {
            Subspace prod = product(Subspace::bounded_degree(alpha, i),
                                    Subspace::bounded_degree(alpha, j));
            CHECK(prod == Subspace::bounded_degree(alpha, i + j - 1));
        }
}

TEST_CASE("a concrete product in F_8") {
    // With modulus x^3 + x + 1: span{x} . span{x^2} = span{x^3} = span{x+1}.
    FieldPtr f = Field::make(2, 3, std::vector<std::uint32_t>{1, 1, 0, 1});
    Element x = f->gen();
    Subspace sx = Subspace::span_of({x});
    Subspace sx2 = Subspace::span_of({x * x});
    Subspace p = product(sx, sx2);
    CHECK(p.dim() == 1);
    CHECK(p == Subspace::span_of({f->from_coeffs({1, 1, 0})}));
}

TEST_CASE("span_of canonicalizes and validates") {
    FieldPtr f = Field::make(2, 4);
    Element g = f->gen();
    Subspace a = Subspace::span_of({f->one(), g, f->one() + g});
    CHECK(a.dim() == 2);
    Subspace b = Subspace::span_of({g, f->one()});
    CHECK(a == b);
    CHECK(a.basis_elements().size() == 2);
    // Zero elements only span the zero space.
    CHECK(Subspace::span_of({f->zero()}).dim() == 0);
    CHECK_THROWS_AS(Subspace::span_of({}), FieldMismatchError);
    FieldPtr other = Field::make(2, 3);
    CHECK_THROWS_AS(Subspace::span_of({f->one(), other->one()}), FieldMismatchError);
}

TEST_CASE("sum, intersection and the modular dimension identity") {
    FieldPtr f = Field::make(2, 6);
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Subspace U = Subspace::span_of({f->sample(rng), f->sample(rng)});
        Subspace V = Subspace::span_of({f->sample(rng), f->sample(rng)});
        Subspace S = sum(U, V);
        Subspace I = intersect(U, V);
        CHECK(S.dim() + I.dim() == U.dim() + V.dim());
        CHECK(S.contains(U));
        CHECK(S.contains(V));
        CHECK(U.contains(I));
        CHECK(V.contains(I));
        for (const Element& e : I.basis_elements()) {
            CHECK(U.contains(e));
            CHECK(V.contains(e));
        }
    }
}

TEST_CASE("scalar multiples preserve dimension") {
    FieldPtr f = Field::make(5, 4);
    Rng rng(11);
    Subspace V = Subspace::span_of({f->sample(rng), f->sample(rng), f->sample(rng)});
    for (int i = 0; i < 20; ++i) {
        Element beta = f->sample_nonzero(rng);
        Subspace W = scalar_mul(beta, V);
        CHECK(W.dim() == V.dim());
        for (const Element& e : V.basis_elements()) CHECK(W.contains(beta * e));
        // beta^{-1} W recovers V.
        CHECK(scalar_mul(beta.inv(), W) == V);
    }
    CHECK_THROWS_AS(scalar_mul(f->zero(), V), ZeroScalarError);
}

TEST_CASE("product dimension is bounded by the factor dimensions") {
    FieldPtr f = Field::make(2, 12);
    Rng rng(3);
    for (int i = 0; i < 30; ++i) {
        Subspace U = Subspace::span_of({f->sample(rng), f->sample(rng)});
        Subspace V = Subspace::span_of({f->sample(rng), f->sample(rng), f->sample(rng)});
        Subspace P = product(U, V);
        CHECK(P.dim() <= U.dim() * V.dim());
        // Products of basis elements all live inside P.
        for (const Element& ue : U.basis_elements())
            for (const Element& ve : V.basis_elements()) CHECK(P.contains(ue * ve));
    }
}

TEST_CASE("full space and zero space") {
    FieldPtr f = Field::make(3, 5);
    Subspace full = Subspace::full(f);
    CHECK(full.dim() == 5);
    Rng rng(9);
    for (int i = 0; i < 20; ++i) CHECK(full.contains(f->sample(rng)));
    Subspace zero(f);
    CHECK(zero.dim() == 0);
    CHECK(full.contains(zero));
    CHECK_FALSE(zero.contains(full));
    CHECK(sum(zero, full) == full);
    CHECK(intersect(zero, full) == zero);
}

TEST_CASE("textual basis listing") {
    FieldPtr f = Field::make(2, 4);
    Subspace v = Subspace::bounded_degree(f->gen(), 2);
    std::istringstream lines(v.to_text());
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == v.dim());
}
