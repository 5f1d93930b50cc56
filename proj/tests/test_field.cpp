#include <doctest.h>

#include "totref/kmatrix.hpp"
#include "totref/rng.hpp"

using namespace totref;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("field spec parsing and validation") {
    CHECK(FieldSpec::parse("Q") == Q);
    CHECK(FieldSpec::parse("F5") == F5);
    CHECK(F5.name() == "F5");
    CHECK(Q.name() == "Q");
    CHECK(Q.characteristic() == 0);
    CHECK(F3.characteristic() == 3);
    CHECK_THROWS_AS(FieldSpec::prime(4), Error);
    CHECK_THROWS_AS(FieldSpec::parse("F4"), ParseError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
}

TEST_CASE("scalar arithmetic stays canonical") {
    Scalar half = Scalar::parse(Q, "2/4");
    CHECK(half.str() == "1/2");
    CHECK(Scalar::parse(Q, "-6/4").str() == "-3/2");
    CHECK(Scalar::parse(Q, "3").str() == "3");
    CHECK_THROWS_AS(Scalar::parse(Q, "1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "a"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(Q, "1/2/3"), ParseError);

    CHECK((half + half).is_one());
    CHECK((half - half).is_zero());
    CHECK((half * Scalar::from_int(Q, 4)).str() == "2");
    CHECK(half.inverse().str() == "2");

    Scalar a = Scalar::parse(F5, "7");
    CHECK(a.str() == "2");
    CHECK((-a).str() == "3");
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(Scalar::zero(F5).inverse(), ZeroElement);
    CHECK_THROWS_AS(Scalar::one(Q) + Scalar::one(F5), FieldMismatch);
}

TEST_CASE("every nonzero element of a prime field has an inverse") {
    for (std::uint64_t p : {2, 3, 5, 7}) {
        FieldSpec f = FieldSpec::prime(p);
        for (std::uint64_t v = 1; v < p; ++v) {
            Scalar s = Scalar::from_int(f, static_cast<long>(v));
            CHECK((s * s.inverse()).is_one());
        }
    }
}

TEST_CASE("rank and kernel on the pinned cases") {
    SUBCASE("identity has full rank and no kernel") {
        auto rk = rank_and_kernel(KMatrix::identity(2, Q));
        CHECK(rk.rank == 2);
        CHECK(rk.kernel.empty());
    }
    SUBCASE("1x1 zero matrix over F2") {
        auto rk = rank_and_kernel(KMatrix(1, 1, F2));
        CHECK(rk.rank == 0);
        REQUIRE(rk.kernel.size() == 1);
        CHECK(rk.kernel[0][0].is_one());
    }
    SUBCASE("rank-1 matrix with echelon kernel vector") {
        KMatrix m = KMatrix::from_int_rows(Q, {{1, 2}, {2, 4}});
        auto rk = rank_and_kernel(m);
        CHECK(rk.rank == 1);
        REQUIRE(rk.kernel.size() == 1);
        CHECK(rk.kernel[0][0] == Scalar::from_int(Q, -2));
        CHECK(rk.kernel[0][1] == Scalar::from_int(Q, 1));
        // every kernel vector really is annihilated
        for (const auto& v : rk.kernel)
            for (const Scalar& entry : m.apply(v)) CHECK(entry.is_zero());
    }
}

TEST_CASE("solve_linear follows the free-variable-zero convention") {
    KMatrix id2 = KMatrix::identity(2, Q);
    auto sol = solve_linear(id2, {Scalar::from_int(Q, 3), Scalar::from_int(Q, 5)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0].str() == "3");
    CHECK((*sol)[1].str() == "5");

    KMatrix row = KMatrix::from_int_rows(F3, {{1, 1}});
    auto sol2 = solve_linear(row, {Scalar::from_int(F3, 2)});
    REQUIRE(sol2.has_value());
    CHECK((*sol2)[0].str() == "2");
    CHECK((*sol2)[1].str() == "0");

    KMatrix col = KMatrix::from_int_rows(Q, {{1}, {1}});
    CHECK_FALSE(solve_linear(col, {Scalar::from_int(Q, 0), Scalar::from_int(Q, 1)}).has_value());

    CHECK_THROWS_AS(solve_linear(id2, {Scalar::from_int(Q, 1)}), ShapeError);
}

TEST_CASE("inversion on the pinned cases") {
    CHECK(*invert(KMatrix::identity(3, Q)) == KMatrix::identity(3, Q));

    KMatrix swap = KMatrix::from_int_rows(Q, {{0, 1}, {1, 0}});
    CHECK(*invert(swap) == swap);

    KMatrix shear = KMatrix::from_int_rows(Q, {{1, 1}, {0, 1}});
    KMatrix expected = KMatrix::from_int_rows(Q, {{1, -1}, {0, 1}});
    auto inv = invert(shear);
    REQUIRE(inv.has_value());
    CHECK(*inv == expected);
    CHECK(shear * *inv == KMatrix::identity(2, Q));

    CHECK_FALSE(invert(KMatrix::from_int_rows(Q, {{1, 2}, {2, 4}})).has_value());
    CHECK_THROWS_AS(invert(KMatrix(2, 3, Q)), ShapeError);
}

TEST_CASE("rank equals the rank of the transpose") {
    SplitRng rng(42);
    for (const FieldSpec& f : {Q, F5}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
            KMatrix m = random_kmatrix(rng, f, r, c, 4);
            CHECK(rank(m) == rank(m.transpose()));
        }
    }
}

TEST_CASE("double inversion is the identity operation") {
    SplitRng rng(7);
    for (const FieldSpec& f : {Q, F3}) {
        for (int trial = 0; trial < 15; ++trial) {
            KMatrix m = random_invertible_kmatrix(rng, f, 3, 4);
            CHECK(*invert(*invert(m)) == m);
        }
    }
}

TEST_CASE("rank_and_kernel is deterministic") {
    SplitRng rng(11);
    KMatrix m = random_kmatrix(rng, Q, 6, 4, 9);
    auto a = rank_and_kernel(m);
    auto b = rank_and_kernel(m);
    CHECK(a.rank == b.rank);
    REQUIRE(a.kernel.size() == b.kernel.size());
    for (std::size_t k = 0; k < a.kernel.size(); ++k) CHECK(a.kernel[k] == b.kernel[k]);
}

TEST_CASE("determinant is multiplicative") {
    SplitRng rng(3);
    for (const FieldSpec& f : {Q, F5}) {
        for (int trial = 0; trial < 10; ++trial) {
            KMatrix a = random_kmatrix(rng, f, 3, 3, 4);
            KMatrix b = random_kmatrix(rng, f, 3, 3, 4);
            CHECK(det(a * b) == det(a) * det(b));
        }
    }
}

TEST_CASE("characteristic polynomial matches determinant evaluations") {
    CHECK(char_poly(KMatrix::from_int_rows(Q, {{0, 1}, {0, 0}})) ==
          std::vector<Scalar>{Scalar::zero(Q), Scalar::zero(Q), Scalar::one(Q)});

    SplitRng rng(17);
    for (const FieldSpec& f : {Q, F5}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::size_t n = 1 + rng.below(4);
            KMatrix m = random_kmatrix(rng, f, n, n, 3);
            auto poly = char_poly(m);
            REQUIRE(poly.size() == n + 1);
            CHECK(poly[n].is_one());
            for (long point = 0; point <= static_cast<long>(n); ++point) {
                Scalar t = Scalar::from_int(f, point);
                Scalar value = Scalar::zero(f);
                Scalar power = Scalar::one(f);
                for (std::size_t k = 0; k <= n; ++k) {
                    value += poly[k] * power;
                    power *= t;
                }
                // independent evaluation: det(t·I - m)
                CHECK(value == det(KMatrix::identity(n, f) * t - m));
            }
        }
    }
}

TEST_CASE("row spaces compare by subspace, not by spanning set") {
    RowSpace a(3, Q);
    a.add({Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 0)});
    a.add({Scalar::from_int(Q, 0), Scalar::from_int(Q, 0), Scalar::from_int(Q, 3)});

    RowSpace b(3, Q);
    b.add({Scalar::from_int(Q, 2), Scalar::from_int(Q, 4), Scalar::from_int(Q, 6)});
    b.add({Scalar::from_int(Q, 1), Scalar::from_int(Q, 2), Scalar::from_int(Q, 5)});

    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains({Scalar::from_int(Q, 3), Scalar::from_int(Q, 6), Scalar::from_int(Q, 1)}));
    CHECK_FALSE(a.contains({Scalar::from_int(Q, 1), Scalar::from_int(Q, 0), Scalar::from_int(Q, 0)}));

    RowSpace c(3, Q);
    c.add({Scalar::from_int(Q, 1), Scalar::from_int(Q, 0), Scalar::from_int(Q, 0)});
    CHECK(a != c);
}
