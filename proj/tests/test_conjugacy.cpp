#include <doctest.h>

#include "totref/conjugacy.hpp"

using namespace totref;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

MatrixTuple scalar_tuple(const RingDescriptor& ring, std::vector<long> entries) {
    std::vector<KMatrix> parts;
    for (long e : entries) parts.push_back(KMatrix::from_int_rows(ring.field(), {{e}}));
    return MatrixTuple(ring, std::move(parts));
}

}  // namespace

TEST_CASE("intertwiner spaces on the pinned pairs") {
    RingDescriptor s2(2, Q);

    auto full = intertwiner_space(MatrixTuple::zero(s2, 1), MatrixTuple::zero(s2, 1));
    REQUIRE(full.size() == 1);
    CHECK(full[0] == KMatrix::identity(1, Q));

    KMatrix e12 = KMatrix::from_int_rows(Q, {{0, 1}, {0, 0}});
    KMatrix e21 = KMatrix::from_int_rows(Q, {{0, 0}, {1, 0}});
    MatrixTuple a(s2, {e12, KMatrix(2, 2, Q)});
    MatrixTuple b(s2, {e21, KMatrix(2, 2, Q)});
    auto space = intertwiner_space(a, b);
    CHECK(space.size() == 2);
    // the swap matrix intertwines E12 with E21
    KMatrix swap = KMatrix::from_int_rows(Q, {{0, 1}, {1, 0}});
    bool found_swap = false;
    for (const auto& p : space)
        if (p == swap) found_swap = true;
    // swap lies in the span; with echelon bases it may be a combination
    RowSpace span(4, Q);
    for (const auto& p : space)
        span.add({p.at(0, 0), p.at(0, 1), p.at(1, 0), p.at(1, 1)});
    CHECK(span.contains({swap.at(0, 0), swap.at(0, 1), swap.at(1, 0), swap.at(1, 1)}));
    (void)found_swap;

    CHECK(intertwiner_space(scalar_tuple(s2, {1, 0}), scalar_tuple(s2, {2, 0})).empty());
}

TEST_CASE("conjugacy decisions carry verified witnesses") {
    RingDescriptor s2(2, Q);
    SplitRng rng(5);
    MatrixTuple t = random_tuple(rng, s2, 2);
    KMatrix p0 = KMatrix::from_int_rows(Q, {{0, 1}, {1, 0}});
    MatrixTuple conj = conjugate_tuple(t, p0);

    ConjugacyDecision d = are_conjugate(t, conj);
    CHECK(d.yes());
    CHECK(d.certainty == Certainty::Certain);
    REQUIRE(d.witness.has_value());
    CHECK(conjugate_tuple(t, *d.witness) == conj);

    ConjugacyDecision no = are_conjugate(scalar_tuple(s2, {1, 0}), scalar_tuple(s2, {2, 0}));
    CHECK(no.status == ConjugacyDecision::Status::NotConjugate);
    CHECK(no.certainty == Certainty::Certain);
}

TEST_CASE("brute force oracle on the pinned cases") {
    RingDescriptor s2q(2, Q);
    RingDescriptor s2(2, F2);
    MatrixTuple zero1 = MatrixTuple::zero(s2, 1);
    CHECK(brute_force_conjugate(zero1, zero1));
    CHECK_FALSE(brute_force_conjugate(scalar_tuple(s2, {1, 0}), scalar_tuple(s2, {0, 1})));
    CHECK_THROWS_AS(brute_force_conjugate(MatrixTuple::zero(s2q, 1), MatrixTuple::zero(s2q, 1)),
                    Error);
    CHECK_THROWS_AS(brute_force_conjugate(zero1, zero1, 1), BudgetExceeded);

    RingDescriptor s2f3(2, F3);
    SplitRng rng(13);
    MatrixTuple t = random_tuple(rng, s2f3, 2);
    KMatrix p = random_invertible_kmatrix(rng, F3, 2);
    CHECK(brute_force_conjugate(t, conjugate_tuple(t, p)));
}

TEST_CASE("decision agrees with brute force over small fields") {
    SplitRng rng(29);
    for (const FieldSpec& f : {F2, F3}) {
        RingDescriptor ring(2, f);
        for (int trial = 0; trial < 12; ++trial) {
            MatrixTuple a = random_tuple(rng, ring, 2);
            MatrixTuple b = random_tuple(rng, ring, 2);
            ConjugacyDecision d = are_conjugate(a, b);
            CHECK(d.certainty == Certainty::Certain);
            CHECK(d.yes() == brute_force_conjugate(a, b));
        }
        for (int trial = 0; trial < 6; ++trial) {
            MatrixTuple a = random_tuple(rng, ring, 2);
            MatrixTuple b = conjugate_tuple(a, random_invertible_kmatrix(rng, f, 2));
            ConjugacyDecision d = are_conjugate(a, b);
            CHECK(d.yes());
            CHECK(brute_force_conjugate(a, b));
        }
    }
}

TEST_CASE("conjugacy is an equivalence relation with composable witnesses") {
    RingDescriptor s2(2, Q);
    SplitRng rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        MatrixTuple t = random_tuple(rng, s2, 2);
        // reflexivity
        ConjugacyDecision selfd = are_conjugate(t, t);
        CHECK(selfd.yes());

        KMatrix p = random_invertible_kmatrix(rng, Q, 2);
        KMatrix q = random_invertible_kmatrix(rng, Q, 2);
        MatrixTuple u = conjugate_tuple(t, p);
        MatrixTuple v = conjugate_tuple(u, q);

        // symmetry: a witness for t~u inverts to a witness for u~t
        ConjugacyDecision tu = are_conjugate(t, u);
        REQUIRE(tu.witness.has_value());
        CHECK(conjugate_tuple(u, *invert(*tu.witness)) == t);

        // transitivity: witnesses compose
        ConjugacyDecision uv = are_conjugate(u, v);
        REQUIRE(uv.witness.has_value());
        CHECK(conjugate_tuple(t, *uv.witness * *tu.witness) == v);
    }
}

TEST_CASE("word characteristic polynomials are conjugation invariants") {
    RingDescriptor s2(2, Q);
    SplitRng rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        MatrixTuple t = random_tuple(rng, s2, 3);
        KMatrix p = random_invertible_kmatrix(rng, Q, 3);
        CHECK(word_char_polys(t) == word_char_polys(conjugate_tuple(t, p)));
    }
}

TEST_CASE("indecomposability probe on the pinned cases") {
    RingDescriptor s2q(2, Q);

    // n = 1: End is 1-dimensional
    auto one = is_indecomposable_probe(scalar_tuple(s2q, {3, 1}));
    CHECK(one.status == IndecomposabilityAnswer::Status::Indecomposable);
    CHECK(one.method == "end_dim_1");

    // block sum of distinct points decomposes, with the projection idempotent
    MatrixTuple sum = direct_sum(scalar_tuple(s2q, {1, 0}), scalar_tuple(s2q, {2, 0}));
    auto split = is_indecomposable_probe(sum);
    CHECK(split.status == IndecomposabilityAnswer::Status::Decomposable);
    REQUIRE(split.idempotent.has_value());
    CHECK(*split.idempotent * *split.idempotent == *split.idempotent);
    CHECK_FALSE(split.idempotent->is_zero());
    CHECK_FALSE(split.idempotent->is_identity());

    // Jordan block over F2: certified by exhaustive idempotent search
    RingDescriptor s2f2(2, F2);
    KMatrix j2 = KMatrix::from_int_rows(F2, {{0, 1}, {0, 0}});
    MatrixTuple jordan(s2f2, {j2, KMatrix(2, 2, F2)});
    auto indec = is_indecomposable_probe(jordan);
    CHECK(indec.status == IndecomposabilityAnswer::Status::Indecomposable);
    CHECK(indec.method == "exhaustive");
}

TEST_CASE("the eigenvalue family is pairwise non-conjugate") {
    RingDescriptor s2(2, Q);
    std::vector<Scalar> lambdas;
    for (long v : {0, 1, 2}) lambdas.push_back(Scalar::from_int(Q, v));

    auto fam1 = wild_family(s2, 1, lambdas);
    REQUIRE(fam1.size() == 3);
    CHECK(fam1[1].part(1).at(0, 0).is_one());

    auto fam2 = wild_family(s2, 2, {Scalar::from_int(Q, 0), Scalar::from_int(Q, 1)});
    CHECK(fam2[0].part(1) == KMatrix::from_int_rows(Q, {{0, 1}, {0, 0}}));
    CHECK_FALSE(are_conjugate(fam2[0], fam2[1]).yes());

    auto fam3 = wild_family(s2, 3, lambdas);
    for (const auto& member : fam3) CHECK(verify_matrix_factorization(member));

    CHECK_THROWS_AS(wild_family(s2, 1, {Scalar::from_int(Q, 1), Scalar::from_int(Q, 1)}),
                    DuplicateLambdas);
}
