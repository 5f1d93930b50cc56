#include <doctest.h>

#include "totref/conjugacy.hpp"
#include "totref/normalform.hpp"

using namespace totref;

namespace {
const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);
}  // namespace

TEST_CASE("already-normal matrices pass through") {
    RingDescriptor s2(2, Q);
    SMatrix d = SMatrix::scalar_diag(s2, 1, SElement::x(s2));
    NormalForm nf = normalize(d);
    CHECK(nf.tuple == MatrixTuple::zero(s2, 1));
    CHECK(nf.row_ops == SMatrix::identity(s2, 1));
    CHECK(nf.col_ops == SMatrix::identity(s2, 1));
}

TEST_CASE("unit scaling of a single entry") {
    RingDescriptor s2(2, Q);
    SMatrix d(s2, 1, 1);
    d.at(0, 0) = SElement::x(s2) * Scalar::from_int(Q, 2) + SElement::y(s2, 1);
    NormalForm nf = normalize(d);
    CHECK(nf.tuple.part(1).at(0, 0).str() == "1/2");
    CHECK(nf.tuple.part(2).at(0, 0).is_zero());
    CHECK(nf.row_ops * d * nf.col_ops == presentation_from_tuple(nf.tuple).to_smatrix());
}

TEST_CASE("rejections: constant terms and singular x-part") {
    RingDescriptor s2(2, Q);

    SMatrix constant(s2, 1, 1);
    constant.at(0, 0) = SElement::one(s2) + SElement::x(s2);
    CHECK_THROWS_AS(normalize(constant), NotLinear);

    SMatrix singular(s2, 1, 1);
    singular.at(0, 0) = SElement::y(s2, 1);
    CHECK_THROWS_AS(normalize(singular), NotNormalizable);

    // x-parts concentrated in one column
    SMatrix lopsided(s2, 2, 2);
    lopsided.at(0, 0) = SElement::x(s2);
    lopsided.at(1, 0) = SElement::x(s2);
    lopsided.at(0, 1) = SElement::y(s2, 1);
    lopsided.at(1, 1) = SElement::y(s2, 2);
    CHECK_THROWS_AS(normalize(lopsided), NotNormalizable);

    CHECK_THROWS_AS(normalize(SMatrix(s2, 1, 2)), ShapeError);
}

TEST_CASE("scramble round trip recovers a conjugate tuple") {
    SplitRng rng(71);
    for (const FieldSpec& f : {Q, F5}) {
        RingDescriptor s2(2, f);
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            MatrixTuple t = random_tuple(rng, s2, 3);
            LinearMatrix d = presentation_from_tuple(t);
            Scramble sc = random_scramble(d, seed);
            NormalForm nf = normalize(sc.product);
            // soundness: the factors reproduce the scrambled input exactly
            CHECK(nf.row_ops * sc.product * nf.col_ops ==
                  presentation_from_tuple(nf.tuple).to_smatrix());
            CHECK(is_invertible_local(nf.row_ops));
            CHECK(is_invertible_local(nf.col_ops));
            // and the recovered tuple is the same point of the quotient
            ConjugacyDecision dec = are_conjugate(nf.tuple, t);
            CHECK(dec.yes());
        }
    }
}

TEST_CASE("explicit E12 scramble example") {
    RingDescriptor s2(2, Q);
    KMatrix e12 = KMatrix::from_int_rows(Q, {{0, 1}, {0, 0}});
    MatrixTuple t(s2, {e12, KMatrix(2, 2, Q)});
    Scramble sc = random_scramble(presentation_from_tuple(t), 2024);
    NormalForm nf = normalize(sc.product);
    ConjugacyDecision dec = are_conjugate(nf.tuple, t);
    CHECK(dec.yes());
    REQUIRE(dec.witness.has_value());
    // the witness conjugates the recovered tuple onto the original
    CHECK(conjugate_tuple(nf.tuple, *dec.witness) == t);
}

TEST_CASE("multiplying by a unit scalar yields a conjugate tuple") {
    RingDescriptor s2(2, Q);
    SplitRng rng(83);
    MatrixTuple t = random_tuple(rng, s2, 2);
    SMatrix d = presentation_from_tuple(t).to_smatrix();

    SMatrix scaled = d * (SElement::one(s2) * Scalar::from_int(Q, 3));
    NormalForm nf = normalize(scaled);
    CHECK(are_conjugate(nf.tuple, t).yes());

    // a unit with a maximal-ideal tail also works
    SMatrix unit_scaled = d * (SElement::one(s2) + SElement::y(s2, 2));
    NormalForm nf2 = normalize(unit_scaled);
    CHECK(are_conjugate(nf2.tuple, t).yes());
}

TEST_CASE("linearity filter accepts linear matrices and names offenders") {
    RingDescriptor s2(2, Q);
    SMatrix ok = SMatrix::scalar_diag(s2, 2, SElement::x(s2));
    LinearMatrix lin = linearity_filter(ok);
    CHECK(lin.x_part() == KMatrix::identity(2, Q));

    SMatrix socle(s2, 1, 1);
    socle.at(0, 0) = SElement::x(s2) * SElement::y(s2, 1);
    CHECK_THROWS_WITH_AS(linearity_filter(socle),
                         "entry (0,0) has a component in the square of the maximal ideal",
                         NotLinear);

    SMatrix constant(s2, 1, 1);
    constant.at(0, 0) = SElement::one(s2) + SElement::x(s2);
    CHECK_THROWS_WITH_AS(linearity_filter(constant), "entry (0,0) has a constant term", NotLinear);
}
