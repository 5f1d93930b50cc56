#include "totref/tuples.hpp"

namespace totref {

MatrixTuple::MatrixTuple(const RingDescriptor& ring, std::vector<KMatrix> parts)
    : ring_(ring), n_(parts.empty() ? 0 : parts[0].rows()), parts_(std::move(parts)) {
    if (parts_.size() != ring_.i()) throw ShapeError("expected i matrices in tuple");
    for (const auto& b : parts_) {
        if (b.rows() != n_ || b.cols() != n_) throw ShapeError("tuple matrices must be square of equal size");
        if (!(b.field() == ring_.field())) throw FieldMismatch("tuple matrix field mismatch");
    }
    if (n_ < 1) throw ShapeError("tuple size must be at least 1");
}

MatrixTuple MatrixTuple::zero(const RingDescriptor& ring, std::size_t n) {
    return MatrixTuple(ring, std::vector<KMatrix>(ring.i(), KMatrix(n, n, ring.field())));
}

const KMatrix& MatrixTuple::part(std::size_t j) const {
    if (j < 1 || j > parts_.size()) throw ShapeError("tuple index out of range");
    return parts_[j - 1];
}

bool MatrixTuple::operator==(const MatrixTuple& rhs) const {
    return ring_ == rhs.ring_ && n_ == rhs.n_ && parts_ == rhs.parts_;
}

LinearMatrix presentation_from_tuple(const MatrixTuple& t) {
    return LinearMatrix(t.ring(), KMatrix::identity(t.n(), t.ring().field()), t.parts());
}

LinearMatrix sigma_from_tuple(const MatrixTuple& t) {
    std::vector<KMatrix> negated;
    negated.reserve(t.count());
    for (const auto& b : t.parts()) negated.push_back(-b);
    return LinearMatrix(t.ring(), KMatrix::identity(t.n(), t.ring().field()), std::move(negated));
}

MatrixTuple tuple_from_presentation(const LinearMatrix& d) {
    if (!d.x_part().is_identity()) throw NotNormalizable("X part is not the identity");
    std::vector<KMatrix> parts;
    parts.reserve(d.ring().i());
    for (std::size_t j = 1; j <= d.ring().i(); ++j) parts.push_back(d.y_part(j));
    return MatrixTuple(d.ring(), std::move(parts));
}

bool verify_matrix_factorization(const MatrixTuple& t, std::size_t cap) {
    QMatrix d = lift_to_q(presentation_from_tuple(t), cap);
    QMatrix s = lift_to_q(sigma_from_tuple(t), cap);
    QMatrix expected = QMatrix::scalar_diag(t.ring(), t.n(), QElement::x_power(t.ring(), cap, 2));
    return d * s == expected && s * d == expected;
}

MatrixTuple random_tuple(SplitRng& rng, const RingDescriptor& ring, std::size_t n, long height) {
    std::vector<KMatrix> parts;
    parts.reserve(ring.i());
    for (std::size_t j = 0; j < ring.i(); ++j)
        parts.push_back(random_kmatrix(rng, ring.field(), n, n, height));
    return MatrixTuple(ring, std::move(parts));
}

MatrixTuple transpose_tuple(const MatrixTuple& t) {
    std::vector<KMatrix> parts;
    parts.reserve(t.count());
    for (const auto& b : t.parts()) parts.push_back(b.transpose());
    return MatrixTuple(t.ring(), std::move(parts));
}

MatrixTuple conjugate_tuple(const MatrixTuple& t, const KMatrix& p) {
    auto inv = invert(p);
    if (!inv) throw Error("conjugating matrix is singular");
    std::vector<KMatrix> parts;
    parts.reserve(t.count());
    for (const auto& b : t.parts()) parts.push_back(p * b * *inv);
    return MatrixTuple(t.ring(), std::move(parts));
}

MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b) {
    if (!(a.ring() == b.ring())) throw RingMismatch("tuples over different rings");
    std::vector<KMatrix> parts;
    parts.reserve(a.count());
    for (std::size_t j = 1; j <= a.count(); ++j) {
        KMatrix block(a.n() + b.n(), a.n() + b.n(), a.ring().field());
        for (std::size_t r = 0; r < a.n(); ++r)
            for (std::size_t c = 0; c < a.n(); ++c) block.at(r, c) = a.part(j).at(r, c);
        for (std::size_t r = 0; r < b.n(); ++r)
            for (std::size_t c = 0; c < b.n(); ++c) block.at(a.n() + r, a.n() + c) = b.part(j).at(r, c);
        parts.push_back(std::move(block));
    }
    return MatrixTuple(a.ring(), std::move(parts));
}

}  // namespace totref
