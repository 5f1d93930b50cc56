#include "totref/normalform.hpp"

namespace totref {

namespace {

std::string entry_location(std::size_t r, std::size_t c) {
    return "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

NormalForm normalize(const SMatrix& input) {
    if (!input.is_square()) throw ShapeError("normal form requires a square matrix");
    const RingDescriptor& ring = input.ring();
    const std::size_t n = input.rows();

    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (!input.at(r, c).in_maximal_ideal())
                throw NotLinear(entry_location(r, c) + " has a constant term; presentation not minimal");

    SMatrix work = input;
    SMatrix row_ops = SMatrix::identity(ring, n);
    const SElement one = SElement::one(ring);

    // Row-reduce the x-coefficient matrix over k. Constant multipliers act on
    // the x-parts exactly as plain Gaussian elimination, and everything they
    // do to the y- and socle parts is carried along in `work` and `row_ops`.
    auto scale_row = [&](SMatrix& m, std::size_t r, const Scalar& f) {
        SElement s = one * f;
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = m.at(r, c) * s;
    };
    auto add_row = [&](SMatrix& m, std::size_t dst, std::size_t src, const SElement& f) {
        for (std::size_t c = 0; c < m.cols(); ++c) m.at(dst, c) = m.at(dst, c) + f * m.at(src, c);
    };
    auto swap_rows = [&](SMatrix& m, std::size_t a, std::size_t b) {
        for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
    };

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!work.at(r, col).x_coeff().is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n)
            throw NotNormalizable("x-coefficient matrix is singular at column " + std::to_string(col) +
                                  "; the matrix does not present a totally reflexive module");
        if (pivot != col) {
            swap_rows(work, pivot, col);
            swap_rows(row_ops, pivot, col);
        }
        const Scalar lead = work.at(col, col).x_coeff();
        if (!lead.is_one()) {
            scale_row(work, col, lead.inverse());
            scale_row(row_ops, col, lead.inverse());
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Scalar f = work.at(r, col).x_coeff();
            if (f.is_zero()) continue;
            SElement factor = -(one * f);
            add_row(work, r, col, factor);
            add_row(row_ops, r, col, factor);
        }
    }

    // work = x·I + sum B_j·y_j + sum C_j·x·y_j. The unit I - sum C_j·y_j
    // cancels the socle parts: (y_j)·(x·I) recreates them with opposite sign
    // and every other cross term dies on the relations.
    SMatrix cleaner = SMatrix::identity(ring, n);
    for (std::size_t j = 1; j <= ring.i(); ++j) {
        KMatrix c_j = work.monomial_part(ring.xy_index(j));
        if (c_j.is_zero()) continue;
        const SElement yj = SElement::y(ring, j);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!c_j.at(r, c).is_zero()) cleaner.at(r, c) = cleaner.at(r, c) - yj * c_j.at(r, c);
    }
    work = cleaner * work;
    row_ops = cleaner * row_ops;

    std::vector<KMatrix> parts;
    parts.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j) parts.push_back(work.monomial_part(ring.y_index(j)));
    NormalForm result{MatrixTuple(ring, std::move(parts)), std::move(row_ops),
                      SMatrix::identity(ring, n)};

    if (!is_invertible_local(result.row_ops)) throw Error("internal: row factor not invertible");
    if (result.row_ops * input * result.col_ops !=
        presentation_from_tuple(result.tuple).to_smatrix())
        throw Error("internal: normal form factors do not reproduce the input");
    return result;
}

NormalForm normalize(const LinearMatrix& d) {
    return normalize(d.to_smatrix());
}

LinearMatrix linearity_filter(const SMatrix& d) {
    if (!d.is_square()) throw ShapeError("expected a square matrix");
    const RingDescriptor& ring = d.ring();
    for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t c = 0; c < d.cols(); ++c) {
            const SElement& e = d.at(r, c);
            if (!e.constant_term().is_zero())
                throw NotLinear(entry_location(r, c) + " has a constant term");
            if (!e.is_linear_form())
                throw NotLinear(entry_location(r, c) + " has a component in the square of the maximal ideal");
        }
    std::vector<KMatrix> y_parts;
    y_parts.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j) y_parts.push_back(d.monomial_part(ring.y_index(j)));
    return LinearMatrix(ring, d.monomial_part(RingDescriptor::kX), std::move(y_parts));
}

}  // namespace totref
