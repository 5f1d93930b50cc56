#include "totref/modrep.hpp"

namespace totref {

namespace {

void check_action_shapes(const RingDescriptor& ring, const KMatrix& act_x,
                         const std::vector<KMatrix>& act_y) {
    const std::size_t d = act_x.rows();
    if (!act_x.is_square()) throw InvalidModule("act_x must be square");
    if (!(act_x.field() == ring.field())) throw InvalidModule("act_x field mismatch");
    if (act_y.size() != ring.i()) throw InvalidModule("expected i act_y matrices");
    for (const auto& a : act_y) {
        if (a.rows() != d || a.cols() != d) throw InvalidModule("act_y shape mismatch");
        if (!(a.field() == ring.field())) throw InvalidModule("act_y field mismatch");
    }
}

}  // namespace

FDModule::FDModule(const RingDescriptor& ring, KMatrix act_x, std::vector<KMatrix> act_y)
    : ring_(ring), dim_(act_x.rows()), act_x_(std::move(act_x)), act_y_(std::move(act_y)) {
    check_action_shapes(ring_, act_x_, act_y_);
    if (!(act_x_ * act_x_).is_zero()) throw InvalidModule("act_x^2 != 0");
    for (std::size_t j = 0; j < act_y_.size(); ++j) {
        for (std::size_t h = 0; h < act_y_.size(); ++h)
            if (!(act_y_[j] * act_y_[h]).is_zero()) throw InvalidModule("act_yj·act_yh != 0");
        if (!(act_x_ * act_y_[j] == act_y_[j] * act_x_))
            throw InvalidModule("act_x does not commute with act_y");
    }
}

FDModule FDModule::zero(const RingDescriptor& ring) {
    return FDModule(ring, KMatrix(0, 0, ring.field()),
                    std::vector<KMatrix>(ring.i(), KMatrix(0, 0, ring.field())));
}

FDModule FDModule::regular(const RingDescriptor& ring) {
    std::vector<KMatrix> ys;
    ys.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j) ys.push_back(mult_matrix(SElement::y(ring, j)));
    return FDModule(ring, mult_matrix(SElement::x(ring)), std::move(ys));
}

FDModule FDModule::free_module(const RingDescriptor& ring, std::size_t n) {
    std::vector<KMatrix> ys;
    ys.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j)
        ys.push_back(flatten(SMatrix::scalar_diag(ring, n, SElement::y(ring, j))));
    return FDModule(ring, flatten(SMatrix::scalar_diag(ring, n, SElement::x(ring))), std::move(ys));
}

const KMatrix& FDModule::act_y(std::size_t j) const {
    if (j < 1 || j > act_y_.size()) throw ShapeError("y index out of range");
    return act_y_[j - 1];
}

KMatrix FDModule::act_monomial(std::size_t idx) const {
    if (idx == RingDescriptor::kUnit) return KMatrix::identity(dim_, ring_.field());
    if (idx == RingDescriptor::kX) return act_x_;
    if (idx <= 1 + ring_.i()) return act_y_[idx - 2];
    if (idx <= 1 + 2 * ring_.i()) return act_x_ * act_y_[idx - 2 - ring_.i()];
    throw ShapeError("monomial index out of range");
}

KMatrix FDModule::act_element(const SElement& s) const {
    if (!(s.ring() == ring_)) throw RingMismatch("element from a different ring");
    KMatrix out(dim_, dim_, ring_.field());
    for (std::size_t mu = 0; mu < ring_.dim(); ++mu)
        if (!s.coeff(mu).is_zero()) out = out + act_monomial(mu) * s.coeff(mu);
    return out;
}

FDModule cokernel(const SMatrix& d) {
    const RingDescriptor& ring = d.ring();
    const std::size_t big = ring.dim() * d.rows();
    KMatrix f = flatten(d);

    RowSpace image(big, ring.field());
    for (std::size_t c = 0; c < f.cols(); ++c) image.add(f.col(c));
    const std::size_t r = image.dim();
    const std::size_t qdim = big - r;

    // Basis change [image basis | echelon-complement standard vectors];
    // the projection onto the quotient reads off the trailing coordinates.
    std::vector<bool> is_pivot(big, false);
    for (std::size_t p : image.pivots()) is_pivot[p] = true;
    KMatrix basis(big, big, ring.field());
    for (std::size_t c = 0; c < r; ++c)
        for (std::size_t k = 0; k < big; ++k) basis.at(k, c) = image.rows()[c][k];
    std::vector<std::size_t> complement;
    complement.reserve(qdim);
    for (std::size_t t = 0; t < big; ++t)
        if (!is_pivot[t]) {
            basis.at(t, r + complement.size()) = Scalar::one(ring.field());
            complement.push_back(t);
        }
    auto basis_inv = invert(basis);
    if (!basis_inv) throw Error("internal: quotient basis change singular");

    // act^M_g = projection ∘ (multiplication by g on S^rows) ∘ inclusion
    auto induced = [&](const SElement& g) {
        KMatrix mult = flatten(SMatrix::scalar_diag(ring, d.rows(), g));
        KMatrix out(qdim, qdim, ring.field());
        for (std::size_t c = 0; c < qdim; ++c) {
            std::vector<Scalar> v = mult.col(complement[c]);
            std::vector<Scalar> w = basis_inv->apply(v);
            for (std::size_t k = 0; k < qdim; ++k) out.at(k, c) = w[r + k];
        }
        return out;
    };

    KMatrix act_x = induced(SElement::x(ring));
    std::vector<KMatrix> act_y;
    act_y.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j) act_y.push_back(induced(SElement::y(ring, j)));
    return FDModule(ring, std::move(act_x), std::move(act_y));
}

FDModule cokernel(const LinearMatrix& d) {
    return cokernel(d.to_smatrix());
}

namespace {

RowSpace radical_span(const FDModule& m) {
    RowSpace w(m.dim(), m.ring().field());
    auto add_cols = [&](const KMatrix& a) {
        for (std::size_t c = 0; c < a.cols(); ++c) w.add(a.col(c));
    };
    add_cols(m.act_x());
    for (std::size_t j = 1; j <= m.ring().i(); ++j) add_cols(m.act_y(j));
    return w;
}

}  // namespace

std::size_t min_generators(const FDModule& m) {
    return m.dim() - radical_span(m).dim();
}

MinimalCover minimal_cover(const FDModule& m) {
    const RingDescriptor& ring = m.ring();
    RowSpace seen = radical_span(m);

    MinimalCover cover{0, {}, KMatrix(m.dim(), 0, ring.field())};
    std::vector<std::size_t> gen_idx;
    for (std::size_t t = 0; t < m.dim(); ++t) {
        std::vector<Scalar> e = zero_vector(ring.field(), m.dim());
        e[t] = Scalar::one(ring.field());
        if (seen.add(e)) {
            gen_idx.push_back(t);
            cover.generator_coords.push_back(std::move(e));
        }
    }
    cover.gens = gen_idx.size();

    KMatrix map(m.dim(), ring.dim() * cover.gens, ring.field());
    for (std::size_t mu = 0; mu < ring.dim(); ++mu) {
        KMatrix act = m.act_monomial(mu);
        for (std::size_t s = 0; s < cover.gens; ++s)
            for (std::size_t k = 0; k < m.dim(); ++k) map.at(k, mu * cover.gens + s) = act.at(k, gen_idx[s]);
    }
    cover.map = std::move(map);
    return cover;
}

namespace {

// Minimal generators of the S_i-submodule K of S_i^free_rank spanned (over k,
// closed under the action) by kernel_basis: a Nakayama lift of K/mK. Linear
// representatives are preferred whenever the class has one.
SMatrix kernel_min_generators(const RingDescriptor& ring, std::size_t free_rank,
                              const std::vector<std::vector<Scalar>>& kernel_basis) {
    const std::size_t width = ring.dim() * free_rank;

    // m·K
    std::vector<KMatrix> mult;
    mult.push_back(flatten(SMatrix::scalar_diag(ring, free_rank, SElement::x(ring))));
    for (std::size_t j = 1; j <= ring.i(); ++j)
        mult.push_back(flatten(SMatrix::scalar_diag(ring, free_rank, SElement::y(ring, j))));
    RowSpace picked(width, ring.field());
    for (const auto& v : kernel_basis)
        for (const auto& g : mult) picked.add(g.apply(v));

    // Vectors of K with zero coordinates at every non-linear monomial
    // position (the unit and the x·y_j), found by solving inside K.
    std::vector<std::size_t> nonlinear_coords;
    for (std::size_t s = 0; s < free_rank; ++s) {
        nonlinear_coords.push_back(RingDescriptor::kUnit * free_rank + s);
        for (std::size_t j = 1; j <= ring.i(); ++j)
            nonlinear_coords.push_back(ring.xy_index(j) * free_rank + s);
    }
    RowSpace linear_members(width, ring.field());
    if (!kernel_basis.empty()) {
        KMatrix constraint(nonlinear_coords.size(), kernel_basis.size(), ring.field());
        for (std::size_t r = 0; r < nonlinear_coords.size(); ++r)
            for (std::size_t c = 0; c < kernel_basis.size(); ++c)
                constraint.at(r, c) = kernel_basis[c][nonlinear_coords[r]];
        for (const auto& lambda : rank_and_kernel(constraint).kernel) {
            std::vector<Scalar> v = zero_vector(ring.field(), width);
            for (std::size_t c = 0; c < kernel_basis.size(); ++c) {
                if (lambda[c].is_zero()) continue;
                for (std::size_t k = 0; k < width; ++k)
                    if (!kernel_basis[c][k].is_zero()) v[k] += lambda[c] * kernel_basis[c][k];
            }
            linear_members.add(v);
        }
    }

    std::vector<std::vector<Scalar>> gens;
    for (const auto& v : linear_members.rows())
        if (picked.add(v)) gens.push_back(v);
    for (const auto& v : kernel_basis)
        if (picked.add(v)) gens.push_back(v);

    SMatrix out(ring, free_rank, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
        auto column = from_coords(ring, free_rank, gens[c]);
        for (std::size_t r = 0; r < free_rank; ++r) out.at(r, c) = column[r];
    }
    return out;
}

}  // namespace

SMatrix minimal_presentation(const FDModule& m) {
    MinimalCover cover = minimal_cover(m);
    auto kernel = rank_and_kernel(cover.map).kernel;
    SMatrix d = kernel_min_generators(m.ring(), cover.gens, kernel);
    if (!d.entries_in_maximal_ideal())
        throw InvalidModule("internal: kernel of a minimal cover left the maximal ideal");
    return d;
}

SMatrix syzygy_presentation(const FDModule& m) {
    return syzygy_of_matrix(minimal_presentation(m));
}

SMatrix syzygy_of_matrix(const SMatrix& d) {
    auto kernel = rank_and_kernel(flatten(d)).kernel;
    return kernel_min_generators(d.ring(), d.cols(), kernel);
}

std::vector<SMatrix> resolution_differentials(const FDModule& m, std::size_t depth) {
    std::vector<SMatrix> out;
    if (depth == 0) return out;
    out.push_back(minimal_presentation(m));
    while (out.size() < depth) {
        SMatrix next = syzygy_of_matrix(out.back());
        if (!next.entries_in_maximal_ideal())
            throw InvalidModule("internal: resolution differential left the maximal ideal");
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<std::size_t> betti_numbers(const FDModule& m, std::size_t depth) {
    std::vector<std::size_t> betti;
    betti.reserve(depth);
    for (const auto& d : resolution_differentials(m, depth)) betti.push_back(d.cols());
    return betti;
}

}  // namespace totref
