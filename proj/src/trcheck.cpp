#include "totref/trcheck.hpp"

namespace totref {

AcyclicityReport total_acyclicity_check(const SMatrix& d, const std::optional<SMatrix>& sigma_opt) {
    if (!d.is_square()) throw ShapeError("differential must be square");
    const SMatrix sigma = sigma_opt.value_or(d);
    if (!(sigma.ring() == d.ring())) throw RingMismatch("companion over a different ring");
    if (sigma.rows() != d.rows() || sigma.cols() != d.cols())
        throw ShapeError("companion shape mismatch");

    AcyclicityReport rep;
    rep.n = d.rows();
    rep.total = d.ring().dim() * d.rows();
    rep.composition_zero = (d * sigma).is_zero() && (sigma * d).is_zero();
    rep.rank_d = rank(flatten(d));
    rep.rank_sigma = rank(flatten(sigma));
    rep.exact = rep.composition_zero && rep.rank_d + rep.rank_sigma == rep.total;

    // Hom(-, S_i) of a map between free modules is the transposed matrix;
    // flattening does not commute with transposition over S_i, so the dual
    // ranks are computed from scratch.
    const SMatrix dt = d.transpose();
    const SMatrix st = sigma.transpose();
    rep.dual_composition_zero = (dt * st).is_zero() && (st * dt).is_zero();
    rep.dual_rank_d = rank(flatten(dt));
    rep.dual_rank_sigma = rank(flatten(st));
    rep.dual_exact = rep.dual_composition_zero && rep.dual_rank_d + rep.dual_rank_sigma == rep.total;
    return rep;
}

AcyclicityReport total_acyclicity_check(const MatrixTuple& t) {
    return total_acyclicity_check(presentation_from_tuple(t).to_smatrix(),
                                  sigma_from_tuple(t).to_smatrix());
}

std::vector<std::size_t> ext_oracle(const FDModule& m, std::size_t depth) {
    if (depth < 1) throw ShapeError("depth must be at least 1");
    // Ext^j needs d_j and d_{j+1}.
    auto diffs = resolution_differentials(m, depth + 1);
    std::vector<std::size_t> dims;
    dims.reserve(depth);
    for (std::size_t j = 1; j <= depth; ++j) {
        const SMatrix& dj = diffs[j - 1];
        const SMatrix& djp1 = diffs[j];
        const std::size_t free_rank = dj.cols();  // rank of F_j
        const std::size_t space = m.ring().dim() * free_rank;
        const std::size_t rank_in = rank(flatten(dj.transpose()));
        const std::size_t rank_out = rank(flatten(djp1.transpose()));
        // dim ker(d_{j+1}^T) - dim im(d_j^T) on Hom(F_j, S).
        if (space < rank_out + rank_in) throw Error("internal: dual complex composition nonzero");
        dims.push_back(space - rank_out - rank_in);
    }
    return dims;
}

std::vector<KMatrix> hom_space(const FDModule& from, const FDModule& to) {
    if (!(from.ring() == to.ring())) throw RingMismatch("modules over different rings");
    const RingDescriptor& ring = from.ring();
    const std::size_t rows = to.dim(), cols = from.dim();
    const std::size_t unknowns = rows * cols;

    // Linear conditions F·act_from(g) = act_to(g)·F for each algebra generator.
    std::vector<KMatrix> gens;
    gens.push_back(from.act_x());
    for (std::size_t j = 1; j <= ring.i(); ++j) gens.push_back(from.act_y(j));
    std::vector<KMatrix> gens_to;
    gens_to.push_back(to.act_x());
    for (std::size_t j = 1; j <= ring.i(); ++j) gens_to.push_back(to.act_y(j));

    KMatrix system(gens.size() * unknowns, unknowns, ring.field());
    std::size_t eq = 0;
    for (std::size_t g = 0; g < gens.size(); ++g) {
        const KMatrix& a = gens[g];      // cols × cols
        const KMatrix& b = gens_to[g];   // rows × rows
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                // (F·a - b·F)[r][c] = sum_t F[r][t]·a[t][c] - sum_t b[r][t]·F[t][c]
                for (std::size_t tt = 0; tt < cols; ++tt)
                    if (!a.at(tt, c).is_zero()) system.at(eq, r * cols + tt) += a.at(tt, c);
                for (std::size_t tt = 0; tt < rows; ++tt)
                    if (!b.at(r, tt).is_zero()) system.at(eq, tt * cols + c) -= b.at(r, tt);
                ++eq;
            }
    }

    std::vector<KMatrix> basis;
    for (const auto& v : rank_and_kernel(system).kernel) {
        KMatrix f(rows, cols, ring.field());
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) f.at(r, c) = v[r * cols + c];
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

// Coordinates of the matrix f in the given hom basis; the basis is linearly
// independent, so the solve cannot be ambiguous.
std::vector<Scalar> coords_in_basis(const std::vector<KMatrix>& basis, const KMatrix& f,
                                    const FieldSpec& field) {
    const std::size_t m = basis.size();
    if (m == 0) {
        if (!f.is_zero()) throw Error("internal: nonzero element of a zero hom space");
        return {};
    }
    const std::size_t rows = basis[0].rows(), cols = basis[0].cols();
    KMatrix system(rows * cols, m, field);
    for (std::size_t b = 0; b < m; ++b)
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) system.at(r * cols + c, b) = basis[b].at(r, c);
    std::vector<Scalar> rhs = zero_vector(field, rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) rhs[r * cols + c] = f.at(r, c);
    auto sol = solve_linear(system, rhs);
    if (!sol) throw Error("internal: hom element outside the computed basis");
    return *sol;
}

}  // namespace

HomModule hom_module(const FDModule& from, const FDModule& to) {
    const RingDescriptor& ring = from.ring();
    std::vector<KMatrix> basis = hom_space(from, to);
    const std::size_t hdim = basis.size();

    auto action_of = [&](const KMatrix& act_to) {
        KMatrix act(hdim, hdim, ring.field());
        for (std::size_t b = 0; b < hdim; ++b) {
            auto v = coords_in_basis(basis, act_to * basis[b], ring.field());
            for (std::size_t r = 0; r < hdim; ++r) act.at(r, b) = v[r];
        }
        return act;
    };

    KMatrix act_x = action_of(to.act_x());
    std::vector<KMatrix> act_y;
    act_y.reserve(ring.i());
    for (std::size_t j = 1; j <= ring.i(); ++j) act_y.push_back(action_of(to.act_y(j)));
    return HomModule{FDModule(ring, std::move(act_x), std::move(act_y)), std::move(basis)};
}

HomModule dual_module(const FDModule& m) {
    return hom_module(m, FDModule::regular(m.ring()));
}

bool biduality_check(const FDModule& m) {
    HomModule dual = dual_module(m);
    HomModule bidual = hom_module(dual.module, FDModule::regular(m.ring()));
    if (bidual.module.dim() != m.dim()) return false;
    if (m.dim() == 0) return true;

    // delta(v): the evaluation map phi -> phi(v), written as a matrix from
    // dual coordinates to S_i coordinates, then expressed in the bidual basis.
    KMatrix delta(bidual.module.dim(), m.dim(), m.ring().field());
    for (std::size_t t = 0; t < m.dim(); ++t) {
        KMatrix ev(m.ring().dim(), dual.module.dim(), m.ring().field());
        for (std::size_t b = 0; b < dual.module.dim(); ++b) {
            std::vector<Scalar> e = zero_vector(m.ring().field(), m.dim());
            e[t] = Scalar::one(m.ring().field());
            std::vector<Scalar> image = dual.basis[b].apply(e);
            for (std::size_t r = 0; r < m.ring().dim(); ++r) ev.at(r, b) = image[r];
        }
        auto coords = coords_in_basis(bidual.basis, ev, m.ring().field());
        for (std::size_t r = 0; r < bidual.module.dim(); ++r) delta.at(r, t) = coords[r];
    }
    return rank(delta) == m.dim();
}

YoshinoReport yoshino_ring_conditions(const RingDescriptor& ring) {
    YoshinoReport rep;
    rep.e = ring.embdim();
    rep.ring_dim = ring.dim();
    rep.socle = socle_rank(ring);
    RowSpace m2 = m_squared_span(ring);
    rep.m2_dim = m2.dim();
    rep.a_ann_m_equals_m2 = ann_maximal_ideal(ring) == m2;
    rep.b_lengths = rep.m2_dim == rep.e - 1 && rep.ring_dim == 2 * rep.e;
    return rep;
}

YoshinoReport yoshino_conditions(const FDModule& m, std::size_t n, std::size_t depth) {
    YoshinoReport rep = yoshino_ring_conditions(m.ring());

    rep.module_length = m.dim();
    rep.expected_length = n * rep.e;
    rep.min_gens = min_generators(m);
    rep.c_module_length = rep.module_length == rep.expected_length && rep.min_gens == n;

    auto diffs = resolution_differentials(m, depth);
    for (const auto& d : diffs) rep.betti.push_back(d.cols());
    rep.f_constant_betti = rep.min_gens == n;
    for (std::size_t b : rep.betti)
        if (b != n) rep.f_constant_betti = false;

    rep.f_linear_differentials = true;
    for (const auto& d : diffs)
        if (!d.entries_linear()) rep.f_linear_differentials = false;
    return rep;
}

YoshinoReport yoshino_conditions(const MatrixTuple& t, std::size_t depth) {
    return yoshino_conditions(cokernel(presentation_from_tuple(t)), t.n(), depth);
}

}  // namespace totref
