#pragma once

#include <vector>

#include "totref/linmat.hpp"

namespace totref {

/// A finite-dimensional S_i-module: a k-space with one action matrix per
/// algebra generator. Construction checks the defining relations
/// (act_x^2 = 0, act_yj·act_yh = 0, all actions commute).
class FDModule {
public:
    FDModule(const RingDescriptor& ring, KMatrix act_x, std::vector<KMatrix> act_y);

    static FDModule zero(const RingDescriptor& ring);
    /// S_i as a module over itself.
    static FDModule regular(const RingDescriptor& ring);
    static FDModule free_module(const RingDescriptor& ring, std::size_t n);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t dim() const { return dim_; }
    const KMatrix& act_x() const { return act_x_; }
    const KMatrix& act_y(std::size_t j) const;  // j in 1..i

    KMatrix act_monomial(std::size_t idx) const;
    KMatrix act_element(const SElement& s) const;

private:
    RingDescriptor ring_;
    std::size_t dim_;
    KMatrix act_x_;
    std::vector<KMatrix> act_y_;
};

/// The cokernel S_i^n / im(d) with its induced action maps. The dimension is
/// 2(i+1)·n - rank_k(flatten(d)); the quotient basis is the echelon
/// complement of the image, so the result is deterministic.
FDModule cokernel(const SMatrix& d);
FDModule cokernel(const LinearMatrix& d);

/// dim_k(M / m·M), with m·M = im(act_x) + sum_j im(act_yj).
std::size_t min_generators(const FDModule& m);

/// A minimal free cover S_i^gens -> M: generator coordinates are standard
/// basis vectors of M lifted from a basis of M/mM in echelon order, and the
/// cover map is written as a k-matrix on flattened coordinates.
struct MinimalCover {
    std::size_t gens;
    std::vector<std::vector<Scalar>> generator_coords;
    KMatrix map;  // dim(M) × (2(i+1)·gens)
};

MinimalCover minimal_cover(const FDModule& m);

/// The first differential d_1 of the minimal free resolution: a minimal
/// generating set of ker(S_i^gens -> M) as the matrix columns. Entries are
/// guaranteed to lie in the maximal ideal; linear representatives are
/// preferred when the class has one.
SMatrix minimal_presentation(const FDModule& m);

/// The presentation of the first syzygy module, d_2 = syzygy of d_1: the
/// relations among the minimal generators of ker(S_i^gens -> M).
SMatrix syzygy_presentation(const FDModule& m);

/// Differentials d_1..d_depth of the minimal free resolution, composable and
/// minimal by construction (d_k·d_{k+1} = 0 over S_i).
std::vector<SMatrix> resolution_differentials(const FDModule& m, std::size_t depth);

/// Ranks of the free modules F_1..F_depth in the minimal free resolution
/// (the rank of F_0 is min_generators). Constant for the modules classified
/// here; strictly growing sequences flag modules outside the class.
std::vector<std::size_t> betti_numbers(const FDModule& m, std::size_t depth);

/// Minimal generators of the kernel of the free-module map S^cols -> S^rows
/// given by d, as columns of an SMatrix (the next differential after d).
SMatrix syzygy_of_matrix(const SMatrix& d);

}  // namespace totref
