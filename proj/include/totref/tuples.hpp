#pragma once

#include <vector>

#include "totref/linmat.hpp"

namespace totref {

/// An i-tuple (B_1, ..., B_i) of n×n matrices over k — the classifying data
/// for the modules studied here, up to simultaneous conjugation.
class MatrixTuple {
public:
    MatrixTuple(const RingDescriptor& ring, std::vector<KMatrix> parts);

    static MatrixTuple zero(const RingDescriptor& ring, std::size_t n);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    std::size_t count() const { return parts_.size(); }

    const KMatrix& part(std::size_t j) const;  // j in 1..i
    const std::vector<KMatrix>& parts() const { return parts_; }

    bool operator==(const MatrixTuple& rhs) const;
    bool operator!=(const MatrixTuple& rhs) const { return !(*this == rhs); }

private:
    RingDescriptor ring_;
    std::size_t n_;
    std::vector<KMatrix> parts_;
};

/// The presentation matrix x·I_n + sum_j B_j·y_j.
LinearMatrix presentation_from_tuple(const MatrixTuple& t);

/// The companion differential x·I_n - sum_j B_j·y_j.
LinearMatrix sigma_from_tuple(const MatrixTuple& t);

/// Reads the tuple back off a presentation in normal form (X part = I).
MatrixTuple tuple_from_presentation(const LinearMatrix& d);

/// Checks the matrix-factorization identity over Q_i: both products of the
/// presentation and its companion equal x^2·I_n exactly.
bool verify_matrix_factorization(const MatrixTuple& t, std::size_t cap = 2);

MatrixTuple random_tuple(SplitRng& rng, const RingDescriptor& ring, std::size_t n, long height = 5);

MatrixTuple transpose_tuple(const MatrixTuple& t);

/// (P·B_1·P^{-1}, ..., P·B_i·P^{-1}); P must be invertible.
MatrixTuple conjugate_tuple(const MatrixTuple& t, const KMatrix& p);

/// Block-diagonal direct sum.
MatrixTuple direct_sum(const MatrixTuple& a, const MatrixTuple& b);

}  // namespace totref
