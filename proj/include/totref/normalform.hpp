#pragma once

#include "totref/tuples.hpp"

namespace totref {

/// Outcome of reducing a presentation matrix to x·I_n + sum_j B_j·y_j.
/// The factors satisfy row_ops · input · col_ops = presentation_from_tuple(tuple)
/// exactly, and both are invertible over S_i.
struct NormalForm {
    MatrixTuple tuple;
    SMatrix row_ops;
    SMatrix col_ops;
};

/// Reduces a square matrix with entries in the maximal ideal to normal form.
///
/// Gaussian elimination on the x-coefficient matrix over k (pivots by first
/// nonzero in column order, scaled to 1) brings the x-part to the identity;
/// a final unit factor I - sum_j C_j·y_j clears the socle components those
/// operations leave behind. Entries with a nonzero constant term are a
/// NotLinear error; a singular x-part is NotNormalizable, since such a matrix
/// cannot minimally present a module of the target class.
NormalForm normalize(const SMatrix& d);
NormalForm normalize(const LinearMatrix& d);

/// Certifies that every entry is a linear form and reinterprets the matrix;
/// the offending entry is reported in the NotLinear error otherwise.
LinearMatrix linearity_filter(const SMatrix& d);

}  // namespace totref
