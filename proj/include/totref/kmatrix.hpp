#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "totref/field.hpp"

namespace totref {

/// Dense matrix over k, row-major, exact entries.
class KMatrix {
public:
    /// Zero matrix of the given shape.
    KMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field);

    static KMatrix identity(std::size_t n, const FieldSpec& field);
    /// Builds from integer rows; every row must have the same length.
    static KMatrix from_int_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t r, std::size_t c) const;
    Scalar& at(std::size_t r, std::size_t c);

    std::vector<Scalar> row(std::size_t r) const;
    std::vector<Scalar> col(std::size_t c) const;

    KMatrix operator+(const KMatrix& rhs) const;
    KMatrix operator-(const KMatrix& rhs) const;
    KMatrix operator*(const KMatrix& rhs) const;
    KMatrix operator*(const Scalar& s) const;
    KMatrix operator-() const;
    bool operator==(const KMatrix& rhs) const;
    bool operator!=(const KMatrix& rhs) const { return !(*this == rhs); }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    KMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    std::string str() const;

private:
    std::size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> data_;
};

KMatrix hcat(const KMatrix& a, const KMatrix& b);
KMatrix vcat(const KMatrix& a, const KMatrix& b);

/// Result of Gauss-Jordan elimination: the rank and a kernel basis.
///
/// The kernel basis follows the reduced-echelon convention: one vector per
/// free column (in increasing column order), with entry 1 at its own free
/// position and 0 at every other free position. Output is deterministic.
struct RankKernel {
    std::size_t rank;
    std::vector<std::vector<Scalar>> kernel;
};

RankKernel rank_and_kernel(const KMatrix& m);
std::size_t rank(const KMatrix& m);

/// Deterministic particular solution of m·x = rhs (free variables set to 0),
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve_linear(const KMatrix& m, const std::vector<Scalar>& rhs);

/// Exact inverse, or nullopt when singular. Non-square input is a ShapeError.
std::optional<KMatrix> invert(const KMatrix& m);

Scalar det(const KMatrix& m);

/// Coefficients of det(t·I - m), ascending in t, monic of degree n.
/// Division-free (Berkowitz), so it is valid over every k including F_2.
std::vector<Scalar> char_poly(const KMatrix& m);

/// A subspace of k^width accumulated row by row and kept in reduced row
/// echelon form, so equal subspaces compare equal.
class RowSpace {
public:
    RowSpace(std::size_t width, const FieldSpec& field);

    /// Adds a vector to the span; returns true when the dimension grew.
    bool add(std::vector<Scalar> v);
    void add_all(const std::vector<std::vector<Scalar>>& vs);
    bool contains(std::vector<Scalar> v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const RowSpace& rhs) const;
    bool operator!=(const RowSpace& rhs) const { return !(*this == rhs); }

private:
    // Reduces v by the stored rows; returns the first nonzero position or width_.
    std::size_t reduce(std::vector<Scalar>& v) const;

    std::size_t width_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<Scalar> zero_vector(const FieldSpec& field, std::size_t n);

}  // namespace totref
