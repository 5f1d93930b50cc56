#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "totref/algebra.hpp"
#include "totref/kmatrix.hpp"
#include "totref/rng.hpp"

namespace totref {

class SMatrix;

/// Square matrix X·x + sum_j Y[j]·y_j with coefficient matrices over k.
///
/// This is the shape of differentials in the complexes studied here; the
/// type enforces structurally that entries are linear forms.
class LinearMatrix {
public:
    LinearMatrix(const RingDescriptor& ring, KMatrix x_part, std::vector<KMatrix> y_parts);

    static LinearMatrix zero(const RingDescriptor& ring, std::size_t n);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t n() const { return n_; }
    const KMatrix& x_part() const { return x_; }
    const KMatrix& y_part(std::size_t j) const;  // j in 1..i

    SElement entry(std::size_t r, std::size_t c) const;
    LinearMatrix transpose() const;
    SMatrix to_smatrix() const;
    bool operator==(const LinearMatrix& rhs) const;

private:
    RingDescriptor ring_;
    std::size_t n_;
    KMatrix x_;
    std::vector<KMatrix> y_;
};

/// General rows×cols matrix over S_i.
class SMatrix {
public:
    SMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols);

    static SMatrix identity(const RingDescriptor& ring, std::size_t n);
    static SMatrix scalar_diag(const RingDescriptor& ring, std::size_t n, const SElement& s);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const SElement& at(std::size_t r, std::size_t c) const;
    SElement& at(std::size_t r, std::size_t c);

    SMatrix operator+(const SMatrix& rhs) const;
    SMatrix operator-(const SMatrix& rhs) const;
    SMatrix operator*(const SMatrix& rhs) const;
    SMatrix operator*(const SElement& s) const;
    bool operator==(const SMatrix& rhs) const;
    bool operator!=(const SMatrix& rhs) const { return !(*this == rhs); }

    SMatrix transpose() const;
    bool is_zero() const;

    /// Image in M_n(k) under S_i -> k (constant terms).
    KMatrix constant_part() const;
    /// Coefficient matrix of a single monomial across all entries.
    KMatrix monomial_part(std::size_t monomial_idx) const;

    /// True when every entry is a linear form (no constant, no m^2 part).
    bool entries_linear() const;
    /// True when every entry lies in the maximal ideal.
    bool entries_in_maximal_ideal() const;

private:
    void check_same_ring(const SMatrix& rhs) const;

    RingDescriptor ring_;
    std::size_t rows_, cols_;
    std::vector<SElement> entries_;
};

/// rows×cols matrix over Q_i; all entries share one degree cap.
class QMatrix {
public:
    QMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols, std::size_t cap);

    static QMatrix scalar_diag(const RingDescriptor& ring, std::size_t n, const QElement& s);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t cap() const { return cap_; }

    const QElement& at(std::size_t r, std::size_t c) const;
    QElement& at(std::size_t r, std::size_t c);

    QMatrix operator*(const QMatrix& rhs) const;
    bool operator==(const QMatrix& rhs) const;
    bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }

private:
    RingDescriptor ring_;
    std::size_t rows_, cols_, cap_;
    std::vector<QElement> entries_;
};

/// Lift along Q_i -> S_i, entry by entry.
QMatrix lift_to_q(const LinearMatrix& m, std::size_t cap = 2);
QMatrix lift_to_q(const SMatrix& m, std::size_t cap = 2);

/// The k-linear map S_i^cols -> S_i^rows induced by the matrix, written in
/// the global coordinate order (monomial index mu, component t) -> mu·n + t.
/// For every vector v over S_i^cols: flatten(m)·coords(v) = coords(m·v).
KMatrix flatten(const SMatrix& m);
KMatrix flatten(const LinearMatrix& m);

/// Coordinates of a vector in S_i^n under the same ordering.
std::vector<Scalar> coords(const std::vector<SElement>& v);
std::vector<SElement> from_coords(const RingDescriptor& ring, std::size_t n,
                                  const std::vector<Scalar>& coords);

/// Invertibility over the local ring: unit iff invertible mod m.
bool is_invertible_local(const SMatrix& m);

struct Scramble {
    SMatrix left;
    SMatrix right;
    SMatrix product;  // left · d · right
};

/// Seeded random invertible factors A, B over S_i and the exact product
/// A·d·B. Each factor is an invertible constant part plus a sparse random
/// m-part (entry present with probability 1/2).
Scramble random_scramble(const LinearMatrix& d, std::uint64_t seed, long height = 3);

/// Seeded random SElement with all coefficients drawn from the field.
SElement random_selement(SplitRng& rng, const RingDescriptor& ring, long height = 3);

}  // namespace totref
