#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "totref/field.hpp"
#include "totref/kmatrix.hpp"

namespace totref {

/// The local ring S_i = k[X, Y_1..Y_i] / (X^2, (Y_1..Y_i)^2), i >= 2.
///
/// Its monomial k-basis, in the fixed global order used everywhere:
///     1, x, y_1..y_i, x·y_1..x·y_i
/// so dim_k S_i = 2(i+1). The maximal ideal m is spanned by everything but 1,
/// m^2 = soc = (x·y_1, ..., x·y_i), and m^3 = 0. e denotes rank(m/m^2) = i+1.
class RingDescriptor {
public:
    RingDescriptor(std::size_t i, const FieldSpec& field);

    std::size_t i() const { return i_; }
    const FieldSpec& field() const { return field_; }
    /// e = rank(m/m^2) = i + 1.
    std::size_t embdim() const { return i_ + 1; }
    /// k-dimension of the ring, 2(i+1).
    std::size_t dim() const { return 2 * (i_ + 1); }

    // Monomial indices in the global basis order.
    static constexpr std::size_t kUnit = 0;
    static constexpr std::size_t kX = 1;
    std::size_t y_index(std::size_t j) const;   // j in 1..i
    std::size_t xy_index(std::size_t j) const;  // j in 1..i

    std::string monomial_name(std::size_t idx) const;
    std::optional<std::size_t> monomial_index(const std::string& name) const;

    bool operator==(const RingDescriptor&) const = default;

private:
    std::size_t i_;
    FieldSpec field_;
};

/// An element of S_i as a coefficient vector over the monomial basis.
class SElement {
public:
    SElement(const RingDescriptor& ring, std::vector<Scalar> coeffs);

    static SElement zero(const RingDescriptor& ring);
    static SElement one(const RingDescriptor& ring);
    static SElement x(const RingDescriptor& ring);
    static SElement y(const RingDescriptor& ring, std::size_t j);
    static SElement monomial(const RingDescriptor& ring, std::size_t idx);

    const RingDescriptor& ring() const { return ring_; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t idx) const { return coeffs_.at(idx); }
    Scalar& coeff(std::size_t idx) { return coeffs_.at(idx); }

    const Scalar& constant_term() const { return coeffs_[RingDescriptor::kUnit]; }
    const Scalar& x_coeff() const { return coeffs_[RingDescriptor::kX]; }
    const Scalar& y_coeff(std::size_t j) const { return coeffs_[ring_.y_index(j)]; }
    const Scalar& xy_coeff(std::size_t j) const { return coeffs_[ring_.xy_index(j)]; }

    bool is_zero() const;
    bool in_maximal_ideal() const { return constant_term().is_zero(); }
    bool in_socle() const;
    /// True when the element is a k-combination of x and the y_j alone.
    bool is_linear_form() const;
    /// Units are exactly the elements with nonzero constant term.
    bool is_unit() const { return !constant_term().is_zero(); }

    SElement operator+(const SElement& rhs) const;
    SElement operator-(const SElement& rhs) const;
    /// Product under the relations x^2 = 0, y_j·y_h = 0.
    SElement operator*(const SElement& rhs) const;
    SElement operator*(const Scalar& s) const;
    SElement operator-() const;
    bool operator==(const SElement& rhs) const;
    bool operator!=(const SElement& rhs) const { return !(*this == rhs); }

    /// Dense text form, e.g. "x-1/2*y1" or "2+xy2".
    std::string str() const;

private:
    void check_same_ring(const SElement& rhs) const;

    RingDescriptor ring_;
    std::vector<Scalar> coeffs_;
};

/// The k-matrix of multiplication by s on S_i, columns indexed by the
/// monomial basis.
KMatrix mult_matrix(const SElement& s);

/// dim_k ann(m), computed as the kernel of the stacked multiplication maps
/// by x, y_1..y_i. Equals i for every S_i.
std::size_t socle_rank(const RingDescriptor& ring);

/// k-span of the principal ideal s·S_i (coordinate row space).
RowSpace ideal_span(const SElement& s);
/// k-span of ann(m). Spanned by the socle monomials x·y_j.
RowSpace ann_maximal_ideal(const RingDescriptor& ring);
/// k-span of m^2, computed from pairwise products of the m-basis.
RowSpace m_squared_span(const RingDescriptor& ring);

struct Annihilator {
    /// k-basis of {f : f·s = 0}, in echelon order.
    std::vector<SElement> kbasis;
    /// Minimal S_i-generating set, lifted from a basis of ann(s)/m·ann(s).
    std::vector<SElement> module_generators;
};

/// Annihilator ideal of a nonzero element; s = 0 is a ZeroElement error.
Annihilator annihilator(const SElement& s);

/// For a linear form s = a·x + sum b_j·y_j: the partner t with
/// ann(s) = t·S_i and ann(t) = s·S_i when a != 0 (with the x-coefficient
/// normalized to 1), or nullopt when a = 0. Both annihilator identities are
/// re-verified before returning.
std::optional<SElement> exact_zerodivisor_partner(const SElement& s);

/// Element of Q_i = k[X, Y_1..Y_i] / ((Y_1..Y_i)^2): p(x) + sum_j q_j(x)·y_j.
///
/// x is free here, so polynomials in x are kept up to a hard degree cap;
/// any nonzero coefficient past the cap raises CapExceeded rather than being
/// dropped.
class QElement {
public:
    QElement(const RingDescriptor& ring, std::size_t cap);

    static QElement zero(const RingDescriptor& ring, std::size_t cap);
    static QElement one(const RingDescriptor& ring, std::size_t cap);
    static QElement x(const RingDescriptor& ring, std::size_t cap);
    static QElement x_power(const RingDescriptor& ring, std::size_t cap, std::size_t deg);
    static QElement y(const RingDescriptor& ring, std::size_t j, std::size_t cap);
    /// Lifts an S_i element along Q_i -> S_i (identity on the monomial basis).
    static QElement lift(const SElement& s, std::size_t cap);

    const RingDescriptor& ring() const { return ring_; }
    std::size_t cap() const { return cap_; }

    const Scalar& p_coeff(std::size_t deg) const { return p_.at(deg); }
    Scalar& p_coeff(std::size_t deg) { return p_.at(deg); }
    const Scalar& q_coeff(std::size_t j, std::size_t deg) const;
    Scalar& q_coeff(std::size_t j, std::size_t deg);

    bool is_zero() const;

    QElement operator+(const QElement& rhs) const;
    QElement operator-(const QElement& rhs) const;
    /// Product with y_j·y_h = 0 but x unconstrained; overflow past the cap
    /// raises CapExceeded.
    QElement operator*(const QElement& rhs) const;
    QElement operator-() const;
    bool operator==(const QElement& rhs) const;
    bool operator!=(const QElement& rhs) const { return !(*this == rhs); }

    /// Image in S_i = Q_i/(x^2): drops x^2 and higher.
    SElement reduce_mod_x2() const;

private:
    void check_compatible(const QElement& rhs) const;

    RingDescriptor ring_;
    std::size_t cap_;
    std::vector<Scalar> p_;                 // coefficients of p(x), degree 0..cap
    std::vector<std::vector<Scalar>> q_;    // q_j(x) for j = 1..i
};

}  // namespace totref
