#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

#include "totref/errors.hpp"

namespace totref {

enum class FieldKind { Rationals, Prime };

/// The coefficient field k: the rationals, or F_p for a prime p.
///
/// Prime moduli are restricted to p < 2^31 so that products of two reduced
/// residues fit in 64 bits.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t characteristic() const { return p_; }
    bool is_prime_field() const { return kind_ == FieldKind::Prime; }

    /// "Q" for the rationals, "F<p>" for prime fields.
    std::string name() const;
    static FieldSpec parse(const std::string& text);

    bool operator==(const FieldSpec&) const = default;

private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact element of k.
///
/// Rationals are always kept in lowest terms with positive denominator;
/// prime-field values are kept reduced to [0, p). Scalars are immutable
/// values; every operation checks that both operands share the field.
class Scalar {
public:
    static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
    static Scalar from_int(const FieldSpec& f, long value);
    static Scalar from_mpq(const FieldSpec& f, const mpq_class& value);

    /// Parses "a" or "a/b" over Q; a decimal integer (reduced mod p) over F_p.
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator/(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; the zero element has none.
    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical text form: lowest terms "a/b" over Q, residue in [0,p) over F_p.
    std::string str() const;

    /// Rational value (rationals only).
    const mpq_class& rational() const;
    /// Reduced residue (prime fields only).
    std::uint64_t residue() const;

private:
    explicit Scalar(const FieldSpec& f) : field_(f), q_(0), m_(0) {}
    void check_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class q_;        // active when field_ is the rationals
    std::uint64_t m_;    // active when field_ is a prime field
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace totref
