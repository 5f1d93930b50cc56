#include "totref/field.hpp"

#include <cctype>
#include <ostream>

namespace totref {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
        if (p == d) return true;
        if (p % d == 0) return false;
    }
    for (std::uint64_t d = 11; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

// Extended Euclid on the residues; p prime, a in (0, p).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (1ULL << 31)) throw Error("prime modulus too large (must be < 2^31)");
    if (!is_prime_u64(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(FieldKind::Prime, p);
}

std::string FieldSpec::name() const {
    return kind_ == FieldKind::Rationals ? "Q" : "F" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t k = 1; k < text.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(text[k])))
                throw ParseError("bad field name: " + text);
            p = p * 10 + static_cast<std::uint64_t>(text[k] - '0');
            if (p >= (1ULL << 31)) throw ParseError("field modulus too large: " + text);
        }
        try {
            return prime(p);
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("bad field name: " + text + " (expected \"Q\" or \"F<p>\")");
}

Scalar Scalar::from_int(const FieldSpec& f, long value) {
    Scalar s(f);
    if (f.kind() == FieldKind::Rationals) {
        s.q_ = mpq_class(value);
    } else {
        long p = static_cast<long>(f.modulus());
        long r = value % p;
        if (r < 0) r += p;
        s.m_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_mpq(const FieldSpec& f, const mpq_class& value) {
    Scalar s(f);
    if (f.kind() == FieldKind::Rationals) {
        s.q_ = value;
        s.q_.canonicalize();
    } else {
        mpz_class p(static_cast<unsigned long>(f.modulus()));
        mpz_class den = value.get_den() % p;
        if (den == 0) throw Error("denominator not invertible mod " + std::to_string(f.modulus()));
        mpz_class num = value.get_num() % p;
        if (num < 0) num += p;
        if (den < 0) den += p;
        std::uint64_t inv = mod_inverse(den.get_ui(), f.modulus());
        s.m_ = (num.get_ui() * inv) % f.modulus();
    }
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits, den_digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    if (digits.empty()) throw ParseError("bad scalar literal: " + text);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den_digits += text[pos++];
        if (den_digits.empty()) throw ParseError("bad scalar literal: " + text);
    }
    if (pos != text.size()) throw ParseError("bad scalar literal: " + text);

    mpz_class num(digits);
    if (negative) num = -num;
    mpz_class den = den_digits.empty() ? mpz_class(1) : mpz_class(den_digits);
    if (den == 0) throw ParseError("zero denominator: " + text);
    mpq_class q(num, den);
    q.canonicalize();
    return from_mpq(f, q);
}

bool Scalar::is_zero() const {
    return field_.kind() == FieldKind::Rationals ? q_ == 0 : m_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind() == FieldKind::Rationals ? q_ == 1 : m_ == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (!(field_ == rhs.field_))
        throw FieldMismatch("scalar fields differ: " + field_.name() + " vs " + rhs.field_.name());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar out(field_);
    if (field_.kind() == FieldKind::Rationals)
        out.q_ = q_ + rhs.q_;
    else
        out.m_ = (m_ + rhs.m_) % field_.modulus();
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar out(field_);
    if (field_.kind() == FieldKind::Rationals)
        out.q_ = q_ - rhs.q_;
    else
        out.m_ = (m_ + field_.modulus() - rhs.m_) % field_.modulus();
    return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar out(field_);
    if (field_.kind() == FieldKind::Rationals)
        out.q_ = q_ * rhs.q_;
    else
        out.m_ = (m_ * rhs.m_) % field_.modulus();
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
    Scalar out(field_);
    if (field_.kind() == FieldKind::Rationals)
        out.q_ = -q_;
    else
        out.m_ = m_ == 0 ? 0 : field_.modulus() - m_;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ZeroElement("inverse of zero");
    Scalar out(field_);
    if (field_.kind() == FieldKind::Rationals)
        out.q_ = 1 / q_;
    else
        out.m_ = mod_inverse(m_, field_.modulus());
    return out;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (!(field_ == rhs.field_)) return false;
    return field_.kind() == FieldKind::Rationals ? q_ == rhs.q_ : m_ == rhs.m_;
}

std::string Scalar::str() const {
    return field_.kind() == FieldKind::Rationals ? q_.get_str() : std::to_string(m_);
}

const mpq_class& Scalar::rational() const {
    if (field_.kind() != FieldKind::Rationals) throw Error("not a rational scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (field_.kind() != FieldKind::Prime) throw Error("not a prime-field scalar");
    return m_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.str();
}

}  // namespace totref
