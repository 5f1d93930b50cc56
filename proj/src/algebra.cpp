#include "totref/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace totref {

RingDescriptor::RingDescriptor(std::size_t i, const FieldSpec& field) : i_(i), field_(field) {
    if (i < 2) throw Error("S_i requires i >= 2, got i = " + std::to_string(i));
}

std::size_t RingDescriptor::y_index(std::size_t j) const {
    if (j < 1 || j > i_) throw ShapeError("y index out of range");
    return 1 + j;
}

std::size_t RingDescriptor::xy_index(std::size_t j) const {
    if (j < 1 || j > i_) throw ShapeError("xy index out of range");
    return 1 + i_ + j;
}

std::string RingDescriptor::monomial_name(std::size_t idx) const {
    if (idx == kUnit) return "1";
    if (idx == kX) return "x";
    if (idx <= 1 + i_) return "y" + std::to_string(idx - 1);
    if (idx <= 1 + 2 * i_) return "xy" + std::to_string(idx - 1 - i_);
    throw ShapeError("monomial index out of range");
}

std::optional<std::size_t> RingDescriptor::monomial_index(const std::string& name) const {
    for (std::size_t idx = 0; idx < dim(); ++idx)
        if (monomial_name(idx) == name) return idx;
    return std::nullopt;
}

SElement::SElement(const RingDescriptor& ring, std::vector<Scalar> coeffs)
    : ring_(ring), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != ring_.dim()) throw ShapeError("coefficient vector length mismatch");
    for (const Scalar& c : coeffs_)
        if (!(c.field() == ring_.field())) throw FieldMismatch("coefficient field mismatch");
}

SElement SElement::zero(const RingDescriptor& ring) {
    return SElement(ring, zero_vector(ring.field(), ring.dim()));
}

SElement SElement::one(const RingDescriptor& ring) {
    return monomial(ring, RingDescriptor::kUnit);
}

SElement SElement::x(const RingDescriptor& ring) {
    return monomial(ring, RingDescriptor::kX);
}

SElement SElement::y(const RingDescriptor& ring, std::size_t j) {
    return monomial(ring, ring.y_index(j));
}

SElement SElement::monomial(const RingDescriptor& ring, std::size_t idx) {
    auto v = zero_vector(ring.field(), ring.dim());
    v.at(idx) = Scalar::one(ring.field());
    return SElement(ring, std::move(v));
}

bool SElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

bool SElement::in_socle() const {
    if (!constant_term().is_zero() || !x_coeff().is_zero()) return false;
    for (std::size_t j = 1; j <= ring_.i(); ++j)
        if (!y_coeff(j).is_zero()) return false;
    return true;
}

bool SElement::is_linear_form() const {
    if (!constant_term().is_zero()) return false;
    for (std::size_t j = 1; j <= ring_.i(); ++j)
        if (!xy_coeff(j).is_zero()) return false;
    return true;
}

void SElement::check_same_ring(const SElement& rhs) const {
    if (!(ring_ == rhs.ring_)) throw RingMismatch("elements of different rings");
}

SElement SElement::operator+(const SElement& rhs) const {
    check_same_ring(rhs);
    auto v = coeffs_;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += rhs.coeffs_[k];
    return SElement(ring_, std::move(v));
}

SElement SElement::operator-(const SElement& rhs) const {
    check_same_ring(rhs);
    auto v = coeffs_;
    for (std::size_t k = 0; k < v.size(); ++k) v[k] -= rhs.coeffs_[k];
    return SElement(ring_, std::move(v));
}

SElement SElement::operator*(const SElement& rhs) const {
    check_same_ring(rhs);
    const std::size_t i = ring_.i();
    auto v = zero_vector(ring_.field(), ring_.dim());
    const Scalar& a0 = constant_term();
    const Scalar& ax = x_coeff();
    const Scalar& b0 = rhs.constant_term();
    const Scalar& bx = rhs.x_coeff();
    v[RingDescriptor::kUnit] = a0 * b0;
    v[RingDescriptor::kX] = a0 * bx + ax * b0;
    for (std::size_t j = 1; j <= i; ++j) {
        const Scalar& ay = y_coeff(j);
        const Scalar& by = rhs.y_coeff(j);
        v[ring_.y_index(j)] = a0 * by + ay * b0;
        // x·y_j collects the four surviving degree-2 contributions.
        v[ring_.xy_index(j)] = a0 * rhs.xy_coeff(j) + xy_coeff(j) * b0 + ax * by + ay * bx;
    }
    return SElement(ring_, std::move(v));
}

SElement SElement::operator*(const Scalar& s) const {
    auto v = coeffs_;
    for (auto& c : v) c *= s;
    return SElement(ring_, std::move(v));
}

SElement SElement::operator-() const {
    auto v = coeffs_;
    for (auto& c : v) c = -c;
    return SElement(ring_, std::move(v));
}

bool SElement::operator==(const SElement& rhs) const {
    return ring_ == rhs.ring_ && coeffs_ == rhs.coeffs_;
}

std::string SElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = 0; idx < ring_.dim(); ++idx) {
        const Scalar& c = coeffs_[idx];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? '-' : '+');
        }
        if (negative) cs = cs.substr(1);
        if (idx == RingDescriptor::kUnit) {
            os << cs;
        } else if (cs == "1") {
            os << ring_.monomial_name(idx);
        } else {
            os << cs << '*' << ring_.monomial_name(idx);
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

KMatrix mult_matrix(const SElement& s) {
    const RingDescriptor& ring = s.ring();
    KMatrix m(ring.dim(), ring.dim(), ring.field());
    for (std::size_t c = 0; c < ring.dim(); ++c) {
        SElement prod = s * SElement::monomial(ring, c);
        for (std::size_t r = 0; r < ring.dim(); ++r) m.at(r, c) = prod.coeff(r);
    }
    return m;
}

std::size_t socle_rank(const RingDescriptor& ring) {
    KMatrix stacked = mult_matrix(SElement::x(ring));
    for (std::size_t j = 1; j <= ring.i(); ++j)
        stacked = vcat(stacked, mult_matrix(SElement::y(ring, j)));
    return ring.dim() - rank(stacked);
}

RowSpace ideal_span(const SElement& s) {
    const RingDescriptor& ring = s.ring();
    RowSpace span(ring.dim(), ring.field());
    for (std::size_t c = 0; c < ring.dim(); ++c)
        span.add((s * SElement::monomial(ring, c)).coeffs());
    return span;
}

RowSpace ann_maximal_ideal(const RingDescriptor& ring) {
    KMatrix stacked = mult_matrix(SElement::x(ring));
    for (std::size_t j = 1; j <= ring.i(); ++j)
        stacked = vcat(stacked, mult_matrix(SElement::y(ring, j)));
    RowSpace span(ring.dim(), ring.field());
    for (const auto& v : rank_and_kernel(stacked).kernel) span.add(v);
    return span;
}

RowSpace m_squared_span(const RingDescriptor& ring) {
    std::vector<SElement> mbasis;
    mbasis.push_back(SElement::x(ring));
    for (std::size_t j = 1; j <= ring.i(); ++j) mbasis.push_back(SElement::y(ring, j));
    // m^3 = 0, so products of pairs of linear monomials span m^2.
    RowSpace span(ring.dim(), ring.field());
    for (const auto& a : mbasis)
        for (const auto& b : mbasis) span.add((a * b).coeffs());
    return span;
}

Annihilator annihilator(const SElement& s) {
    if (s.is_zero()) throw ZeroElement("annihilator of 0 is the whole ring");
    const RingDescriptor& ring = s.ring();
    auto rk = rank_and_kernel(mult_matrix(s));

    Annihilator out;
    for (const auto& v : rk.kernel) out.kbasis.emplace_back(ring, v);

    // m·ann(s), then a Nakayama lift: kbasis vectors independent mod m·ann(s),
    // taken in echelon order.
    std::vector<SElement> mgens;
    mgens.push_back(SElement::x(ring));
    for (std::size_t j = 1; j <= ring.i(); ++j) mgens.push_back(SElement::y(ring, j));
    RowSpace m_ann(ring.dim(), ring.field());
    for (const auto& f : out.kbasis)
        for (const auto& g : mgens) m_ann.add((g * f).coeffs());

    RowSpace seen = m_ann;
    for (const auto& f : out.kbasis)
        if (seen.add(f.coeffs())) out.module_generators.push_back(f);
    return out;
}

std::optional<SElement> exact_zerodivisor_partner(const SElement& s) {
    if (s.is_zero()) throw ZeroElement("zero element has no partner");
    if (!s.is_linear_form()) throw NotLinear("expected a linear form a*x + sum b_j*y_j");
    const RingDescriptor& ring = s.ring();
    const Scalar& a = s.x_coeff();
    if (a.is_zero()) return std::nullopt;

    SElement t = SElement::x(ring);
    for (std::size_t j = 1; j <= ring.i(); ++j)
        t.coeff(ring.y_index(j)) = -(s.y_coeff(j) / a);

    // ann(s) = t·S and ann(t) = s·S, checked as span equalities.
    RowSpace ann_s(ring.dim(), ring.field());
    for (const auto& f : annihilator(s).kbasis) ann_s.add(f.coeffs());
    RowSpace ann_t(ring.dim(), ring.field());
    for (const auto& f : annihilator(t).kbasis) ann_t.add(f.coeffs());
    if (!(ann_s == ideal_span(t)) || !(ann_t == ideal_span(s)))
        throw Error("internal: exact pair verification failed for " + s.str());
    return t;
}

QElement::QElement(const RingDescriptor& ring, std::size_t cap)
    : ring_(ring),
      cap_(cap),
      p_(zero_vector(ring.field(), cap + 1)),
      q_(ring.i(), zero_vector(ring.field(), cap + 1)) {}

QElement QElement::zero(const RingDescriptor& ring, std::size_t cap) {
    return QElement(ring, cap);
}

QElement QElement::one(const RingDescriptor& ring, std::size_t cap) {
    QElement e(ring, cap);
    e.p_[0] = Scalar::one(ring.field());
    return e;
}

QElement QElement::x(const RingDescriptor& ring, std::size_t cap) {
    return x_power(ring, cap, 1);
}

QElement QElement::x_power(const RingDescriptor& ring, std::size_t cap, std::size_t deg) {
    if (deg > cap) throw CapExceeded("x^" + std::to_string(deg) + " exceeds cap " + std::to_string(cap));
    QElement e(ring, cap);
    e.p_[deg] = Scalar::one(ring.field());
    return e;
}

QElement QElement::y(const RingDescriptor& ring, std::size_t j, std::size_t cap) {
    QElement e(ring, cap);
    e.q_coeff(j, 0) = Scalar::one(ring.field());
    return e;
}

QElement QElement::lift(const SElement& s, std::size_t cap) {
    if (cap < 1) throw CapExceeded("cap must be at least 1 to lift linear terms");
    QElement e(s.ring(), cap);
    e.p_[0] = s.constant_term();
    e.p_[1] = s.x_coeff();
    for (std::size_t j = 1; j <= s.ring().i(); ++j) {
        e.q_coeff(j, 0) = s.y_coeff(j);
        e.q_coeff(j, 1) = s.xy_coeff(j);
    }
    return e;
}

const Scalar& QElement::q_coeff(std::size_t j, std::size_t deg) const {
    if (j < 1 || j > ring_.i()) throw ShapeError("y index out of range");
    return q_[j - 1].at(deg);
}

Scalar& QElement::q_coeff(std::size_t j, std::size_t deg) {
    if (j < 1 || j > ring_.i()) throw ShapeError("y index out of range");
    return q_[j - 1].at(deg);
}

bool QElement::is_zero() const {
    auto all_zero = [](const std::vector<Scalar>& v) {
        return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
    };
    return all_zero(p_) && std::all_of(q_.begin(), q_.end(), all_zero);
}

void QElement::check_compatible(const QElement& rhs) const {
    if (!(ring_ == rhs.ring_)) throw RingMismatch("elements of different rings");
    if (cap_ != rhs.cap_) throw CapExceeded("mixed degree caps");
}

QElement QElement::operator+(const QElement& rhs) const {
    check_compatible(rhs);
    QElement out = *this;
    for (std::size_t d = 0; d <= cap_; ++d) out.p_[d] += rhs.p_[d];
    for (std::size_t j = 0; j < q_.size(); ++j)
        for (std::size_t d = 0; d <= cap_; ++d) out.q_[j][d] += rhs.q_[j][d];
    return out;
}

QElement QElement::operator-(const QElement& rhs) const {
    check_compatible(rhs);
    QElement out = *this;
    for (std::size_t d = 0; d <= cap_; ++d) out.p_[d] -= rhs.p_[d];
    for (std::size_t j = 0; j < q_.size(); ++j)
        for (std::size_t d = 0; d <= cap_; ++d) out.q_[j][d] -= rhs.q_[j][d];
    return out;
}

namespace {

// Polynomial product with a hard cap: contributions past the cap must cancel
// to zero, otherwise the multiplication is rejected.
std::vector<Scalar> capped_poly_mul(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                    std::size_t cap, const FieldSpec& field) {
    std::vector<Scalar> full = zero_vector(field, a.size() + b.size() - 1);
    for (std::size_t da = 0; da < a.size(); ++da) {
        if (a[da].is_zero()) continue;
        for (std::size_t db = 0; db < b.size(); ++db) {
            if (b[db].is_zero()) continue;
            full[da + db] += a[da] * b[db];
        }
    }
    for (std::size_t d = cap + 1; d < full.size(); ++d)
        if (!full[d].is_zero())
            throw CapExceeded("x-degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap));
    full.resize(cap + 1, Scalar::zero(field));
    return full;
}

}  // namespace

QElement QElement::operator*(const QElement& rhs) const {
    check_compatible(rhs);
    QElement out(ring_, cap_);
    out.p_ = capped_poly_mul(p_, rhs.p_, cap_, ring_.field());
    for (std::size_t j = 0; j < q_.size(); ++j) {
        auto left = capped_poly_mul(p_, rhs.q_[j], cap_, ring_.field());
        auto right = capped_poly_mul(q_[j], rhs.p_, cap_, ring_.field());
        for (std::size_t d = 0; d <= cap_; ++d) out.q_[j][d] = left[d] + right[d];
    }
    return out;
}

QElement QElement::operator-() const {
    QElement out = *this;
    for (auto& c : out.p_) c = -c;
    for (auto& qr : out.q_)
        for (auto& c : qr) c = -c;
    return out;
}

bool QElement::operator==(const QElement& rhs) const {
    return ring_ == rhs.ring_ && cap_ == rhs.cap_ && p_ == rhs.p_ && q_ == rhs.q_;
}

SElement QElement::reduce_mod_x2() const {
    SElement s = SElement::zero(ring_);
    s.coeff(RingDescriptor::kUnit) = p_[0];
    if (cap_ >= 1) s.coeff(RingDescriptor::kX) = p_[1];
    for (std::size_t j = 1; j <= ring_.i(); ++j) {
        s.coeff(ring_.y_index(j)) = q_coeff(j, 0);
        if (cap_ >= 1) s.coeff(ring_.xy_index(j)) = q_coeff(j, 1);
    }
    return s;
}

}  // namespace totref
