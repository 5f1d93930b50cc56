#include "totref/linmat.hpp"

#include <algorithm>

namespace totref {

LinearMatrix::LinearMatrix(const RingDescriptor& ring, KMatrix x_part, std::vector<KMatrix> y_parts)
    : ring_(ring), n_(x_part.rows()), x_(std::move(x_part)), y_(std::move(y_parts)) {
    if (!x_.is_square()) throw ShapeError("X part must be square");
    if (!(x_.field() == ring_.field())) throw FieldMismatch("X part field mismatch");
    if (y_.size() != ring_.i()) throw ShapeError("expected i Y parts");
    for (const auto& y : y_) {
        if (y.rows() != n_ || y.cols() != n_) throw ShapeError("Y part shape mismatch");
        if (!(y.field() == ring_.field())) throw FieldMismatch("Y part field mismatch");
    }
}

LinearMatrix LinearMatrix::zero(const RingDescriptor& ring, std::size_t n) {
    return LinearMatrix(ring, KMatrix(n, n, ring.field()),
                        std::vector<KMatrix>(ring.i(), KMatrix(n, n, ring.field())));
}

const KMatrix& LinearMatrix::y_part(std::size_t j) const {
    if (j < 1 || j > ring_.i()) throw ShapeError("y index out of range");
    return y_[j - 1];
}

SElement LinearMatrix::entry(std::size_t r, std::size_t c) const {
    SElement e = SElement::zero(ring_);
    e.coeff(RingDescriptor::kX) = x_.at(r, c);
    for (std::size_t j = 1; j <= ring_.i(); ++j) e.coeff(ring_.y_index(j)) = y_[j - 1].at(r, c);
    return e;
}

LinearMatrix LinearMatrix::transpose() const {
    std::vector<KMatrix> yt;
    yt.reserve(y_.size());
    for (const auto& y : y_) yt.push_back(y.transpose());
    return LinearMatrix(ring_, x_.transpose(), std::move(yt));
}

SMatrix LinearMatrix::to_smatrix() const {
    SMatrix m(ring_, n_, n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m.at(r, c) = entry(r, c);
    return m;
}

bool LinearMatrix::operator==(const LinearMatrix& rhs) const {
    return ring_ == rhs.ring_ && x_ == rhs.x_ && y_ == rhs.y_;
}

SMatrix::SMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, SElement::zero(ring)) {}

SMatrix SMatrix::identity(const RingDescriptor& ring, std::size_t n) {
    return scalar_diag(ring, n, SElement::one(ring));
}

SMatrix SMatrix::scalar_diag(const RingDescriptor& ring, std::size_t n, const SElement& s) {
    SMatrix m(ring, n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = s;
    return m;
}

const SElement& SMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return entries_[r * cols_ + c];
}

SElement& SMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return entries_[r * cols_ + c];
}

void SMatrix::check_same_ring(const SMatrix& rhs) const {
    if (!(ring_ == rhs.ring_)) throw RingMismatch("matrices over different rings");
}

SMatrix SMatrix::operator+(const SMatrix& rhs) const {
    check_same_ring(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
    SMatrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

SMatrix SMatrix::operator-(const SMatrix& rhs) const {
    check_same_ring(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
    SMatrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
    return out;
}

SMatrix SMatrix::operator*(const SMatrix& rhs) const {
    check_same_ring(rhs);
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    SMatrix out(ring_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const SElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const SElement& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + a * b;
            }
        }
    return out;
}

SMatrix SMatrix::operator*(const SElement& s) const {
    SMatrix out(ring_, rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * s;
    return out;
}

bool SMatrix::operator==(const SMatrix& rhs) const {
    return ring_ == rhs.ring_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

SMatrix SMatrix::transpose() const {
    SMatrix out(ring_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool SMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const SElement& e) { return e.is_zero(); });
}

KMatrix SMatrix::constant_part() const {
    return monomial_part(RingDescriptor::kUnit);
}

KMatrix SMatrix::monomial_part(std::size_t monomial_idx) const {
    KMatrix m(rows_, cols_, ring_.field());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).coeff(monomial_idx);
    return m;
}

bool SMatrix::entries_linear() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const SElement& e) { return e.is_linear_form(); });
}

bool SMatrix::entries_in_maximal_ideal() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const SElement& e) { return e.in_maximal_ideal(); });
}

QMatrix::QMatrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols, std::size_t cap)
    : ring_(ring), rows_(rows), cols_(cols), cap_(cap),
      entries_(rows * cols, QElement::zero(ring, cap)) {}

QMatrix QMatrix::scalar_diag(const RingDescriptor& ring, std::size_t n, const QElement& s) {
    QMatrix m(ring, n, n, s.cap());
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = s;
    return m;
}

const QElement& QMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return entries_[r * cols_ + c];
}

QElement& QMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return entries_[r * cols_ + c];
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (!(ring_ == rhs.ring_)) throw RingMismatch("matrices over different rings");
    if (cap_ != rhs.cap_) throw CapExceeded("mixed degree caps");
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    QMatrix out(ring_, rows_, rhs.cols_, cap_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const QElement& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const QElement& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) = out.at(r, c) + a * b;
            }
        }
    return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return ring_ == rhs.ring_ && cap_ == rhs.cap_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ &&
           entries_ == rhs.entries_;
}

QMatrix lift_to_q(const SMatrix& m, std::size_t cap) {
    QMatrix out(m.ring(), m.rows(), m.cols(), cap);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.at(r, c) = QElement::lift(m.at(r, c), cap);
    return out;
}

QMatrix lift_to_q(const LinearMatrix& m, std::size_t cap) {
    return lift_to_q(m.to_smatrix(), cap);
}

KMatrix flatten(const SMatrix& m) {
    const RingDescriptor& ring = m.ring();
    const std::size_t d = ring.dim();
    KMatrix out(d * m.rows(), d * m.cols(), ring.field());
    // Column (mu, c) is coords(m · (mu·e_c)); entry (r,c) contributes the
    // coefficients of m[r][c]·mu to block column mu, block row r.
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const SElement& e = m.at(r, c);
            if (e.is_zero()) continue;
            for (std::size_t mu = 0; mu < d; ++mu) {
                SElement prod = e * SElement::monomial(ring, mu);
                for (std::size_t nu = 0; nu < d; ++nu)
                    if (!prod.coeff(nu).is_zero()) out.at(nu * m.rows() + r, mu * m.cols() + c) = prod.coeff(nu);
            }
        }
    return out;
}

KMatrix flatten(const LinearMatrix& m) {
    return flatten(m.to_smatrix());
}

std::vector<Scalar> coords(const std::vector<SElement>& v) {
    if (v.empty()) throw ShapeError("empty vector");
    const RingDescriptor& ring = v[0].ring();
    const std::size_t n = v.size();
    std::vector<Scalar> out = zero_vector(ring.field(), ring.dim() * n);
    for (std::size_t t = 0; t < n; ++t) {
        if (!(v[t].ring() == ring)) throw RingMismatch("mixed rings in vector");
        for (std::size_t mu = 0; mu < ring.dim(); ++mu) out[mu * n + t] = v[t].coeff(mu);
    }
    return out;
}

std::vector<SElement> from_coords(const RingDescriptor& ring, std::size_t n,
                                  const std::vector<Scalar>& coords) {
    if (coords.size() != ring.dim() * n) throw ShapeError("coordinate length mismatch");
    std::vector<SElement> v(n, SElement::zero(ring));
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t mu = 0; mu < ring.dim(); ++mu) v[t].coeff(mu) = coords[mu * n + t];
    return v;
}

bool is_invertible_local(const SMatrix& m) {
    if (!m.is_square()) throw ShapeError("invertibility of non-square matrix");
    return rank(m.constant_part()) == m.rows();
}

SElement random_selement(SplitRng& rng, const RingDescriptor& ring, long height) {
    SElement e = SElement::zero(ring);
    for (std::size_t mu = 0; mu < ring.dim(); ++mu)
        e.coeff(mu) = random_scalar(rng, ring.field(), height);
    return e;
}

namespace {

SMatrix random_unit_smatrix(SplitRng& rng, const RingDescriptor& ring, std::size_t n, long height) {
    KMatrix constant = random_invertible_kmatrix(rng, ring.field(), n, height);
    SMatrix out(ring, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            SElement e = SElement::zero(ring);
            e.coeff(RingDescriptor::kUnit) = constant.at(r, c);
            if (rng.coin()) {
                // Random m-part on roughly half the entries.
                for (std::size_t mu = 1; mu < ring.dim(); ++mu)
                    e.coeff(mu) = random_scalar(rng, ring.field(), height);
            }
            out.at(r, c) = e;
        }
    return out;
}

}  // namespace

Scramble random_scramble(const LinearMatrix& d, std::uint64_t seed, long height) {
    SplitRng base(seed);
    SplitRng left_rng = base.fork(1);
    SplitRng right_rng = base.fork(2);
    const RingDescriptor& ring = d.ring();
    SMatrix left = random_unit_smatrix(left_rng, ring, d.n(), height);
    SMatrix right = random_unit_smatrix(right_rng, ring, d.n(), height);
    SMatrix product = left * d.to_smatrix() * right;
    return Scramble{std::move(left), std::move(right), std::move(product)};
}

}  // namespace totref
