#include "totref/kmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace totref {

namespace {

void check_field(const FieldSpec& a, const FieldSpec& b) {
    if (!(a == b)) throw FieldMismatch("matrix fields differ: " + a.name() + " vs " + b.name());
}

// In-place Gauss-Jordan. Pivots are chosen as the first row with a nonzero
// entry in column order, pivots normalized to 1, eliminated above and below.
// Returns the pivot columns in increasing order.
std::vector<std::size_t> rref_inplace(std::vector<std::vector<Scalar>>& a, const FieldSpec& field) {
    std::vector<std::size_t> pivot_cols;
    if (a.empty()) return pivot_cols;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    const Scalar zero = Scalar::zero(field);
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r) {
            if (!a[r][c].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(a[pr], a[sel]);
        if (!a[pr][c].is_one()) {
            Scalar inv = a[pr][c].inverse();
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[pr][j].is_zero()) a[pr][j] = a[pr][j] * inv;
            }
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || a[r][c].is_zero()) continue;
            Scalar f = a[r][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[pr][j].is_zero()) a[r][j] = a[r][j] - f * a[pr][j];
            }
            a[r][c] = zero;
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    return pivot_cols;
}

std::vector<std::vector<Scalar>> to_grid(const KMatrix& m) {
    std::vector<std::vector<Scalar>> a;
    a.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(m.row(r));
    return a;
}

}  // namespace

KMatrix::KMatrix(std::size_t rows, std::size_t cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

KMatrix KMatrix::identity(std::size_t n, const FieldSpec& field) {
    KMatrix m(n, n, field);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar::one(field);
    return m;
}

KMatrix KMatrix::from_int_rows(const FieldSpec& field, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    KMatrix m(r, c, field);
    for (std::size_t k = 0; k < r; ++k) {
        if (rows[k].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(k, j) = Scalar::from_int(field, rows[k][j]);
    }
    return m;
}

const Scalar& KMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return data_[r * cols_ + c];
}

Scalar& KMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
    return data_[r * cols_ + c];
}

std::vector<Scalar> KMatrix::row(std::size_t r) const {
    std::vector<Scalar> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

std::vector<Scalar> KMatrix::col(std::size_t c) const {
    std::vector<Scalar> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
    return out;
}

KMatrix KMatrix::operator+(const KMatrix& rhs) const {
    check_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum shape mismatch");
    KMatrix out(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

KMatrix KMatrix::operator-(const KMatrix& rhs) const {
    check_field(field_, rhs.field_);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix difference shape mismatch");
    KMatrix out(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

KMatrix KMatrix::operator*(const KMatrix& rhs) const {
    check_field(field_, rhs.field_);
    if (cols_ != rhs.rows_) throw ShapeError("matrix product shape mismatch");
    KMatrix out(rows_, rhs.cols_, field_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                const Scalar& b = rhs.at(k, c);
                if (b.is_zero()) continue;
                out.at(r, c) += a * b;
            }
        }
    }
    return out;
}

KMatrix KMatrix::operator*(const Scalar& s) const {
    check_field(field_, s.field());
    KMatrix out(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * s;
    return out;
}

KMatrix KMatrix::operator-() const {
    KMatrix out(rows_, cols_, field_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

bool KMatrix::operator==(const KMatrix& rhs) const {
    if (!(field_ == rhs.field_) || rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (!(data_[k] == rhs.data_[k])) return false;
    return true;
}

std::vector<Scalar> KMatrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw ShapeError("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

KMatrix KMatrix::transpose() const {
    KMatrix out(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

bool KMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool KMatrix::is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

std::string KMatrix::str() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c).str();
        }
        os << "]\n";
    }
    return os.str();
}

KMatrix hcat(const KMatrix& a, const KMatrix& b) {
    check_field(a.field(), b.field());
    if (a.rows() != b.rows()) throw ShapeError("hcat row mismatch");
    KMatrix out(a.rows(), a.cols() + b.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

KMatrix vcat(const KMatrix& a, const KMatrix& b) {
    check_field(a.field(), b.field());
    if (a.cols() != b.cols()) throw ShapeError("vcat column mismatch");
    KMatrix out(a.rows() + b.rows(), a.cols(), a.field());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

RankKernel rank_and_kernel(const KMatrix& m) {
    auto a = to_grid(m);
    auto pivot_cols = rref_inplace(a, m.field());
    const std::size_t rank = pivot_cols.size();
    const Scalar zero = Scalar::zero(m.field());
    const Scalar one = Scalar::one(m.field());

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> kernel;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(m.cols(), zero);
        v[f] = one;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -a[r][f];
        kernel.push_back(std::move(v));
    }
    return RankKernel{rank, std::move(kernel)};
}

std::size_t rank(const KMatrix& m) {
    auto a = to_grid(m);
    return rref_inplace(a, m.field()).size();
}

std::optional<std::vector<Scalar>> solve_linear(const KMatrix& m, const std::vector<Scalar>& rhs) {
    if (rhs.size() != m.rows()) throw ShapeError("rhs length mismatch");
    auto a = to_grid(m);
    for (std::size_t r = 0; r < m.rows(); ++r) a[r].push_back(rhs[r]);
    auto pivot_cols = rref_inplace(a, m.field());
    if (!pivot_cols.empty() && pivot_cols.back() == m.cols()) return std::nullopt;
    std::vector<Scalar> x(m.cols(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = a[r][m.cols()];
    return x;
}

std::optional<KMatrix> invert(const KMatrix& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto a = to_grid(hcat(m, KMatrix::identity(n, m.field())));
    auto pivot_cols = rref_inplace(a, m.field());
    if (pivot_cols.size() < n || (n > 0 && pivot_cols[n - 1] != n - 1)) return std::nullopt;
    KMatrix inv(n, n, m.field());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = a[r][n + c];
    return inv;
}

Scalar det(const KMatrix& m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    auto a = to_grid(m);
    Scalar d = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = n;
        for (std::size_t r = c; r < n; ++r) {
            if (!a[r][c].is_zero()) {
                sel = r;
                break;
            }
        }
        if (sel == n) return Scalar::zero(m.field());
        if (sel != c) {
            std::swap(a[sel], a[c]);
            d = -d;
        }
        d = d * a[c][c];
        Scalar inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            Scalar f = a[r][c] * inv;
            for (std::size_t j = c; j < n; ++j)
                if (!a[c][j].is_zero()) a[r][j] = a[r][j] - f * a[c][j];
        }
    }
    return d;
}

std::vector<Scalar> char_poly(const KMatrix& m) {
    if (!m.is_square()) throw ShapeError("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    const FieldSpec& field = m.field();
    const Scalar one = Scalar::one(field);
    const Scalar zero = Scalar::zero(field);

    // Berkowitz iteration over leading principal submatrices; coefficients
    // kept in descending order (index 0 is the leading coefficient).
    std::vector<Scalar> coeffs{one};
    for (std::size_t r = 1; r <= n; ++r) {
        // Toeplitz column: [1, -d, -R·C, -R·M·C, ..., -R·M^{r-2}·C]
        std::vector<Scalar> v;
        v.reserve(r + 1);
        v.push_back(one);
        v.push_back(-m.at(r - 1, r - 1));
        if (r >= 2) {
            std::vector<Scalar> w(r - 1, zero);  // w = M^t · C
            for (std::size_t k = 0; k < r - 1; ++k) w[k] = m.at(k, r - 1);
            for (std::size_t t = 0; t + 2 <= r; ++t) {
                Scalar rc = zero;
                for (std::size_t k = 0; k < r - 1; ++k) rc += m.at(r - 1, k) * w[k];
                v.push_back(-rc);
                if (t + 3 <= r) {
                    std::vector<Scalar> nw(r - 1, zero);
                    for (std::size_t a = 0; a < r - 1; ++a)
                        for (std::size_t b = 0; b < r - 1; ++b)
                            if (!m.at(a, b).is_zero() && !w[b].is_zero()) nw[a] += m.at(a, b) * w[b];
                    w = std::move(nw);
                }
            }
        }
        std::vector<Scalar> next(r + 1, zero);
        for (std::size_t k = 0; k <= r; ++k)
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (k >= j && k - j < v.size() && !v[k - j].is_zero() && !coeffs[j].is_zero())
                    next[k] += v[k - j] * coeffs[j];
        coeffs = std::move(next);
    }
    std::reverse(coeffs.begin(), coeffs.end());  // ascending in t
    return coeffs;
}

RowSpace::RowSpace(std::size_t width, const FieldSpec& field) : width_(width), field_(field) {}

std::size_t RowSpace::reduce(std::vector<Scalar>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (std::size_t j = pivots_[r]; j < width_; ++j)
            if (!rows_[r][j].is_zero()) v[j] = v[j] - f * rows_[r][j];
    }
    for (std::size_t j = 0; j < width_; ++j)
        if (!v[j].is_zero()) return j;
    return width_;
}

bool RowSpace::add(std::vector<Scalar> v) {
    if (v.size() != width_) throw ShapeError("row width mismatch");
    std::size_t p = reduce(v);
    if (p == width_) return false;
    Scalar inv = v[p].inverse();
    for (std::size_t j = p; j < width_; ++j)
        if (!v[j].is_zero()) v[j] = v[j] * inv;
    // Back-reduce existing rows so the stored basis stays in RREF.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        Scalar f = rows_[r][p];
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < width_; ++j)
            if (!v[j].is_zero()) rows_[r][j] = rows_[r][j] - f * v[j];
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

void RowSpace::add_all(const std::vector<std::vector<Scalar>>& vs) {
    for (const auto& v : vs) add(v);
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    if (v.size() != width_) throw ShapeError("row width mismatch");
    return reduce(v) == width_;
}

bool RowSpace::operator==(const RowSpace& rhs) const {
    if (width_ != rhs.width_ || !(field_ == rhs.field_)) return false;
    if (pivots_ != rhs.pivots_) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r] != rhs.rows_[r]) return false;
    return true;
}

std::vector<Scalar> zero_vector(const FieldSpec& field, std::size_t n) {
    return std::vector<Scalar>(n, Scalar::zero(field));
}

}  // namespace totref
