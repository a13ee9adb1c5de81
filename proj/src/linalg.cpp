#include "g2/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace g2 {

Mat::Mat(const Field& F, int rows, int cols)
    : F_(&F), rows_(rows), cols_(cols),
      a_(static_cast<std::size_t>(rows) * cols, F.zero()) {}

Mat Mat::identity(const Field& F, int n) {
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = F.one();
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(*F_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const FieldElem& y = o.at(k, j);
                if (!y.is_zero()) r.at(i, j) += x * y;
            }
        }
    return r;
}

Vec Mat::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix/vector shape mismatch");
    Vec r(rows_, F_->zero());
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled(const FieldElem& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

bool Mat::operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat r(*F_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    int n = rows_;
    Mat work = *this;
    Mat inv = identity(*F_, n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(work.at(piv, j), work.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        FieldElem d = work.at(col, col).inv();
        for (int j = 0; j < n; ++j) {
            work.at(col, j) *= d;
            inv.at(col, j) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col).is_zero()) continue;
            FieldElem f = work.at(r, col);
            for (int j = 0; j < n; ++j) {
                work.at(r, j) -= f * work.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

FieldElem Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
    Mat work = *this;
    int n = rows_;
    FieldElem d = F_->one();
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!work.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return F_->zero();
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(work.at(piv, j), work.at(col, j));
            d = -d;
        }
        d *= work.at(col, col);
        FieldElem s = work.at(col, col).inv();
        for (int r = col + 1; r < n; ++r) {
            if (work.at(r, col).is_zero()) continue;
            FieldElem f = work.at(r, col) * s;
            for (int j = col; j < n; ++j) work.at(r, j) -= f * work.at(col, j);
        }
    }
    return d;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (i == j && !at(i, j).is_one()) return false;
            if (i != j && !at(i, j).is_zero()) return false;
        }
    return true;
}

std::string Mat::encode() const {
    std::string s;
    s.reserve(a_.size() * F_->n());
    for (const auto& x : a_)
        for (int c : x.coeffs()) s.push_back(static_cast<char>(c));
    return s;
}

Mat Mat::decode(const Field& F, int rows, int cols, const std::string& bytes) {
    Mat m(F, rows, cols);
    int n = F.n();
    std::size_t k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<int> cs(n);
            for (int c = 0; c < n; ++c) cs[c] = static_cast<unsigned char>(bytes[k++]);
            m.at(i, j) = F.from_coeffs(cs);
        }
    return m;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RowSpace::RowSpace(const Field& F, int ambient_dim) : F_(&F), amb_(ambient_dim) {}

bool RowSpace::contains(const Vec& v) const {
    Vec w = v;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = w[pivots_[r]];
        if (!c.is_zero())
            for (int j = 0; j < amb_; ++j) w[j] -= c * rows_[r][j];
    }
    return is_zero_vec(w);
}

bool RowSpace::add(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = v[pivots_[r]];
        if (!c.is_zero())
            for (int j = 0; j < amb_; ++j) v[j] -= c * rows_[r][j];
    }
    int piv = -1;
    for (int j = 0; j < amb_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    FieldElem d = v[piv].inv();
    for (int j = 0; j < amb_; ++j) v[j] *= d;
    // reduce existing rows against the new one
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = rows_[r][piv];
        if (!c.is_zero())
            for (int j = 0; j < amb_; ++j) rows_[r][j] -= c * v[j];
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
}

bool RowSpace::add_rows(const Mat& m) {
    bool grew = false;
    for (int i = 0; i < m.rows(); ++i) {
        Vec v(m.cols());
        for (int j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
        grew |= add(std::move(v));
    }
    return grew;
}

Mat RowSpace::basis_matrix() const {
    Mat m(*F_, dim(), amb_);
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < amb_; ++j) m.at(i, j) = rows_[i][j];
    return m;
}

std::string RowSpace::canonical_key() const { return basis_matrix().encode(); }

Vec RowSpace::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coord(rows_.size(), F_->zero());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const FieldElem c = w[pivots_[r]];
        coord[r] = c;
        if (!c.is_zero())
            for (int j = 0; j < amb_; ++j) w[j] -= c * rows_[r][j];
    }
    if (!is_zero_vec(w)) throw std::domain_error("vector outside row space");
    return coord;
}

Mat kernel(const Mat& m) {
    const Field& F = m.field();
    int rows = m.rows(), cols = m.cols();
    Mat work = m;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!work.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < cols; ++j) std::swap(work.at(piv, j), work.at(r, j));
        FieldElem d = work.at(r, c).inv();
        for (int j = 0; j < cols; ++j) work.at(r, j) *= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || work.at(i, c).is_zero()) continue;
            FieldElem f = work.at(i, c);
            for (int j = 0; j < cols; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<int> free_cols;
    {
        std::size_t k = 0;
        for (int c = 0; c < cols; ++c) {
            if (k < pivot_col.size() && pivot_col[k] == c) { ++k; continue; }
            free_cols.push_back(c);
        }
    }
    Mat basis(F, static_cast<int>(free_cols.size()), cols);
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        int fc = free_cols[b];
        basis.at(static_cast<int>(b), fc) = F.one();
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            basis.at(static_cast<int>(b), pivot_col[i]) = -work.at(static_cast<int>(i), fc);
    }
    return basis;
}

Vec solve(const Mat& m, const Vec& b) {
    const Field& F = m.field();
    int rows = m.rows(), cols = m.cols();
    Mat work(F, rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) work.at(i, j) = m.at(i, j);
        work.at(i, cols) = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!work.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j <= cols; ++j) std::swap(work.at(piv, j), work.at(r, j));
        FieldElem d = work.at(r, c).inv();
        for (int j = 0; j <= cols; ++j) work.at(r, j) *= d;
        for (int i = 0; i < rows; ++i) {
            if (i == r || work.at(i, c).is_zero()) continue;
            FieldElem f = work.at(i, c);
            for (int j = 0; j <= cols; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!work.at(i, cols).is_zero()) throw std::domain_error("inconsistent system");
    Vec x(cols, F.zero());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = work.at(static_cast<int>(i), cols);
    return x;
}

Vec zero_vec(const Field& F, int n) { return Vec(n, F.zero()); }

Vec unit_vec(const Field& F, int n, int i) {
    Vec v(n, F.zero());
    v[i] = F.one();
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace g2
