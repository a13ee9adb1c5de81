#pragma once

#include <string>
#include <vector>

#include "g2/gf.hpp"

namespace g2 {

using Vec = std::vector<FieldElem>;

// Dense matrix over a Field.  Small sizes only (dim <= ~50 in this project).
class Mat {
public:
    Mat() = default;
    Mat(const Field& F, int rows, int cols);
    static Mat identity(const Field& F, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *F_; }

    FieldElem& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const FieldElem& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    Mat operator*(const Mat& o) const;
    Vec operator*(const Vec& v) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const FieldElem& c) const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat transpose() const;
    Mat inverse() const;  // throws std::domain_error if singular
    FieldElem det() const;
    bool is_identity() const;

    // canonical byte encoding (coefficient bytes, row major)
    std::string encode() const;
    static Mat decode(const Field& F, int rows, int cols, const std::string& bytes);

    std::string str() const;

private:
    const Field* F_ = nullptr;
    int rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

// Row space maintained in reduced row echelon form; rows are basis vectors.
class RowSpace {
public:
    explicit RowSpace(const Field& F, int ambient_dim);

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return amb_; }
    bool contains(const Vec& v) const;
    // inserts v; returns true when the dimension grew
    bool add(Vec v);
    bool add_rows(const Mat& m);
    const std::vector<Vec>& basis() const { return rows_; }
    Mat basis_matrix() const;
    std::string canonical_key() const;

    // coordinates of v in the basis; throws if v is outside the space
    Vec coordinates(const Vec& v) const;

private:
    const Field* F_;
    int amb_;
    std::vector<Vec> rows_;    // rref rows
    std::vector<int> pivots_;  // pivot column per row
};

// Basis of the right kernel {x : m x = 0}; rows of the result are the basis.
Mat kernel(const Mat& m);

// Solve m x = b; throws std::domain_error when inconsistent.
Vec solve(const Mat& m, const Vec& b);

Vec zero_vec(const Field& F, int n);
Vec unit_vec(const Field& F, int n, int i);
bool is_zero_vec(const Vec& v);

}  // namespace g2
