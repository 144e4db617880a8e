#pragma once

#include <optional>
#include <vector>

#include "posetcalc/field.hpp"

namespace posetcalc {

// Dense matrix over an exact field. Zero-dimensional shapes (0xN, Nx0) are
// legal everywhere; they show up as point modules of dimension zero.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const Field& f);

    static Matrix zero(int rows, int cols, const Field& f) { return Matrix(rows, cols, f); }
    static Matrix identity(int n, const Field& f);
    // rows x cols, entries parsed from strings ("2", "-1/3", ...)
    static Matrix of(int rows, int cols, const Field& f, const std::vector<std::string>& entries);
    static Matrix of_int(int rows, int cols, const Field& f, const std::vector<long>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, Scalar s);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Matrix hstack(const Matrix& right) const;
    Matrix vstack(const Matrix& below) const;
    static Matrix block_diag(const Matrix& a, const Matrix& b);
    static Matrix kronecker(const Matrix& a, const Matrix& b);
    Matrix submatrix(int row0, int col0, int nrows, int ncols) const;
    Matrix columns(const std::vector<int>& idx) const;

    // Row-reduced echelon form. Pivoting is deterministic: columns scanned
    // left to right, first nonzero row used.
    Matrix rref(std::vector<int>* pivot_cols = nullptr) const;
    int rank() const;
    // Columns form a basis of the null space; kernel of a 0xN matrix is all
    // of k^N, kernel of an injective matrix is Nx0.
    Matrix kernel_basis() const;
    // Q with Q*A = 0, rank(Q) = rows - rank(A): projection onto a complement
    // of the column space.
    Matrix cokernel_projection() const;
    // Particular X with A*X = B (free variables set to zero), or nullopt if
    // the system is inconsistent.
    std::optional<Matrix> solve(const Matrix& b) const;
    // X with X*A = B, via transposes.
    std::optional<Matrix> solve_left(const Matrix& b) const;
    std::optional<Matrix> inverse() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::string str() const;

  private:
    int rows_, cols_;
    Field field_;
    std::vector<Scalar> a_;

    Scalar& mut(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    static void check_field(const Matrix& a, const Matrix& b);
};

}  // namespace posetcalc
