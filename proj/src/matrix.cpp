#include "posetcalc/matrix.hpp"

#include <sstream>

namespace posetcalc {

Matrix::Matrix(int rows, int cols, const Field& f) : rows_(rows), cols_(cols), field_(f) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
    a_.assign(static_cast<size_t>(rows) * cols, Scalar::zero(f));
}

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.mut(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::of(int rows, int cols, const Field& f, const std::vector<std::string>& entries) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix: entry count mismatch");
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows * cols; ++i)
        m.a_[i] = Scalar::parse(entries[i], f);
    return m;
}

Matrix Matrix::of_int(int rows, int cols, const Field& f, const std::vector<long>& entries) {
    if (static_cast<int>(entries.size()) != rows * cols)
        throw std::invalid_argument("matrix: entry count mismatch");
    Matrix m(rows, cols, f);
    for (int i = 0; i < rows * cols; ++i)
        m.a_[i] = Scalar::of_int(entries[i], f);
    return m;
}

void Matrix::set(int i, int j, Scalar s) {
    if (s.field() != field_) throw std::invalid_argument("matrix: entry from wrong field");
    mut(i, j) = std::move(s);
}

void Matrix::check_field(const Matrix& a, const Matrix& b) {
    if (a.field_ != b.field_) throw std::invalid_argument("matrix: mixed fields");
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.mut(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(*this, o);
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: shape mismatch in product");
    Matrix r(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.mut(i, j) = r.at(i, j) + aik * o.at(k, j);
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(*this, o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix: shape mismatch in sum");
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(rows_, cols_, field_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != o.a_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

Matrix Matrix::hstack(const Matrix& right) const {
    check_field(*this, right);
    if (rows_ != right.rows_) throw std::invalid_argument("matrix: hstack row mismatch");
    Matrix r(rows_, cols_ + right.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.mut(i, j) = at(i, j);
        for (int j = 0; j < right.cols_; ++j) r.mut(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& below) const {
    check_field(*this, below);
    if (cols_ != below.cols_) throw std::invalid_argument("matrix: vstack column mismatch");
    Matrix r(rows_ + below.rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.mut(i, j) = at(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.mut(rows_ + i, j) = below.at(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    Matrix r(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) r.mut(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) r.mut(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    check_field(a, b);
    Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.field_);
    for (int i1 = 0; i1 < a.rows_; ++i1)
        for (int j1 = 0; j1 < a.cols_; ++j1) {
            if (a.at(i1, j1).is_zero()) continue;
            for (int i2 = 0; i2 < b.rows_; ++i2)
                for (int j2 = 0; j2 < b.cols_; ++j2)
                    r.mut(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = a.at(i1, j1) * b.at(i2, j2);
        }
    return r;
}

Matrix Matrix::submatrix(int row0, int col0, int nrows, int ncols) const {
    Matrix r(nrows, ncols, field_);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.mut(i, j) = at(row0 + i, col0 + j);
    return r;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix r(rows_, static_cast<int>(idx.size()), field_);
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i) r.mut(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::rref(std::vector<int>* pivot_cols) const {
    Matrix m = *this;
    // clearing denominators row-wise keeps the row space, and the reduced
    // echelon form is canonical for the row space
    if (field_.is_rational()) {
        for (int i = 0; i < rows_; ++i) {
            mpz_class lcm = 1;
            for (int j = 0; j < cols_; ++j)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                        m.at(i, j).value().get_den().get_mpz_t());
            if (lcm != 1) {
                Scalar f = Scalar::parse(lcm.get_str(), field_);
                for (int j = 0; j < cols_; ++j) m.mut(i, j) = m.at(i, j) * f;
            }
        }
    }
    if (pivot_cols) pivot_cols->clear();
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row)
            for (int j = 0; j < cols_; ++j) std::swap(m.mut(row, j), m.mut(pivot, j));
        Scalar inv = m.at(row, col).inverse();
        for (int j = col; j < cols_; ++j) m.mut(row, j) = m.at(row, j) * inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (int j = col; j < cols_; ++j)
                m.mut(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return m;
}

int Matrix::rank() const {
    if (!field_.is_rational()) {
        std::vector<int> pivots;
        rref(&pivots);
        return static_cast<int>(pivots.size());
    }
    // fraction-free Bareiss elimination on the denominator-cleared integer
    // matrix; every division below is exact
    std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols_));
    for (int i = 0; i < rows_; ++i) {
        mpz_class lcm = 1;
        for (int j = 0; j < cols_; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), at(i, j).value().get_den().get_mpz_t());
        for (int j = 0; j < cols_; ++j) {
            mpq_class scaled = at(i, j).value() * lcm;
            a[i][j] = scaled.get_num();
        }
    }
    mpz_class prev = 1;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int pivot = -1;
        for (int i = row; i < rows_; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != row) std::swap(a[pivot], a[row]);
        for (int i = row + 1; i < rows_; ++i) {
            for (int j = col + 1; j < cols_; ++j) {
                mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
    }
    return row;
}

Matrix Matrix::kernel_basis() const {
    std::vector<int> pivots;
    Matrix r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols_, static_cast<int>(free_cols.size()), field_);
    for (int idx = 0; idx < static_cast<int>(free_cols.size()); ++idx) {
        int fc = free_cols[idx];
        k.mut(fc, idx) = Scalar::one(field_);
        for (int pr = 0; pr < static_cast<int>(pivots.size()); ++pr)
            k.mut(pivots[pr], idx) = -r.at(pr, fc);
    }
    return k;
}

Matrix Matrix::cokernel_projection() const { return transpose().kernel_basis().transpose(); }

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
    check_field(*this, b);
    if (b.rows_ != rows_) throw std::invalid_argument("matrix: solve shape mismatch");
    std::vector<int> pivots;
    Matrix aug = hstack(b).rref(&pivots);
    Matrix x(cols_, b.cols_, field_);
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] >= cols_) return std::nullopt;  // pivot in the rhs block
        for (int j = 0; j < b.cols_; ++j) x.mut(pivots[pr], j) = aug.at(static_cast<int>(pr), cols_ + j);
    }
    return x;
}

std::optional<Matrix> Matrix::solve_left(const Matrix& b) const {
    auto xt = transpose().solve(b.transpose());
    if (!xt) return std::nullopt;
    return xt->transpose();
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    std::vector<int> pivots;
    Matrix aug = hstack(identity(rows_, field_)).rref(&pivots);
    // invertible iff every pivot lies in the A block and there are rows_ of them
    if (static_cast<int>(pivots.size()) != rows_ || (rows_ > 0 && pivots.back() >= cols_))
        return std::nullopt;
    return aug.submatrix(0, cols_, rows_, cols_);
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "] (" << rows_ << "x" << cols_ << ")";
    return os.str();
}

}  // namespace posetcalc
