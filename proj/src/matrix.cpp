#include "sia/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sia {

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw std::invalid_argument("matrix entry count does not match shape");
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
    Mat m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length does not match row count");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Mat Mat::column(const std::vector<Rat>& v) {
    Mat m(v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, 0) = v[r];
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix addition shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix subtraction shape mismatch");
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const { return kernels::mul(*this, o); }

Mat Mat::scaled(const Rat& c) const {
    Mat m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * c;
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
        }
    return true;
}

std::vector<Rat> Mat::column_vec(std::size_t c) const {
    std::vector<Rat> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Mat::set_column(std::size_t c, const std::vector<Rat>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Mat m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
    }
    return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Mat m(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(a.rows() + r, c) = b.at(r, c);
    return m;
}

std::size_t Mat::hash() const {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(rows_);
    mix(cols_);
    for (const Rat& x : a_) mix(x.hash());
    return h;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " [";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    }
    os << "]";
    return os.str();
}

namespace kernels {

Mat mul_serial(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Mat mul(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat c(a.rows(), b.cols());
    const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (n > 16 && a.cols() * b.cols() > 256)
    for (long i = 0; i < n; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(static_cast<std::size_t>(i), k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (!bkj.is_zero()) c.at(static_cast<std::size_t>(i), j) += aik * bkj;
            }
        }
    return c;
}

Mat kron_serial(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rat& bkl = b.at(k, l);
                    if (!bkl.is_zero())
                        c.at(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
                }
        }
    return c;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat c(a.rows() * b.rows(), a.cols() * b.cols());
    const long n = static_cast<long>(a.rows());
#pragma omp parallel for schedule(dynamic) if (n > 4 && b.rows() * b.cols() > 64)
    for (long i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& aij = a.at(static_cast<std::size_t>(i), j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rat& bkl = b.at(k, l);
                    if (!bkl.is_zero())
                        c.at(static_cast<std::size_t>(i) * b.rows() + k, j * b.cols() + l) =
                            aij * bkl;
                }
        }
    return c;
}

void eliminate_serial(Mat& m, std::size_t pivotRow, std::size_t pivotCol) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i == pivotRow || m.at(i, pivotCol).is_zero()) continue;
        const Rat f = m.at(i, pivotCol);
        for (std::size_t j = pivotCol; j < m.cols(); ++j)
            if (!m.at(pivotRow, j).is_zero()) m.at(i, j) -= f * m.at(pivotRow, j);
    }
}

void eliminate(Mat& m, std::size_t pivotRow, std::size_t pivotCol) {
    const long n = static_cast<long>(m.rows());
#pragma omp parallel for schedule(dynamic) if (n > 32 && m.cols() > 32)
    for (long i = 0; i < n; ++i) {
        const std::size_t r = static_cast<std::size_t>(i);
        if (r == pivotRow || m.at(r, pivotCol).is_zero()) continue;
        const Rat f = m.at(r, pivotCol);
        for (std::size_t j = pivotCol; j < m.cols(); ++j)
            if (!m.at(pivotRow, j).is_zero()) m.at(r, j) -= f * m.at(pivotRow, j);
    }
}

}  // namespace kernels

RrefResult rref(const Mat& m) {
    RrefResult res{m, {}};
    Mat& r = res.r;
    std::size_t row = 0;
    for (std::size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
        std::size_t p = row;
        while (p < r.rows() && r.at(p, c).is_zero()) ++p;
        if (p == r.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(row, j), r.at(p, j));
        const Rat inv = r.at(row, c).inv();
        if (!inv.is_one())
            for (std::size_t j = c; j < r.cols(); ++j)
                if (!r.at(row, j).is_zero()) r.at(row, j) *= inv;
        kernels::eliminate(r, row, c);
        res.pivots.push_back(c);
        ++row;
    }
    return res;
}

Mat kernel_basis(const Mat& m) {
    const RrefResult res = rref(m);
    std::vector<bool> isPivot(m.cols(), false);
    for (std::size_t p : res.pivots) isPivot[p] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    Mat k(m.cols(), freeCols.size());
    for (std::size_t idx = 0; idx < freeCols.size(); ++idx) {
        const std::size_t f = freeCols[idx];
        k.at(f, idx) = Rat(1);
        for (std::size_t t = 0; t < res.pivots.size(); ++t)
            k.at(res.pivots[t], idx) = -res.r.at(t, f);
    }
    return k;
}

std::optional<Mat> solve(const Mat& m, const Mat& b) {
    if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs row mismatch");
    const RrefResult res = rref(Mat::hstack(m, b));
    // Any pivot landing in the augmented block certifies inconsistency.
    for (std::size_t p : res.pivots)
        if (p >= m.cols()) return std::nullopt;
    Mat x(m.cols(), b.cols());
    for (std::size_t t = 0; t < res.pivots.size(); ++t)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(res.pivots[t], j) = res.r.at(t, m.cols() + j);
    return x;
}

std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b) {
    auto x = solve(m, Mat::column(b));
    if (!x) return std::nullopt;
    return x->column_vec(0);
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
    const std::size_t n = m.rows();
    const RrefResult res = rref(Mat::hstack(m, Mat::identity(n)));
    if (res.pivots.size() != n || (n > 0 && res.pivots.back() >= n))
        throw std::domain_error("inverse of singular matrix");
    Mat inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = res.r.at(r, n + c);
    return inv;
}

}  // namespace sia
