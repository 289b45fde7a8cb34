#include "k1witt/matrix.hpp"

#include <cassert>

namespace k1witt {

namespace {

void require_same_field(const FpMatrix& a, const FpMatrix& b) {
    if (a.field() != b.field()) {
        throw precondition_error("matrices live in different fields");
    }
}

} // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Prime ell)
    : rows_(rows), cols_(cols), ell_(ell), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Prime ell) {
    FpMatrix m(n, n, ell);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Residue FpMatrix::at(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return Residue(raw(i, j), ell_);
}

void FpMatrix::set(std::size_t i, std::size_t j, Residue v) {
    assert(i < rows_ && j < cols_);
    if (v.field() != ell_) {
        throw precondition_error("entry from a different field");
    }
    data_[i * cols_ + j] = v.value();
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    require_same_field(*this, rhs);
    if (cols_ != rhs.rows_) {
        throw precondition_error("matrix dimensions do not compose");
    }
    FpMatrix out(rows_, rhs.cols_, ell_);
    const std::uint64_t m = ell_.value();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const std::uint64_t aik = raw(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                std::uint64_t acc = out.data_[i * rhs.cols_ + j];
                acc = (acc + aik * rhs.raw(k, j)) % m;
                out.data_[i * rhs.cols_ + j] = static_cast<std::uint32_t>(acc);
            }
        }
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
    require_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw precondition_error("matrix shapes differ");
    }
    FpMatrix out(rows_, cols_, ell_);
    const std::uint64_t m = ell_.value();
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = static_cast<std::uint32_t>(
            (std::uint64_t(data_[i]) + rhs.data_[i]) % m);
    }
    return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& rhs) const {
    require_same_field(*this, rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw precondition_error("matrix shapes differ");
    }
    FpMatrix out(rows_, cols_, ell_);
    const std::uint64_t m = ell_.value();
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = static_cast<std::uint32_t>(
            (std::uint64_t(data_[i]) + m - rhs.data_[i]) % m);
    }
    return out;
}

FpMatrix FpMatrix::transposed() const {
    FpMatrix out(cols_, rows_, ell_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.data_[j * rows_ + i] = raw(i, j);
        }
    }
    return out;
}

FpMatrix FpMatrix::kronecker(const FpMatrix& rhs) const {
    require_same_field(*this, rhs);
    FpMatrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, ell_);
    const std::uint64_t m = ell_.value();
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const std::uint64_t a = raw(i, j);
            if (a == 0) continue;
            for (std::size_t k = 0; k < rhs.rows_; ++k) {
                for (std::size_t l = 0; l < rhs.cols_; ++l) {
                    out.data_[(i * rhs.rows_ + k) * out.cols_ +
                              (j * rhs.cols_ + l)] =
                        static_cast<std::uint32_t>(a * rhs.raw(k, l) % m);
                }
            }
        }
    }
    return out;
}

Residue FpMatrix::determinant() const {
    if (rows_ != cols_) {
        throw precondition_error("determinant of a non-square matrix");
    }
    // Empty matrix: det = 1 (the empty form is nondegenerate).
    FpMatrix work = *this;
    const std::size_t n = rows_;
    Residue det(1, ell_);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && work.raw(pivot, col) == 0) ++pivot;
        if (pivot == n) return Residue(0, ell_);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.data_[pivot * n + j], work.data_[col * n + j]);
            }
            det = -det;
        }
        const Residue p = work.at(col, col);
        det = det * p;
        const Residue pinv = p.inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            const Residue f = work.at(i, col) * pinv;
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < n; ++j) {
                work.set(i, j, work.at(i, j) - f * work.at(col, j));
            }
        }
    }
    return det;
}

FpEchelon FpMatrix::row_echelon() const {
    FpMatrix work = *this;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && work.raw(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::swap(work.data_[pivot * cols_ + j],
                          work.data_[row * cols_ + j]);
            }
        }
        const Residue pinv = work.at(row, col).inverse();
        for (std::size_t j = col; j < cols_; ++j) {
            work.set(row, j, work.at(row, j) * pinv);
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const Residue f = work.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < cols_; ++j) {
                work.set(i, j, work.at(i, j) - f * work.at(row, j));
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return FpEchelon{std::move(work), std::move(pivots)};
}

std::size_t FpMatrix::rank() const { return row_echelon().pivot_cols.size(); }

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) {
        throw precondition_error("inverse of a non-square matrix");
    }
    const std::size_t n = rows_;
    FpMatrix aug(n, 2 * n, ell_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, at(i, j));
        aug.set(i, n + i, Residue(1, ell_));
    }
    FpEchelon e = aug.row_echelon();
    if (e.pivot_cols.size() != n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
        if (e.pivot_cols[k] != k) return std::nullopt;
    }
    FpMatrix inv(n, n, ell_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv.set(i, j, e.reduced.at(i, n + j));
        }
    }
    return inv;
}

bool FpMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i + 1; j < cols_; ++j) {
            if (raw(i, j) != raw(j, i)) return false;
        }
    }
    return true;
}

bool FpMatrix::is_zero() const {
    for (std::uint32_t v : data_) {
        if (v != 0) return false;
    }
    return true;
}

} // namespace k1witt
