#pragma once

#include "k1witt/fields.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace k1witt {

class FpMatrix;

/// Reduced row echelon form together with the pivot column indices.
struct FpEchelon;

/// Dense matrix over F_ell, row-major, entries canonical in [0, ell).
/// Everything here is exact; there is no pivoting heuristic beyond
/// "first nonzero", which keeps row reduction deterministic.
class FpMatrix {
public:
    FpMatrix(std::size_t rows, std::size_t cols, Prime ell); // zero matrix
    static FpMatrix identity(std::size_t n, Prime ell);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Prime field() const { return ell_; }

    Residue at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, Residue v);

    FpMatrix operator*(const FpMatrix& rhs) const;
    FpMatrix operator+(const FpMatrix& rhs) const;
    FpMatrix operator-(const FpMatrix& rhs) const;
    FpMatrix transposed() const;
    FpMatrix kronecker(const FpMatrix& rhs) const;

    /// Determinant of a square matrix by fraction-free forward elimination.
    Residue determinant() const;

    std::size_t rank() const;
    std::optional<FpMatrix> inverse() const; // nullopt when singular
    bool is_symmetric() const;
    bool is_zero() const;

    FpEchelon row_echelon() const;

    friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.ell_ == b.ell_ &&
               a.data_ == b.data_;
    }
    friend bool operator!=(const FpMatrix& a, const FpMatrix& b) {
        return !(a == b);
    }

private:
    std::uint32_t raw(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    std::size_t rows_;
    std::size_t cols_;
    Prime ell_;
    std::vector<std::uint32_t> data_;
};

struct FpEchelon {
    FpMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

} // namespace k1witt
