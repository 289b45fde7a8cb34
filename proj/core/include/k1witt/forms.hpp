#pragma once

#include "k1witt/matrix.hpp"

#include <cstdint>
#include <vector>

namespace k1witt {

/// Element of Z[e]/(e^2, 2e): the rank-and-discriminant invariant ring of
/// nondegenerate symmetric bilinear forms over a finite field of odd
/// characteristic.  `rank` may be negative (group completion); `e` is the
/// coefficient of the 2-torsion generator and lives in {0, 1}.
struct GWClass {
    std::int64_t rank = 0;
    int e = 0;

    friend GWClass operator+(GWClass a, GWClass b) {
        return GWClass{a.rank + b.rank, (a.e + b.e) & 1};
    }
    friend GWClass operator-(GWClass a) { return GWClass{-a.rank, a.e}; }
    friend GWClass operator-(GWClass a, GWClass b) { return a + (-b); }
    friend GWClass operator*(GWClass a, GWClass b) {
        // e^2 = 0 and 2e = 0, so only the ranks reach the e-coefficient.
        return GWClass{a.rank * b.rank,
                       static_cast<int>((a.rank * b.e + b.rank * a.e) & 1)};
    }
    friend bool operator==(GWClass a, GWClass b) {
        return a.rank == b.rank && a.e == b.e;
    }
    friend bool operator!=(GWClass a, GWClass b) { return !(a == b); }
};

/// A nondegenerate symmetric bilinear form over F_ell, as its Gram matrix.
/// Symmetry and nondegeneracy are enforced at construction; degenerate or
/// asymmetric matrices are rejected rather than repaired.
class GramForm {
public:
    explicit GramForm(FpMatrix gram);

    static GramForm diagonal(const std::vector<Residue>& entries, Prime ell);
    /// The rank-one form <r>: 1x1 Gram matrix [r], r nonzero.
    static GramForm scalar(Residue r);

    const FpMatrix& matrix() const { return gram_; }
    std::size_t dim() const { return gram_.rows(); }
    Prime field() const { return gram_.field(); }
    Residue determinant() const { return gram_.determinant(); }

    friend bool operator==(const GramForm& a, const GramForm& b) {
        return a.gram_ == b.gram_;
    }
    friend bool operator!=(const GramForm& a, const GramForm& b) {
        return !(a == b);
    }

private:
    FpMatrix gram_;
};

struct Diagonalization {
    std::vector<Residue> diagonal; // all nonzero
    FpMatrix basis;                // P with P^T B P = diag(diagonal)
};

/// Congruence-diagonalize a form by symmetric Gaussian elimination.
/// When the pivot b(v_k, v_k) vanishes, some basis vector or pairwise sum
/// v_i + v_j with b nonzero exists (a nonzero symmetric form in odd
/// characteristic is not alternating), and the basis is adjusted first.
Diagonalization diagonalize(const GramForm& f);

/// Complete invariant of a form: (rank, square class of the determinant).
GWClass class_of(const GramForm& f);

GramForm direct_sum(const GramForm& f, const GramForm& g);
GramForm tensor(const GramForm& f, const GramForm& g);

/// Invariant-based equivalence: same rank and same determinant class.
bool equivalent(const GramForm& f, const GramForm& g);

/// Test oracle for `equivalent`, independent of the invariant route.
/// n <= 2: exhaustive search for P in GL_n(F_ell) with P^T F P = G
/// (requires ell <= 7).  n == 3: compares the counts |{v : b(v,v) = c}|
/// for every c in F_ell (requires ell <= 31).  Larger sizes are refused.
bool brute_force_equivalent(const GramForm& f, const GramForm& g);

} // namespace k1witt
