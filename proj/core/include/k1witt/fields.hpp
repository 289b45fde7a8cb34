#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k1witt {

/// Thrown when a mathematical precondition of an operation is violated
/// (zero inversion, modulus mismatch, out-of-range prime, ...).  The CLI
/// maps this exception to exit code 2.
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An odd prime modulus, validated by trial division at construction.
/// Moduli are restricted to a single machine word (ell < 2^31): the
/// brute-force oracles enumerate vectors over F_ell, so the interesting
/// range is tiny anyway.
class Prime {
public:
    explicit Prime(std::uint32_t ell);

    std::uint32_t value() const { return ell_; }

    friend bool operator==(Prime a, Prime b) { return a.ell_ == b.ell_; }
    friend bool operator!=(Prime a, Prime b) { return a.ell_ != b.ell_; }

private:
    std::uint32_t ell_;
};

/// Element of F_ell, kept as the canonical representative in [0, ell).
class Residue {
public:
    Residue(std::int64_t value, Prime ell);

    std::uint32_t value() const { return value_; }
    Prime field() const { return ell_; }
    bool is_zero() const { return value_ == 0; }

    Residue operator+(Residue rhs) const;
    Residue operator-(Residue rhs) const;
    Residue operator*(Residue rhs) const;
    Residue operator-() const;

    /// x^k by binary exponentiation (k >= 0).
    Residue pow(std::uint64_t k) const;

    /// Multiplicative inverse via Fermat; throws on zero.
    Residue inverse() const;

    friend bool operator==(Residue a, Residue b) {
        return a.value_ == b.value_ && a.ell_ == b.ell_;
    }
    friend bool operator!=(Residue a, Residue b) { return !(a == b); }

private:
    std::uint32_t value_;
    Prime ell_;
};

/// Square-class exponent of a nonzero residue: 0 for squares, 1 for
/// nonsquares.  Euler's criterion: x^((ell-1)/2) is +1 or -1 in F_ell.
int square_class(Residue x);

/// Least positive nonsquare mod ell; the canonical generator of the
/// square-class group.
Residue smallest_nonsquare(Prime ell);

} // namespace k1witt
