#pragma once

#include "k1witt/fields.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace k1witt {

using BigInt = boost::multiprecision::cpp_int;

/// A truncated p-adic integer: a residue mod p^N together with the tracked
/// precision N >= 1.  Arithmetic propagates the minimum precision of its
/// inputs, so a value's precision is always an honest claim about which
/// digits are meaningful.  Two values agree iff their residues match mod
/// p^min(N1, N2); that rule is what operator== implements.
class PadicInt {
public:
    PadicInt(std::uint32_t p, const BigInt& value, unsigned precision);

    std::uint32_t prime() const { return p_; }
    unsigned precision() const { return precision_; }

    /// Canonical residue in [0, p^N).
    const BigInt& residue() const { return residue_; }

    /// Balanced representative in [-p^N/2, p^N/2).
    BigInt balanced() const;

    /// p^N for this value's precision.
    BigInt modulus() const;

    PadicInt operator+(const PadicInt& rhs) const;
    PadicInt operator-(const PadicInt& rhs) const;
    PadicInt operator*(const PadicInt& rhs) const;
    PadicInt operator-() const;
    PadicInt pow(std::uint64_t k) const;

    bool is_zero() const { return residue_ == 0; }
    bool is_unit() const { return residue_ % p_ != 0; }

    /// Inverse of a unit at the same precision.
    PadicInt inverse() const;

    /// Largest v <= N with p^v dividing the residue; a zero residue
    /// reports N, meaning "at least N".
    unsigned valuation() const;

    /// Exact division by an integer k != 0: requires valuation() >= v_p(k),
    /// and costs v_p(k) digits of precision.
    PadicInt div_exact(const BigInt& k) const;

    /// The same value viewed at a lower precision.
    PadicInt truncated(unsigned new_precision) const;

    /// Agreement mod p^min(digits, N1, N2).
    bool equal_at(const PadicInt& other, unsigned digits) const;

    friend bool operator==(const PadicInt& a, const PadicInt& b);
    friend bool operator!=(const PadicInt& a, const PadicInt& b) {
        return !(a == b);
    }

private:
    std::uint32_t p_;
    unsigned precision_;
    BigInt residue_;
};

BigInt pow_u(std::uint32_t base, unsigned exp);

/// log(1 + (x-1)) by the alternating series sum (-1)^(k+1) (x-1)^k / k.
///
/// Requires v(x-1) >= 1 for odd p and v(x-1) >= 3 for p = 2; under those
/// bounds every tail term past the working precision vanishes and the
/// result is good to the full input precision.  Internally the sum runs at
/// precision N + ceil(log2 N) + 2 plus a unit-part guard, then truncates.
PadicInt log_one_plus(const PadicInt& x);

/// The 2-adic logarithm of an odd unit u, defined as (1/2) log(u^2).
/// u^2 is 1 mod 8, so the series always applies; torsion (u = -1) maps to
/// zero.  Output precision is one digit less than the input.
PadicInt log_unit(const PadicInt& u);

} // namespace k1witt
