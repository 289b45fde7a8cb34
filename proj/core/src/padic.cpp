#include "k1witt/padic.hpp"

#include <string>
#include <utility>

namespace k1witt {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

unsigned ceil_log2(unsigned n) {
    unsigned bits = 0;
    unsigned v = 1;
    while (v < n) {
        v *= 2;
        ++bits;
    }
    return bits;
}

// v_p(k) and the unit part of |k|.
std::pair<unsigned, BigInt> split_prime_part(std::uint32_t p, BigInt k) {
    if (k < 0) k = -k;
    unsigned v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return {v, k};
}

BigInt unit_inverse_mod(const BigInt& u, std::uint32_t p, unsigned precision) {
    // u^(phi(p^N) - 1) mod p^N, phi(p^N) = p^(N-1) (p-1).
    const BigInt m = pow_u(p, precision);
    BigInt phi = pow_u(p, precision - 1) * (p - 1);
    BigInt base = u % m;
    if (base < 0) base += m;
    return boost::multiprecision::powm(base, phi - 1, m);
}

} // namespace

BigInt pow_u(std::uint32_t base, unsigned exp) {
    BigInt acc = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

PadicInt::PadicInt(std::uint32_t p, const BigInt& value, unsigned precision)
    : p_(p), precision_(precision) {
    if (!is_prime_u32(p)) {
        throw precondition_error("p-adic base must be prime, got " +
                                 std::to_string(p));
    }
    if (precision == 0) {
        throw precondition_error("p-adic precision must be at least 1");
    }
    const BigInt m = modulus();
    residue_ = value % m;
    if (residue_ < 0) residue_ += m;
}

BigInt PadicInt::modulus() const { return pow_u(p_, precision_); }

BigInt PadicInt::balanced() const {
    const BigInt m = modulus();
    return residue_ * 2 >= m ? residue_ - m : residue_;
}

namespace {

void require_same_prime(const PadicInt& a, const PadicInt& b) {
    if (a.prime() != b.prime()) {
        throw precondition_error("p-adic primes differ: " +
                                 std::to_string(a.prime()) + " vs " +
                                 std::to_string(b.prime()));
    }
}

} // namespace

PadicInt PadicInt::operator+(const PadicInt& rhs) const {
    require_same_prime(*this, rhs);
    const unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, residue_ + rhs.residue_, n);
}

PadicInt PadicInt::operator-(const PadicInt& rhs) const {
    require_same_prime(*this, rhs);
    const unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, residue_ - rhs.residue_, n);
}

PadicInt PadicInt::operator*(const PadicInt& rhs) const {
    require_same_prime(*this, rhs);
    const unsigned n = std::min(precision_, rhs.precision_);
    return PadicInt(p_, residue_ * rhs.residue_, n);
}

PadicInt PadicInt::operator-() const {
    return PadicInt(p_, -residue_, precision_);
}

PadicInt PadicInt::pow(std::uint64_t k) const {
    const BigInt m = modulus();
    BigInt acc = 1;
    BigInt base = residue_;
    while (k > 0) {
        if (k & 1) acc = acc * base % m;
        base = base * base % m;
        k >>= 1;
    }
    return PadicInt(p_, acc, precision_);
}

PadicInt PadicInt::inverse() const {
    if (!is_unit()) {
        throw precondition_error("inversion of a non-unit p-adic integer");
    }
    return PadicInt(p_, unit_inverse_mod(residue_, p_, precision_), precision_);
}

unsigned PadicInt::valuation() const {
    if (residue_ == 0) return precision_;
    unsigned v = 0;
    BigInt r = residue_;
    while (r % p_ == 0) {
        r /= p_;
        ++v;
    }
    return v;
}

PadicInt PadicInt::div_exact(const BigInt& k) const {
    if (k == 0) {
        throw precondition_error("division by zero");
    }
    auto [v, unit] = split_prime_part(p_, k);
    if (v >= precision_) {
        throw precondition_error("division would consume all tracked digits");
    }
    if (valuation() < v) {
        throw precondition_error("exact division requires valuation >= " +
                                 std::to_string(v));
    }
    const unsigned out_prec = precision_ - v;
    BigInt q = residue_ / pow_u(p_, v);
    if (unit != 1) {
        q = q * unit_inverse_mod(unit, p_, out_prec);
    }
    if (k < 0) q = -q;
    return PadicInt(p_, q, out_prec);
}

PadicInt PadicInt::truncated(unsigned new_precision) const {
    if (new_precision == 0 || new_precision > precision_) {
        throw precondition_error("invalid truncation precision");
    }
    return PadicInt(p_, residue_, new_precision);
}

bool PadicInt::equal_at(const PadicInt& other, unsigned digits) const {
    if (p_ != other.p_) return false;
    const unsigned n =
        std::min(digits, std::min(precision_, other.precision_));
    const BigInt m = pow_u(p_, n);
    return residue_ % m == other.residue_ % m;
}

bool operator==(const PadicInt& a, const PadicInt& b) {
    return a.equal_at(b, std::min(a.precision_, b.precision_));
}

PadicInt log_one_plus(const PadicInt& x) {
    const std::uint32_t p = x.prime();
    const unsigned n = x.precision();
    const PadicInt y = x - PadicInt(p, 1, n);
    const unsigned min_val = p == 2 ? 3 : 1;
    if (y.valuation() < min_val) {
        throw precondition_error(
            "log series requires v(x-1) >= " + std::to_string(min_val) +
            " at p = " + std::to_string(p));
    }

    // Working precision: the claimed digits, the spec'd series guard band,
    // and extra room for the digits lost to the 1/k divisions.
    const unsigned w = n + ceil_log2(n) + 2;
    const unsigned guard = ceil_log2(w + 64) + 2;
    const unsigned wg = w + guard;
    const BigInt m = pow_u(p, wg);

    BigInt y_lift = y.residue(); // canonical lift; valid, see header note
    BigInt y_pow = 1;
    BigInt sum = 0;
    for (std::uint64_t k = 1;; ++k) {
        y_pow = y_pow * y_lift % m;
        if (y_pow == 0) break;
        auto [v, unit] = split_prime_part(p, BigInt(k));
        BigInt term = y_pow / pow_u(p, v);
        if (unit != 1) {
            term = term * unit_inverse_mod(unit, p, wg) % m;
        }
        if (k % 2 == 0) term = -term;
        sum = (sum + term) % m;
    }
    return PadicInt(p, sum, n);
}

PadicInt log_unit(const PadicInt& u) {
    if (u.prime() != 2) {
        throw precondition_error("log_unit is the 2-adic branch; p = 2 only");
    }
    if (!u.is_unit()) {
        throw precondition_error("log_unit requires an odd unit");
    }
    if (u.precision() < 3) {
        throw precondition_error("log_unit needs precision >= 3");
    }
    return log_one_plus(u * u).div_exact(2);
}

} // namespace k1witt
