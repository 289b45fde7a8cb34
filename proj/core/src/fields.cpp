#include "k1witt/fields.hpp"

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

} // namespace

Prime::Prime(std::uint32_t ell) : ell_(ell) {
    if (ell >= (1u << 31)) {
        throw precondition_error("modulus too large: need ell < 2^31, got " +
                                 std::to_string(ell));
    }
    if (ell == 2) {
        throw precondition_error("modulus must be an odd prime; 2 is excluded");
    }
    if (!is_prime_u32(ell)) {
        throw precondition_error("modulus is not prime: " + std::to_string(ell));
    }
}

Residue::Residue(std::int64_t value, Prime ell) : value_(0), ell_(ell) {
    const std::int64_t m = ell.value();
    std::int64_t r = value % m;
    if (r < 0) r += m;
    value_ = static_cast<std::uint32_t>(r);
}

namespace {

void require_same_field(Residue a, Residue b) {
    if (a.field() != b.field()) {
        throw precondition_error("residues live in different fields: F_" +
                                 std::to_string(a.field().value()) + " vs F_" +
                                 std::to_string(b.field().value()));
    }
}

} // namespace

Residue Residue::operator+(Residue rhs) const {
    require_same_field(*this, rhs);
    std::uint64_t s = std::uint64_t(value_) + rhs.value_;
    std::uint64_t m = ell_.value();
    if (s >= m) s -= m;
    return Residue(static_cast<std::int64_t>(s), ell_);
}

Residue Residue::operator-(Residue rhs) const { return *this + (-rhs); }

Residue Residue::operator*(Residue rhs) const {
    require_same_field(*this, rhs);
    std::uint64_t p = std::uint64_t(value_) * rhs.value_ % ell_.value();
    return Residue(static_cast<std::int64_t>(p), ell_);
}

Residue Residue::operator-() const {
    return Residue(value_ == 0 ? 0 : std::int64_t(ell_.value()) - value_, ell_);
}

Residue Residue::pow(std::uint64_t k) const {
    std::uint64_t base = value_;
    std::uint64_t acc = 1;
    const std::uint64_t m = ell_.value();
    while (k > 0) {
        if (k & 1) acc = acc * base % m;
        base = base * base % m;
        k >>= 1;
    }
    return Residue(static_cast<std::int64_t>(acc), ell_);
}

Residue Residue::inverse() const {
    if (value_ == 0) {
        throw precondition_error("inversion of zero in F_" +
                                 std::to_string(ell_.value()));
    }
    return pow(ell_.value() - 2);
}

int square_class(Residue x) {
    if (x.is_zero()) {
        throw precondition_error("square_class of zero is undefined");
    }
    const std::uint32_t ell = x.field().value();
    Residue euler = x.pow((ell - 1) / 2);
    return euler.value() == 1 ? 0 : 1;
}

Residue smallest_nonsquare(Prime ell) {
    for (std::uint32_t x = 2; x < ell.value(); ++x) {
        Residue r(x, ell);
        if (square_class(r) == 1) return r;
    }
    // ell = 3 ends at x = 2; every odd prime field has a nonsquare.
    throw precondition_error("no nonsquare found mod " +
                             std::to_string(ell.value()));
}

} // namespace k1witt
