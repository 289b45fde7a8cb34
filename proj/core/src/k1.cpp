#include "k1witt/k1.hpp"

#include <string>

namespace k1witt {

namespace {

int mod2(const BigInt& v) { return static_cast<int>(v % 2 != 0); }

int residue_mod2(const PadicInt& x) { return mod2(x.residue()); }

BigInt binomial(unsigned a, unsigned b) {
    if (b > a) return 0;
    BigInt acc = 1;
    for (unsigned i = 1; i <= b; ++i) {
        acc = acc * (a - b + i) / i;
    }
    return acc;
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

} // namespace

K1Element::K1Element(PadicInt a, int d) : a_(std::move(a)), d_(d & 1) {
    if (a_.prime() != 2) {
        throw precondition_error("the eps-extension lives over p = 2");
    }
}

K1Element K1Element::operator+(const K1Element& rhs) const {
    return K1Element(a_ + rhs.a_, d_ ^ rhs.d_);
}

K1Element K1Element::operator-(const K1Element& rhs) const {
    // -eps = eps, so the d-bits still add mod 2.
    return K1Element(a_ - rhs.a_, d_ ^ rhs.d_);
}

K1Element K1Element::operator-() const { return K1Element(-a_, d_); }

K1Element K1Element::operator*(const K1Element& rhs) const {
    const int d = (residue_mod2(a_) & rhs.d_) ^ (residue_mod2(rhs.a_) & d_);
    return K1Element(a_ * rhs.a_, d);
}

K1Element K1Element::inverse() const {
    if (!is_unit()) {
        throw precondition_error("inversion of a non-unit");
    }
    // a^-1 = a = 1 mod 2 for units, so the eps-bit survives unchanged.
    return K1Element(a_.inverse(), d_);
}

SphereElement::SphereElement(PadicInt odd_value) : v_(std::move(odd_value)) {
    if (std::get<PadicInt>(v_).prime() == 2) {
        throw precondition_error("p = 2 elements carry an eps-coefficient; "
                                 "construct from a K1Element");
    }
}

SphereElement::SphereElement(K1Element two_value) : v_(std::move(two_value)) {}

SphereElement SphereElement::integer(std::uint32_t p, const BigInt& n,
                                     unsigned precision) {
    if (p == 2) {
        return SphereElement(K1Element(PadicInt(2, n, precision), 0));
    }
    return SphereElement(PadicInt(p, n, precision));
}

std::uint32_t SphereElement::prime() const {
    return at_two() ? 2 : std::get<PadicInt>(v_).prime();
}

const PadicInt& SphereElement::odd_part() const {
    if (at_two()) {
        throw precondition_error("element lives at p = 2");
    }
    return std::get<PadicInt>(v_);
}

const K1Element& SphereElement::two_part() const {
    if (!at_two()) {
        throw precondition_error("element lives at an odd prime");
    }
    return std::get<K1Element>(v_);
}

unsigned SphereElement::precision() const {
    return at_two() ? two_part().precision() : odd_part().precision();
}

namespace {

void require_same_prime(const SphereElement& a, const SphereElement& b) {
    if (a.prime() != b.prime()) {
        throw precondition_error("sphere elements at different primes");
    }
}

} // namespace

SphereElement SphereElement::operator+(const SphereElement& rhs) const {
    require_same_prime(*this, rhs);
    if (at_two()) return SphereElement(two_part() + rhs.two_part());
    return SphereElement(odd_part() + rhs.odd_part());
}

SphereElement SphereElement::operator-(const SphereElement& rhs) const {
    require_same_prime(*this, rhs);
    if (at_two()) return SphereElement(two_part() - rhs.two_part());
    return SphereElement(odd_part() - rhs.odd_part());
}

SphereElement SphereElement::operator-() const {
    if (at_two()) return SphereElement(-two_part());
    return SphereElement(-odd_part());
}

SphereElement SphereElement::operator*(const SphereElement& rhs) const {
    require_same_prime(*this, rhs);
    if (at_two()) return SphereElement(two_part() * rhs.two_part());
    return SphereElement(odd_part() * rhs.odd_part());
}

SphereElement SphereElement::pow(std::uint64_t k) const {
    SphereElement acc = integer(prime(), 1, precision());
    SphereElement base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        if (k >>= 1; k > 0) base = base * base;
    }
    return acc;
}

bool SphereElement::is_unit() const {
    return at_two() ? two_part().is_unit() : odd_part().is_unit();
}

bool operator==(const SphereElement& x, const SphereElement& y) {
    if (x.prime() != y.prime()) return false;
    if (x.at_two()) return x.two_part() == y.two_part();
    return x.odd_part() == y.odd_part();
}

PiFiniteSpace::PiFiniteSpace(
    std::uint32_t p, std::vector<std::vector<std::uint64_t>> components)
    : p_(p), components_(std::move(components)) {
    if (!is_prime_u32(p)) {
        throw precondition_error("space must be typical at a prime");
    }
    if (components_.empty()) {
        throw precondition_error("a pi-finite space has at least one component");
    }
    for (const auto& comp : components_) {
        for (std::uint64_t o : comp) {
            std::uint64_t v = o;
            if (v == 0) {
                throw precondition_error("homotopy group order must be positive");
            }
            while (v % p == 0) v /= p;
            if (v != 1) {
                throw precondition_error(
                    "homotopy group order " + std::to_string(o) +
                    " is not a power of " + std::to_string(p));
            }
        }
    }
}

PiFiniteSpace PiFiniteSpace::iterated_classifying(std::uint32_t p, unsigned k) {
    if (k == 0) {
        // The discrete group itself: p point components.
        std::vector<std::vector<std::uint64_t>> comps(p);
        return PiFiniteSpace(p, std::move(comps));
    }
    std::vector<std::uint64_t> orders(k, 1);
    orders[k - 1] = p;
    return PiFiniteSpace(p, {std::move(orders)});
}

PiFiniteSpace product_connected(const PiFiniteSpace& a,
                                const PiFiniteSpace& b) {
    if (a.prime() != b.prime()) {
        throw precondition_error("product of spaces at different primes");
    }
    if (!a.connected() || !b.connected()) {
        throw precondition_error("componentwise product needs connected inputs");
    }
    const auto& x = a.components().front();
    const auto& y = b.components().front();
    std::vector<std::uint64_t> orders(std::max(x.size(), y.size()), 1);
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::uint64_t ox = i < x.size() ? x[i] : 1;
        std::uint64_t oy = i < y.size() ? y[i] : 1;
        orders[i] = ox * oy;
    }
    return PiFiniteSpace(a.prime(), {std::move(orders)});
}

K1Element nu(GWClass c, Prime ell, unsigned precision) {
    const std::uint32_t m8 = ell.value() % 8;
    if (m8 != 3 && m8 != 5) {
        throw precondition_error(
            "comparison map needs ell = 3,5 mod 8 (2 must be a nonsquare); "
            "got ell = " + std::to_string(ell.value()));
    }
    return K1Element(PadicInt(2, c.rank, precision), c.e);
}

std::vector<std::int64_t> homotopy_cardinality(const PiFiniteSpace& s) {
    const std::uint32_t p = s.prime();
    std::vector<std::int64_t> exponents;
    exponents.reserve(s.components().size());
    for (const auto& comp : s.components()) {
        std::int64_t e = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            std::uint64_t v = comp[i];
            int log_p = 0;
            while (v % p == 0) {
                v /= p;
                ++log_p;
            }
            // Slot i holds |pi_(i+1)|, so the sign is (-1)^(i+1).
            e += (i % 2 == 0) ? -log_p : log_p;
        }
        exponents.push_back(e);
    }
    return exponents;
}

SphereElement k1_cardinality(const PiFiniteSpace& s, unsigned precision) {
    const auto exponents = homotopy_cardinality(s);
    const BigInt m = static_cast<std::uint64_t>(exponents.size());
    if (s.prime() != 2) {
        return SphereElement(PadicInt(s.prime(), m, precision));
    }
    int d = 0;
    for (std::int64_t e : exponents) d ^= static_cast<int>(e & 1);
    return SphereElement(K1Element(PadicInt(2, m, precision), d));
}

BigInt en_module_cardinality(unsigned n, unsigned k, std::uint32_t p) {
    if (n < 1) {
        throw precondition_error("height must be at least 1");
    }
    if (!is_prime_u32(p)) {
        throw precondition_error("base must be prime");
    }
    const BigInt exp = binomial(n - 1, k);
    BigInt acc = 1;
    for (BigInt i = 0; i < exp; ++i) acc *= p;
    return acc;
}

SphereElement bcp_cardinality(std::uint32_t p, unsigned precision) {
    if (p == 2) {
        return SphereElement(K1Element(PadicInt(2, 1, precision), 1));
    }
    return SphereElement(PadicInt(p, 1, precision));
}

K1Element wreath_c2_cardinality(const PiFiniteSpace& s, unsigned precision) {
    if (s.prime() != 2) {
        throw precondition_error("wreath cardinality is the p = 2 computation");
    }
    if (!s.connected()) {
        throw precondition_error("wreath cardinality needs a connected space");
    }
    const std::int64_t e = homotopy_cardinality(s).front();
    const int d = static_cast<int>((2 * e - 1) & 1);
    return K1Element(PadicInt(2, 1, precision), d);
}

namespace {

void require_min_precision(const SphereElement& x, unsigned n,
                           const char* what) {
    if (x.precision() < n) {
        throw precondition_error(std::string(what) + " needs precision >= " +
                                 std::to_string(n));
    }
}

} // namespace

SphereElement alpha(const SphereElement& x) {
    const std::uint32_t p = x.prime();
    require_min_precision(x, 2, "alpha");
    if (p != 2) {
        const PadicInt& v = x.odd_part();
        const PadicInt t = v.pow(p) + v * PadicInt(p, p - 1, v.precision());
        return SphereElement(t.div_exact(p)); // exact by Fermat
    }
    const K1Element& e = x.two_part();
    const PadicInt& r = e.a();
    const PadicInt half = (r * r + r).div_exact(2);
    const int rm = r.residue() % 2 != 0;
    const int d = (rm & e.d()) ^ rm ^ e.d();
    return SphereElement(K1Element(half, d));
}

SphereElement delta(const SphereElement& x) {
    const std::uint32_t p = x.prime();
    require_min_precision(x, 2, "delta");
    if (p != 2) {
        const PadicInt& v = x.odd_part();
        return SphereElement((v - v.pow(p)).div_exact(p));
    }
    const K1Element& e = x.two_part();
    const PadicInt& r = e.a();
    const PadicInt half = (r - r * r).div_exact(2);
    const int rm = r.residue() % 2 != 0;
    return SphereElement(K1Element(half, rm & e.d()));
}

SphereElement delta_definitional(const SphereElement& x) {
    return bcp_cardinality(x.prime(), x.precision()) * x - alpha(x);
}

SphereElement theta(const SphereElement& x) {
    const std::uint32_t p = x.prime();
    require_min_precision(x, 2, "theta");
    if (p != 2) {
        const PadicInt& v = x.odd_part();
        return SphereElement((v - v.pow(p)).div_exact(p));
    }
    const K1Element& e = x.two_part();
    const PadicInt& r = e.a();
    const PadicInt half = (r - r * r).div_exact(2);
    const int rm = r.residue() % 2 != 0;
    return SphereElement(K1Element(half, (rm ^ 1) & e.d()));
}

SphereElement theta_definitional(const SphereElement& x) {
    const std::uint32_t p = x.prime();
    const SphereElement num =
        alpha(x) - bcp_cardinality(p, x.precision()) * x.pow(p);
    if (p == 2) return num; // dividing by p - 1 = 1
    // p - 1 is a unit in Z_p; no digits are lost.
    const PadicInt inv = PadicInt(p, p - 1, num.precision()).inverse();
    return SphereElement(num.odd_part() * inv);
}

SphereElement functional_defect(const SphereElement& x,
                                const SphereElement& y) {
    if (x.prime() != y.prime()) {
        throw precondition_error("sphere elements at different primes");
    }
    const std::uint32_t p = x.prime();
    const unsigned prec = std::min(x.precision(), y.precision());
    SphereElement acc = SphereElement::integer(p, 0, prec);
    for (unsigned k = 1; k < p; ++k) {
        const BigInt coeff = binomial(p, k) / p;
        acc = acc + SphereElement::integer(p, coeff, prec) * x.pow(k) *
                        y.pow(p - k);
    }
    return acc;
}

SphereElement rezk_log(const SphereElement& x) {
    if (!x.is_unit()) {
        throw precondition_error("logarithm of a non-unit");
    }
    const std::uint32_t p = x.prime();
    if (p != 2) {
        require_min_precision(x, 2, "rezk_log");
        const PadicInt t = x.odd_part().pow(p - 1); // = 1 mod p by Fermat
        return SphereElement(log_one_plus(t).div_exact(p));
    }
    require_min_precision(x, 3, "rezk_log"); // eps-output reads r mod 8
    const PadicInt& r = x.two_part().a();
    const PadicInt za = log_unit(r).div_exact(2);
    const BigInt rm8 = r.residue() % 8;
    const int d = (rm8 == 3 || rm8 == 7) ? 1 : 0; // (r-1)/2 mod 2
    return SphereElement(K1Element(za, d));
}

} // namespace k1witt
