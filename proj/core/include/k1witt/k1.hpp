#pragma once

#include "k1witt/forms.hpp"
#include "k1witt/padic.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace k1witt {

/// Default number of tracked p-adic digits for constants and embeddings.
inline constexpr unsigned kDefaultPrecision = 64;

/// Element a + d*eps of Z_2[eps]/(eps^2, 2 eps), the degree-zero homotopy
/// ring of the K(1)-local sphere at p = 2.  The eps-coefficient is a bit;
/// the relations 2 eps = eps^2 = 0 are baked into the arithmetic, and the
/// Z_2 part of a product reaches the eps-coefficient only through its
/// residue mod 2.
class K1Element {
public:
    K1Element(PadicInt a, int d);

    const PadicInt& a() const { return a_; }
    int d() const { return d_; }
    unsigned precision() const { return a_.precision(); }

    K1Element operator+(const K1Element& rhs) const;
    K1Element operator-(const K1Element& rhs) const;
    K1Element operator-() const;
    K1Element operator*(const K1Element& rhs) const;

    bool is_unit() const { return a_.is_unit(); }
    K1Element inverse() const;

    friend bool operator==(const K1Element& x, const K1Element& y) {
        return x.a_ == y.a_ && x.d_ == y.d_;
    }
    friend bool operator!=(const K1Element& x, const K1Element& y) {
        return !(x == y);
    }

private:
    PadicInt a_;
    int d_;
};

/// pi_0 of the K(1)-local sphere at a prime p: Z_p for odd p, the
/// eps-extension above for p = 2.
class SphereElement {
public:
    explicit SphereElement(PadicInt odd_value); // odd prime branch
    explicit SphereElement(K1Element two_value);

    static SphereElement integer(std::uint32_t p, const BigInt& n,
                                 unsigned precision);

    std::uint32_t prime() const;
    bool at_two() const { return std::holds_alternative<K1Element>(v_); }
    const PadicInt& odd_part() const;
    const K1Element& two_part() const;
    unsigned precision() const;

    SphereElement operator+(const SphereElement& rhs) const;
    SphereElement operator-(const SphereElement& rhs) const;
    SphereElement operator-() const;
    SphereElement operator*(const SphereElement& rhs) const;
    SphereElement pow(std::uint64_t k) const;

    bool is_unit() const;

    friend bool operator==(const SphereElement& x, const SphereElement& y);
    friend bool operator!=(const SphereElement& x, const SphereElement& y) {
        return !(x == y);
    }

private:
    std::variant<PadicInt, K1Element> v_;
};

/// A p-typical pi-finite space: a nonempty list of connected components,
/// each recorded as the list of its homotopy-group orders o_i = |pi_i|
/// starting at i = 1 (an empty list is a point component).  Every order
/// must be a power of p.
class PiFiniteSpace {
public:
    PiFiniteSpace(std::uint32_t p,
                  std::vector<std::vector<std::uint64_t>> components);

    /// B^k C_p: for k = 0 the discrete space with p points, for k >= 1 the
    /// connected space with pi_k of order p.
    static PiFiniteSpace iterated_classifying(std::uint32_t p, unsigned k);

    std::uint32_t prime() const { return p_; }
    const std::vector<std::vector<std::uint64_t>>& components() const {
        return components_;
    }
    bool connected() const { return components_.size() == 1; }

private:
    std::uint32_t p_;
    std::vector<std::vector<std::uint64_t>> components_;
};

/// Product of connected spaces: |pi_i(A x B)| = |pi_i A| * |pi_i B|.
PiFiniteSpace product_connected(const PiFiniteSpace& a, const PiFiniteSpace& b);

/// Comparison map from the form-class ring into the sphere at p = 2,
/// sending rank r, determinant class d to r + d*eps.  Defined when 2
/// generates the square classes of F_ell, i.e. ell = 3, 5 mod 8.
K1Element nu(GWClass c, Prime ell, unsigned precision = kDefaultPrecision);

/// Per-component exponents e_c with |A_c|_0 = p^(e_c): the alternating sum
/// sum_i (-1)^i log_p |pi_i|.
std::vector<std::int64_t> homotopy_cardinality(const PiFiniteSpace& s);

/// Cardinality of the space in pi_0 of the K(1)-local sphere: the number
/// of components at odd p, and sum_c (1 + (e_c mod 2) eps) at p = 2.
SphereElement k1_cardinality(const PiFiniteSpace& s,
                             unsigned precision = kDefaultPrecision);

/// |B^k C_p| in K(n)-local E_n-modules at height n: p^binom(n-1, k).
BigInt en_module_cardinality(unsigned n, unsigned k, std::uint32_t p);

/// |BC_p|: 1 at odd p, 1 + eps at p = 2.
SphereElement bcp_cardinality(std::uint32_t p,
                              unsigned precision = kDefaultPrecision);

/// |A wr C_2| for connected 2-typical A, via |A wr C_2|_0 = |A|_0^2 |BC_2|_0.
K1Element wreath_c2_cardinality(const PiFiniteSpace& s,
                                unsigned precision = kDefaultPrecision);

/// The power operation alpha_p:
///   odd p:  (x^p + (p-1) x) / p
///   p = 2:  (r^2 + r)/2 + (rd + r + d) eps  on x = r + d eps.
/// Costs one tracked digit (the exact division by p).
SphereElement alpha(const SphereElement& x);

/// delta_p, closed form: (x - x^p)/p at odd p; (r - r^2)/2 + rd eps at 2.
SphereElement delta(const SphereElement& x);
/// delta_p by its definition |BC_p| x - alpha_p(x).
SphereElement delta_definitional(const SphereElement& x);

/// theta, closed form: (x - x^p)/p at odd p; (r - r^2)/2 + (r-1) d eps at 2.
SphereElement theta(const SphereElement& x);
/// theta by its definition (alpha_p(x) - |BC_p| x^p) / (p - 1).
SphereElement theta_definitional(const SphereElement& x);

/// ((x+y)^p - x^p - y^p)/p as the integer polynomial
/// sum_{k=1..p-1} (binom(p,k)/p) x^k y^(p-k); no division happens, so no
/// precision is lost.  Equals alpha(x+y) - alpha(x) - alpha(y).
SphereElement functional_defect(const SphereElement& x, const SphereElement& y);

/// The logarithm on units:
///   odd p:  (1/p) log_p(x^(p-1))
///   p = 2:  (1/2) log_2(r) + ((r-1)/2 mod 2) eps  on r + d eps.
/// The Z_p-part precision drops by two digits at p = 2 (one at odd p); the
/// eps-output needs r mod 8, so inputs must carry at least 3 digits.
SphereElement rezk_log(const SphereElement& x);

} // namespace k1witt
