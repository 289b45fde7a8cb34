#include "k1witt/verify.hpp"

#include "k1witt/equivariant.hpp"
#include "k1witt/k1.hpp"
#include "k1witt/rng.hpp"

#include <algorithm>
#include <sstream>

namespace k1witt::verify {

namespace {

CheckResult pass(std::string name) { return CheckResult{std::move(name), true, ""}; }

CheckResult fail(std::string name, std::string detail) {
    return CheckResult{std::move(name), false, std::move(detail)};
}

// ---- generators ----------------------------------------------------------

Residue random_residue(Rng& rng, Prime ell) {
    return Residue(static_cast<std::int64_t>(rng.below(ell.value())), ell);
}


FpMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                       Prime ell) {
    FpMatrix m(rows, cols, ell);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, random_residue(rng, ell));
        }
    }
    return m;
}

FpMatrix random_invertible(Rng& rng, std::size_t n, Prime ell) {
    for (;;) {
        FpMatrix m = random_matrix(rng, n, n, ell);
        if (!m.determinant().is_zero()) return m;
    }
}

GramForm random_form(Rng& rng, std::size_t n, Prime ell) {
    for (;;) {
        FpMatrix m(n, n, ell);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Residue v = random_residue(rng, ell);
                m.set(i, j, v);
                m.set(j, i, v);
            }
        }
        if (!m.determinant().is_zero()) return GramForm(std::move(m));
    }
}

FpMatrix regular_permutation(const FiniteGroup& g, std::size_t elt, Prime ell) {
    FpMatrix m(g.order(), g.order(), ell);
    for (std::size_t h = 0; h < g.order(); ++h) {
        m.set(g.mul(elt, h), h, Residue(1, ell));
    }
    return m;
}

// Regular representation (optionally padded with a trivial coordinate),
// conjugated by a random invertible change of basis; the invariant form
// comes from averaging a random symmetric matrix over the group.
EquivariantForm random_equivariant(Rng& rng, const FiniteGroup& g, Prime ell) {
    const bool pad = rng.below(2) == 1;
    const std::size_t n = g.order() + (pad ? 1 : 0);
    const FpMatrix q = random_invertible(rng, n, ell);
    const FpMatrix qinv = *q.inverse();

    std::vector<FpMatrix> mats;
    mats.reserve(g.order());
    for (std::size_t e = 0; e < g.order(); ++e) {
        FpMatrix perm(n, n, ell);
        const FpMatrix reg = regular_permutation(g, e, ell);
        for (std::size_t i = 0; i < g.order(); ++i) {
            for (std::size_t j = 0; j < g.order(); ++j) {
                perm.set(i, j, reg.at(i, j));
            }
        }
        if (pad) perm.set(n - 1, n - 1, Residue(1, ell));
        mats.push_back(qinv * perm * q);
    }
    Representation rep(g, std::move(mats));

    for (;;) {
        FpMatrix seed(n, n, ell);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                Residue v = random_residue(rng, ell);
                seed.set(i, j, v);
                seed.set(j, i, v);
            }
        }
        FpMatrix averaged(n, n, ell);
        for (std::size_t e = 0; e < g.order(); ++e) {
            const FpMatrix& rho = rep.matrix(e);
            averaged = averaged + rho.transposed() * seed * rho;
        }
        if (!averaged.determinant().is_zero()) {
            return EquivariantForm(rep, GramForm(std::move(averaged)));
        }
    }
}

BigInt random_bigint_below(Rng& rng, std::uint32_t p, unsigned digits) {
    BigInt acc = 0;
    for (unsigned i = 0; i < digits; ++i) {
        acc = acc * p + static_cast<std::uint64_t>(rng.below(p));
    }
    return acc;
}

PadicInt random_padic(Rng& rng, std::uint32_t p, unsigned precision) {
    return PadicInt(p, random_bigint_below(rng, p, precision), precision);
}

PadicInt random_odd_unit(Rng& rng, unsigned precision) {
    BigInt v = random_bigint_below(rng, 2, precision);
    if (v % 2 == 0) v += 1;
    return PadicInt(2, v, precision);
}

SphereElement random_sphere(Rng& rng, std::uint32_t p, unsigned precision) {
    if (p == 2) {
        return SphereElement(K1Element(random_padic(rng, 2, precision),
                                       static_cast<int>(rng.below(2))));
    }
    return SphereElement(random_padic(rng, p, precision));
}

SphereElement random_sphere_unit(Rng& rng, std::uint32_t p,
                                 unsigned precision) {
    for (;;) {
        SphereElement x = random_sphere(rng, p, precision);
        if (x.is_unit()) return x;
    }
}

PiFiniteSpace random_connected_space(Rng& rng, std::uint32_t p) {
    const std::size_t truncation = 1 + rng.below(4);
    std::vector<std::uint64_t> orders(truncation, 1);
    for (auto& o : orders) {
        std::uint64_t v = 1;
        const std::size_t e = rng.below(4);
        for (std::size_t i = 0; i < e; ++i) v *= p;
        o = v;
    }
    return PiFiniteSpace(p, {std::move(orders)});
}

// ---- formatting helpers --------------------------------------------------

std::string gw_str(GWClass c) {
    std::ostringstream os;
    os << "(" << c.rank << "," << c.e << ")";
    return os.str();
}

std::string sphere_str(const SphereElement& x) {
    std::ostringstream os;
    if (x.at_two()) {
        os << x.two_part().a().balanced() << "+" << x.two_part().d() << "e";
    } else {
        os << x.odd_part().balanced() << " (p=" << x.prime() << ")";
    }
    return os.str();
}

// ---- fields ---------------------------------------------------------------

CheckResult check_square_class_multiplicative() {
    const std::string name = "square_class multiplicative (ell <= 23)";
    for (std::uint32_t l : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        Prime ell(l);
        for (std::uint32_t x = 1; x < l; ++x) {
            for (std::uint32_t y = 1; y < l; ++y) {
                Residue rx(x, ell), ry(y, ell);
                if (square_class(rx * ry) !=
                    (square_class(rx) ^ square_class(ry))) {
                    return fail(name, "x=" + std::to_string(x) +
                                          " y=" + std::to_string(y) +
                                          " ell=" + std::to_string(l));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_euler_vs_enumeration() {
    const std::string name = "Euler criterion = square enumeration (ell <= 23)";
    for (std::uint32_t l : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        Prime ell(l);
        std::vector<bool> is_square(l, false);
        for (std::uint32_t t = 1; t < l; ++t) {
            is_square[std::uint64_t(t) * t % l] = true;
        }
        for (std::uint32_t x = 1; x < l; ++x) {
            const int expected = is_square[x] ? 0 : 1;
            if (square_class(Residue(x, ell)) != expected) {
                return fail(name, "x=" + std::to_string(x) +
                                      " ell=" + std::to_string(l));
            }
        }
    }
    return pass(name);
}

CheckResult check_two_nonsquare_rule() {
    const std::string name = "2 nonsquare iff ell = 3,5 mod 8 (ell < 200)";
    for (std::uint32_t l = 3; l < 200; l += 2) {
        bool prime = true;
        for (std::uint32_t d = 3; d * d <= l; d += 2) {
            if (l % d == 0) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        Prime ell(l);
        const bool nonsquare = square_class(Residue(2, ell)) == 1;
        const bool rule = l % 8 == 3 || l % 8 == 5;
        if (nonsquare != rule) {
            return fail(name, "ell=" + std::to_string(l));
        }
    }
    return pass(name);
}

// ---- forms ----------------------------------------------------------------

CheckResult check_diagonalize_soundness(Rng& rng) {
    const std::string name = "diagonalize: P^T B P = diag (500 random forms)";
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 500; ++trial) {
        Prime ell(ells[rng.below(5)]);
        const std::size_t n = rng.below(7); // 0..6
        GramForm f = random_form(rng, n, ell);
        Diagonalization d = diagonalize(f);
        FpMatrix expected(n, n, ell);
        for (std::size_t i = 0; i < n; ++i) {
            if (d.diagonal[i].is_zero()) {
                return fail(name, "zero diagonal entry, trial " +
                                      std::to_string(trial));
            }
            expected.set(i, i, d.diagonal[i]);
        }
        if (d.basis.transposed() * f.matrix() * d.basis != expected) {
            return fail(name, "congruence failed, trial " +
                                  std::to_string(trial) +
                                  " ell=" + std::to_string(ell.value()));
        }
    }
    return pass(name);
}

CheckResult check_class_homomorphism(Rng& rng) {
    const std::string name = "class_of respects direct sum and tensor";
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 500; ++trial) {
        Prime ell(ells[rng.below(5)]);
        GramForm f = random_form(rng, rng.below(4), ell);
        GramForm g = random_form(rng, rng.below(4), ell);
        if (class_of(direct_sum(f, g)) != class_of(f) + class_of(g)) {
            return fail(name, "direct sum, trial " + std::to_string(trial));
        }
        if (class_of(tensor(f, g)) != class_of(f) * class_of(g)) {
            return fail(name, "tensor, trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

std::vector<GramForm> all_forms(std::size_t n, Prime ell) {
    std::vector<GramForm> forms;
    if (n == 1) {
        for (std::uint32_t a = 1; a < ell.value(); ++a) {
            forms.push_back(GramForm::scalar(Residue(a, ell)));
        }
        return forms;
    }
    // n == 2: symmetric matrices [[a, b], [b, c]] with ac - b^2 != 0.
    for (std::uint32_t a = 0; a < ell.value(); ++a) {
        for (std::uint32_t b = 0; b < ell.value(); ++b) {
            for (std::uint32_t c = 0; c < ell.value(); ++c) {
                FpMatrix m(2, 2, ell);
                m.set(0, 0, Residue(a, ell));
                m.set(0, 1, Residue(b, ell));
                m.set(1, 0, Residue(b, ell));
                m.set(1, 1, Residue(c, ell));
                if (!m.determinant().is_zero()) {
                    forms.push_back(GramForm(std::move(m)));
                }
            }
        }
    }
    return forms;
}

CheckResult check_equivalence_oracle_small() {
    const std::string name =
        "equivalent = GL brute force (all pairs, n <= 2, ell in {3,5,7})";
    for (std::uint32_t l : {3u, 5u, 7u}) {
        Prime ell(l);
        for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
            const std::vector<GramForm> forms = all_forms(n, ell);
            for (std::size_t i = 0; i < forms.size(); ++i) {
                for (std::size_t j = i; j < forms.size(); ++j) {
                    if (equivalent(forms[i], forms[j]) !=
                        brute_force_equivalent(forms[i], forms[j])) {
                        return fail(name,
                                    "ell=" + std::to_string(l) + " n=" +
                                        std::to_string(n) + " pair (" +
                                        std::to_string(i) + "," +
                                        std::to_string(j) + ")");
                    }
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_equivalence_oracle_dim3(Rng& rng) {
    const std::string name = "equivalent = value-count oracle (100 n=3 pairs)";
    const std::uint32_t ells[] = {3, 5, 7};
    for (int trial = 0; trial < 100; ++trial) {
        Prime ell(ells[rng.below(3)]);
        GramForm f = random_form(rng, 3, ell);
        GramForm g = random_form(rng, 3, ell);
        if (equivalent(f, g) != brute_force_equivalent(f, g)) {
            return fail(name, "trial " + std::to_string(trial) +
                                  " ell=" + std::to_string(ell.value()));
        }
    }
    return pass(name);
}

CheckResult check_gwclass_ring_axioms() {
    const std::string name = "class ring axioms (|rank| <= 4, both bits)";
    std::vector<GWClass> elems;
    for (std::int64_t r = -4; r <= 4; ++r) {
        for (int d = 0; d <= 1; ++d) elems.push_back(GWClass{r, d});
    }
    for (GWClass x : elems) {
        for (GWClass y : elems) {
            if (x + y != y + x || x * y != y * x) {
                return fail(name, "commutativity " + gw_str(x) + "," + gw_str(y));
            }
            for (GWClass z : elems) {
                if ((x + y) + z != x + (y + z) || (x * y) * z != x * (y * z)) {
                    return fail(name, "associativity");
                }
                if (x * (y + z) != x * y + x * z) {
                    return fail(name, "distributivity");
                }
            }
        }
    }
    return pass(name);
}

// ---- equivariant ----------------------------------------------------------

std::vector<FiniteGroup> small_two_groups() {
    std::vector<FiniteGroup> gs;
    gs.push_back(FiniteGroup::cyclic(2));
    gs.push_back(FiniteGroup::cyclic(4));
    gs.push_back(FiniteGroup::product(FiniteGroup::cyclic(2),
                                      FiniteGroup::cyclic(2)));
    gs.push_back(FiniteGroup::cyclic(8));
    gs.push_back(FiniteGroup::product(FiniteGroup::cyclic(4),
                                      FiniteGroup::cyclic(2)));
    gs.push_back(FiniteGroup::product(
        FiniteGroup::cyclic(2),
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
    return gs;
}

CheckResult check_pushforward_well_defined(Rng& rng) {
    const std::string name =
        "pushforward independent of section representatives (200 cases)";
    const std::vector<FiniteGroup> groups = small_two_groups();
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 200; ++trial) {
        const FiniteGroup& g = groups[rng.below(groups.size())];
        Prime ell(ells[rng.below(5)]);
        EquivariantForm ef = random_equivariant(rng, g, ell);
        const Coinvariants co = coinvariants(ef.rep());
        const GramForm reference = pushforward_with_section(ef, co.section);

        // Shift every representative by a random relation vector
        // (rho(g) - I) w.
        FpMatrix shifted = co.section;
        const std::size_t n = ef.rep().dim();
        for (std::size_t col = 0; col < shifted.cols(); ++col) {
            const std::size_t e = rng.below(g.order());
            const FpMatrix diff =
                ef.rep().matrix(e) - FpMatrix::identity(n, ell);
            FpMatrix w = random_matrix(rng, n, 1, ell);
            const FpMatrix delta = diff * w;
            for (std::size_t row = 0; row < n; ++row) {
                shifted.set(row, col, shifted.at(row, col) + delta.at(row, 0));
            }
        }
        const GramForm perturbed = pushforward_with_section(ef, shifted);
        if (perturbed != reference) {
            return fail(name, "trial " + std::to_string(trial) + " |G|=" +
                                  std::to_string(g.order()) +
                                  " ell=" + std::to_string(ell.value()));
        }
        if (!reference.matrix().is_symmetric()) {
            return fail(name, "asymmetric integral, trial " +
                                  std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_pushforward_constant() {
    const std::string name = "integral of trivial <r> equals <|G| r>";
    const std::vector<FiniteGroup> groups = {
        FiniteGroup::cyclic(2), FiniteGroup::cyclic(4),
        FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)),
        FiniteGroup::cyclic(8)};
    for (std::uint32_t l : {3u, 5u, 11u, 13u}) {
        Prime ell(l);
        for (const FiniteGroup& g : groups) {
            for (std::uint32_t r = 1; r < l; ++r) {
                const GramForm in = GramForm::scalar(Residue(r, ell));
                const GramForm out = pushforward(restrict_trivial(in, g));
                const GramForm expected = GramForm::scalar(
                    Residue(static_cast<std::int64_t>(g.order()) * r, ell));
                if (out != expected) {
                    return fail(name, "|G|=" + std::to_string(g.order()) +
                                          " r=" + std::to_string(r) +
                                          " ell=" + std::to_string(l));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_sym2_closed_form(Rng& rng) {
    const std::string name = "alpha2 on forms matches rank/det closed form";
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 200; ++trial) {
        Prime ell(ells[rng.below(5)]);
        const std::size_t n = rng.below(7); // r <= 6
        GramForm f = random_form(rng, n, ell);
        const GWClass lhs = class_of(alpha2_forms(f));
        const GWClass rhs = sym2_rank_det(
            static_cast<std::int64_t>(n),
            n == 0 ? 0 : square_class(f.determinant()), ell);
        if (lhs != rhs) {
            return fail(name, "trial " + std::to_string(trial) + ": " +
                                  gw_str(lhs) + " vs " + gw_str(rhs));
        }
    }
    return pass(name);
}

CheckResult check_fubini() {
    const std::string name = "iterated integrals = product-group integral";
    std::vector<FiniteGroup> groups;
    groups.push_back(FiniteGroup::cyclic(1));
    groups.push_back(FiniteGroup::cyclic(2));
    groups.push_back(FiniteGroup::cyclic(4));
    groups.push_back(FiniteGroup::product(FiniteGroup::cyclic(2),
                                          FiniteGroup::cyclic(2)));
    Rng rng(0x9c0ffee1u);
    for (std::uint32_t l : {3u, 5u, 11u, 13u}) {
        Prime ell(l);
        for (const FiniteGroup& g : groups) {
            for (const FiniteGroup& h : groups) {
                const std::size_t n = 1 + rng.below(2);
                GramForm f = random_form(rng, n, ell);
                const GramForm lhs = pushforward(
                    restrict_trivial(f, FiniteGroup::product(g, h)));
                const GramForm inner = pushforward(restrict_trivial(f, h));
                const GramForm rhs = pushforward(restrict_trivial(inner, g));
                if (lhs != rhs) {
                    return fail(name, "|G|=" + std::to_string(g.order()) +
                                          " |H|=" + std::to_string(h.order()) +
                                          " ell=" + std::to_string(l));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_integral_orderings(Rng& rng) {
    const std::string name =
        "sum_g b(gu, v) and sum_g b(gv, u) give the same Gram matrix";
    const std::vector<FiniteGroup> groups = small_two_groups();
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 100; ++trial) {
        const FiniteGroup& g = groups[rng.below(groups.size())];
        Prime ell(ells[rng.below(5)]);
        EquivariantForm ef = random_equivariant(rng, g, ell);
        const Coinvariants co = coinvariants(ef.rep());

        FpMatrix summed(ef.rep().dim(), ef.rep().dim(), ell);
        for (std::size_t e = 0; e < g.order(); ++e) {
            summed = summed + ef.rep().matrix(e);
        }
        const FpMatrix& b = ef.gram().matrix();
        const FpMatrix lhs = co.section.transposed() *
                             (summed.transposed() * b) * co.section;
        const FpMatrix rhs =
            co.section.transposed() * (b * summed) * co.section;
        if (lhs != rhs) {
            return fail(name, "trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_norm_map(Rng& rng) {
    const std::string name =
        "norm map lands in the fixed subspace and has full rank";
    const std::vector<FiniteGroup> groups = small_two_groups();
    const std::uint32_t ells[] = {3, 5, 7, 11, 13};
    for (int trial = 0; trial < 60; ++trial) {
        const FiniteGroup& g = groups[rng.below(groups.size())];
        Prime ell(ells[rng.below(5)]);
        EquivariantForm ef = random_equivariant(rng, g, ell);
        const FpMatrix nm = norm_map(ef.rep());
        for (std::size_t e = 0; e < g.order(); ++e) {
            if (ef.rep().matrix(e) * nm != nm) {
                return fail(name, "image not fixed, trial " +
                                      std::to_string(trial));
            }
        }
        if (nm.rank() != nm.cols()) {
            return fail(name, "norm map not injective, trial " +
                                  std::to_string(trial));
        }
    }
    return pass(name);
}

// ---- padic ----------------------------------------------------------------

CheckResult check_log_unit_homomorphism(Rng& rng) {
    const std::string name = "log_unit(uv) = log_unit(u) + log_unit(v)";
    for (int trial = 0; trial < 300; ++trial) {
        const PadicInt u = random_odd_unit(rng, 48);
        const PadicInt v = random_odd_unit(rng, 48);
        const PadicInt lhs = log_unit(u * v);
        const PadicInt rhs = log_unit(u) + log_unit(v);
        if (!lhs.equal_at(rhs, 40)) {
            return fail(name, "trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_log_power_rule(Rng& rng) {
    const std::string name = "log(x^m) = m log(x) for x = 1 mod 8";
    for (int trial = 0; trial < 60; ++trial) {
        BigInt v = random_bigint_below(rng, 2, 48);
        v = v - v % 8 + 1; // force x = 1 mod 8
        const PadicInt x(2, v, 48);
        const unsigned m = 1 + static_cast<unsigned>(rng.below(16));
        const PadicInt lhs = log_one_plus(x.pow(m));
        const PadicInt rhs = PadicInt(2, m, 48) * log_one_plus(x);
        if (lhs != rhs) {
            return fail(name, "trial " + std::to_string(trial) +
                                  " m=" + std::to_string(m));
        }
    }
    return pass(name);
}

CheckResult check_log_truncation_stability(Rng& rng) {
    const std::string name = "doubling working precision preserves digits";
    for (int trial = 0; trial < 100; ++trial) {
        const PadicInt u = random_odd_unit(rng, 48);
        const PadicInt wide(2, u.residue(), 96);
        const PadicInt narrow_log = log_unit(u);
        const PadicInt wide_log = log_unit(wide);
        if (!narrow_log.equal_at(wide_log, narrow_log.precision())) {
            return fail(name, "trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_fermat_valuation() {
    const std::string name = "v_p(x^p - x) >= 1 for all x mod p^3";
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const std::uint32_t cube = p * p * p;
        for (std::uint32_t x = 0; x < cube; ++x) {
            const PadicInt v(p, x, 3);
            if ((v.pow(p) - v).valuation() < 1) {
                return fail(name, "p=" + std::to_string(p) +
                                      " x=" + std::to_string(x));
            }
        }
    }
    return pass(name);
}

// ---- k1 -------------------------------------------------------------------

CheckResult check_nu_ring_homomorphism() {
    const std::string name = "nu is a ring homomorphism (|rank| <= 4)";
    std::vector<GWClass> elems;
    for (std::int64_t r = -4; r <= 4; ++r) {
        for (int d = 0; d <= 1; ++d) elems.push_back(GWClass{r, d});
    }
    for (std::uint32_t l : {3u, 5u, 11u, 13u}) {
        Prime ell(l);
        for (GWClass x : elems) {
            for (GWClass y : elems) {
                if (nu(x + y, ell) != nu(x, ell) + nu(y, ell)) {
                    return fail(name, "additive " + gw_str(x) + "+" + gw_str(y));
                }
                if (nu(x * y, ell) != nu(x, ell) * nu(y, ell)) {
                    return fail(name, "multiplicative " + gw_str(x) + "*" +
                                          gw_str(y));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_commuting_square() {
    const std::string name =
        "nu . class . alpha2_forms = alpha . nu . class (rank <= 5)";
    for (std::uint32_t l : {3u, 5u, 11u, 13u}) {
        Prime ell(l);
        const Residue one(1, ell);
        const Residue ns = smallest_nonsquare(ell);
        for (std::size_t rank = 1; rank <= 5; ++rank) {
            for (std::uint32_t mask = 0; mask < (1u << rank); ++mask) {
                std::vector<Residue> diag;
                for (std::size_t i = 0; i < rank; ++i) {
                    diag.push_back((mask >> i) & 1 ? ns : one);
                }
                const GramForm f = GramForm::diagonal(diag, ell);
                const K1Element lhs = nu(class_of(alpha2_forms(f)), ell);
                const SphereElement rhs =
                    alpha(SphereElement(nu(class_of(f), ell)));
                if (SphereElement(lhs) != rhs) {
                    return fail(name, "ell=" + std::to_string(l) + " mask=" +
                                          std::to_string(mask) + " rank=" +
                                          std::to_string(rank));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_functional_equation(Rng& rng) {
    const std::string name =
        "alpha(x+y) - alpha(x) - alpha(y) = functional_defect(x,y)";
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 500; ++trial) {
            const SphereElement x = random_sphere(rng, p, 48);
            const SphereElement y = random_sphere(rng, p, 48);
            const SphereElement lhs = alpha(x + y) - alpha(x) - alpha(y);
            const SphereElement rhs = functional_defect(x, y);
            if (lhs != rhs) {
                return fail(name, "p=" + std::to_string(p) + " x=" +
                                      sphere_str(x) + " y=" + sphere_str(y));
            }
        }
    }
    return pass(name);
}

CheckResult check_delta_theta_forms(Rng& rng) {
    const std::string name = "delta/theta closed forms = definitional composites";
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 500; ++trial) {
            const SphereElement x = random_sphere(rng, p, 48);
            if (delta(x) != delta_definitional(x)) {
                return fail(name, "delta, p=" + std::to_string(p) + " x=" +
                                      sphere_str(x));
            }
            if (theta(x) != theta_definitional(x)) {
                return fail(name, "theta, p=" + std::to_string(p) + " x=" +
                                      sphere_str(x));
            }
            if (p == 2) {
                // delta2 = theta + d eps on r + d eps.
                const SphereElement eps_part(K1Element(
                    PadicInt(2, 0, x.precision()), x.two_part().d()));
                if (delta(x) != theta(x) + eps_part) {
                    return fail(name, "delta - theta != d eps, x=" +
                                          sphere_str(x));
                }
            }
        }
    }
    return pass(name);
}

CheckResult check_cardinality_multiplicative(Rng& rng) {
    const std::string name = "|A x B| = |A| |B| for connected spaces";
    for (int trial = 0; trial < 100; ++trial) {
        const std::uint32_t p = trial % 2 == 0 ? 2u : 3u;
        const PiFiniteSpace a = random_connected_space(rng, p);
        const PiFiniteSpace b = random_connected_space(rng, p);
        const SphereElement lhs = k1_cardinality(product_connected(a, b));
        const SphereElement rhs = k1_cardinality(a) * k1_cardinality(b);
        if (lhs != rhs) {
            return fail(name, "trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_alpha_wreath(Rng& rng) {
    const std::string name = "alpha(|A|) = |A wr C_2| (30 random spaces)";
    for (int trial = 0; trial < 30; ++trial) {
        const PiFiniteSpace a = random_connected_space(rng, 2);
        const SphereElement lhs = alpha(k1_cardinality(a));
        const SphereElement rhs(wreath_c2_cardinality(a));
        if (lhs != rhs) {
            return fail(name, "trial " + std::to_string(trial));
        }
    }
    return pass(name);
}

CheckResult check_rezk_log_additive(Rng& rng) {
    const std::string name = "rezk_log(xy) = rezk_log(x) + rezk_log(y)";
    const unsigned prec = 48;
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 100; ++trial) {
            const SphereElement x = random_sphere_unit(rng, p, prec);
            const SphereElement y = random_sphere_unit(rng, p, prec);
            const SphereElement lhs = rezk_log(x * y);
            const SphereElement rhs = rezk_log(x) + rezk_log(y);
            bool ok;
            if (p == 2) {
                ok = lhs.two_part().a().equal_at(rhs.two_part().a(), prec - 4) &&
                     lhs.two_part().d() == rhs.two_part().d();
            } else {
                ok = lhs.odd_part().equal_at(rhs.odd_part(), prec - 4);
            }
            if (!ok) {
                return fail(name, "p=" + std::to_string(p) + " trial " +
                                      std::to_string(trial));
            }
        }
    }
    return pass(name);
}

CheckResult check_rezk_log_torsion() {
    const std::string name = "rezk_log kills the torsion units";
    const unsigned prec = kDefaultPrecision;
    struct Case {
        BigInt a;
        int d;
        int expected_d;
    };
    // Torsion subgroup of the unit group: {1, -1, 1+e, -1+e}.
    const Case cases[] = {
        {1, 0, 0},  // log(1) = 0
        {-1, 0, 1}, // log(-1) = eps ((r-1)/2 = -1, odd)
        {1, 1, 0},  // log(1+e) = 0: 1+e is a strict unit
        {-1, 1, 1}, // log(-1+e) = log(-1)
    };
    for (const Case& c : cases) {
        const SphereElement x(K1Element(PadicInt(2, c.a, prec), c.d));
        const SphereElement out = rezk_log(x);
        if (!out.two_part().a().is_zero()) {
            return fail(name, "nonzero Z2-part at a=" + c.a.str() +
                                  " d=" + std::to_string(c.d));
        }
        if (out.two_part().d() != c.expected_d) {
            return fail(name, "wrong eps-part at a=" + c.a.str() +
                                  " d=" + std::to_string(c.d));
        }
    }
    return pass(name);
}

} // namespace

SuiteResult run_fields_suite(std::uint64_t /*seed*/) {
    SuiteResult s{"fields", {}};
    s.checks.push_back(check_square_class_multiplicative());
    s.checks.push_back(check_euler_vs_enumeration());
    s.checks.push_back(check_two_nonsquare_rule());
    return s;
}

SuiteResult run_forms_suite(std::uint64_t seed) {
    SuiteResult s{"forms", {}};
    Rng rng(seed ^ 0xf0121u);
    s.checks.push_back(check_diagonalize_soundness(rng));
    s.checks.push_back(check_class_homomorphism(rng));
    s.checks.push_back(check_equivalence_oracle_small());
    s.checks.push_back(check_equivalence_oracle_dim3(rng));
    s.checks.push_back(check_gwclass_ring_axioms());
    return s;
}

SuiteResult run_equivariant_suite(std::uint64_t seed) {
    SuiteResult s{"equivariant", {}};
    Rng rng(seed ^ 0xe9421u);
    s.checks.push_back(check_pushforward_well_defined(rng));
    s.checks.push_back(check_pushforward_constant());
    s.checks.push_back(check_sym2_closed_form(rng));
    s.checks.push_back(check_fubini());
    s.checks.push_back(check_integral_orderings(rng));
    s.checks.push_back(check_norm_map(rng));
    return s;
}

SuiteResult run_padic_suite(std::uint64_t seed) {
    SuiteResult s{"padic", {}};
    Rng rng(seed ^ 0x9ad1cu);
    s.checks.push_back(check_log_unit_homomorphism(rng));
    s.checks.push_back(check_log_power_rule(rng));
    s.checks.push_back(check_log_truncation_stability(rng));
    s.checks.push_back(check_fermat_valuation());
    return s;
}

SuiteResult run_k1_suite(std::uint64_t seed) {
    SuiteResult s{"k1", {}};
    Rng rng(seed ^ 0x5013e7u);
    s.checks.push_back(check_nu_ring_homomorphism());
    s.checks.push_back(check_commuting_square());
    s.checks.push_back(check_functional_equation(rng));
    s.checks.push_back(check_delta_theta_forms(rng));
    s.checks.push_back(check_cardinality_multiplicative(rng));
    s.checks.push_back(check_alpha_wreath(rng));
    s.checks.push_back(check_rezk_log_additive(rng));
    s.checks.push_back(check_rezk_log_torsion());
    return s;
}

std::vector<std::string> suite_names() {
    return {"fields", "forms", "equivariant", "padic", "k1"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "fields") return run_fields_suite(seed);
    if (name == "forms") return run_forms_suite(seed);
    if (name == "equivariant") return run_equivariant_suite(seed);
    if (name == "padic") return run_padic_suite(seed);
    if (name == "k1") return run_k1_suite(seed);
    throw precondition_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_all(std::uint64_t seed) {
    std::vector<SuiteResult> out;
    for (const std::string& n : suite_names()) {
        out.push_back(run_suite(n, seed));
    }
    return out;
}

} // namespace k1witt::verify
