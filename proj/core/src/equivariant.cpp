#include "k1witt/equivariant.hpp"

#include <string>

namespace k1witt {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) {
    order_ = table.size();
    if (order_ == 0) {
        throw precondition_error("group table is empty");
    }
    table_.reserve(order_ * order_);
    for (const auto& row : table) {
        if (row.size() != order_) {
            throw precondition_error("group table is not square");
        }
        for (std::size_t v : row) {
            if (v >= order_) {
                throw precondition_error("group table entry out of range");
            }
            table_.push_back(v);
        }
    }

    // Identity: the unique e with e*a = a*e = a for all a.
    bool found = false;
    for (std::size_t e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < order_ && ok; ++a) {
            ok = mul(e, a) == a && mul(a, e) == a;
        }
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found) {
        throw precondition_error("table has no identity element");
    }

    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
            for (std::size_t c = 0; c < order_; ++c) {
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    throw precondition_error("table is not associative");
                }
            }
        }
    }

    inverse_.assign(order_, order_);
    for (std::size_t a = 0; a < order_; ++a) {
        for (std::size_t b = 0; b < order_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] == order_) {
            throw precondition_error("table element has no inverse");
        }
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
        throw precondition_error("cyclic group order must be positive");
    }
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(table));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& g, const FiniteGroup& h) {
    const std::size_t n = g.order(), m = h.order();
    std::vector<std::vector<std::size_t>> table(n * m,
                                                std::vector<std::size_t>(n * m));
    // Pair (a, b) is encoded as a*m + b.
    for (std::size_t a1 = 0; a1 < n; ++a1) {
        for (std::size_t b1 = 0; b1 < m; ++b1) {
            for (std::size_t a2 = 0; a2 < n; ++a2) {
                for (std::size_t b2 = 0; b2 < m; ++b2) {
                    table[a1 * m + b1][a2 * m + b2] =
                        g.mul(a1, a2) * m + h.mul(b1, b2);
                }
            }
        }
    }
    return FiniteGroup(std::move(table));
}

bool FiniteGroup::is_p_group(std::uint32_t p) const {
    if (p < 2) return false;
    std::size_t n = order_;
    while (n % p == 0) n /= p;
    return n == 1;
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain,
                   std::vector<std::size_t> images)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      images_(std::move(images)) {
    if (images_.size() != domain_.order()) {
        throw precondition_error("homomorphism image list has wrong length");
    }
    for (std::size_t v : images_) {
        if (v >= codomain_.order()) {
            throw precondition_error("homomorphism image out of range");
        }
    }
    for (std::size_t a = 0; a < domain_.order(); ++a) {
        for (std::size_t b = 0; b < domain_.order(); ++b) {
            if (codomain_.mul(images_[a], images_[b]) !=
                images_[domain_.mul(a, b)]) {
                throw precondition_error("map is not a homomorphism");
            }
        }
    }
}

Representation::Representation(FiniteGroup group,
                               std::vector<FpMatrix> matrices)
    : group_(std::move(group)), matrices_(std::move(matrices)) {
    if (matrices_.size() != group_.order()) {
        throw precondition_error("representation needs one matrix per element");
    }
    const std::size_t n = matrices_.front().rows();
    const Prime ell = matrices_.front().field();
    for (const auto& m : matrices_) {
        if (m.rows() != n || m.cols() != n || m.field() != ell) {
            throw precondition_error("representation matrices have mixed shape");
        }
    }
    if (matrices_[group_.identity()] != FpMatrix::identity(n, ell)) {
        throw precondition_error("identity element must act as the identity");
    }
    // rho(g) rho(h) = rho(gh) for all pairs; together with rho(e) = I this
    // gives rho(g) rho(g^-1) = I, so each matrix is invertible.
    for (std::size_t g = 0; g < group_.order(); ++g) {
        for (std::size_t h = 0; h < group_.order(); ++h) {
            if (matrices_[g] * matrices_[h] != matrices_[group_.mul(g, h)]) {
                throw precondition_error("matrices do not respect the group law");
            }
        }
    }
}

Representation Representation::trivial(const FiniteGroup& g, std::size_t dim,
                                       Prime ell) {
    std::vector<FpMatrix> mats(g.order(), FpMatrix::identity(dim, ell));
    return Representation(g, std::move(mats));
}

EquivariantForm::EquivariantForm(Representation rep, GramForm gram)
    : rep_(std::move(rep)), gram_(std::move(gram)) {
    if (rep_.field() != gram_.field() || rep_.dim() != gram_.dim()) {
        throw precondition_error("action and form have mismatched shape");
    }
    for (std::size_t g = 0; g < rep_.group().order(); ++g) {
        const FpMatrix& rho = rep_.matrix(g);
        if (rho.transposed() * gram_.matrix() * rho != gram_.matrix()) {
            throw precondition_error("form is not invariant under the action");
        }
    }
}

Coinvariants coinvariants(const Representation& rep) {
    const std::size_t n = rep.dim();
    const Prime ell = rep.field();
    const std::size_t ord = rep.group().order();

    // Columns of relations: (rho(g) - I) e_j for all g, j.
    FpMatrix relations(n, n * ord, ell);
    for (std::size_t g = 0; g < ord; ++g) {
        const FpMatrix diff = rep.matrix(g) - FpMatrix::identity(n, ell);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                relations.set(i, g * n + j, diff.at(i, j));
            }
        }
    }

    // Row space of relations^T = column space of relations.
    FpEchelon ech = relations.transposed().row_echelon();
    const std::size_t k = ech.pivot_cols.size();

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    const std::size_t q = free_cols.size(); // dim V_G

    // Projection: reduce e_j by the echelon rows, then read off the free
    // coordinates.  Because the echelon rows have unit pivots and zeros
    // above/below, reduction just subtracts r-th row times e_j[pivot].
    FpMatrix projection(q, n, ell);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Residue> v(n, Residue(0, ell));
        v[j] = Residue(1, ell);
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t pc = ech.pivot_cols[r];
            const Residue coeff = v[pc];
            if (coeff.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                v[c] = v[c] - coeff * ech.reduced.at(r, c);
            }
        }
        for (std::size_t t = 0; t < q; ++t) projection.set(t, j, v[free_cols[t]]);
    }

    FpMatrix section(n, q, ell);
    for (std::size_t t = 0; t < q; ++t) {
        section.set(free_cols[t], t, Residue(1, ell));
    }
    return Coinvariants{std::move(projection), std::move(section)};
}

namespace {

FpMatrix group_sum(const Representation& rep) {
    const std::size_t n = rep.dim();
    FpMatrix sum(n, n, rep.field());
    for (std::size_t g = 0; g < rep.group().order(); ++g) {
        sum = sum + rep.matrix(g);
    }
    return sum;
}

} // namespace

FpMatrix norm_map(const Representation& rep) {
    return group_sum(rep) * coinvariants(rep).section;
}

GramForm pushforward_with_section(const EquivariantForm& ef,
                                  const FpMatrix& section) {
    const Representation& rep = ef.rep();
    const std::uint32_t ord = static_cast<std::uint32_t>(rep.group().order());
    if (ord % rep.field().value() == 0) {
        throw precondition_error(
            "group order divisible by the characteristic; integral refused");
    }
    // sum_g b(rho(g) s_i, s_j) = (S^T (sum_g rho(g))^T B S)_{ij}.
    const FpMatrix summed =
        group_sum(rep).transposed() * ef.gram().matrix();
    return GramForm(section.transposed() * summed * section);
}

GramForm pushforward(const EquivariantForm& ef) {
    return pushforward_with_section(ef, coinvariants(ef.rep()).section);
}

EquivariantForm restrict_trivial(const GramForm& f, const FiniteGroup& g) {
    return EquivariantForm(Representation::trivial(g, f.dim(), f.field()), f);
}

EquivariantForm restrict_hom(const EquivariantForm& ef, const GroupHom& phi) {
    if (!(phi.codomain() == ef.rep().group())) {
        throw precondition_error("homomorphism codomain is not the acting group");
    }
    std::vector<FpMatrix> mats;
    mats.reserve(phi.domain().order());
    for (std::size_t h = 0; h < phi.domain().order(); ++h) {
        mats.push_back(ef.rep().matrix(phi.apply(h)));
    }
    return EquivariantForm(Representation(phi.domain(), std::move(mats)),
                           ef.gram());
}

GramForm forget(const EquivariantForm& ef) { return ef.gram(); }

GWClass cardinality_via_forms(const FiniteGroup& g, Prime ell) {
    const GramForm unit = GramForm::scalar(Residue(1, ell));
    return class_of(pushforward(restrict_trivial(unit, g)));
}

EquivariantForm total_square(const GramForm& f) {
    const std::size_t n = f.dim();
    const Prime ell = f.field();
    FpMatrix swap(n * n, n * n, ell);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            swap.set(i * n + j, j * n + i, Residue(1, ell));
        }
    }
    FiniteGroup c2 = FiniteGroup::cyclic(2);
    Representation rep(c2, {FpMatrix::identity(n * n, ell), std::move(swap)});
    return EquivariantForm(std::move(rep),
                           GramForm(f.matrix().kronecker(f.matrix())));
}

GramForm alpha2_forms(const GramForm& f) {
    return pushforward(total_square(f));
}

GWClass sym2_rank_det(std::int64_t r, int d, Prime ell) {
    if (r < 0) {
        throw precondition_error("closed form needs a nonnegative rank");
    }
    const std::int64_t rank = r * (r + 1) / 2;
    const int two_class = square_class(Residue(2, ell));
    const int e = static_cast<int>((r * two_class + (r - 1) * d) & 1);
    return GWClass{rank, e};
}

} // namespace k1witt
