#pragma once

#include "k1witt/forms.hpp"

#include <cstddef>
#include <vector>

namespace k1witt {

/// A finite group given by its multiplication table over element indices
/// 0..order-1.  The table is checked to be an honest group law (identity,
/// associativity, inverses) at construction.  Presentation-free on purpose:
/// integration only ever runs over small 2-groups.
class FiniteGroup {
public:
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup product(const FiniteGroup& g, const FiniteGroup& h);

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const {
        return table_[a * order_ + b];
    }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    bool is_p_group(std::uint32_t p) const;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table_ == b.table_;
    }

private:
    std::size_t order_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> table_; // row-major order x order
    std::vector<std::size_t> inverse_;
};

/// A table-level homomorphism H -> G, verified elementwise.
class GroupHom {
public:
    GroupHom(FiniteGroup domain, FiniteGroup codomain,
             std::vector<std::size_t> images);

    const FiniteGroup& domain() const { return domain_; }
    const FiniteGroup& codomain() const { return codomain_; }
    std::size_t apply(std::size_t h) const { return images_[h]; }

private:
    FiniteGroup domain_;
    FiniteGroup codomain_;
    std::vector<std::size_t> images_;
};

/// G acting on F_ell^n by invertible matrices, one per element index.
/// rho(identity) = I and rho(gh) = rho(g) rho(h) are verified over all
/// pairs, which also forces invertibility.
class Representation {
public:
    Representation(FiniteGroup group, std::vector<FpMatrix> matrices);

    static Representation trivial(const FiniteGroup& g, std::size_t dim,
                                  Prime ell);

    const FiniteGroup& group() const { return group_; }
    Prime field() const { return matrices_.front().field(); }
    std::size_t dim() const { return matrices_.front().rows(); }
    const FpMatrix& matrix(std::size_t g) const { return matrices_[g]; }

private:
    FiniteGroup group_;
    std::vector<FpMatrix> matrices_;
};

/// A representation together with an invariant nondegenerate symmetric
/// bilinear form: rho(g)^T B rho(g) = B for every g (verified).
class EquivariantForm {
public:
    EquivariantForm(Representation rep, GramForm gram);

    const Representation& rep() const { return rep_; }
    const GramForm& gram() const { return gram_; }

private:
    Representation rep_;
    GramForm gram_;
};

/// Quotient data for V_G = V / span{rho(g)v - v}: a full-row-rank
/// projection q and a section s with q s = id.  The section embeds the
/// echelon-complement coordinates, so the output is deterministic.
struct Coinvariants {
    FpMatrix projection; // dim V_G x n
    FpMatrix section;    // n x dim V_G
};

Coinvariants coinvariants(const Representation& rep);

/// The map V_G -> V^G induced by v -> sum_g rho(g) v, returned on the
/// canonical section (an n x dim V_G matrix).  An isomorphism onto the
/// fixed subspace whenever |G| is invertible in F_ell.
FpMatrix norm_map(const Representation& rep);

/// Integration over BG: the form on the coinvariants V_G with Gram entries
///   sum_g b(rho(g) s_i, s_j)
/// for section representatives s_i.  Refused when ell divides |G|.
GramForm pushforward(const EquivariantForm& ef);

/// Same integral evaluated on caller-supplied section representatives
/// (columns of `section`); used to check independence of the choice.
GramForm pushforward_with_section(const EquivariantForm& ef,
                                  const FpMatrix& section);

/// A plain form viewed as equivariant for the trivial G-action.
EquivariantForm restrict_trivial(const GramForm& f, const FiniteGroup& g);

/// Precompose the action with a homomorphism phi : H -> G.
EquivariantForm restrict_hom(const EquivariantForm& ef, const GroupHom& phi);

/// Drop the action.
GramForm forget(const EquivariantForm& ef);

/// The class of integrating the unit form over BG:
/// class_of(pushforward(restrict_trivial(<1>, G))).
GWClass cardinality_via_forms(const FiniteGroup& g, Prime ell);

/// The C_2-equivariant square (V tensor V, b tensor b) with the
/// factor-swap action.
EquivariantForm total_square(const GramForm& f);

/// Integration of the total square over BC_2: the induced form on Sym^2 V.
GramForm alpha2_forms(const GramForm& f);

/// Closed form for the class of alpha2_forms on a form of rank r and
/// determinant class d:  rank C(r+1,2), determinant class 2^r det^(r-1).
GWClass sym2_rank_det(std::int64_t r, int d, Prime ell);

} // namespace k1witt
