#include "k1witt/forms.hpp"

#include <string>

namespace k1witt {

GramForm::GramForm(FpMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) {
        throw precondition_error("Gram matrix must be square");
    }
    if (!gram_.is_symmetric()) {
        throw precondition_error("Gram matrix is not symmetric");
    }
    if (gram_.determinant().is_zero()) {
        throw precondition_error("Gram matrix is degenerate");
    }
}

GramForm GramForm::diagonal(const std::vector<Residue>& entries, Prime ell) {
    FpMatrix m(entries.size(), entries.size(), ell);
    for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
    return GramForm(std::move(m));
}

GramForm GramForm::scalar(Residue r) {
    return diagonal({r}, r.field());
}

namespace {

// Basis operations tracked as columns of P, keeping P^T B0 P = B.
struct CongruenceState {
    FpMatrix b;
    FpMatrix p;

    void swap_vectors(std::size_t i, std::size_t j) {
        if (i == j) return;
        const std::size_t n = b.rows();
        for (std::size_t t = 0; t < n; ++t) {
            Residue tmp = b.at(t, i);
            b.set(t, i, b.at(t, j));
            b.set(t, j, tmp);
        }
        for (std::size_t t = 0; t < n; ++t) {
            Residue tmp = b.at(i, t);
            b.set(i, t, b.at(j, t));
            b.set(j, t, tmp);
        }
        for (std::size_t t = 0; t < n; ++t) {
            Residue tmp = p.at(t, i);
            p.set(t, i, p.at(t, j));
            p.set(t, j, tmp);
        }
    }

    // v_i += f * v_j
    void add_multiple(std::size_t i, std::size_t j, Residue f) {
        const std::size_t n = b.rows();
        for (std::size_t t = 0; t < n; ++t) {
            b.set(t, i, b.at(t, i) + f * b.at(t, j));
        }
        for (std::size_t t = 0; t < n; ++t) {
            b.set(i, t, b.at(i, t) + f * b.at(j, t));
        }
        for (std::size_t t = 0; t < n; ++t) {
            p.set(t, i, p.at(t, i) + f * p.at(t, j));
        }
    }
};

} // namespace

Diagonalization diagonalize(const GramForm& f) {
    const std::size_t n = f.dim();
    const Prime ell = f.field();
    CongruenceState st{f.matrix(), FpMatrix::identity(n, ell)};
    const Residue one(1, ell);

    for (std::size_t k = 0; k < n; ++k) {
        if (st.b.at(k, k).is_zero()) {
            std::size_t j = k + 1;
            while (j < n && st.b.at(j, j).is_zero()) ++j;
            if (j < n) {
                st.swap_vectors(k, j);
            } else {
                // All trailing diagonal entries vanish; pick b(v_i, v_j)
                // nonzero and replace v_i by v_i + v_j, whose square is
                // 2 b(v_i, v_j) != 0 in odd characteristic.
                bool fixed = false;
                for (std::size_t i = k; i < n && !fixed; ++i) {
                    for (std::size_t jj = i + 1; jj < n && !fixed; ++jj) {
                        if (!st.b.at(i, jj).is_zero()) {
                            st.add_multiple(i, jj, one);
                            st.swap_vectors(k, i);
                            fixed = true;
                        }
                    }
                }
                if (!fixed) {
                    // Unreachable for a nondegenerate form.
                    throw precondition_error("degenerate block during diagonalization");
                }
            }
        }
        const Residue pivot_inv = st.b.at(k, k).inverse();
        for (std::size_t j = k + 1; j < n; ++j) {
            const Residue c = st.b.at(k, j);
            if (c.is_zero()) continue;
            st.add_multiple(j, k, -(c * pivot_inv));
        }
    }

    Diagonalization out{{}, std::move(st.p)};
    out.diagonal.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.diagonal.push_back(st.b.at(k, k));
    return out;
}

GWClass class_of(const GramForm& f) {
    const std::size_t n = f.dim();
    if (n == 0) return GWClass{0, 0};
    return GWClass{static_cast<std::int64_t>(n), square_class(f.determinant())};
}

GramForm direct_sum(const GramForm& f, const GramForm& g) {
    if (f.field() != g.field()) {
        throw precondition_error("direct sum over different fields");
    }
    const std::size_t n = f.dim(), m = g.dim();
    FpMatrix out(n + m, n + m, f.field());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, f.matrix().at(i, j));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out.set(n + i, n + j, g.matrix().at(i, j));
        }
    }
    return GramForm(std::move(out));
}

GramForm tensor(const GramForm& f, const GramForm& g) {
    if (f.field() != g.field()) {
        throw precondition_error("tensor product over different fields");
    }
    return GramForm(f.matrix().kronecker(g.matrix()));
}

bool equivalent(const GramForm& f, const GramForm& g) {
    if (f.field() != g.field()) {
        throw precondition_error("equivalence over different fields");
    }
    if (f.dim() != g.dim()) return false;
    if (f.dim() == 0) return true;
    return square_class(f.determinant()) == square_class(g.determinant());
}

namespace {

// Counts |{v : v^T B v = c}| for every c, indexed by c.
std::vector<std::uint64_t> value_counts(const GramForm& f) {
    const std::uint32_t ell = f.field().value();
    const std::size_t n = f.dim();
    std::vector<std::uint64_t> counts(ell, 0);
    std::vector<std::uint32_t> v(n, 0);
    const auto& b = f.matrix();
    for (;;) {
        std::uint64_t q = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            std::uint64_t row = 0;
            for (std::size_t j = 0; j < n; ++j) {
                row += std::uint64_t(b.at(i, j).value()) * v[j] % ell;
            }
            q += v[i] * (row % ell) % ell;
        }
        ++counts[q % ell];
        std::size_t i = 0;
        while (i < n && ++v[i] == ell) v[i++] = 0;
        if (i == n) break;
    }
    return counts;
}

// Flat-array scan over all candidate matrices (n <= 2), cheap enough to
// run over every form pair in the exhaustive suites.
bool exhaustive_congruent(const GramForm& f, const GramForm& g) {
    const std::uint64_t ell = f.field().value();
    const std::size_t n = f.dim();
    std::vector<std::uint64_t> fm(n * n), gm(n * n), p(n * n, 0), scratch(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            fm[i * n + j] = f.matrix().at(i, j).value();
            gm[i * n + j] = g.matrix().at(i, j).value();
        }
    }
    for (;;) {
        const bool invertible =
            n == 1 ? p[0] != 0
                   : (p[0] * p[3] % ell + ell - p[1] * p[2] % ell) % ell != 0;
        if (invertible) {
            // scratch = F P, then compare P^T scratch with G.
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        acc += fm[i * n + k] * p[k * n + j] % ell;
                    }
                    scratch[i * n + j] = acc % ell;
                }
            }
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i) {
                for (std::size_t j = 0; j < n && match; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t k = 0; k < n; ++k) {
                        acc += p[k * n + i] * scratch[k * n + j] % ell;
                    }
                    match = acc % ell == gm[i * n + j];
                }
            }
            if (match) return true;
        }
        std::size_t idx = 0;
        while (idx < p.size() && ++p[idx] == ell) p[idx++] = 0;
        if (idx == p.size()) break;
    }
    return false;
}

} // namespace

bool brute_force_equivalent(const GramForm& f, const GramForm& g) {
    if (f.field() != g.field()) {
        throw precondition_error("equivalence over different fields");
    }
    if (f.dim() != g.dim()) return false;
    const std::size_t n = f.dim();
    const std::uint32_t ell = f.field().value();
    if (n == 0) return true;
    if (n <= 2) {
        if (ell > 7) {
            throw precondition_error(
                "exhaustive GL search limited to ell <= 7, got ell = " +
                std::to_string(ell));
        }
        return exhaustive_congruent(f, g);
    }
    if (n == 3) {
        if (ell > 31) {
            throw precondition_error(
                "value-count oracle limited to ell <= 31, got ell = " +
                std::to_string(ell));
        }
        return value_counts(f) == value_counts(g);
    }
    throw precondition_error("brute-force equivalence limited to dim <= 3");
}

} // namespace k1witt
