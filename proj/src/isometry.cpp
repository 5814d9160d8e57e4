#include "hposet/isometry.hpp"

#include <string>

#include "hposet/error.hpp"

namespace hposet {

TriangularMap::TriangularMap(const Poset& p, FqMatrix u) : u_(std::move(u)) {
    const std::size_t n = p.size();
    if (u_.rows() != n || u_.cols() != n) throw InputError("triangular map must be n x n");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && u_.at(i, j) == 0) throw InputError("triangular map has a zero diagonal entry");
            if (u_.at(i, j) != 0 && !p.leq(i, j)) {
                throw InputError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                                 ") is nonzero but " + std::to_string(i + 1) + " is not below " +
                                 std::to_string(j + 1));
            }
        }
    }
}

TriangularMap TriangularMap::identity(PrimeField field, std::size_t n) {
    return TriangularMap(FqMatrix::identity(field, n));
}

LinearIsometry::LinearIsometry(const Poset& p, Permutation phi, TriangularMap tri)
    : phi_(std::move(phi)), tri_(std::move(tri)) {
    if (!is_automorphism(p, phi_)) throw InputError("permutation is not a poset automorphism");
    if (tri_.matrix().rows() != p.size()) throw InputError("triangular part has the wrong size");
}

LinearIsometry LinearIsometry::identity(PrimeField field, std::size_t n) {
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    return LinearIsometry(std::move(id), TriangularMap::identity(field, n));
}

FqVector LinearIsometry::apply(const FqVector& v) const {
    if (v.size() != dimension()) throw InputError("dimension mismatch applying an isometry");
    const FqVector w = tri_.apply(v);
    FqVector out(v.field(), v.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.set(phi_[i], w[i]);
    return out;
}

FqMatrix LinearIsometry::dense() const {
    const std::size_t n = dimension();
    FqMatrix out(field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const FqVector col = apply(FqVector::unit(field(), n, j));
        for (std::size_t i = 0; i < n; ++i) out.set(i, j, col[i]);
    }
    return out;
}

LinearIsometry compose(const Poset& p, const LinearIsometry& outer, const LinearIsometry& inner) {
    // Phi_a U_a Phi_b U_b = Phi_a Phi_b (Phi_b^-1 U_a Phi_b) U_b, and the conjugate has entries
    // U_a[phi_b(k)][phi_b(j)].
    const std::size_t n = p.size();
    const auto& ua = outer.triangular().matrix();
    const auto& pb = inner.automorphism();
    FqMatrix conj(ua.field(), n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) conj.set(k, j, ua.at(pb[k], pb[j]));
    Permutation phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = outer.automorphism()[pb[i]];
    return LinearIsometry(p, std::move(phi), TriangularMap(p, conj * inner.triangular().matrix()));
}

LinearCode apply(const LinearIsometry& t, const LinearCode& c) {
    std::vector<FqVector> rows;
    for (std::size_t r = 0; r < c.dimension(); ++r) rows.push_back(t.apply(c.generator().row(r)));
    return LinearCode(c.field(), c.length(), rows);
}

BigInt group_order(const Poset& p, const PrimeField& field) {
    const BigInt q = field.order();
    BigInt order = automorphisms(p).size();
    for (std::size_t j = 0; j < p.size(); ++j) {
        order *= q - 1;
        order *= boost::multiprecision::pow(q, static_cast<unsigned>(p.down_set(j).size() - 1));
    }
    return order;
}

void for_each_isometry(const Poset& p, const PrimeField& field,
                       const std::function<bool(const LinearIsometry&)>& visit) {
    const std::size_t n = p.size();
    const unsigned q = field.order();

    struct Slot {
        std::size_t row;
        std::size_t col;
        bool diagonal;
    };
    std::vector<Slot> slots;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i : p.down_set(j)) slots.push_back({i, j, i == j});

    const auto autos = automorphisms(p);
    for (const auto& phi : autos) {
        FqMatrix u(field, n, n);
        for (const auto& s : slots) u.set(s.row, s.col, s.diagonal ? 1 : 0);
        for (;;) {
            if (!visit(LinearIsometry(phi, TriangularMap(u)))) return;
            std::size_t k = slots.size();
            bool carried_out = true;
            while (k > 0) {
                --k;
                const Slot& s = slots[k];
                const unsigned v = u.at(s.row, s.col) + 1;
                if (v < q) {
                    u.set(s.row, s.col, static_cast<Residue>(v));
                    carried_out = false;
                    break;
                }
                u.set(s.row, s.col, s.diagonal ? 1 : 0);
            }
            if (carried_out) break;
        }
    }
}

std::vector<LinearIsometry> enumerate_group(const Poset& p, const PrimeField& field) {
    if (group_order(p, field) > kMaxGroupOrder) {
        throw CapacityError("GL_P(F_q) has more than 2^20 elements; refusing to enumerate it");
    }
    std::vector<LinearIsometry> out;
    for_each_isometry(p, field, [&](const LinearIsometry& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

CleanedVector clean_vector(const Poset& p, const FqVector& u) {
    const std::size_t n = p.size();
    if (u.size() != n) throw InputError("dimension mismatch cleaning a vector");
    const PrimeField& f = u.field();
    const ElementSet supp = u.support();
    const ElementSet maximal = p.maximal_elements(supp);

    // Column s of U cancels the non-maximal entries assigned to the maximal element s.
    FqMatrix mat = FqMatrix::identity(f, n);
    for (std::size_t i : supp - maximal) {
        for (std::size_t s : maximal) {
            if (!p.less(i, s)) continue;
            mat.set(i, s, f.neg(f.div(u[i], u[s])));
            break;
        }
    }
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    LinearIsometry t(p, std::move(id), TriangularMap(p, std::move(mat)));
    FqVector cleaned = t.apply(u);
    return {std::move(t), std::move(cleaned)};
}

std::optional<LinearIsometry> codes_equivalent(const Poset& p, const LinearCode& c, const LinearCode& c2) {
    if (c.length() != p.size() || c2.length() != p.size()) throw InputError("code length does not match the poset");
    if (c.dimension() != c2.dimension()) return std::nullopt;
    if (group_order(p, c.field()) > kMaxGroupOrder) {
        throw CapacityError("GL_P(F_q) has more than 2^20 elements; equivalence search skipped");
    }
    std::optional<LinearIsometry> witness;
    for_each_isometry(p, c.field(), [&](const LinearIsometry& t) {
        if (apply(t, c) == c2) {
            witness = t;
            return false;
        }
        return true;
    });
    return witness;
}

}  // namespace hposet
