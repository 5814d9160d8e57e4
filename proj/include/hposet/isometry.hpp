#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hposet/code.hpp"
#include "hposet/gfq.hpp"
#include "hposet/numbers.hpp"
#include "hposet/poset.hpp"

namespace hposet {

/// Largest group order enumerate_group / codes_equivalent will walk through.
inline constexpr std::uint64_t kMaxGroupOrder = std::uint64_t{1} << 20;

class LinearIsometry;

/**
 * Linear map T_U(e_j) = sum over i <= j of u_ij e_i.
 *
 * The diagonal is nonzero and u_ij vanishes unless i <= j in the poset, which makes T_U an
 * isometry of the poset metric.
 */
class TriangularMap {
public:
    /// Validates the support pattern against `p`; throws InputError when it does not fit.
    TriangularMap(const Poset& p, FqMatrix u);
    static TriangularMap identity(PrimeField field, std::size_t n);

    const FqMatrix& matrix() const { return u_; }
    FqVector apply(const FqVector& v) const { return u_.apply(v); }

private:
    explicit TriangularMap(FqMatrix u) : u_(std::move(u)) {}
    friend void for_each_isometry(const Poset&, const PrimeField&,
                                  const std::function<bool(const LinearIsometry&)>&);

    FqMatrix u_;
};

/// T = T_phi o T_U with phi a poset automorphism and T_U triangular.
class LinearIsometry {
public:
    LinearIsometry(const Poset& p, Permutation phi, TriangularMap tri);
    static LinearIsometry identity(PrimeField field, std::size_t n);

    const Permutation& automorphism() const { return phi_; }
    const TriangularMap& triangular() const { return tri_; }
    std::size_t dimension() const { return phi_.size(); }
    const PrimeField& field() const { return tri_.matrix().field(); }

    FqVector apply(const FqVector& v) const;
    /// Matrix whose j-th column is T(e_j).
    FqMatrix dense() const;

private:
    LinearIsometry(Permutation phi, TriangularMap tri) : phi_(std::move(phi)), tri_(std::move(tri)) {}
    friend void for_each_isometry(const Poset&, const PrimeField&,
                                  const std::function<bool(const LinearIsometry&)>&);
    friend LinearIsometry compose(const Poset& p, const LinearIsometry& outer, const LinearIsometry& inner);

    Permutation phi_;
    TriangularMap tri_;
};

/// outer o inner, again in factored form.
LinearIsometry compose(const Poset& p, const LinearIsometry& outer, const LinearIsometry& inner);

/// Image of a code under an isometry.
LinearCode apply(const LinearIsometry& t, const LinearCode& c);

/// |Aut(P)| * prod_j (q-1) q^(|<j>|-1)
BigInt group_order(const Poset& p, const PrimeField& field);

/// Visits every element of GL_P(F_q) once: automorphisms in the order of automorphisms(), then
/// triangular parameters as an odometer. Stops early when `visit` returns false.
void for_each_isometry(const Poset& p, const PrimeField& field,
                       const std::function<bool(const LinearIsometry&)>& visit);

/// Whole group, guarded by kMaxGroupOrder.
std::vector<LinearIsometry> enumerate_group(const Poset& p, const PrimeField& field);

struct CleanedVector {
    LinearIsometry isometry;
    FqVector cleaned;
};

/// Triangular isometry T with supp(T(u)) = maximal elements of supp(u), T(u) agreeing with u there.
CleanedVector clean_vector(const Poset& p, const FqVector& u);

/// Isometry mapping c onto c2 when one exists.
std::optional<LinearIsometry> codes_equivalent(const Poset& p, const LinearCode& c, const LinearCode& c2);

}  // namespace hposet
