#include <doctest.h>

#include <random>
#include <set>

#include "hposet/error.hpp"
#include "hposet/isometry.hpp"
#include "hposet/pmetric.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace hposet;

namespace {
const PrimeField F2(2);
FqVector v2(std::vector<Residue> d) { return FqVector(F2, std::move(d)); }
LinearCode span2(std::vector<Residue> d) { return LinearCode(F2, d.size(), std::vector<FqVector>{v2(d)}); }
Permutation identity(std::size_t n) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    return p;
}
}  // namespace

TEST_CASE("the non-identity isometry of P0") {
    const Poset p0 = corpus::p0();
    const auto group = enumerate_group(p0, F2);
    REQUIRE(group.size() == 2);
    FqMatrix u = FqMatrix::identity(F2, 3);
    u.set(1, 2, 1);
    const LinearIsometry t(p0, identity(3), TriangularMap(p0, u));
    CHECK(t.apply(v2({1, 0, 1})) == v2({1, 1, 1}));
    CHECK(group[1].dense() == t.dense());
    CHECK(LinearIsometry::identity(F2, 3).apply(v2({1, 1, 0})) == v2({1, 1, 0}));
}

TEST_CASE("triangular maps") {
    const Poset p1 = corpus::p1();
    FqMatrix u = FqMatrix::identity(F2, 3);
    u.set(0, 2, 1);
    const TriangularMap tri(p1, u);
    CHECK(tri.apply(v2({0, 0, 1})) == v2({1, 0, 1}));
    CHECK(p_weight(p1, v2({1, 0, 1})) == 3);
    CHECK(p_weight(p1, v2({0, 0, 1})) == 3);

    FqMatrix bad = FqMatrix::identity(F2, 3);
    bad.set(2, 0, 1);  // 3 is not below 1
    CHECK_THROWS_AS(TriangularMap(p1, bad), InputError);
    FqMatrix singular = FqMatrix::identity(F2, 3);
    singular.set(1, 1, 0);
    CHECK_THROWS_AS(TriangularMap(p1, singular), InputError);
    CHECK_THROWS_AS(LinearIsometry(corpus::p0(), Permutation{1, 0, 2}, TriangularMap::identity(F2, 3)), InputError);
}

TEST_CASE("group orders") {
    CHECK(group_order(corpus::p0(), F2) == 2);
    for (std::size_t n = 1; n <= 4; ++n) {
        BigInt fact = 1;
        for (std::size_t i = 2; i <= n; ++i) fact *= i;
        CHECK(group_order(Poset::antichain(n), F2) == fact);
        CHECK(enumerate_group(Poset::antichain(n), F2).size() == fact);
    }
    CHECK(group_order(Poset::chain(2), PrimeField(3)) == 12);
    CHECK(enumerate_group(Poset::chain(2), PrimeField(3)).size() == 12);
    CHECK_THROWS_AS(enumerate_group(Poset::chain(8), PrimeField(3)), CapacityError);
}

TEST_CASE("enumerated groups: distinct isometries, count, prime ideals") {
    for (unsigned q : {2u, 3u}) {
        const std::size_t max_n = q == 2 ? 4 : 3;
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (const Poset& p : corpus::all_posets(n)) {
                const PrimeField f(q);
                const auto group = enumerate_group(p, f);
                CHECK(BigInt(group.size()) == group_order(p, f));
                std::set<std::vector<Residue>> dense;
                const auto metric = oracle::poset_metric(p, q);
                const auto all = oracle::space(q, n);
                for (const auto& t : group) {
                    const FqMatrix m = t.dense();
                    std::vector<Residue> flat;
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) flat.push_back(m.at(r, c));
                    dense.insert(flat);
                    // weight preservation implies distance preservation by linearity
                    for (const auto& x : all) {
                        const FqVector v(f, std::vector<Residue>(x.begin(), x.end()));
                        CHECK(oracle::weight(metric, oracle::to_vec(t.apply(v))) == oracle::weight(metric, x));
                    }
                    for (std::size_t i = 0; i < n; ++i) {
                        const ElementSet ideal = p.ideal_of(t.apply(FqVector::unit(f, n, i)).support());
                        CHECK(p.maximal_elements(ideal).size() == 1);
                    }
                }
                CHECK(dense.size() == group.size());
            }
        }
    }
}

TEST_CASE("composition") {
    std::mt19937_64 rng(2);
    const Poset p = Poset::from_relations(4, {{0, 2}, {1, 2}, {1, 3}});
    const PrimeField f(3);
    const auto group = enumerate_group(p, f);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int i = 0; i < 50; ++i) {
        const auto& a = group[pick(rng)];
        const auto& b = group[pick(rng)];
        const LinearIsometry ab = compose(p, a, b);
        CHECK(ab.dense() == a.dense() * b.dense());
    }
}

TEST_CASE("cleaning") {
    const auto r1 = clean_vector(corpus::p1(), v2({1, 0, 1}));
    CHECK(r1.cleaned == v2({0, 0, 1}));
    CHECK(r1.isometry.apply(v2({1, 0, 1})) == r1.cleaned);

    const auto r2 = clean_vector(Poset::antichain(3), v2({1, 0, 1}));
    CHECK(r2.cleaned == v2({1, 0, 1}));
    CHECK(r2.isometry.dense() == FqMatrix::identity(F2, 3));

    CHECK(clean_vector(corpus::p3(), v2({1, 1, 1})).cleaned == v2({0, 0, 1}));

    for (unsigned q : {2u, 3u}) {
        const PrimeField f(q);
        for (const Poset& p : corpus::all_posets(4)) {
            for (const auto& x : oracle::space(q, 4)) {
                const FqVector u(f, std::vector<Residue>(x.begin(), x.end()));
                const auto r = clean_vector(p, u);
                const ElementSet m = p.maximal_elements(u.support());
                CHECK(r.cleaned.support() == m);
                for (std::size_t e : m) CHECK(r.cleaned[e] == u[e]);
                CHECK(p_weight(p, r.cleaned) == p_weight(p, u));
                CHECK(p.ideal_of(r.cleaned.support()) == p.ideal_of(u.support()));
            }
        }
    }
}

TEST_CASE("code equivalence") {
    CHECK_FALSE(codes_equivalent(corpus::p0(), span2({1, 0, 1}), span2({0, 0, 1})).has_value());
    const auto self = codes_equivalent(corpus::p0(), span2({1, 0, 1}), span2({1, 0, 1}));
    REQUIRE(self.has_value());
    for (const Poset& p : {corpus::p1(), corpus::p2(), corpus::p3()}) {
        const auto w = codes_equivalent(p, span2({1, 0, 1}), span2({0, 0, 1}));
        REQUIRE(w.has_value());
        CHECK(apply(*w, span2({1, 0, 1})) == span2({0, 0, 1}));
    }
}
