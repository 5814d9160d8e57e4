#include <doctest.h>

#include <random>
#include <set>

#include "hposet/error.hpp"
#include "hposet/pmetric.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace hposet;

namespace {
const PrimeField F2(2);
FqVector v2(std::vector<Residue> d) { return FqVector(F2, std::move(d)); }
LinearCode span2(std::vector<Residue> d) { return LinearCode(F2, d.size(), std::vector<FqVector>{v2(d)}); }
}  // namespace

TEST_CASE("weights on the four three-element posets") {
    const FqVector u = v2({0, 1, 1});
    CHECK(p_weight(corpus::p1(), u) == 3);
    CHECK(p_weight(corpus::p2(), u) == 3);
    CHECK(p_weight(corpus::p3(), u) == 3);
    CHECK(p_weight(corpus::p0(), u) == 2);
    CHECK(p_weight(Poset::antichain(3), u) == 2);
    CHECK(p_weight(corpus::p0(), v2({0, 0, 0})) == 0);
}

TEST_CASE("distances") {
    CHECK(p_distance(corpus::p3(), v2({1, 0, 0}), v2({0, 0, 1})) == 3);
    const auto all = oracle::space(3, 3);
    PrimeField f3(3);
    for (const auto& a : all) {
        for (const auto& b : all) {
            FqVector x(f3, std::vector<Residue>(a.begin(), a.end()));
            FqVector y(f3, std::vector<Residue>(b.begin(), b.end()));
            std::size_t hd = 0;
            for (std::size_t i = 0; i < 3; ++i) hd += a[i] != b[i];
            CHECK(p_distance(Poset::antichain(3), x, y) == hd);
        }
        FqVector x(f3, std::vector<Residue>(a.begin(), a.end()));
        CHECK(p_distance(corpus::p0(), x, x) == 0);
    }
}

TEST_CASE("balls and spheres") {
    const auto s = sphere(corpus::p0(), v2({0, 0, 0}), 2);
    std::vector<std::string> got;
    for (const auto& v : s) got.push_back(v.to_string());
    CHECK(got == std::vector<std::string>{"001", "011", "110"});
    CHECK(ball(corpus::p0(), v2({1, 0, 1}), 0).size() == 1);
    CHECK(ball(corpus::p0(), v2({1, 0, 1}), 3).size() == 8);
}

TEST_CASE("packing radius examples") {
    const auto c1 = brute_invariants(corpus::p0(), span2({0, 0, 1}));
    CHECK(c1.minimum_distance == 2);
    CHECK(c1.packing_radius == 1);
    const auto c2 = brute_invariants(corpus::p0(), span2({1, 1, 0}));
    CHECK(c2.minimum_distance == 2);
    CHECK(c2.packing_radius == 0);

    std::vector<FqVector> h{v2({1, 0, 0, 0, 1, 1, 0}), v2({0, 1, 0, 0, 1, 0, 1}), v2({0, 0, 1, 0, 0, 1, 1}),
                            v2({0, 0, 0, 1, 1, 1, 1})};
    const auto ham = brute_invariants(Poset::antichain(7), LinearCode(F2, 7, h));
    CHECK(ham.packing_radius == 1);
    CHECK(ham.covering_radius == 1);

    std::mt19937_64 rng(5);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int i = 0; i < 10; ++i) {
            const auto c = random_code(PrimeField(3), n, 1 + static_cast<std::size_t>(i) % n, rng);
            const auto inv = brute_invariants(Poset::chain(n), c);
            CHECK(inv.packing_radius == inv.minimum_distance - 1);
        }
    }
    CHECK_THROWS_AS(brute_invariants(corpus::p0(), LinearCode::zero(F2, 3)), ZeroCodeError);
    CHECK(brute_packing_radius(corpus::p0(), LinearCode::zero(F2, 3)) == 3);
}

TEST_CASE("P-weight enumerators") {
    CHECK(p_weight_enumerator(corpus::p0(), span2({0, 0, 1})).to_string() == "1 + X^2");
    CHECK(p_weight_enumerator(corpus::p0(), span2({1, 1, 0})).to_string() == "1 + X^2");
    CHECK(p_weight_enumerator(corpus::p0(), LinearCode::zero(F2, 3)).to_string() == "1");
}

TEST_CASE("brute invariants against the coset oracle on every small poset") {
    std::mt19937_64 rng(17);
    for (unsigned q : {2u, 3u}) {
        const std::size_t max_n = q == 2 ? 4 : 3;
        for (std::size_t n = 1; n <= max_n; ++n) {
            for (const Poset& p : corpus::all_posets(n)) {
                const auto metric = oracle::poset_metric(p, q);
                for (const auto& c : corpus::code_family(PrimeField(q), n, 4, rng)) {
                    const auto words = oracle::codewords(c);
                    const auto expect = oracle::invariants(metric, words);
                    const auto got = brute_invariants(p, c);
                    INFO(corpus::describe(p), " q=", q, " code ", c.generator().row(0).to_string());
                    CHECK(got.minimum_distance == expect.d);
                    CHECK(got.packing_radius == expect.packing);
                    CHECK(got.covering_radius == expect.covering);
                    CHECK(got.chebyshev_radius == expect.chebyshev);
                    CHECK(oracle::index_of(oracle::to_vec(got.chebyshev_center), q) == expect.center);
                    CHECK(p_weight_enumerator(p, c) == WeightEnumerator(oracle::enumerator(metric, words)));
                }
            }
        }
    }
}
