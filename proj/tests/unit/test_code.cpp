#include <doctest.h>

#include <random>
#include <set>

#include "hposet/code.hpp"
#include "hposet/error.hpp"
#include "support/oracle.hpp"

using namespace hposet;

namespace {

LinearCode code(unsigned q, std::vector<std::vector<Residue>> rows, std::size_t n) {
    PrimeField f(q);
    std::vector<FqVector> vs;
    for (auto& r : rows) vs.emplace_back(f, r);
    return LinearCode(f, n, vs);
}

std::set<std::string> words(const LinearCode& c) {
    std::set<std::string> out;
    for (const auto& w : codewords(c)) out.insert(w.to_string());
    return out;
}

LinearCode hamming74() {
    return code(2, {{1, 0, 0, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 0, 1, 1}, {0, 0, 0, 1, 1, 1, 1}}, 7);
}

}  // namespace

TEST_CASE("codewords") {
    CHECK(words(code(2, {{1, 0, 1}}, 3)) == std::set<std::string>{"000", "101"});
    CHECK(words(LinearCode::zero(PrimeField(2), 3)) == std::set<std::string>{"000"});
    CHECK(words(code(3, {{1, 1}}, 2)) == std::set<std::string>{"00", "11", "22"});
    CHECK(codewords(hamming74()).size() == 16);
    // dependent rows are dropped
    CHECK(code(2, {{1, 1, 0}, {1, 1, 0}, {0, 0, 0}}, 3).dimension() == 1);
}

TEST_CASE("dual codes") {
    const LinearCode d = dual_code(code(2, {{0, 0, 1}}, 3));
    CHECK(d.dimension() == 2);
    for (const auto& w : codewords(d)) CHECK(w[2] == 0);
    CHECK(dual_code(LinearCode::full(PrimeField(2), 3)).is_zero());
    CHECK(dual_code(LinearCode::zero(PrimeField(3), 2)).is_full());
    CHECK(words(dual_code(code(2, {{1, 1, 0}}, 3))) == std::set<std::string>{"000", "001", "110", "111"});
}

TEST_CASE("puncturing") {
    const LinearCode c = code(2, {{1, 0, 1, 1, 0, 0}}, 6);
    CHECK(words(puncture(c, ElementSet{0, 1, 2, 3})) == std::set<std::string>{"0000", "1011"});
    CHECK(puncture(c, ElementSet::full(6)) == c);
    CHECK(puncture(code(2, {{1, 1, 0}}, 3), ElementSet{0, 1}) == code(2, {{1, 1}}, 2));
}

TEST_CASE("Hamming invariants") {
    SUBCASE("ternary repetition") {
        const auto inv = hamming_invariants(code(3, {{1, 1}}, 2));
        CHECK(inv.covering_radius == 1);
        CHECK(inv.chebyshev_radius == 2);
        CHECK(inv.minimum_distance == 2);
    }
    SUBCASE("binary repetition") {
        const auto inv = hamming_invariants(code(2, {{1, 1, 1}}, 3));
        CHECK(inv.minimum_distance == 3);
        CHECK(inv.packing_radius == 1);
        CHECK(inv.covering_radius == 1);
        // max(w, 3 - w) >= 2 for every centre
        CHECK(inv.chebyshev_radius == 2);
    }
    SUBCASE("[7,4] Hamming") {
        const auto inv = hamming_invariants(hamming74());
        CHECK(inv.minimum_distance == 3);
        CHECK(inv.packing_radius == 1);
        CHECK(inv.covering_radius == 1);
    }
    CHECK_THROWS_AS(hamming_invariants(LinearCode::zero(PrimeField(2), 3)), ZeroCodeError);
    CHECK_THROWS_AS(hamming_minimum_distance(LinearCode::zero(PrimeField(2), 3)), ZeroCodeError);
    CHECK(hamming_covering_radius(LinearCode::zero(PrimeField(2), 3)) == 3);
}

TEST_CASE("Hamming weight enumerators") {
    CHECK(hamming_weight_enumerator(code(3, {{1, 1}}, 2)) == WeightEnumerator({1, 0, 2}));
    CHECK(hamming_weight_enumerator(LinearCode::zero(PrimeField(2), 4)) == WeightEnumerator::one(4));
    CHECK(hamming_weight_enumerator(LinearCode::full(PrimeField(2), 2)) == WeightEnumerator({1, 2, 1}));
    CHECK(WeightEnumerator({1, 0, 2, 1}).to_string() == "1 + 2X^2 + X^3");
    CHECK(WeightEnumerator({1, 0, 0}) == WeightEnumerator({1}));
}

TEST_CASE("one-dimensional codes and random codes") {
    CHECK(one_dimensional_codes(PrimeField(2), 3).size() == 7);
    CHECK(one_dimensional_codes(PrimeField(3), 3).size() == 13);
    std::set<std::string> seen;
    for (const auto& c : one_dimensional_codes(PrimeField(3), 3)) seen.insert(c.generator().row(0).to_string());
    CHECK(seen.size() == 13);

    std::mt19937_64 rng(1);
    for (int i = 0; i < 20; ++i) CHECK(random_code(PrimeField(3), 5, 3, rng).dimension() == 3);
}

TEST_CASE("Hamming invariants against the coset oracle") {
    std::mt19937_64 rng(11);
    for (unsigned q : {2u, 3u}) {
        const std::size_t n = q == 2 ? 6 : 4;
        const auto metric = oracle::hamming_metric(n, q);
        for (int i = 0; i < 30; ++i) {
            const LinearCode c = random_code(PrimeField(q), n, 1 + static_cast<std::size_t>(i) % n, rng);
            const auto expect = oracle::invariants(metric, oracle::codewords(c));
            const auto got = hamming_invariants(c);
            CHECK(got.minimum_distance == expect.d);
            CHECK(got.packing_radius == expect.packing);
            CHECK(got.covering_radius == expect.covering);
            CHECK(got.chebyshev_radius == expect.chebyshev);
            CHECK(oracle::index_of(oracle::to_vec(got.chebyshev_center), q) == expect.center);
            CHECK(hamming_weight_enumerator(c) == WeightEnumerator(oracle::enumerator(metric, oracle::codewords(c))));
        }
    }
}
