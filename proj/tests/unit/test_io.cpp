#include <doctest.h>

#include "hposet/error.hpp"
#include "hposet/io.hpp"
#include "support/corpus.hpp"

using namespace hposet;

TEST_CASE("parse posets") {
    CHECK(parse_poset("n 3\nrel 2 3\n") == corpus::p0());
    CHECK(parse_poset("# comment\nn 3\n") == Poset::antichain(3));
    CHECK(parse_poset("n 3\nrel 1 2   # below\n\nrel 2 3") == Poset::chain(3));
}

TEST_CASE("poset errors carry line numbers") {
    try {
        parse_poset("n 2\nrel 1 2\nrel 2 1\n");
        FAIL("cycle accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse_poset("n 2\n\nrel 1 7\n");
        FAIL("out of range label accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_poset("n 2\nrelation 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset("m 2\n"), ParseError);
    CHECK_THROWS_AS(parse_poset(""), ParseError);
    CHECK_THROWS_AS(parse_poset("n x\n"), ParseError);
}

TEST_CASE("parse codes") {
    const LinearCode c = parse_code("q 2 n 3 k 1\n1 0 1\n");
    CHECK(c.dimension() == 1);
    CHECK(c.generator().row(0).to_string() == "101");
    CHECK(parse_code("q 3 n 4 k 0\n").is_zero());
    CHECK_THROWS_AS(parse_code("q 4 n 2 k 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_code("q 3 n 2 k 1\n1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_code("q 3 n 2 k 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_code("q 3 n 2 k 3\n"), ParseError);
    CHECK_THROWS_AS(parse_code("q 3 n 2\n"), ParseError);
}

TEST_CASE("round trips") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Poset& p : corpus::all_posets(n)) CHECK(parse_poset(serialize_poset(p)) == p);
    std::mt19937_64 rng(4);
    for (unsigned q : {2u, 3u, 7u}) {
        for (std::size_t k = 0; k <= 4; ++k) {
            const LinearCode c = random_code(PrimeField(q), 4, k, rng);
            CHECK(parse_code(serialize_code(c)) == c);
        }
    }
}
