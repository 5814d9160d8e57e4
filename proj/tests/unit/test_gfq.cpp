#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "hposet/error.hpp"
#include "hposet/gfq.hpp"

using namespace hposet;

namespace {

FqMatrix matrix(unsigned q, std::vector<std::vector<Residue>> rows) {
    PrimeField f(q);
    std::vector<FqVector> vs;
    for (auto& r : rows) vs.emplace_back(f, r);
    return FqMatrix(f, vs.front().size(), vs);
}

// all combinations of the rows, as plain digit vectors
std::set<std::vector<Residue>> span_of(const FqMatrix& m) {
    std::set<std::vector<Residue>> out;
    const unsigned q = m.field().order();
    std::vector<unsigned> coeff(m.rows(), 0);
    for (;;) {
        std::vector<Residue> v(m.cols(), 0);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t j = 0; j < m.cols(); ++j) v[j] = static_cast<Residue>((v[j] + coeff[r] * m.at(r, j)) % q);
        out.insert(v);
        std::size_t i = m.rows();
        for (;;) {
            if (i == 0) return out;
            --i;
            if (++coeff[i] < q) break;
            coeff[i] = 0;
        }
    }
}

}  // namespace

TEST_CASE("field arithmetic") {
    PrimeField f5(5);
    CHECK(f5.inv(3) == 2);
    CHECK(field_arith(FieldOp::inv, 3, 0, f5) == 2);
    for (unsigned q : {2u, 3u, 5u, 7u, 11u, 13u, 251u}) {
        PrimeField f(q);
        CHECK(f.add(1, static_cast<Residue>(q - 1)) == 0);
        for (unsigned a = 0; a < q; ++a) {
            CHECK(f.mul(1, static_cast<Residue>(a)) == a);
            CHECK(f.add(static_cast<Residue>(a), f.neg(static_cast<Residue>(a))) == 0);
            if (a == 0) continue;
            // the inverse is the unique b with a*b = 1 in the multiplication table
            unsigned b = 1;
            while ((a * b) % q != 1) ++b;
            CHECK(f.inv(static_cast<Residue>(a)) == b);
        }
    }
    CHECK(f5.reduce(-1) == 4);
    CHECK(f5.reduce(12) == 2);
}

TEST_CASE("field errors") {
    CHECK_THROWS_AS(PrimeField(4), InputError);
    CHECK_THROWS_AS(PrimeField(1), InputError);
    CHECK_THROWS_AS(PrimeField(257), InputError);
    CHECK_THROWS_AS(PrimeField(2).inv(0), DomainError);
    CHECK_THROWS_AS(FqVector(PrimeField(3), std::vector<Residue>{0, 3}), InputError);
}

TEST_CASE("vectors") {
    PrimeField f(3);
    FqVector a(f, {1, 2, 0});
    FqVector b(f, {2, 2, 1});
    CHECK((a + b) == FqVector(f, {0, 1, 1}));
    CHECK((a - b) == FqVector(f, {2, 0, 2}));
    CHECK(-a == FqVector(f, {2, 1, 0}));
    CHECK(a.scaled(2) == FqVector(f, {2, 1, 0}));
    CHECK(a.dot(b) == (2 + 4 + 0) % 3);
    CHECK(a.hamming_weight() == 2);
    CHECK(a.to_string() == "120");
    CHECK(a < b);
}

TEST_CASE("rref under a column priority") {
    SUBCASE("rightmost pivots") {
        const FqMatrix g = matrix(2, {{1, 0, 1}, {0, 1, 1}});
        const std::vector<std::size_t> priority{2, 1, 0};
        const RowReduction red = rref_under_order(g, priority);
        CHECK(red.pivots == std::vector<std::size_t>{2, 1});
        // each pivot is the rightmost nonzero of its row and alone in its column
        for (std::size_t r = 0; r < red.pivots.size(); ++r) {
            const std::size_t piv = red.pivots[r];
            CHECK(red.matrix.at(r, piv) == 1);
            for (std::size_t j = piv + 1; j < 3; ++j) CHECK(red.matrix.at(r, j) == 0);
            for (std::size_t o = 0; o < red.pivots.size(); ++o)
                if (o != r) CHECK(red.matrix.at(o, piv) == 0);
        }
        CHECK(red.matrix.row(0) == FqVector(PrimeField(2), {1, 0, 1}));
        CHECK(red.matrix.row(1) == FqVector(PrimeField(2), {1, 1, 0}));
        CHECK(span_of(red.matrix) == span_of(g));
    }
    SUBCASE("identity") {
        const FqMatrix id = FqMatrix::identity(PrimeField(3), 4);
        const RowReduction red = rref(id);
        CHECK(red.matrix == id);
        CHECK(red.pivots == std::vector<std::size_t>{0, 1, 2, 3});
    }
    SUBCASE("single row") {
        const RowReduction red = rref(matrix(3, {{1, 1}}));
        CHECK(red.pivots == std::vector<std::size_t>{0});
        CHECK(red.matrix.row(0) == FqVector(PrimeField(3), {1, 1}));
    }
    SUBCASE("zero matrix") {
        const RowReduction red = rref(FqMatrix(PrimeField(2), 2, 3));
        CHECK(red.pivots.empty());
        CHECK(red.matrix.rows() == 0);
    }
}

TEST_CASE("kernel") {
    SUBCASE("v1 + v3 = 0") {
        const FqMatrix k = kernel(matrix(2, {{1, 0, 1}}));
        CHECK(k.rows() == 2);
        std::set<std::vector<Residue>> expected;
        for (Residue a : {0, 1})
            for (Residue b : {0, 1})
                for (Residue c : {0, 1})
                    if ((a + c) % 2 == 0) expected.insert({a, b, c});
        CHECK(span_of(k) == expected);
    }
    SUBCASE("identity") { CHECK(kernel(FqMatrix::identity(PrimeField(2), 3)).rows() == 0); }
    SUBCASE("zero row") { CHECK(kernel(FqMatrix(PrimeField(3), 1, 2)).rows() == 2); }
}

TEST_CASE("random matrices: row space preserved, rank-nullity") {
    std::mt19937_64 rng(7);
    for (unsigned q : {2u, 3u, 5u}) {
        PrimeField f(q);
        std::uniform_int_distribution<unsigned> d(0, q - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + trial % 4;
            const std::size_t cols = 2 + trial % 3;
            FqMatrix g(f, rows, cols);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) g.set(r, c, static_cast<Residue>(d(rng)));
            std::vector<std::size_t> priority(cols);
            std::iota(priority.begin(), priority.end(), std::size_t{0});
            std::shuffle(priority.begin(), priority.end(), rng);
            const RowReduction red = rref_under_order(g, priority);
            CHECK(span_of(red.matrix) == span_of(g));
            CHECK(red.matrix.rows() == g.rank());
            const FqMatrix k = kernel(g);
            CHECK(k.rows() + g.rank() == cols);
            for (std::size_t r = 0; r < k.rows(); ++r) CHECK(g.apply(k.row(r)).is_zero());
        }
    }
}
