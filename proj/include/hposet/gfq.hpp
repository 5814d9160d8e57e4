#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hposet/element_set.hpp"

namespace hposet {

/// Canonical representative of a residue class, always in [0, q).
using Residue = std::uint8_t;

/// Largest supported field order.
inline constexpr unsigned kMaxFieldOrder = 251;

/// The prime field F_q. Construction validates that q is a prime no larger than 251.
class PrimeField {
public:
    explicit PrimeField(unsigned q);

    unsigned order() const { return q_; }

    Residue add(Residue a, Residue b) const { return static_cast<Residue>((unsigned{a} + b) % q_); }
    Residue sub(Residue a, Residue b) const { return static_cast<Residue>((unsigned{a} + q_ - b) % q_); }
    Residue neg(Residue a) const { return static_cast<Residue>((q_ - a) % q_); }
    Residue mul(Residue a, Residue b) const { return static_cast<Residue>((unsigned{a} * b) % q_); }
    /// Multiplicative inverse; throws DomainError for zero.
    Residue inv(Residue a) const;
    Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }
    /// Reduces an arbitrary integer to its canonical residue.
    Residue reduce(long long value) const;

    bool operator==(const PrimeField&) const = default;

private:
    unsigned q_;
};

bool is_prime(unsigned value);

enum class FieldOp { add, sub, mul, inv, neg };

/// Single field operation; `b` is ignored for the unary operations.
Residue field_arith(FieldOp op, Residue a, Residue b, const PrimeField& field);

/// Vector of F_q^n.
class FqVector {
public:
    FqVector(PrimeField field, std::size_t n);
    /// Entries must already be canonical residues; throws InputError otherwise.
    FqVector(PrimeField field, std::vector<Residue> entries);

    static FqVector unit(PrimeField field, std::size_t n, std::size_t j);

    const PrimeField& field() const { return field_; }
    std::size_t size() const { return entries_.size(); }
    Residue operator[](std::size_t i) const { return entries_[i]; }
    void set(std::size_t i, Residue value);
    std::span<const Residue> entries() const { return entries_; }

    bool is_zero() const;
    ElementSet support() const;
    std::size_t hamming_weight() const { return support().size(); }

    FqVector operator+(const FqVector& other) const;
    FqVector operator-(const FqVector& other) const;
    FqVector operator-() const;
    FqVector scaled(Residue factor) const;
    Residue dot(const FqVector& other) const;

    /// Digits as a compact string, e.g. "0110"; entries above 9 are comma separated.
    std::string to_string() const;

    bool operator==(const FqVector& other) const { return entries_ == other.entries_ && field_ == other.field_; }
    std::strong_ordering operator<=>(const FqVector& other) const { return entries_ <=> other.entries_; }

private:
    void check_compatible(const FqVector& other) const;

    PrimeField field_;
    std::vector<Residue> entries_;
};

/// Dense row-major matrix over F_q.
class FqMatrix {
public:
    FqMatrix(PrimeField field, std::size_t rows, std::size_t cols);
    /// Rows must all have length `cols`.
    FqMatrix(PrimeField field, std::size_t cols, const std::vector<FqVector>& rows);

    static FqMatrix identity(PrimeField field, std::size_t n);

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue value);
    std::span<const Residue> row_span(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    FqVector row(std::size_t r) const;
    FqVector column(std::size_t c) const;
    std::vector<FqVector> row_vectors() const;

    void append_row(const FqVector& row);

    /// M * v (v as a column).
    FqVector apply(const FqVector& v) const;
    /// v * M (v as a row), i.e. the combination of rows with coefficients v.
    FqVector combine_rows(const FqVector& coefficients) const;
    FqMatrix operator*(const FqMatrix& other) const;
    FqMatrix transposed() const;
    /// Keeps the listed columns, in the listed order.
    FqMatrix select_columns(std::span<const std::size_t> columns) const;

    std::size_t rank() const;
    bool is_zero() const;

    bool operator==(const FqMatrix&) const = default;

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Result of a row reduction: reduced matrix and the pivot column of each row.
struct RowReduction {
    FqMatrix matrix;
    std::vector<std::size_t> pivots;
};

/**
 * Reduced echelon form under an arbitrary column priority.
 *
 * `priority` lists every column once, most important first. The pivot of each output row is the
 * first column of `priority` where the row is nonzero; it is normalized to 1 and is the only
 * nonzero entry of its column. Rows come out ordered by the position of their pivot in
 * `priority`, and zero rows are dropped.
 */
RowReduction rref_under_order(const FqMatrix& g, std::span<const std::size_t> priority);

/// Ordinary reduced row echelon form (leftmost pivots).
RowReduction rref(const FqMatrix& g);

/// Basis (as rows) of {v : g * v^T = 0}.
FqMatrix kernel(const FqMatrix& g);

}  // namespace hposet
