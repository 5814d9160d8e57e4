#include "hposet/gfq.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "hposet/error.hpp"

namespace hposet {

bool is_prime(unsigned value) {
    if (value < 2) return false;
    for (unsigned d = 2; d * d <= value; ++d) {
        if (value % d == 0) return false;
    }
    return true;
}

PrimeField::PrimeField(unsigned q) : q_(q) {
    if (q > kMaxFieldOrder) {
        throw InputError("field order " + std::to_string(q) + " exceeds the supported maximum " +
                         std::to_string(kMaxFieldOrder));
    }
    if (!is_prime(q)) {
        throw InputError("field order " + std::to_string(q) +
                         " is not prime (only prime fields F_p are supported)");
    }
}

Residue PrimeField::inv(Residue a) const {
    if (a % q_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
    // Fermat: a^(q-2)
    unsigned result = 1;
    unsigned base = a % q_;
    for (unsigned e = q_ - 2; e > 0; e >>= 1) {
        if (e & 1U) result = result * base % q_;
        base = base * base % q_;
    }
    return static_cast<Residue>(result);
}

Residue PrimeField::reduce(long long value) const {
    long long r = value % static_cast<long long>(q_);
    if (r < 0) r += q_;
    return static_cast<Residue>(r);
}

Residue field_arith(FieldOp op, Residue a, Residue b, const PrimeField& field) {
    if (a >= field.order() || b >= field.order()) throw InputError("operand is not a canonical residue");
    switch (op) {
        case FieldOp::add: return field.add(a, b);
        case FieldOp::sub: return field.sub(a, b);
        case FieldOp::mul: return field.mul(a, b);
        case FieldOp::inv: return field.inv(a);
        case FieldOp::neg: return field.neg(a);
    }
    throw InputError("unknown field operation");
}

// ---------------------------------------------------------------------------
// FqVector

FqVector::FqVector(PrimeField field, std::size_t n) : field_(field), entries_(n, 0) {}

FqVector::FqVector(PrimeField field, std::vector<Residue> entries)
    : field_(field), entries_(std::move(entries)) {
    for (Residue e : entries_) {
        if (e >= field_.order()) {
            throw InputError("entry " + std::to_string(unsigned{e}) + " is not a residue mod " +
                             std::to_string(field_.order()));
        }
    }
}

FqVector FqVector::unit(PrimeField field, std::size_t n, std::size_t j) {
    FqVector v(field, n);
    v.set(j, 1);
    return v;
}

void FqVector::set(std::size_t i, Residue value) {
    if (i >= entries_.size()) throw InputError("coordinate index out of range");
    if (value >= field_.order()) throw InputError("value is not a canonical residue");
    entries_[i] = value;
}

bool FqVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](Residue r) { return r == 0; });
}

ElementSet FqVector::support() const {
    if (entries_.size() > kMaxElements) throw CapacityError("support of a vector longer than 64");
    ElementSet s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != 0) s.insert(i);
    }
    return s;
}

void FqVector::check_compatible(const FqVector& other) const {
    if (other.size() != size()) {
        throw InputError("dimension mismatch: " + std::to_string(size()) + " vs " +
                         std::to_string(other.size()));
    }
    if (!(other.field_ == field_)) throw InputError("vectors over different fields");
}

FqVector FqVector::operator+(const FqVector& other) const {
    check_compatible(other);
    FqVector out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = field_.add(entries_[i], other.entries_[i]);
    return out;
}

FqVector FqVector::operator-(const FqVector& other) const {
    check_compatible(other);
    FqVector out = *this;
    for (std::size_t i = 0; i < size(); ++i) out.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
    return out;
}

FqVector FqVector::operator-() const {
    FqVector out = *this;
    for (auto& e : out.entries_) e = field_.neg(e);
    return out;
}

FqVector FqVector::scaled(Residue factor) const {
    FqVector out = *this;
    for (auto& e : out.entries_) e = field_.mul(e, factor);
    return out;
}

Residue FqVector::dot(const FqVector& other) const {
    check_compatible(other);
    unsigned acc = 0;
    for (std::size_t i = 0; i < size(); ++i) acc = (acc + unsigned{entries_[i]} * other.entries_[i]) % field_.order();
    return static_cast<Residue>(acc);
}

std::string FqVector::to_string() const {
    std::ostringstream out;
    const bool wide = field_.order() > 10;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (wide && i > 0) out << ',';
        out << unsigned{entries_[i]};
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// FqMatrix

FqMatrix::FqMatrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FqMatrix::FqMatrix(PrimeField field, std::size_t cols, const std::vector<FqVector>& rows)
    : FqMatrix(field, 0, cols) {
    for (const auto& r : rows) append_row(r);
}

FqMatrix FqMatrix::identity(PrimeField field, std::size_t n) {
    FqMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void FqMatrix::set(std::size_t r, std::size_t c, Residue value) {
    if (r >= rows_ || c >= cols_) throw InputError("matrix index out of range");
    if (value >= field_.order()) throw InputError("value is not a canonical residue");
    data_[r * cols_ + c] = value;
}

FqVector FqMatrix::row(std::size_t r) const {
    auto s = row_span(r);
    return FqVector(field_, std::vector<Residue>(s.begin(), s.end()));
}

FqVector FqMatrix::column(std::size_t c) const {
    FqVector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.set(r, at(r, c));
    return v;
}

std::vector<FqVector> FqMatrix::row_vectors() const {
    std::vector<FqVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void FqMatrix::append_row(const FqVector& row) {
    if (row.size() != cols_) {
        throw InputError("row of length " + std::to_string(row.size()) + " in a matrix with " +
                         std::to_string(cols_) + " columns");
    }
    if (!(row.field() == field_)) throw InputError("row over a different field");
    data_.insert(data_.end(), row.entries().begin(), row.entries().end());
    ++rows_;
}

FqVector FqMatrix::apply(const FqVector& v) const {
    if (v.size() != cols_) throw InputError("dimension mismatch in matrix-vector product");
    const unsigned q = field_.order();
    std::vector<Residue> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        unsigned acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) acc = (acc + unsigned{at(r, c)} * v[c]) % q;
        out[r] = static_cast<Residue>(acc);
    }
    return FqVector(field_, std::move(out));
}

FqVector FqMatrix::combine_rows(const FqVector& coefficients) const {
    if (coefficients.size() != rows_) throw InputError("dimension mismatch in row combination");
    const unsigned q = field_.order();
    std::vector<unsigned> acc(cols_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        const unsigned a = coefficients[r];
        if (a == 0) continue;
        for (std::size_t c = 0; c < cols_; ++c) acc[c] = (acc[c] + a * at(r, c)) % q;
    }
    std::vector<Residue> out(acc.begin(), acc.end());
    return FqVector(field_, std::move(out));
}

FqMatrix FqMatrix::operator*(const FqMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("dimension mismatch in matrix product");
    const unsigned q = field_.order();
    FqMatrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < other.cols_; ++j) {
            unsigned acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc = (acc + unsigned{at(i, k)} * other.at(k, j)) % q;
            out.data_[i * out.cols_ + j] = static_cast<Residue>(acc);
        }
    }
    return out;
}

FqMatrix FqMatrix::transposed() const {
    FqMatrix out(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = at(r, c);
    return out;
}

FqMatrix FqMatrix::select_columns(std::span<const std::size_t> columns) const {
    FqMatrix out(field_, rows_, columns.size());
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j] >= cols_) throw InputError("column index out of range");
            out.data_[r * columns.size() + j] = at(r, columns[j]);
        }
    }
    return out;
}

std::size_t FqMatrix::rank() const { return rref(*this).pivots.size(); }

bool FqMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Residue r) { return r == 0; });
}

// ---------------------------------------------------------------------------
// Row reduction

RowReduction rref_under_order(const FqMatrix& g, std::span<const std::size_t> priority) {
    const std::size_t n = g.cols();
    {
        std::vector<bool> seen(n, false);
        if (priority.size() != n) throw InputError("column priority must list every column exactly once");
        for (std::size_t c : priority) {
            if (c >= n || seen[c]) throw InputError("column priority must list every column exactly once");
            seen[c] = true;
        }
    }
    const PrimeField& f = g.field();
    std::vector<std::vector<Residue>> rows;
    rows.reserve(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        auto s = g.row_span(r);
        rows.emplace_back(s.begin(), s.end());
    }

    std::vector<std::size_t> pivots;
    std::size_t next = 0;  // rows [0, next) are finished pivot rows
    for (std::size_t col : priority) {
        if (next == rows.size()) break;
        std::size_t found = next;
        while (found < rows.size() && rows[found][col] == 0) ++found;
        if (found == rows.size()) continue;
        std::swap(rows[next], rows[found]);
        auto& prow = rows[next];
        const Residue scale = f.inv(prow[col]);
        for (auto& e : prow) e = f.mul(e, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][col] == 0) continue;
            const Residue factor = rows[r][col];
            for (std::size_t c = 0; c < n; ++c) rows[r][c] = f.sub(rows[r][c], f.mul(factor, prow[c]));
        }
        pivots.push_back(col);
        ++next;
    }

    FqMatrix out(f, 0, n);
    for (std::size_t r = 0; r < next; ++r) out.append_row(FqVector(f, rows[r]));
    return {std::move(out), std::move(pivots)};
}

RowReduction rref(const FqMatrix& g) {
    std::vector<std::size_t> natural(g.cols());
    for (std::size_t i = 0; i < natural.size(); ++i) natural[i] = i;
    return rref_under_order(g, natural);
}

FqMatrix kernel(const FqMatrix& g) {
    const std::size_t n = g.cols();
    const PrimeField& f = g.field();
    const RowReduction red = rref(g);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    // One basis vector per free column: x_free = 1, x_pivot = -entry.
    FqMatrix basis(f, 0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        FqVector v(f, n);
        v.set(free, 1);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) v.set(red.pivots[r], f.neg(red.matrix.at(r, free)));
        basis.append_row(v);
    }
    return basis;
}

}  // namespace hposet
