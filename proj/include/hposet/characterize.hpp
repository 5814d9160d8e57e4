#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hposet/code.hpp"
#include "hposet/gfq.hpp"
#include "hposet/numbers.hpp"
#include "hposet/poset.hpp"

namespace hposet {

/**
 * Counterexample data attached to the lowest failure of the hierarchical condition.
 *
 * a and c sit on level alpha-1, b on level alpha, a is not below b and c is. Indices are 0-based.
 */
struct DefectWitness {
    std::size_t alpha;
    std::size_t a;
    std::size_t b;
    std::size_t c;
    /// Indicator of <{a,b}> restricted to level alpha-1.
    FqVector u;
    LinearCode c1;  // span{e_b}
    LinearCode c2;  // span{u}
    std::size_t t;
    std::size_t m;
    std::size_t lambda;
    /// n_{alpha-1}
    std::size_t level_below_size;
};

/// Throws InputError for hierarchical posets.
DefectWitness build_defect(const Poset& p, const PrimeField& field);

/// Predicted coefficients A_lambda of C1^perp and C2^perp under the dual poset.
struct DualCoefficients {
    BigInt a1;
    BigInt a2;
};
DualCoefficients dual_coefficient_formulas(const DefectWitness& w);

/// S_m = ((q-1)^m + (-1)^m (q-1)) / q: nonzero m-tuples over F_q summing to zero.
BigInt compositions_of_zero(unsigned q, std::size_t m);

enum class Property { p0, p1, p2, p3, p4, p5, p6, p7, p8, p9 };
inline constexpr std::size_t kPropertyCount = 10;

/// "P0" ... "P9"
std::string property_name(Property p);
std::string_view property_statement(Property p);

enum class Verdict { holds, fails, skipped_capacity };
std::string_view verdict_name(Verdict v);

struct Budget {
    /// Largest |GL_P(F_q)| that is enumerated.
    std::uint64_t max_group = std::uint64_t{1} << 18;
    /// Largest q^n for full-space scans.
    std::uint64_t max_space = std::uint64_t{1} << 16;
    /// Guard on |GL_P| * q^n for the orbit tables and on q^(2n) for pair scans.
    std::uint64_t max_work = std::uint64_t{1} << 22;
    /// Random codes of dimension >= 2 added to the code families.
    std::size_t random_codes = 24;
    /// Add every 2-dimensional code to the P1 family.
    bool exhaustive_small_codes = false;
    std::uint64_t seed = 20240531;
};

struct PropertyResult {
    Property property;
    Verdict verdict;
    std::string summary;
    /// Labels are 1-based, vectors are digit strings.
    nlohmann::json witness;
    double elapsed_ms = 0;
};

/// Each verdict comes from a search over the property's own test family; for non-hierarchical
/// posets the defect witness is checked as well and must refute the property.
PropertyResult check_property(const Poset& p, const PrimeField& field, Property which, const Budget& budget = {});

struct PropertyReport {
    std::vector<PropertyResult> results;
    bool hierarchical;
    /// Every non-skipped verdict agrees with `hierarchical`.
    bool consistent;
};

PropertyReport full_report(const Poset& p, const PrimeField& field, const Budget& budget = {});

/// Two incomparable elements on different levels, if any (order-theoretic form of P7).
std::optional<std::pair<std::size_t, std::size_t>> incomparable_across_levels(const Poset& p);
/// First vector (lexicographic) whose maximal support elements span two levels (q^n <= 2^16).
std::optional<FqVector> vector_spanning_levels(const Poset& p, const PrimeField& field);

}  // namespace hposet
