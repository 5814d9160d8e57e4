#include "hposet/characterize.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>

#include "detail/space.hpp"
#include "hposet/error.hpp"
#include "hposet/isometry.hpp"
#include "hposet/pmetric.hpp"

namespace hposet {

using detail::Index;
using detail::Space;
using detail::WeightTable;
using nlohmann::json;

namespace {

std::string labels(ElementSet s) {
    std::string out = "{";
    for (std::size_t e : s) {
        if (out.size() > 1) out += ",";
        out += std::to_string(e + 1);
    }
    return out + "}";
}

json code_json(const LinearCode& c) {
    json rows = json::array();
    for (std::size_t r = 0; r < c.dimension(); ++r) rows.push_back(c.generator().row(r).to_string());
    return rows;
}

json vectors_json(const Space& space, const std::vector<Index>& v) {
    json out = json::array();
    for (Index i : v) out.push_back(space.vector_at(i).to_string());
    return out;
}

std::string big_string(const BigInt& v) { return v.str(); }

/// dim(C) == sum over levels of dim(C restricted to codewords supported on that level).
bool level_decomposable(const Poset& p, const LinearCode& c) {
    const std::size_t k = c.dimension();
    std::size_t total = 0;
    for (const ElementSet& level : p.levels()) {
        std::vector<std::size_t> outside;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!level.contains(j)) outside.push_back(j);
        total += k - c.generator().select_columns(outside).rank();
    }
    return total == k;
}

/// Lazily built tables shared by the checks of one report.
class Context {
public:
    Context(const Poset& p, const PrimeField& f, const Budget& b) : p_(p), f_(f), b_(b) {
        if (auto d = find_hierarchy_defect(p)) defect_ = build_defect(p, f);
    }

    const Poset& poset() const { return p_; }
    const PrimeField& field() const { return f_; }
    const Budget& budget() const { return b_; }
    const std::optional<DefectWitness>& defect() const { return defect_; }

    const Space& space() {
        if (!space_) space_ = std::make_unique<Space>(f_, p_.size(), b_.max_space);
        return *space_;
    }
    const WeightTable& weights() {
        if (weights_.empty()) weights_ = detail::poset_weights(space(), p_);
        return weights_;
    }
    const WeightTable& dual_weights() {
        if (dual_weights_.empty()) dual_weights_ = detail::poset_weights(space(), dual(p_));
        return dual_weights_;
    }

    void require_pair_scan() {
        const std::uint64_t s = space().size();
        if (s > b_.max_work / s) {
            throw CapacityError("pair scan over q^(2n) = " + std::to_string(s) + "^2 exceeds the work budget");
        }
    }

    /// One permutation of the space per group element, identity first.
    const std::vector<std::vector<Index>>& actions() {
        if (!actions_.empty()) return actions_;
        const BigInt order = group_order(p_, f_);
        if (order > b_.max_group) {
            throw CapacityError("|GL_P(F_q)| = " + big_string(order) + " exceeds the group budget");
        }
        const Space& sp = space();
        if (order * sp.size() > b_.max_work) {
            throw CapacityError("orbit tables need |GL_P| * q^n = " + big_string(order * sp.size()) +
                                " entries, above the work budget");
        }
        for_each_isometry(p_, f_, [&](const LinearIsometry& t) {
            std::vector<Index> perm(sp.size());
            for (std::size_t i = 0; i < sp.size(); ++i) perm[i] = sp.index_of(t.apply(sp.vector_at(static_cast<Index>(i))));
            actions_.push_back(std::move(perm));
            return true;
        });
        return actions_;
    }

    /// Orbit label of each vector: the smallest index in its orbit.
    const std::vector<Index>& orbit_labels() {
        if (!orbits_.empty()) return orbits_;
        const auto& acts = actions();
        const std::size_t size = space().size();
        orbits_.assign(size, 0);
        std::vector<bool> seen(size, false);
        for (std::size_t i = 0; i < size; ++i) {
            if (seen[i]) continue;
            // the group is closed, so images of i are exactly its orbit
            for (const auto& perm : acts) {
                seen[perm[i]] = true;
                orbits_[perm[i]] = static_cast<Index>(i);
            }
        }
        return orbits_;
    }

    std::vector<Index> orbit_of(Index v) {
        std::set<Index> out;
        for (const auto& perm : actions()) out.insert(perm[v]);
        return {out.begin(), out.end()};
    }

    /// Seeded codes of dimension 2 .. n-1.
    std::vector<LinearCode> random_family() {
        std::vector<LinearCode> out;
        const std::size_t n = p_.size();
        if (n < 3) return out;
        std::mt19937_64 rng(b_.seed);
        std::uniform_int_distribution<std::size_t> dim(2, n - 1);
        for (std::size_t i = 0; i < b_.random_codes; ++i) out.push_back(random_code(f_, n, dim(rng), rng));
        return out;
    }

private:
    const Poset& p_;
    PrimeField f_;
    Budget b_;
    std::optional<DefectWitness> defect_;
    std::unique_ptr<Space> space_;
    WeightTable weights_;
    WeightTable dual_weights_;
    std::vector<std::vector<Index>> actions_;
    std::vector<Index> orbits_;
};

struct Outcome {
    bool counterexample_found;
    std::string summary;
    json witness;
};

[[noreturn]] void witness_failed(Property which, const std::string& why) {
    throw InternalError(property_name(which) + ": defect witness does not refute the property (" + why + ")");
}

/// Verdict from the family search; the defect witness, when present, must agree.
void reconcile(Property which, const Context& ctx, Outcome& out, bool witness_refutes, json canonical) {
    if (!ctx.defect()) return;
    if (!witness_refutes) witness_failed(which, "check returned no violation");
    if (!out.counterexample_found) {
        throw InternalError(property_name(which) + ": defect witness refutes the property but the family search did not");
    }
    canonical["family_search"] = out.witness;
    out.witness = std::move(canonical);
}

Index unit_index(Context& ctx, std::size_t j) {
    return ctx.space().index_of(FqVector::unit(ctx.field(), ctx.poset().size(), j));
}

bool any_isometry_decomposes(Context& ctx, const LinearCode& c) {
    const Space& sp = ctx.space();
    std::vector<Index> gens;
    for (std::size_t r = 0; r < c.dimension(); ++r) gens.push_back(sp.index_of(c.generator().row_span(r)));
    for (const auto& perm : ctx.actions()) {
        std::vector<FqVector> rows;
        for (Index g : gens) rows.push_back(sp.vector_at(perm[g]));
        if (level_decomposable(ctx.poset(), LinearCode(c.field(), c.length(), rows))) return true;
    }
    return false;
}

Outcome check_p0(Context& ctx) {
    auto family = one_dimensional_codes(ctx.field(), ctx.poset().size());
    for (auto& c : ctx.random_family()) family.push_back(std::move(c));
    Outcome out{false, "", json::object()};
    for (const auto& c : family) {
        if (!any_isometry_decomposes(ctx, c)) {
            out = {true, "code " + c.generator().row(0).to_string() + (c.dimension() > 1 ? " ..." : "") +
                             " has no level-decomposable image under GL_P",
                   {{"code", code_json(c)}}};
            break;
        }
    }
    if (!out.counterexample_found) {
        out.summary = "all " + std::to_string(family.size()) + " codes of the family admit a canonical decomposition";
    }
    if (const auto& d = ctx.defect()) {
        FqVector v = FqVector::unit(ctx.field(), ctx.poset().size(), d->a) +
                     FqVector::unit(ctx.field(), ctx.poset().size(), d->b);
        const LinearCode c(ctx.field(), v.size(), std::vector<FqVector>{v});
        const bool refutes = !any_isometry_decomposes(ctx, c);
        if (refutes) out.summary = "span{" + v.to_string() + "} has no level-decomposable image under GL_P";
        reconcile(Property::p0, ctx, out, refutes, {{"code", code_json(c)}, {"maximal_support", labels(v.support())}});
    }
    return out;
}

WeightEnumerator enumerator_of(const Context&, const Space& sp, const WeightTable& w, const LinearCode& c) {
    std::vector<std::uint64_t> coeff(sp.length() + 1, 0);
    for (Index i : detail::codeword_indices(sp, c)) ++coeff[w[i]];
    return WeightEnumerator(std::move(coeff));
}

std::vector<LinearCode> two_dimensional_codes(const PrimeField& f, std::size_t n) {
    const auto lines = one_dimensional_codes(f, n);
    std::map<std::string, LinearCode> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            LinearCode c(f, n, std::vector<FqVector>{lines[i].generator().row(0), lines[j].generator().row(0)});
            std::string key;
            for (std::size_t r = 0; r < c.dimension(); ++r) key += c.generator().row(r).to_string() + "|";
            seen.emplace(key, std::move(c));
        }
    }
    std::vector<LinearCode> out;
    for (auto& [key, c] : seen) out.push_back(std::move(c));
    return out;
}

Outcome check_p1(Context& ctx) {
    const Space& sp = ctx.space();
    const std::size_t n = ctx.poset().size();
    auto family = one_dimensional_codes(ctx.field(), n);
    if (ctx.budget().exhaustive_small_codes && n >= 2) {
        for (auto& c : two_dimensional_codes(ctx.field(), n)) family.push_back(std::move(c));
    }
    std::map<std::vector<std::uint64_t>, std::pair<const LinearCode*, WeightEnumerator>> first;
    Outcome out{false, "", json::object()};
    for (const auto& c : family) {
        const auto w = enumerator_of(ctx, sp, ctx.weights(), c);
        const auto wd = enumerator_of(ctx, sp, ctx.dual_weights(), dual_code(c));
        auto [it, inserted] = first.try_emplace(w.coefficients(), &c, wd);
        if (inserted || it->second.second == wd) continue;
        out = {true, "equal P-enumerators, different dual enumerators",
               {{"code_1", code_json(*it->second.first)},
                {"code_2", code_json(c)},
                {"enumerator", w.to_string()},
                {"dual_enumerator_1", it->second.second.to_string()},
                {"dual_enumerator_2", wd.to_string()}}};
        break;
    }
    if (!out.counterexample_found) {
        out.summary = "P-enumerator determines the dual enumerator on all " + std::to_string(family.size()) + " codes";
    }
    if (const auto& d = ctx.defect()) {
        const auto w1 = enumerator_of(ctx, sp, ctx.weights(), d->c1);
        const auto w2 = enumerator_of(ctx, sp, ctx.weights(), d->c2);
        const auto wd1 = enumerator_of(ctx, sp, ctx.dual_weights(), dual_code(d->c1));
        const auto wd2 = enumerator_of(ctx, sp, ctx.dual_weights(), dual_code(d->c2));
        const auto predicted = dual_coefficient_formulas(*d);
        if (BigInt(wd1[d->lambda]) != predicted.a1 || BigInt(wd2[d->lambda]) != predicted.a2) {
            throw InternalError("dual coefficient formulas disagree with the brute-force dual enumerators");
        }
        const bool refutes = w1 == w2 && !(wd1 == wd2);
        if (refutes) {
            out.summary = "C1 = span{" + d->c1.generator().row(0).to_string() + "} and C2 = span{" + d->u.to_string() +
                          "} share " + w1.to_string() + " but their duals differ at X^" + std::to_string(d->lambda);
        }
        reconcile(Property::p1, ctx, out, refutes,
                  {{"code_1", code_json(d->c1)},
                   {"code_2", code_json(d->c2)},
                   {"enumerator", w1.to_string()},
                   {"dual_enumerator_1", wd1.to_string()},
                   {"dual_enumerator_2", wd2.to_string()},
                   {"lambda", d->lambda},
                   {"A1", big_string(predicted.a1)},
                   {"A2", big_string(predicted.a2)}});
    }
    return out;
}

/// First (v, w) with equal weight and w outside the orbit of v.
std::optional<std::pair<Index, Index>> split_weight_class(Context& ctx) {
    const auto& orbit = ctx.orbit_labels();
    const auto& w = ctx.weights();
    std::map<std::size_t, Index> rep;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        auto [it, inserted] = rep.try_emplace(w[i], static_cast<Index>(i));
        if (!inserted && orbit[it->second] != orbit[i]) return std::pair{it->second, static_cast<Index>(i)};
    }
    return std::nullopt;
}

Outcome check_p2(Context& ctx) {
    const Space& sp = ctx.space();
    const auto& w = ctx.weights();
    Outcome out{false, "", json::object()};
    if (auto split = split_weight_class(ctx)) {
        out = {true, "weight-preserving map " + sp.vector_at(split->first).to_string() + " -> " +
                         sp.vector_at(split->second).to_string() + " does not extend",
               {{"source", sp.vector_at(split->first).to_string()}, {"target", sp.vector_at(split->second).to_string()}}};
    }

    // Sampled maps on 2-dimensional codes.
    std::size_t sampled = 0;
    bool pairs_checked = false;
    if (!out.counterexample_found && sp.size() <= ctx.budget().max_work / sp.size() && sp.size() > 1) {
        pairs_checked = true;
        const unsigned q = ctx.field().order();
        std::mt19937_64 rng(ctx.budget().seed);
        std::uniform_int_distribution<Index> pick(1, static_cast<Index>(sp.size() - 1));
        auto combos = [&](Index x, Index y) {
            // weights of a x + b y for all (a, b)
            std::vector<std::uint8_t> out_w;
            Index ax = 0;
            for (unsigned a = 0; a < q; ++a) {
                Index s = ax;
                for (unsigned b = 0; b < q; ++b) {
                    out_w.push_back(w[s]);
                    s = sp.add(s, y);
                }
                ax = sp.add(ax, x);
            }
            return out_w;
        };
        for (std::size_t attempt = 0; attempt < 64 && sampled < 8 && !out.counterexample_found; ++attempt) {
            const Index v1 = pick(rng);
            const Index v2 = pick(rng);
            const auto profile = combos(v1, v2);
            // independence: only a = b = 0 gives the zero vector
            if (std::count(profile.begin(), profile.end(), 0) != 1) continue;
            ++sampled;
            std::set<std::pair<Index, Index>> images;
            for (const auto& perm : ctx.actions()) images.emplace(perm[v1], perm[v2]);
            for (Index w1 = 1; w1 < sp.size() && !out.counterexample_found; ++w1) {
                if (w[w1] != w[v1]) continue;
                for (Index w2 = 1; w2 < sp.size(); ++w2) {
                    if (w[w2] != w[v2] || combos(w1, w2) != profile) continue;
                    if (!images.count({w1, w2})) {
                        out = {true, "weight-preserving map on a 2-dimensional code does not extend",
                               {{"source", {sp.vector_at(v1).to_string(), sp.vector_at(v2).to_string()}},
                                {"target", {sp.vector_at(w1).to_string(), sp.vector_at(w2).to_string()}}}};
                        break;
                    }
                }
            }
        }
    }
    if (!out.counterexample_found) {
        out.summary = "every weight-preserving map between 1-dimensional codes extends";
        out.summary += pairs_checked ? "; " + std::to_string(sampled) + " sampled 2-dimensional codes also extend"
                                     : "; 2-dimensional sample skipped (work budget)";
    }
    if (const auto& d = ctx.defect()) {
        const Index eb = unit_index(ctx, d->b);
        const Index u = sp.index_of(d->u);
        const bool refutes = w[eb] == w[u] && ctx.orbit_labels()[eb] != ctx.orbit_labels()[u];
        if (refutes) {
            out.summary = "t(l e_b) = l u preserves weight " + std::to_string(w[eb]) + " but no isometry maps " +
                          sp.vector_at(eb).to_string() + " to " + d->u.to_string();
        }
        reconcile(Property::p2, ctx, out, refutes,
                  {{"source", sp.vector_at(eb).to_string()}, {"target", d->u.to_string()}, {"weight", w[eb]}});
    }
    return out;
}

using CountTable = std::vector<std::uint64_t>;

CountTable intersection_counts(Context& ctx, Index v) {
    const Space& sp = ctx.space();
    const auto& w = ctx.weights();
    const std::size_t n = sp.length();
    CountTable t((n + 1) * (n + 1), 0);
    for (std::size_t z = 0; z < sp.size(); ++z) ++t[w[z] * (n + 1) + w[sp.sub(v, static_cast<Index>(z))]];
    return t;
}

Outcome check_p3(Context& ctx) {
    ctx.require_pair_scan();
    const Space& sp = ctx.space();
    const auto& w = ctx.weights();
    const std::size_t n = sp.length();
    Outcome out{false, "", json::object()};
    std::map<std::size_t, std::pair<Index, CountTable>> tables;
    for (std::size_t v = 0; v < sp.size() && !out.counterexample_found; ++v) {
        auto t = intersection_counts(ctx, static_cast<Index>(v));
        auto [it, inserted] = tables.try_emplace(w[v], static_cast<Index>(v), t);
        if (inserted || it->second.second == t) continue;
        for (std::size_t cell = 0; cell < t.size(); ++cell) {
            if (t[cell] == it->second.second[cell]) continue;
            out = {true, "intersection numbers depend on more than the distance",
                   {{"first", sp.vector_at(it->second.first).to_string()},
                    {"second", sp.vector_at(static_cast<Index>(v)).to_string()},
                    {"i", cell / (n + 1)},
                    {"j", cell % (n + 1)},
                    {"count_first", it->second.second[cell]},
                    {"count_second", t[cell]}}};
            break;
        }
    }
    if (!out.counterexample_found) out.summary = "p^k_ij depends only on (i, j, k) for every pair";
    if (const auto& d = ctx.defect()) {
        const Index eb = unit_index(ctx, d->b);
        const Index u = sp.index_of(d->u);
        const std::size_t i = ctx.poset().elements_below_level(d->alpha - 1) + 1;
        const std::size_t j = w[eb] - 1;
        const auto te = intersection_counts(ctx, eb);
        const auto tu = intersection_counts(ctx, u);
        const auto ce = te[i * (n + 1) + j];
        const auto cu = tu[i * (n + 1) + j];
        const bool refutes = w[eb] == w[u] && ce == 0 && cu > 0;
        if (refutes) {
            out.summary = "#{z : wt z = " + std::to_string(i) + ", d(z, x) = " + std::to_string(j) + "} is " +
                          std::to_string(ce) + " for x = " + sp.vector_at(eb).to_string() + " but " + std::to_string(cu) +
                          " for x = " + d->u.to_string();
        }
        reconcile(Property::p3, ctx, out, refutes,
                  {{"first", sp.vector_at(eb).to_string()},
                   {"second", d->u.to_string()},
                   {"i", i},
                   {"j", j},
                   {"count_first", ce},
                   {"count_second", cu}});
    }
    return out;
}

/// P4 and P6 share the orbit data; P6 is the m = 1 shape-mapping statement.
Outcome check_orbits(Context& ctx, Property which) {
    const Space& sp = ctx.space();
    const auto& w = ctx.weights();
    Outcome out{false, "", json::object()};
    if (auto split = split_weight_class(ctx)) {
        const std::size_t r = w[split->first];
        out = {true, "GL_P has more than one orbit on the sphere of radius " + std::to_string(r),
               {{"radius", r},
                {"representative", sp.vector_at(split->first).to_string()},
                {"outside_orbit", sp.vector_at(split->second).to_string()}}};
    } else {
        out.summary = which == Property::p4 ? "GL_P is transitive on every sphere S(0, r)"
                                            : "orbits of GL_P coincide with the P-weight classes";
    }
    if (const auto& d = ctx.defect()) {
        const Index eb = unit_index(ctx, d->b);
        const Index u = sp.index_of(d->u);
        const bool refutes = w[eb] == w[u] && ctx.orbit_labels()[eb] != ctx.orbit_labels()[u];
        json canonical = {{"radius", w[eb]}, {"representative", sp.vector_at(eb).to_string()}, {"outside_orbit", d->u.to_string()}};
        if (which == Property::p4) {
            std::vector<Index> sphere;
            for (std::size_t i = 0; i < sp.size(); ++i)
                if (w[i] == w[eb]) sphere.push_back(static_cast<Index>(i));
            if (sphere.size() <= 64) canonical["sphere"] = vectors_json(sp, sphere);
            const auto orbit = ctx.orbit_of(eb);
            if (orbit.size() <= 64) canonical["orbit"] = vectors_json(sp, orbit);
            if (out.counterexample_found) canonical["first_failing_radius"] = out.witness["radius"];
            if (refutes) {
                out.summary = "sphere S(0, " + std::to_string(w[eb]) + ") has " + std::to_string(sphere.size()) +
                              " vectors but the orbit of " + sp.vector_at(eb).to_string() + " has " +
                              std::to_string(orbit.size());
            }
        } else {
            canonical["reduces_to"] = "P4";
            if (refutes) {
                out.summary = sp.vector_at(eb).to_string() + " and " + d->u.to_string() +
                              " have equal P-weight but lie in different orbits";
            }
        }
        reconcile(which, ctx, out, refutes, std::move(canonical));
    }
    return out;
}

struct Radii {
    std::size_t d;
    std::size_t packing;
};

Radii radii_of(Context& ctx, const LinearCode& c) {
    const auto words = detail::codeword_indices(ctx.space(), c);
    return {detail::minimum_weight(ctx.weights(), words), detail::packing_radius(ctx.space(), ctx.weights(), words)};
}

Outcome check_p5(Context& ctx) {
    auto family = one_dimensional_codes(ctx.field(), ctx.poset().size());
    for (auto& c : ctx.random_family()) family.push_back(std::move(c));
    std::map<std::size_t, std::pair<const LinearCode*, std::size_t>> seen;
    Outcome out{false, "", json::object()};
    for (const auto& c : family) {
        const Radii r = radii_of(ctx, c);
        auto [it, inserted] = seen.try_emplace(r.d, &c, r.packing);
        if (inserted || it->second.second == r.packing) continue;
        out = {true, "two codes with d = " + std::to_string(r.d) + " have different packing radii",
               {{"code_1", code_json(*it->second.first)},
                {"code_2", code_json(c)},
                {"minimum_distance", r.d},
                {"packing_1", it->second.second},
                {"packing_2", r.packing}}};
        break;
    }
    if (!out.counterexample_found) {
        out.summary = "packing radius is a function of d on all " + std::to_string(family.size()) + " codes";
    }
    if (const auto& d = ctx.defect()) {
        const Radii r1 = radii_of(ctx, d->c1);
        const Radii r2 = radii_of(ctx, d->c2);
        const bool refutes = r1.d == r2.d && r1.packing != r2.packing;
        if (refutes) {
            out.summary = "span{" + d->c1.generator().row(0).to_string() + "} and span{" + d->u.to_string() +
                          "} both have d = " + std::to_string(r1.d) + " but packing radii " + std::to_string(r1.packing) +
                          " and " + std::to_string(r2.packing);
        }
        reconcile(Property::p5, ctx, out, refutes,
                  {{"code_1", code_json(d->c1)},
                   {"code_2", code_json(d->c2)},
                   {"minimum_distance", r1.d},
                   {"packing_1", r1.packing},
                   {"packing_2", r2.packing}});
    }
    return out;
}

Outcome check_p7(Context& ctx) {
    const Poset& p = ctx.poset();
    const auto pair = incomparable_across_levels(p);
    Outcome out{false, "", json::object()};
    if (saturating_power(ctx.field().order(), p.size()) <= ctx.budget().max_space) {
        const auto v = vector_spanning_levels(p, ctx.field());
        if (v.has_value() != pair.has_value()) {
            throw InternalError("P7: order-theoretic check and vector scan disagree");
        }
    }
    if (pair) {
        const FqVector v = FqVector::unit(ctx.field(), p.size(), pair->first) +
                           FqVector::unit(ctx.field(), p.size(), pair->second);
        out = {true, "M(" + v.to_string() + ") = " + labels(p.maximal_elements(v.support())) + " meets two levels",
               {{"vector", v.to_string()}, {"maximal", labels(p.maximal_elements(v.support()))}}};
    } else {
        out.summary = "every maximal set of a support lies in one level";
    }
    if (const auto& d = ctx.defect()) {
        const FqVector v = FqVector::unit(ctx.field(), p.size(), d->a) + FqVector::unit(ctx.field(), p.size(), d->b);
        const ElementSet m = p.maximal_elements(v.support());
        const bool refutes = m.contains(d->a) && m.contains(d->b) && p.level_of(d->a) != p.level_of(d->b);
        if (refutes) out.summary = "M(" + v.to_string() + ") = " + labels(m) + " meets two levels";
        reconcile(Property::p7, ctx, out, refutes, {{"vector", v.to_string()}, {"maximal", labels(m)}});
    }
    return out;
}

Outcome check_p8(Context& ctx) {
    const Poset& p = ctx.poset();
    const std::size_t n = p.size();
    auto adj = [&](std::size_t i, std::size_t j) { return p.less(i, j) ? 1 : 0; };
    Outcome out{false, "", json::object()};
    for (std::size_t i = 0; i < n && !out.counterexample_found; ++i)
        for (std::size_t j = 0; j < n && !out.counterexample_found; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (adj(i, j) <= adj(i, k) + adj(k, j)) continue;
                out = {true, "", {{"i", i + 1}, {"j", j + 1}, {"k", k + 1}}};
                break;
            }
    auto describe = [&](std::size_t i, std::size_t j, std::size_t k) {
        auto s = [](std::size_t x) { return std::to_string(x + 1); };
        return "A_" + s(i) + s(j) + " = 1 > A_" + s(i) + s(k) + " + A_" + s(k) + s(j) + " = " +
               std::to_string(adj(i, k) + adj(k, j));
    };
    if (out.counterexample_found) {
        out.summary = describe(out.witness["i"].get<std::size_t>() - 1, out.witness["j"].get<std::size_t>() - 1,
                               out.witness["k"].get<std::size_t>() - 1);
    } else {
        out.summary = "A_ij <= A_ik + A_kj for all triples";
    }
    if (const auto& d = ctx.defect()) {
        const bool refutes = adj(d->c, d->b) > adj(d->c, d->a) + adj(d->a, d->b);
        if (refutes) out.summary = describe(d->c, d->b, d->a);
        reconcile(Property::p8, ctx, out, refutes, {{"i", d->c + 1}, {"j", d->b + 1}, {"k", d->a + 1}});
    }
    return out;
}

Outcome check_p9(Context& ctx) {
    const Poset& p = ctx.poset();
    if (p.size() > 24) throw CapacityError("ideal enumeration is limited to 24 elements");
    Outcome out{false, "", json::object()};
    std::map<std::size_t, ElementSet> rep;
    for (const Ideal& ideal : ideals_enumerate(p)) {
        auto [it, inserted] = rep.try_emplace(ideal.members.size(), ideal.members);
        if (inserted) continue;
        if (!are_isomorphic(restrict_to(p, it->second).poset, restrict_to(p, ideal.members).poset)) {
            out = {true, "ideals " + labels(it->second) + " and " + labels(ideal.members) + " have equal size but differ",
                   {{"ideal_1", labels(it->second)}, {"ideal_2", labels(ideal.members)}}};
            break;
        }
    }
    if (!out.counterexample_found) out.summary = "ideals of equal size are isomorphic";
    if (const auto& d = ctx.defect()) {
        const ElementSet i1 = p.down_set(d->b);
        ElementSet i2 = i1;
        i2.erase(d->b);
        i2.insert(d->a);
        const bool refutes = p.is_ideal(i2) && i1.size() == i2.size() &&
                             !are_isomorphic(restrict_to(p, i1).poset, restrict_to(p, i2).poset);
        if (refutes) {
            out.summary = "ideals " + labels(i1) + " and " + labels(i2) + " have equal size, only the first is prime";
        }
        reconcile(Property::p9, ctx, out, refutes, {{"ideal_1", labels(i1)}, {"ideal_2", labels(i2)}});
    }
    return out;
}

PropertyResult run_check(Context& ctx, Property which) {
    const auto start = std::chrono::steady_clock::now();
    PropertyResult res{which, Verdict::holds, "", json::object(), 0};
    try {
        Outcome out;
        switch (which) {
            case Property::p0: out = check_p0(ctx); break;
            case Property::p1: out = check_p1(ctx); break;
            case Property::p2: out = check_p2(ctx); break;
            case Property::p3: out = check_p3(ctx); break;
            case Property::p4: out = check_orbits(ctx, Property::p4); break;
            case Property::p5: out = check_p5(ctx); break;
            case Property::p6: out = check_orbits(ctx, Property::p6); break;
            case Property::p7: out = check_p7(ctx); break;
            case Property::p8: out = check_p8(ctx); break;
            case Property::p9: out = check_p9(ctx); break;
        }
        res.verdict = out.counterexample_found ? Verdict::fails : Verdict::holds;
        res.summary = std::move(out.summary);
        res.witness = std::move(out.witness);
    } catch (const CapacityError& e) {
        res.verdict = Verdict::skipped_capacity;
        res.summary = e.what();
    }
    res.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

DefectWitness build_defect(const Poset& p, const PrimeField& field) {
    const auto defect = find_hierarchy_defect(p);
    if (!defect) throw InputError("poset is hierarchical; there is no defect witness");
    const std::size_t n = p.size();
    const std::size_t alpha = defect->level_of_b;
    const ElementSet below_level = p.levels()[alpha - 1];
    const ElementSet span = p.ideal_of(ElementSet{defect->a, defect->b}) & below_level;

    FqVector u(field, n);
    for (std::size_t i : span) u.set(i, 1);
    std::size_t under_b = (p.down_set(defect->b) & below_level).size();

    DefectWitness w{alpha,
                    defect->a,
                    defect->b,
                    defect->c,
                    u,
                    LinearCode(field, n, std::vector<FqVector>{FqVector::unit(field, n, defect->b)}),
                    LinearCode(field, n, std::vector<FqVector>{u}),
                    below_level.size() - under_b,
                    span.size(),
                    n - p.elements_below_level(alpha - 1),
                    below_level.size()};
    return w;
}

BigInt compositions_of_zero(unsigned q, std::size_t m) {
    const BigInt q1 = q - 1;
    BigInt num = boost::multiprecision::pow(q1, static_cast<unsigned>(m));
    num += (m % 2 == 0 ? q1 : BigInt(-q1));
    return num / q;
}

DualCoefficients dual_coefficient_formulas(const DefectWitness& w) {
    const unsigned q = w.c1.field().order();
    const BigInt bq = q;
    const BigInt q1 = q - 1;
    const auto pw = [](const BigInt& base, std::size_t e) { return boost::multiprecision::pow(base, static_cast<unsigned>(e)); };
    const std::size_t above = w.lambda - w.level_below_size;  // lambda - n_{alpha-1}
    return {pw(q1, w.level_below_size) * pw(bq, above - 1),
            pw(q1, w.t - 1) * pw(bq, above) * compositions_of_zero(q, w.m)};
}

std::string property_name(Property p) { return "P" + std::to_string(static_cast<int>(p)); }

std::string_view property_statement(Property p) {
    switch (p) {
        case Property::p0: return "every linear code admits a canonical decomposition";
        case Property::p1: return "MacWilliams identity";
        case Property::p2: return "MacWilliams extension property";
        case Property::p3: return "association scheme";
        case Property::p4: return "GL_P acts transitively on spheres";
        case Property::p5: return "packing radius is a function of the minimum distance";
        case Property::p6: return "P-weight is a shape mapping";
        case Property::p7: return "M(v) lies in a single level";
        case Property::p8: return "adjacency matrix satisfies the triangle inequality";
        case Property::p9: return "equal-size ideals are isomorphic";
    }
    return "";
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::skipped_capacity: return "skipped";
    }
    return "";
}

PropertyResult check_property(const Poset& p, const PrimeField& field, Property which, const Budget& budget) {
    Context ctx(p, field, budget);
    return run_check(ctx, which);
}

PropertyReport full_report(const Poset& p, const PrimeField& field, const Budget& budget) {
    Context ctx(p, field, budget);
    PropertyReport report{{}, is_hierarchical(p), true};
    for (std::size_t i = 0; i < kPropertyCount; ++i) {
        report.results.push_back(run_check(ctx, static_cast<Property>(i)));
        const Verdict v = report.results.back().verdict;
        if (v == Verdict::skipped_capacity) continue;
        if ((v == Verdict::holds) != report.hierarchical) report.consistent = false;
    }
    return report;
}

std::optional<std::pair<std::size_t, std::size_t>> incomparable_across_levels(const Poset& p) {
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (p.level_of(a) < p.level_of(b) && !p.comparable(a, b)) return std::pair{a, b};
    return std::nullopt;
}

std::optional<FqVector> vector_spanning_levels(const Poset& p, const PrimeField& field) {
    const Space sp(field, p.size());
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const ElementSet m = p.maximal_elements(sp.support(static_cast<Index>(i)));
        std::set<std::size_t> levels;
        for (std::size_t e : m) levels.insert(p.level_of(e));
        if (levels.size() > 1) return sp.vector_at(static_cast<Index>(i));
    }
    return std::nullopt;
}

}  // namespace hposet
