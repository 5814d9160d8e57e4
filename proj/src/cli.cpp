#include "hposet/cli.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "hposet/error.hpp"
#include "hposet/hierarchy.hpp"
#include "hposet/io.hpp"
#include "hposet/isometry.hpp"
#include "hposet/pmetric.hpp"

namespace hposet {

using nlohmann::json;

namespace {

struct Report {
    int exit_code = kExitOk;
    json verdicts = json::object();
    json witnesses = json::object();
    json timings = json::object();
    std::ostringstream text;
};

struct Inputs {
    Poset poset;
    std::optional<LinearCode> code;
    PrimeField field;
};

Inputs load(const RunConfig& cfg, bool needs_code) {
    Poset p = parse_poset(read_text_file(cfg.poset_path));
    if (!needs_code) return {p, std::nullopt, PrimeField(cfg.q.value_or(2))};
    if (!cfg.code_path) throw InputError("command '" + cfg.command + "' needs a code file");
    LinearCode c = parse_code(read_text_file(*cfg.code_path));
    if (cfg.q && *cfg.q != c.field().order()) {
        throw InputError("--q " + std::to_string(*cfg.q) + " does not match the code file (q = " +
                         std::to_string(c.field().order()) + ")");
    }
    if (c.length() != p.size()) {
        throw InputError("code length " + std::to_string(c.length()) + " does not match the poset size " +
                         std::to_string(p.size()));
    }
    const PrimeField f = c.field();
    return {p, c, f};
}

std::string rows_text(const LinearCode& c) {
    if (c.is_zero()) return "{0}";
    std::string out;
    for (std::size_t r = 0; r < c.dimension(); ++r) out += (r ? " " : "") + c.generator().row(r).to_string();
    return out;
}

json rows_json(const LinearCode& c) {
    json out = json::array();
    for (std::size_t r = 0; r < c.dimension(); ++r) out.push_back(c.generator().row(r).to_string());
    return out;
}

std::string labels(ElementSet s) {
    std::string out = "{";
    for (std::size_t e : s) out += (out.size() > 1 ? "," : "") + std::to_string(e + 1);
    return out + "}";
}

void cmd_invariants(const Inputs& in, Report& rep) {
    const Poset& p = in.poset;
    const LinearCode& c = *in.code;
    const PInvariants brute = brute_invariants(p, c);
    json& w = rep.witnesses;
    w["brute"] = {{"d", brute.minimum_distance},
                  {"packing", brute.packing_radius},
                  {"covering", brute.covering_radius},
                  {"chebyshev", brute.chebyshev_radius},
                  {"chebyshev_center", brute.chebyshev_center.to_string()}};

    auto& t = rep.text;
    if (!is_hierarchical(p)) {
        t << "invariant   brute\n"
          << "d           " << brute.minimum_distance << "\n"
          << "packing     " << brute.packing_radius << "\n"
          << "covering    " << brute.covering_radius << "\n"
          << "chebyshev   " << brute.chebyshev_radius << "  (center " << brute.chebyshev_center.to_string() << ")\n"
          << "closed form: not available, poset is not hierarchical\n";
        rep.verdicts["closed_equals_brute"] = "n/a";
        return;
    }
    const HierarchicalInvariants closed = closed_invariants(p, c);
    w["closed"] = {{"d", closed.minimum_distance},
                   {"packing", closed.packing_radius},
                   {"covering", closed.covering_radius},
                   {"chebyshev", closed.chebyshev_radius},
                   {"t1", closed.t1 + 1},
                   {"h", closed.h + 1},
                   {"r", closed.r + 1}};
    bool agree = closed.minimum_distance == brute.minimum_distance && closed.packing_radius == brute.packing_radius &&
                 closed.covering_radius == brute.covering_radius && closed.chebyshev_radius == brute.chebyshev_radius;
    std::optional<std::size_t> binary;
    if (c.field().order() == 2) {
        binary = chebyshev_binary(p, c);
        w["chebyshev_binary"] = *binary;
        agree = agree && *binary == brute.chebyshev_radius;
    }
    const bool perfect = is_p_perfect(p, c);
    w["perfect"] = perfect;

    auto row = [&](const char* name, std::size_t a, std::size_t b) {
        t << std::left << std::setw(12) << name << std::setw(8) << a << b << (a == b ? "" : "  MISMATCH") << "\n";
    };
    t << "invariant   closed  brute\n";
    row("d", closed.minimum_distance, brute.minimum_distance);
    row("packing", closed.packing_radius, brute.packing_radius);
    row("covering", closed.covering_radius, brute.covering_radius);
    row("chebyshev", closed.chebyshev_radius, brute.chebyshev_radius);
    if (binary) t << "binary chebyshev identity: " << *binary << "\n";
    t << "levels: t1=" << closed.t1 + 1 << " h=" << closed.h + 1 << " r=" << closed.r + 1
      << "  chebyshev center " << brute.chebyshev_center.to_string() << "\n";
    t << "P-perfect: " << (perfect ? "yes" : "no") << "\n";
    t << "closed = brute: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    rep.verdicts["closed_equals_brute"] = agree ? "agree" : "disagree";
    if (!agree) rep.exit_code = kExitDisagreement;
}

void cmd_decompose(const Inputs& in, Report& rep) {
    const Poset& p = in.poset;
    const LinearCode& c = *in.code;
    const CanonicalDecomposition dec = canonical_decompose(p, c);
    const bool certified = apply(dec.certificate, c) == dec.assemble();
    auto& t = rep.text;
    json comps = json::array();
    for (const auto& comp : dec.components) {
        ElementSet members;
        for (std::size_t e : comp.embedding) members.insert(e);
        t << "level " << comp.level + 1 << "  elements " << labels(members) << "  k=" << comp.code.dimension()
          << "  C=" << rows_text(comp.code) << "\n";
        comps.push_back({{"level", comp.level + 1},
                         {"elements", labels(members)},
                         {"dimension", comp.code.dimension()},
                         {"generator", rows_json(comp.code)}});
    }
    const FqMatrix m = dec.certificate.dense();
    json cert = json::array();
    t << "certificate T (rows):\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        t << "  " << m.row(r).to_string() << "\n";
        cert.push_back(m.row(r).to_string());
    }
    t << "assembled code: " << rows_text(dec.assemble()) << "\n";
    t << "T(C) = assembled: " << (certified ? "yes" : "NO") << "\n";
    rep.witnesses["components"] = comps;
    rep.witnesses["certificate"] = cert;
    rep.witnesses["assembled"] = rows_json(dec.assemble());
    rep.verdicts["certificate_valid"] = certified;
    if (!certified) rep.exit_code = kExitDisagreement;
}

void compare_enumerators(Report& rep, const WeightEnumerator& formula, const WeightEnumerator& brute,
                         const char* formula_name) {
    const bool agree = formula == brute;
    rep.text << formula_name << ": " << formula.to_string() << "\n"
             << "brute force: " << brute.to_string() << "\n"
             << "agreement: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    rep.witnesses["formula"] = formula.to_string();
    rep.witnesses["brute"] = brute.to_string();
    rep.verdicts["formula_equals_brute"] = agree ? "agree" : "disagree";
    if (!agree) rep.exit_code = kExitDisagreement;
}

void cmd_macwilliams(const Inputs& in, Report& rep) {
    const WeightEnumerator formula = macwilliams_dual_enumerator(in.poset, *in.code);
    const WeightEnumerator brute = p_weight_enumerator(dual(in.poset), dual_code(*in.code));
    rep.text << "dual code under the dual poset\n";
    compare_enumerators(rep, formula, brute, "MacWilliams");
}

void cmd_enumerator(const Inputs& in, Report& rep) {
    const WeightEnumerator brute = p_weight_enumerator(in.poset, *in.code);
    if (!is_hierarchical(in.poset)) {
        rep.text << "P-weight enumerator: " << brute.to_string() << "\n";
        rep.witnesses["brute"] = brute.to_string();
        return;
    }
    compare_enumerators(rep, hierarchical_weight_enumerator(in.poset, *in.code), brute, "level formula");
}

void cmd_characterize(const Inputs& in, const RunConfig& cfg, Report& rep) {
    Budget budget;
    budget.max_group = cfg.budget_group;
    budget.max_space = cfg.budget_space;
    budget.seed = cfg.seed;
    const PropertyReport report = full_report(in.poset, in.field, budget);
    auto& t = rep.text;
    t << "poset is " << (report.hierarchical ? "" : "not ") << "hierarchical; q = " << in.field.order() << "\n";
    bool skipped = false;
    for (const auto& r : report.results) {
        const std::string name = property_name(r.property);
        const char* tag = r.verdict == Verdict::holds ? "HOLD" : r.verdict == Verdict::fails ? "FAIL" : "SKIP";
        t << name << " " << tag << "  " << property_statement(r.property) << ": " << r.summary << "\n";
        rep.verdicts[name] = verdict_name(r.verdict);
        if (!r.witness.empty()) rep.witnesses[name] = r.witness;
        rep.timings[name + "_ms"] = r.elapsed_ms;
        skipped = skipped || r.verdict == Verdict::skipped_capacity;
    }
    rep.verdicts["hierarchical"] = report.hierarchical;
    rep.verdicts["consistent"] = report.consistent;
    t << "verdicts " << (report.consistent ? "consistent" : "INCONSISTENT") << " with the hierarchy test\n";
    if (!report.consistent) {
        rep.exit_code = kExitDisagreement;
    } else if (skipped) {
        rep.exit_code = kExitCapacity;
    }
}

void cmd_isometries(const Inputs& in, const RunConfig& cfg, Report& rep) {
    const BigInt order = group_order(in.poset, in.field);
    rep.witnesses["order"] = order.str();
    if (cfg.count) {
        rep.text << order.str() << "\n";
        if (order <= cfg.budget_group && order <= kMaxGroupOrder) {
            std::uint64_t seen = 0;
            for_each_isometry(in.poset, in.field, [&](const LinearIsometry&) {
                ++seen;
                return true;
            });
            rep.verdicts["enumeration_matches_order"] = BigInt(seen) == order;
            if (BigInt(seen) != order) {
                rep.text << "enumeration produced " << seen << " elements\n";
                rep.exit_code = kExitDisagreement;
            }
        }
        return;
    }
    if (order > cfg.budget_group) {
        throw CapacityError("|GL_P(F_q)| = " + order.str() + " exceeds --budget-group");
    }
    json elements = json::array();
    std::size_t index = 0;
    for (const auto& t : enumerate_group(in.poset, in.field)) {
        std::string phi;
        for (std::size_t i : t.automorphism()) phi += (phi.empty() ? "" : " ") + std::to_string(i + 1);
        const FqMatrix m = t.dense();
        json rows = json::array();
        rep.text << "#" << ++index << "  phi = (" << phi << ")  T =";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            rep.text << " " << m.row(r).to_string();
            rows.push_back(m.row(r).to_string());
        }
        rep.text << "\n";
        elements.push_back({{"phi", phi}, {"matrix", rows}});
    }
    rep.witnesses["elements"] = elements;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Report rep;
    std::string error;
    try {
        if (cfg.budget_group == 0 || cfg.budget_space == 0) throw InputError("budgets must be positive");
        const std::string& c = cfg.command;
        const bool needs_code = c == "invariants" || c == "decompose" || c == "macwilliams" || c == "enumerator";
        if (!needs_code && c != "characterize" && c != "isometries") throw InputError("unknown command '" + c + "'");
        const Inputs in = load(cfg, needs_code);
        if (c == "invariants") cmd_invariants(in, rep);
        else if (c == "decompose") cmd_decompose(in, rep);
        else if (c == "macwilliams") cmd_macwilliams(in, rep);
        else if (c == "enumerator") cmd_enumerator(in, rep);
        else if (c == "characterize") cmd_characterize(in, cfg, rep);
        else cmd_isometries(in, cfg, rep);
    } catch (const InternalError& e) {
        rep.exit_code = kExitDisagreement;
        error = e.what();
    } catch (const CapacityError& e) {
        rep.exit_code = kExitCapacity;
        error = e.what();
    } catch (const Error& e) {
        rep.exit_code = kExitInputError;
        error = e.what();
    }
    rep.timings["total_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (cfg.format == OutputFormat::json) {
        json inputs = {{"poset", cfg.poset_path}};
        if (cfg.code_path) inputs["code"] = *cfg.code_path;
        if (cfg.q) inputs["q"] = *cfg.q;
        json doc = {{"command", cfg.command},
                    {"inputs", inputs},
                    {"verdicts", rep.verdicts},
                    {"witnesses", rep.witnesses},
                    {"timings", rep.timings},
                    {"seed", cfg.seed},
                    {"exit_code", rep.exit_code}};
        if (!error.empty()) doc["error"] = error;
        return {rep.exit_code, doc.dump() + "\n"};
    }
    std::string out = rep.text.str();
    if (!error.empty()) out += "error: " + error + "\n";
    if (cfg.command == "characterize") out += "seed " + std::to_string(cfg.seed) + "\n";
    return {rep.exit_code, out};
}

}  // namespace hposet
