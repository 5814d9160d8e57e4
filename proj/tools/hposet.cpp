#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hposet/cli.hpp"

int main(int argc, char** argv) {
    hposet::RunConfig cfg;
    std::string format = "text";
    std::string code_path;
    unsigned q = 0;

    CLI::App app{"Poset-metric codes: invariants, canonical decomposition, MacWilliams, characterization"};
    app.add_option("command", cfg.command,
                   "invariants | decompose | macwilliams | characterize | enumerator | isometries")
        ->required();
    app.add_option("poset", cfg.poset_path, "poset file (n <size> / rel <a> <b>)")->required();
    app.add_option("code", code_path, "code file (q <p> n <len> k <rows> + rows)");
    app.add_option("--q", q, "field order (commands without a code file; default 2)");
    app.add_option("--budget-group", cfg.budget_group, "largest group order to enumerate");
    app.add_option("--budget-space", cfg.budget_space, "largest q^n to scan exhaustively");
    app.add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", cfg.seed, "seed for randomized code families");
    app.add_flag("--count", cfg.count, "isometries: print only the group order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : hposet::kExitInputError;
    }
    if (!code_path.empty()) cfg.code_path = code_path;
    if (q != 0) cfg.q = q;
    cfg.format = format == "json" ? hposet::OutputFormat::json : hposet::OutputFormat::text;

    const auto result = hposet::run(cfg);
    (result.exit_code == hposet::kExitInputError ? std::cerr : std::cout) << result.output;
    return result.exit_code;
}
