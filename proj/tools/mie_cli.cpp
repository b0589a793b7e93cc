#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mie/scenario.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Machine-intelligence epistemology scenarios: test quality, learning trajectories, Venn sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;

    const char* names[] = {"evaluate", "tournament", "learn", "venn", "sweep"};
    const char* blurbs[] = {
        "Score one intelligence test (or the induced oracle) against the universe",
        "Rank every configured test by quality",
        "Run an acquirement / filtering / specialization trajectory",
        "Step the truth/belief circle model and report lens areas",
        "Evaluate tests over a grid of observer inclusion probabilities",
    };
    for (std::size_t i = 0; i < 5; ++i) {
        auto* sub = app.add_subcommand(names[i], blurbs[i]);
        sub->add_option("--config", config_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "Output file (overrides output.path)");
        sub->add_option("--seed", seed, "Override the scenario seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const auto* chosen = app.get_subcommands().front();
    mie::RunOverrides overrides;
    if (!out_path.empty()) {
        overrides.out = out_path;
    }
    if (chosen->count("--seed") > 0) {
        overrides.seed = seed;
    }
    return mie::run_scenario(*mie::parse_command(chosen->get_name()), config_path, overrides, std::cout, std::cerr);
}
