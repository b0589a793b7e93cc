#ifndef MIE_SCENARIO_HPP
#define MIE_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mie/learning.hpp"
#include "mie/metrics.hpp"
#include "mie/test_model.hpp"
#include "mie/universe.hpp"

namespace mie {

/// Malformed or out-of-range configuration (exit status 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Synthetic universe with exactly the requested cardinalities. Ids are
/// "c<n>" zero-padded; the seed decides which ids land in which region.
/// Throws InfeasibleShape.
Universe generate_universe(std::uint64_t seed, std::size_t ib_size, std::size_t mc_size,
                           std::size_t overlap_size, bool monistic);

enum class Command { Evaluate, Tournament, Learn, Venn, Sweep };
enum class OutputFormat { Csv, Json };

std::optional<Command> parse_command(std::string_view text) noexcept;

struct GeneratedShape {
    std::size_t ib_size = 0;
    std::size_t mc_size = 0;
    std::size_t overlap_size = 0;
};

struct UniverseSpec {
    std::optional<GeneratedShape> shape;
    std::vector<CharacteristicId> ib;
    std::vector<CharacteristicId> mc;
    bool monistic = false;
};

struct ObserverSpec {
    std::optional<double> inclusion_probability;
    std::optional<std::uint64_t> seed;
    std::optional<IdSet> mask;
};

enum class ClassifierRule { Explicit, Oracle, Constant, Random, NoisyOracle };

struct TestSpec {
    std::string name;
    std::optional<ObserverSpec> observer;
    ClassifierRule rule = ClassifierRule::Oracle;
    Classifier classifier;
    std::string label;
    double flip_probability = 0.0;
    std::optional<std::uint64_t> seed;
};

struct LearnSpec {
    LearningMethod method = LearningMethod::Acquirement;
    std::size_t steps = 1;
    std::optional<IdSet> focus;
};

struct VennSpec {
    VennConfiguration start;
    LearningMethod method = LearningMethod::Acquirement;
    double delta = 0.1;
    std::size_t steps = 1;
};

struct SweepSpec {
    std::vector<double> inclusion_probabilities;
    std::size_t replicates = 1;
};

struct ScenarioConfig {
    std::uint64_t seed = 0;
    UniverseSpec universe;
    ObserverSpec observer;
    std::optional<std::vector<Label>> label_space;
    std::vector<TestSpec> tests;
    std::optional<LearnSpec> learn;
    std::optional<VennSpec> venn;
    std::optional<SweepSpec> sweep;
    std::optional<std::filesystem::path> output_path;
    std::optional<OutputFormat> format;
};

/// Structural and range validation only; throws ConfigError.
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig load_config(const std::filesystem::path& path);

struct RunOverrides {
    std::optional<std::filesystem::path> out;
    std::optional<std::uint64_t> seed;
};

/// Materialized pieces of a scenario, shared by every subcommand.
struct Scenario {
    Universe universe;
    LabelSpace space;
    Observer observer;
    std::vector<IntelligenceTest> tests;
};

Scenario instantiate(const ScenarioConfig& config);

/// Builds the report text for one subcommand. Throws mie::Error on domain
/// failures and ConfigError when the subcommand's block is missing.
std::string render_report(Command command, const ScenarioConfig& config);

/// Full CLI behavior: parse, run, write. Returns the process exit status
/// (0 ok, 2 configuration error, 3 domain error, 1 I/O failure) and writes
/// diagnostics to `diag`. Reports go to the configured path or to `out`.
int run_scenario(Command command, const std::filesystem::path& config_path, const RunOverrides& overrides,
                 std::ostream& out, std::ostream& diag);

} // namespace mie

#endif
