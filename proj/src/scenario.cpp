#include "mie/scenario.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "mie/error.hpp"
#include "mie/format.hpp"
#include "mie/random.hpp"

namespace mie {

Universe generate_universe(std::uint64_t seed, std::size_t ib_size, std::size_t mc_size, std::size_t overlap_size,
                           bool monistic)
{
    if (overlap_size > std::min(ib_size, mc_size)) {
        throw Error(ErrorKind::InfeasibleShape, "overlap_size exceeds min(ib_size, mc_size)");
    }
    if (monistic && overlap_size != mc_size) {
        throw Error(ErrorKind::InfeasibleShape, "a monistic universe needs overlap_size == mc_size");
    }
    const std::size_t total = ib_size + mc_size - overlap_size;
    const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();

    std::vector<CharacteristicId> ids;
    ids.reserve(total);
    for (std::size_t i = 0; i < total; ++i) {
        std::string n = std::to_string(i);
        ids.emplace_back("c" + std::string(width - n.size(), '0') + n);
    }
    Rng rng(seed);
    rng.shuffle(ids);

    IdSet ib;
    IdSet mc;
    std::size_t i = 0;
    for (; i < overlap_size; ++i) {
        ib.insert(ids[i]);
        mc.insert(ids[i]);
    }
    for (std::size_t n = 0; n < ib_size - overlap_size; ++n, ++i) {
        ib.insert(ids[i]);
    }
    for (; i < total; ++i) {
        mc.insert(ids[i]);
    }
    return build_universe(std::move(ib), std::move(mc), monistic);
}

std::optional<Command> parse_command(std::string_view text) noexcept
{
    if (text == "evaluate") return Command::Evaluate;
    if (text == "tournament") return Command::Tournament;
    if (text == "learn") return Command::Learn;
    if (text == "venn") return Command::Venn;
    if (text == "sweep") return Command::Sweep;
    return std::nullopt;
}

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what)
{
    throw ConfigError(where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key)) {
        bad(where, std::string("missing \"") + key + "\"");
    }
    return obj.at(key);
}

std::uint64_t as_count(const json& v, const std::string& where)
{
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<std::int64_t>() < 0)) {
        bad(where, "expected a nonnegative integer");
    }
    return v.get<std::uint64_t>();
}

double as_real(const json& v, const std::string& where)
{
    if (!v.is_number()) {
        bad(where, "expected a number");
    }
    return v.get<double>();
}

double as_probability(const json& v, const std::string& where)
{
    const double p = as_real(v, where);
    if (!(p >= 0.0 && p <= 1.0)) {
        bad(where, "probability must lie in [0, 1]");
    }
    return p;
}

std::string as_string(const json& v, const std::string& where)
{
    if (!v.is_string()) {
        bad(where, "expected a string");
    }
    return v.get<std::string>();
}

std::vector<CharacteristicId> as_id_list(const json& v, const std::string& where)
{
    if (!v.is_array()) {
        bad(where, "expected an array of ids");
    }
    std::vector<CharacteristicId> out;
    for (const auto& item : v) {
        out.emplace_back(as_string(item, where));
    }
    return out;
}

IdSet as_id_set(const json& v, const std::string& where)
{
    const auto list = as_id_list(v, where);
    return IdSet(list.begin(), list.end());
}

LearningMethod as_method(const json& v, const std::string& where)
{
    auto m = parse_learning_method(as_string(v, where));
    if (!m) {
        bad(where, "method must be acquirement, filtering or specialization");
    }
    return *m;
}

ObserverSpec parse_observer(const json& v, const std::string& where)
{
    if (!v.is_object()) {
        bad(where, "expected an object");
    }
    ObserverSpec spec;
    if (v.contains("inclusion_probability")) {
        spec.inclusion_probability = as_probability(v.at("inclusion_probability"), where + ".inclusion_probability");
    }
    if (v.contains("mask")) {
        spec.mask = as_id_set(v.at("mask"), where + ".mask");
    }
    if (v.contains("seed")) {
        spec.seed = as_count(v.at("seed"), where + ".seed");
    }
    if (spec.inclusion_probability && spec.mask) {
        bad(where, "give either inclusion_probability or mask, not both");
    }
    return spec;
}

UniverseSpec parse_universe(const json& v)
{
    const std::string where = "universe";
    if (!v.is_object()) {
        bad(where, "expected an object");
    }
    UniverseSpec spec;
    if (v.contains("monistic")) {
        if (!v.at("monistic").is_boolean()) {
            bad(where + ".monistic", "expected a boolean");
        }
        spec.monistic = v.at("monistic").get<bool>();
    }
    if (v.contains("ib") || v.contains("mc")) {
        spec.ib = as_id_list(require(v, "ib", where), where + ".ib");
        spec.mc = as_id_list(require(v, "mc", where), where + ".mc");
        return spec;
    }
    GeneratedShape shape;
    shape.ib_size = as_count(require(v, "ib_size", where), where + ".ib_size");
    shape.mc_size = as_count(require(v, "mc_size", where), where + ".mc_size");
    shape.overlap_size = as_count(require(v, "overlap_size", where), where + ".overlap_size");
    if (shape.overlap_size > std::min(shape.ib_size, shape.mc_size)) {
        bad(where, "overlap_size must not exceed min(ib_size, mc_size)");
    }
    spec.shape = shape;
    return spec;
}

std::vector<Label> parse_labels(const json& v)
{
    const std::string where = "label_space";
    if (!v.is_array()) {
        bad(where, "expected an array of {name, encoding}");
    }
    std::vector<Label> out;
    for (const auto& item : v) {
        out.push_back({as_string(require(item, "name", where), where + ".name"),
                       as_real(require(item, "encoding", where), where + ".encoding")});
    }
    return out;
}

TestSpec parse_test(const json& v, std::size_t index)
{
    const std::string where = "tests[" + std::to_string(index) + "]";
    if (!v.is_object()) {
        bad(where, "expected an object");
    }
    TestSpec t;
    t.name = v.contains("name") ? as_string(v.at("name"), where + ".name") : "test" + std::to_string(index);
    if (v.contains("observer")) {
        t.observer = parse_observer(v.at("observer"), where + ".observer");
    }
    if (v.contains("seed")) {
        t.seed = as_count(v.at("seed"), where + ".seed");
    }
    if (v.contains("classifier")) {
        const auto& c = v.at("classifier");
        if (!c.is_object()) {
            bad(where + ".classifier", "expected an object of id -> label");
        }
        for (const auto& [key, value] : c.items()) {
            t.classifier.emplace(CharacteristicId(key), as_string(value, where + ".classifier"));
        }
        t.rule = ClassifierRule::Explicit;
        return t;
    }
    const std::string rule = v.contains("rule") ? as_string(v.at("rule"), where + ".rule") : "oracle";
    if (rule == "oracle") {
        t.rule = ClassifierRule::Oracle;
    } else if (rule == "constant") {
        t.rule = ClassifierRule::Constant;
        t.label = as_string(require(v, "label", where), where + ".label");
    } else if (rule == "random") {
        t.rule = ClassifierRule::Random;
    } else if (rule == "noisy_oracle") {
        t.rule = ClassifierRule::NoisyOracle;
        t.flip_probability = as_probability(require(v, "flip_probability", where), where + ".flip_probability");
    } else {
        bad(where + ".rule", "unknown rule '" + rule + "'");
    }
    return t;
}

VennSpec parse_venn(const json& v)
{
    const std::string where = "venn";
    VennSpec spec;
    spec.start.r_truth = as_real(require(v, "r_truth", where), where + ".r_truth");
    spec.start.r_belief = as_real(require(v, "r_belief", where), where + ".r_belief");
    spec.start.d = as_real(require(v, "d", where), where + ".d");
    if (!(spec.start.r_truth > 0.0) || !(spec.start.r_belief > 0.0) || !(spec.start.d >= 0.0)) {
        bad(where, "radii must be positive and d nonnegative");
    }
    spec.method = as_method(require(v, "method", where), where + ".method");
    spec.delta = as_real(require(v, "delta", where), where + ".delta");
    if (!(spec.delta > 0.0)) {
        bad(where + ".delta", "must be positive");
    }
    spec.steps = as_count(require(v, "steps", where), where + ".steps");
    return spec;
}

ScenarioConfig parse_config_unchecked(const json& doc)
{
    if (!doc.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    ScenarioConfig c;
    if (doc.contains("seed")) {
        c.seed = as_count(doc.at("seed"), "seed");
    }
    c.universe = parse_universe(require(doc, "universe", "config"));
    if (doc.contains("observer")) {
        c.observer = parse_observer(doc.at("observer"), "observer");
    }
    if (doc.contains("label_space")) {
        c.label_space = parse_labels(doc.at("label_space"));
    }
    if (doc.contains("tests")) {
        const auto& tests = doc.at("tests");
        if (!tests.is_array()) {
            bad("tests", "expected an array");
        }
        for (std::size_t i = 0; i < tests.size(); ++i) {
            c.tests.push_back(parse_test(tests[i], i));
        }
    }
    if (doc.contains("learn")) {
        const auto& v = doc.at("learn");
        LearnSpec l;
        l.method = as_method(require(v, "method", "learn"), "learn.method");
        l.steps = as_count(require(v, "steps", "learn"), "learn.steps");
        if (l.steps == 0) {
            bad("learn.steps", "must be at least 1");
        }
        if (v.contains("focus")) {
            l.focus = as_id_set(v.at("focus"), "learn.focus");
        }
        c.learn = l;
    }
    if (doc.contains("venn")) {
        c.venn = parse_venn(doc.at("venn"));
    }
    if (doc.contains("sweep")) {
        const auto& v = doc.at("sweep");
        SweepSpec s;
        const auto& grid = require(v, "inclusion_probabilities", "sweep");
        if (!grid.is_array() || grid.empty()) {
            bad("sweep.inclusion_probabilities", "expected a nonempty array");
        }
        for (const auto& p : grid) {
            s.inclusion_probabilities.push_back(as_probability(p, "sweep.inclusion_probabilities"));
        }
        if (v.contains("replicates")) {
            s.replicates = as_count(v.at("replicates"), "sweep.replicates");
        }
        c.sweep = s;
    }
    if (doc.contains("output")) {
        const auto& v = doc.at("output");
        if (v.contains("path")) {
            c.output_path = as_string(v.at("path"), "output.path");
        }
        if (v.contains("format")) {
            const std::string f = as_string(v.at("format"), "output.format");
            if (f == "csv") {
                c.format = OutputFormat::Csv;
            } else if (f == "json") {
                c.format = OutputFormat::Json;
            } else {
                bad("output.format", "must be csv or json");
            }
        }
    }
    return c;
}

} // namespace

ScenarioConfig parse_config(const nlohmann::json& doc)
{
    try {
        return parse_config_unchecked(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(e.what());
    }
}

ScenarioConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path.string() + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_config(doc);
}

namespace {

Observer make_observer(const ObserverSpec& spec, std::uint64_t default_seed, const Universe& universe)
{
    if (spec.mask) {
        return Observer::mask(*spec.mask);
    }
    if (spec.inclusion_probability) {
        return Observer::bernoulli(spec.seed.value_or(default_seed), *spec.inclusion_probability);
    }
    return Observer::full(universe);
}

Classifier make_classifier(const TestSpec& spec, std::uint64_t seed, const Universe& universe,
                           const LabelSpace& space)
{
    const ObservedView everything{universe.mc(), universe.imc()};
    Classifier out;
    switch (spec.rule) {
    case ClassifierRule::Explicit:
        return spec.classifier;
    case ClassifierRule::Oracle:
        return oracle_for(universe, everything, space).classifier;
    case ClassifierRule::Constant:
        if (!space.contains(spec.label)) {
            throw Error(ErrorKind::UnknownLabel, "constant label '" + spec.label + "' is not in the space");
        }
        for (const auto& id : universe.mc()) {
            out.emplace_hint(out.end(), id, spec.label);
        }
        return out;
    case ClassifierRule::Random: {
        Rng rng(seed);
        for (const auto& id : universe.mc()) {
            out.emplace_hint(out.end(), id, space.labels()[rng.below(space.size())].name);
        }
        return out;
    }
    case ClassifierRule::NoisyOracle: {
        Rng rng(seed);
        out = oracle_for(universe, everything, space).classifier;
        for (auto& [id, label] : out) {
            if (rng.bernoulli(spec.flip_probability)) {
                label = label == space.intelligent_label() ? space.unintelligent_label() : space.intelligent_label();
            }
        }
        return out;
    }
    }
    return out;
}

} // namespace

Scenario instantiate(const ScenarioConfig& config)
{
    const UniverseSpec& u = config.universe;
    Universe universe = u.shape
        ? generate_universe(config.seed, u.shape->ib_size, u.shape->mc_size, u.shape->overlap_size, u.monistic)
        : build_universe(u.ib, u.mc, u.monistic);
    LabelSpace space = config.label_space ? LabelSpace::create(*config.label_space) : LabelSpace::binary();
    if (!detached(universe, space)) {
        throw Error(ErrorKind::LabelCollision, "a characteristic id coincides with a label name");
    }
    Observer observer = make_observer(config.observer, config.seed, universe);

    std::vector<IntelligenceTest> tests;
    for (std::size_t i = 0; i < config.tests.size(); ++i) {
        const TestSpec& spec = config.tests[i];
        IntelligenceTest t;
        t.name = spec.name;
        t.observer = spec.observer ? make_observer(*spec.observer, config.seed, universe) : observer;
        t.classifier = make_classifier(spec, spec.seed.value_or(config.seed + i + 1), universe, space);
        tests.push_back(std::move(t));
    }
    return Scenario{std::move(universe), std::move(space), std::move(observer), std::move(tests)};
}

namespace {

const char* const kReportHeader = "eta,c_a,q,q_normalized,n_e,s_e";

std::string report_csv_fields(const QualityReport& r)
{
    return format_number(r.eta) + "," + format_number(r.c_a) + "," + format_number(r.q) + ","
        + format_number(r.q_normalized) + "," + std::to_string(r.n_e) + "," + format_number(r.s_e);
}

OutputFormat default_format(Command command)
{
    return command == Command::Evaluate || command == Command::Tournament ? OutputFormat::Json
                                                                          : OutputFormat::Csv;
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

std::string render_evaluate(const ScenarioConfig& config, OutputFormat format)
{
    const Scenario s = instantiate(config);
    const IntelligenceTest test = s.tests.empty()
        ? IntelligenceTest{"oracle", s.observer, oracle_for(s.universe, observe(s.universe, s.observer), s.space).classifier}
        : s.tests.front();
    const QualityReport r = evaluate_test(test, s.universe, s.space);
    if (format == OutputFormat::Json) {
        return dump(to_json(r));
    }
    return std::string("name,") + kReportHeader + "\n" + test.name + "," + report_csv_fields(r) + "\n";
}

std::string render_tournament(const ScenarioConfig& config, OutputFormat format)
{
    const Scenario s = instantiate(config);
    if (s.tests.empty()) {
        throw ConfigError("tournament: \"tests\" must list at least one test");
    }
    const auto ranking = tournament(s.tests, s.universe, s.space);
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::json::array();
        for (std::size_t i = 0; i < ranking.size(); ++i) {
            arr.push_back({{"rank", i + 1}, {"name", ranking[i].name}, {"report", to_json(ranking[i].report)}});
        }
        return dump(arr);
    }
    std::string out = std::string("rank,name,") + kReportHeader + "\n";
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        out += std::to_string(i + 1) + "," + ranking[i].name + "," + report_csv_fields(ranking[i].report) + "\n";
    }
    return out;
}

std::string render_learn(const ScenarioConfig& config, OutputFormat format)
{
    if (!config.learn) {
        throw ConfigError("learn: missing \"learn\" block");
    }
    const Scenario s = instantiate(config);
    TrajectoryOptions opts;
    opts.method = config.learn->method;
    opts.steps = config.learn->steps;
    opts.seed = config.seed;
    opts.reference_observer = s.observer;
    if (config.learn->focus) {
        opts.focus = Focus{*config.learn->focus};
    }
    const Trajectory t = run_trajectory(s.universe, opts);
    if (format == OutputFormat::Json) {
        auto steps = nlohmann::json::array();
        for (const auto& r : t.steps) {
            steps.push_back({{"step", r.step},
                             {"mc_size", r.mc_size},
                             {"imc_size", r.imc_size},
                             {"ratio", round_significant(r.ratio)},
                             {"eta", round_significant(r.eta)}});
        }
        nlohmann::json doc{{"method", to_string(opts.method)}, {"steps", steps}};
        doc["terminal_reason"] = t.terminal_reason ? nlohmann::json(*t.terminal_reason) : nlohmann::json(nullptr);
        return dump(doc);
    }
    std::string out = "step,mc_size,imc_size,ratio,eta\n";
    for (const auto& r : t.steps) {
        out += std::to_string(r.step) + "," + std::to_string(r.mc_size) + "," + std::to_string(r.imc_size) + ","
            + format_number(r.ratio) + "," + format_number(r.eta) + "\n";
    }
    return out;
}

std::string render_venn(const ScenarioConfig& config, OutputFormat format)
{
    if (!config.venn) {
        throw ConfigError("venn: missing \"venn\" block");
    }
    const VennSpec& spec = *config.venn;
    std::vector<VennConfiguration> states{spec.start};
    std::optional<std::string> terminal;
    validate(spec.start);
    for (std::size_t i = 0; i < spec.steps; ++i) {
        try {
            states.push_back(venn_step(states.back(), spec.method, spec.delta));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::RadiusUnderflow) {
                throw;
            }
            terminal = "radius underflow";
            break;
        }
    }
    if (format == OutputFormat::Json) {
        auto arr = nlohmann::json::array();
        for (std::size_t i = 0; i < states.size(); ++i) {
            const auto& v = states[i];
            arr.push_back({{"step", i},
                           {"r_truth", round_significant(v.r_truth)},
                           {"r_belief", round_significant(v.r_belief)},
                           {"d", round_significant(v.d)},
                           {"lens_area", round_significant(lens_area(v))}});
        }
        nlohmann::json doc{{"method", to_string(spec.method)}, {"steps", arr}};
        doc["terminal_reason"] = terminal ? nlohmann::json(*terminal) : nlohmann::json(nullptr);
        return dump(doc);
    }
    std::string out = "step,r_truth,r_belief,d,lens_area\n";
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& v = states[i];
        out += std::to_string(i) + "," + format_number(v.r_truth) + "," + format_number(v.r_belief) + ","
            + format_number(v.d) + "," + format_number(lens_area(v)) + "\n";
    }
    return out;
}

std::string render_sweep(const ScenarioConfig& config, OutputFormat format)
{
    if (!config.sweep) {
        throw ConfigError("sweep: missing \"sweep\" block");
    }
    const Scenario s = instantiate(config);
    std::vector<IntelligenceTest> tests = s.tests;
    if (tests.empty()) {
        tests.push_back({"oracle", s.observer,
                         oracle_for(s.universe, ObservedView{s.universe.mc(), s.universe.imc()}, s.space).classifier});
    }
    auto arr = nlohmann::json::array();
    std::string csv = std::string("inclusion_probability,replicate,name,") + kReportHeader + "\n";
    for (const double p : config.sweep->inclusion_probabilities) {
        for (std::size_t r = 0; r < config.sweep->replicates; ++r) {
            const Observer observer = Observer::bernoulli(config.seed + r, p);
            for (auto t : tests) {
                t.observer = observer;
                const QualityReport q = evaluate_test(t, s.universe, s.space);
                if (format == OutputFormat::Json) {
                    arr.push_back({{"inclusion_probability", round_significant(p)},
                                   {"replicate", r},
                                   {"name", t.name},
                                   {"report", to_json(q)}});
                } else {
                    csv += format_number(p) + "," + std::to_string(r) + "," + t.name + "," + report_csv_fields(q)
                        + "\n";
                }
            }
        }
    }
    return format == OutputFormat::Json ? dump(arr) : csv;
}

} // namespace

std::string render_report(Command command, const ScenarioConfig& config)
{
    const OutputFormat format = config.format.value_or(default_format(command));
    switch (command) {
    case Command::Evaluate: return render_evaluate(config, format);
    case Command::Tournament: return render_tournament(config, format);
    case Command::Learn: return render_learn(config, format);
    case Command::Venn: return render_venn(config, format);
    case Command::Sweep: return render_sweep(config, format);
    }
    return {};
}

int run_scenario(Command command, const std::filesystem::path& config_path, const RunOverrides& overrides,
                 std::ostream& out, std::ostream& diag)
{
    std::string report;
    std::optional<std::filesystem::path> target;
    try {
        ScenarioConfig config = load_config(config_path);
        if (overrides.seed) {
            config.seed = *overrides.seed;
        }
        target = overrides.out ? overrides.out : config.output_path;
        report = render_report(command, config);
    } catch (const ConfigError& e) {
        diag << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        diag << "domain error: " << e.what() << "\n";
        return 3;
    }

    if (!target) {
        out << report;
        return out ? 0 : 1;
    }
    std::ofstream file(*target, std::ios::binary | std::ios::trunc);
    if (!file) {
        diag << "cannot write '" << target->string() << "'\n";
        return 1;
    }
    file << report;
    return file ? 0 : 1;
}

} // namespace mie
