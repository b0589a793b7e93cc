#ifndef MIE_METRICS_HPP
#define MIE_METRICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mie/test_model.hpp"
#include "mie/universe.hpp"

namespace mie {

struct EfficiencyInputs {
    std::size_t oimc_size = 0;
    std::size_t omc_size = 0;
    std::size_t imc_size = 0;
    std::size_t mc_size = 0;

    static EfficiencyInputs of(const Universe& universe, const ObservedView& view);
};

/// |OIMC||OMC| / (|IMC||MC|), zero when IMC or MC is empty.
/// Throws InconsistentCardinalities unless oimc <= imc, oimc <= omc, omc <= mc.
double efficiency(const EfficiencyInputs& in);

/// Summed label distance between a test and the oracle. `domain_size` is
/// empty for a stream of unknown length, in which case `max_possible` is
/// meaningless and accuracy uses the arctan branch.
struct ErrorSum {
    double value = 0.0;
    std::optional<std::size_t> domain_size;
    double max_possible = 0.0;

    [[nodiscard]] bool streaming() const noexcept { return !domain_size.has_value(); }
};

ErrorSum error_sum(const LabelAssignment& test, const LabelAssignment& oracle, const LabelSpace& space);

// Accumulates s_e and N_e one classification at a time.
class StreamingErrorSum {
public:
    explicit StreamingErrorSum(const LabelSpace& space) : space_(&space) {}

    void add(std::string_view oracle_label, std::string_view test_label);

    [[nodiscard]] double value() const noexcept { return value_; }
    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] std::size_t mismatches() const noexcept { return mismatches_; }

    [[nodiscard]] ErrorSum snapshot() const noexcept { return ErrorSum{value_, std::nullopt, 0.0}; }
    // Treats everything seen so far as the complete finite domain.
    [[nodiscard]] ErrorSum finalize() const noexcept;

private:
    const LabelSpace* space_;
    double value_ = 0.0;
    std::size_t count_ = 0;
    std::size_t mismatches_ = 0;
};

/// Finite: 1 - s_e / max(s_e), and 1 when max(s_e) is zero.
/// Streaming: 1 - (2/pi) atan(s_e).
double accuracy(const ErrorSum& s);

/// sqrt(c_a^2 + eta^2). Throws OutOfRange if either input leaves [0, 1].
double quality(double c_a, double eta);

std::size_t error_count(const LabelAssignment& test, const LabelAssignment& oracle, const LabelSpace& space);

struct QualityReport {
    double eta = 0.0;
    double c_a = 0.0;
    double q = 0.0;
    double q_normalized = 0.0;
    std::size_t n_e = 0;
    double s_e = 0.0;
};

QualityReport evaluate_test(const IntelligenceTest& test, const Universe& universe, const LabelSpace& space);

struct RankedTest {
    std::string name;
    QualityReport report;
};

// Descending q, then c_a, then eta, then ascending name.
bool ranks_before(const RankedTest& a, const RankedTest& b) noexcept;
std::vector<RankedTest> rank_reports(std::vector<RankedTest> entries);

/// Evaluates every test against the universe's oracle and ranks them.
/// Tests are evaluated concurrently; the ranking does not depend on it.
std::vector<RankedTest> tournament(std::span<const IntelligenceTest> tests, const Universe& universe,
                                   const LabelSpace& space);

nlohmann::json to_json(const QualityReport& report);

} // namespace mie

#endif
