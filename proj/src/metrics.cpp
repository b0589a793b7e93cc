#include "mie/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "mie/error.hpp"
#include "mie/format.hpp"

namespace mie {

EfficiencyInputs EfficiencyInputs::of(const Universe& universe, const ObservedView& view)
{
    return {view.oimc.size(), view.omc.size(), universe.imc().size(), universe.mc().size()};
}

double efficiency(const EfficiencyInputs& in)
{
    if (in.oimc_size > in.imc_size || in.oimc_size > in.omc_size || in.omc_size > in.mc_size) {
        throw Error(ErrorKind::InconsistentCardinalities,
                    "need |OIMC| <= |IMC|, |OIMC| <= |OMC| and |OMC| <= |MC|");
    }
    if (in.imc_size == 0 || in.mc_size == 0) {
        return 0.0;
    }
    const double observed = static_cast<double>(in.oimc_size) * static_cast<double>(in.omc_size);
    const double total = static_cast<double>(in.imc_size) * static_cast<double>(in.mc_size);
    return observed / total;
}

namespace {

void require_same_domain(const LabelAssignment& test, const LabelAssignment& oracle)
{
    const bool same = test.labels.size() == oracle.labels.size()
        && std::equal(test.labels.begin(), test.labels.end(), oracle.labels.begin(),
                      [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) {
        throw Error(ErrorKind::DomainMismatch, "test and oracle assignments cover different characteristics");
    }
}

} // namespace

ErrorSum error_sum(const LabelAssignment& test, const LabelAssignment& oracle, const LabelSpace& space)
{
    require_same_domain(test, oracle);
    StreamingErrorSum acc(space);
    auto t = test.labels.begin();
    for (const auto& [id, expected] : oracle.labels) {
        acc.add(expected, t->second);
        ++t;
    }
    return acc.finalize();
}

void StreamingErrorSum::add(std::string_view oracle_label, std::string_view test_label)
{
    const double d = label_distance(*space_, oracle_label, test_label);
    value_ += d;
    ++count_;
    if (d != 0.0) {
        ++mismatches_;
    }
}

ErrorSum StreamingErrorSum::finalize() const noexcept
{
    return ErrorSum{value_, count_, static_cast<double>(count_) * space_->max_distance()};
}

double accuracy(const ErrorSum& s)
{
    if (!(s.value >= 0.0) || std::isnan(s.value)) {
        throw Error(ErrorKind::InvalidErrorSum, "error sum must be nonnegative");
    }
    if (s.streaming()) {
        return 1.0 - (2.0 / std::numbers::pi) * std::atan(s.value);
    }
    if (*s.domain_size == 0 || s.max_possible == 0.0) {
        return 1.0;
    }
    if (s.value > s.max_possible) {
        throw Error(ErrorKind::InvalidErrorSum, "error sum exceeds its attainable maximum");
    }
    return 1.0 - s.value / s.max_possible;
}

double quality(double c_a, double eta)
{
    if (!(c_a >= 0.0 && c_a <= 1.0) || !(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::OutOfRange, "accuracy and efficiency must lie in [0, 1]");
    }
    return std::sqrt(c_a * c_a + eta * eta);
}

std::size_t error_count(const LabelAssignment& test, const LabelAssignment& oracle, const LabelSpace& space)
{
    require_same_domain(test, oracle);
    std::size_t n = 0;
    auto t = test.labels.begin();
    for (const auto& [id, expected] : oracle.labels) {
        if (label_distance(space, expected, t->second) != 0.0) {
            ++n;
        }
        ++t;
    }
    return n;
}

QualityReport evaluate_test(const IntelligenceTest& test, const Universe& universe, const LabelSpace& space)
{
    if (!detached(universe, space)) {
        throw Error(ErrorKind::LabelCollision, "a characteristic id coincides with a label name");
    }
    const ObservedView view = observe(universe, test.observer);
    const LabelAssignment assigned = classify_all(test, view, space);
    const IntelligenceTest oracle = oracle_for(universe, view, space);
    const LabelAssignment expected = classify_all(oracle, view, space);

    const ErrorSum s = error_sum(assigned, expected, space);

    QualityReport r;
    r.eta = efficiency(EfficiencyInputs::of(universe, view));
    r.c_a = accuracy(s);
    r.q = quality(r.c_a, r.eta);
    r.q_normalized = r.q / std::numbers::sqrt2;
    r.n_e = error_count(assigned, expected, space);
    r.s_e = s.value;
    return r;
}

bool ranks_before(const RankedTest& a, const RankedTest& b) noexcept
{
    if (a.report.q != b.report.q) {
        return a.report.q > b.report.q;
    }
    if (a.report.c_a != b.report.c_a) {
        return a.report.c_a > b.report.c_a;
    }
    if (a.report.eta != b.report.eta) {
        return a.report.eta > b.report.eta;
    }
    return a.name < b.name;
}

std::vector<RankedTest> rank_reports(std::vector<RankedTest> entries)
{
    std::stable_sort(entries.begin(), entries.end(), ranks_before);
    return entries;
}

std::vector<RankedTest> tournament(std::span<const IntelligenceTest> tests, const Universe& universe,
                                   const LabelSpace& space)
{
    if (tests.empty()) {
        throw Error(ErrorKind::EmptyField, "a tournament needs at least one test");
    }
    std::vector<std::future<QualityReport>> pending;
    pending.reserve(tests.size());
    for (const auto& t : tests) {
        pending.push_back(std::async(std::launch::async,
                                     [&t, &universe, &space] { return evaluate_test(t, universe, space); }));
    }
    std::vector<RankedTest> entries;
    entries.reserve(tests.size());
    for (std::size_t i = 0; i < tests.size(); ++i) {
        entries.push_back({tests[i].name, pending[i].get()});
    }
    return rank_reports(std::move(entries));
}

nlohmann::json to_json(const QualityReport& report)
{
    return nlohmann::json{
        {"eta", round_significant(report.eta)},
        {"c_a", round_significant(report.c_a)},
        {"q", round_significant(report.q)},
        {"q_normalized", round_significant(report.q_normalized)},
        {"n_e", report.n_e},
        {"s_e", round_significant(report.s_e)},
    };
}

} // namespace mie
