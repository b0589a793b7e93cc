#include "mie/learning.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mie/error.hpp"
#include "mie/metrics.hpp"
#include "mie/random.hpp"

namespace mie {

std::string_view to_string(LearningMethod m) noexcept
{
    switch (m) {
    case LearningMethod::Acquirement: return "acquirement";
    case LearningMethod::Filtering: return "filtering";
    case LearningMethod::Specialization: return "specialization";
    }
    return "unknown";
}

std::optional<LearningMethod> parse_learning_method(std::string_view text) noexcept
{
    if (text == "acquirement") return LearningMethod::Acquirement;
    if (text == "filtering") return LearningMethod::Filtering;
    if (text == "specialization") return LearningMethod::Specialization;
    return std::nullopt;
}

Universe acquire(const Universe& universe, std::size_t k, std::uint64_t seed)
{
    const IdSet pool_set = set_difference(universe.ib(), universe.mc());
    if (pool_set.size() < k) {
        throw Error(ErrorKind::AcquisitionExhausted,
                    "asked for " + std::to_string(k) + " new characteristics, " + std::to_string(pool_set.size())
                        + " remain");
    }
    if (k == 0) {
        return universe;
    }
    std::vector<CharacteristicId> pool(pool_set.begin(), pool_set.end());
    Rng rng(seed);
    // partial Fisher-Yates: the first k slots are the sample
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    IdSet mc = universe.mc();
    mc.insert(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    return universe.with_mc(std::move(mc));
}

RelevanceRanking default_ranking(const Universe& universe, std::uint64_t seed, const Focus* focus)
{
    const IdSet& relevant_pool = focus != nullptr ? focus->ib_star : universe.ib();
    std::vector<CharacteristicId> low;
    std::vector<CharacteristicId> high;
    for (const auto& id : universe.mc()) {
        (relevant_pool.contains(id) ? high : low).push_back(id);
    }
    Rng rng(seed);
    rng.shuffle(low);
    rng.shuffle(high);
    RelevanceRanking r;
    r.order = std::move(low);
    r.order.insert(r.order.end(), high.begin(), high.end());
    return r;
}

Universe filter_step(const Universe& universe, const RelevanceRanking& ranking, std::size_t k)
{
    const IdSet ranked(ranking.order.begin(), ranking.order.end());
    if (ranked.size() != ranking.order.size() || ranked != universe.mc()) {
        throw Error(ErrorKind::InvalidRanking, "ranking is not a permutation of mc");
    }
    if (k > universe.mc().size()) {
        throw Error(ErrorKind::KTooLarge, "cannot remove " + std::to_string(k) + " of "
                                              + std::to_string(universe.mc().size()) + " characteristics");
    }
    IdSet mc = universe.mc();
    for (std::size_t i = 0; i < k; ++i) {
        mc.erase(ranking.order[i]);
    }
    return universe.with_mc(std::move(mc));
}

SpecializedView specialize(const Universe& universe, const Focus& focus)
{
    if (!is_subset(focus.ib_star, universe.ib())) {
        throw Error(ErrorKind::FocusOutsideIB, "IB* must be a subset of IB");
    }
    return SpecializedView{universe, set_intersection(focus.ib_star, universe.mc())};
}

namespace {

Observer clip_to(const Observer& observer, const Universe& universe)
{
    if (const auto* m = std::get_if<MaskObserver>(&observer.mode)) {
        return Observer::mask(set_intersection(m->mask, universe.mc()));
    }
    return observer;
}

TrajectoryStep record(std::size_t index, const Universe& u, std::size_t tracked, const Observer& reference)
{
    TrajectoryStep s;
    s.step = index;
    s.mc_size = u.mc().size();
    s.imc_size = tracked;
    s.ratio = s.mc_size == 0 ? 1.0 : static_cast<double>(tracked) / static_cast<double>(s.mc_size);
    const ObservedView view = observe(u, clip_to(reference, u));
    s.eta = efficiency(EfficiencyInputs::of(u, view));
    return s;
}

} // namespace

Trajectory run_trajectory(const Universe& universe, const TrajectoryOptions& options)
{
    if (options.steps == 0) {
        throw Error(ErrorKind::OutOfRange, "a trajectory needs at least one step");
    }
    Trajectory out;
    Universe current = universe;
    const Focus* focus = options.focus ? &*options.focus : nullptr;
    if (focus != nullptr && !is_subset(focus->ib_star, universe.ib())) {
        throw Error(ErrorKind::FocusOutsideIB, "IB* must be a subset of IB");
    }

    auto tracked = [&](const Universe& u) {
        return focus != nullptr ? set_intersection(focus->ib_star, u.mc()).size() : u.imc().size();
    };

    switch (options.method) {
    case LearningMethod::Acquirement: {
        Rng seeds(options.seed);
        for (std::size_t i = 0; i < options.steps; ++i) {
            if (set_difference(current.ib(), current.mc()).empty()) {
                out.terminal_reason = "acquisition exhausted";
                break;
            }
            current = acquire(current, 1, seeds.next());
            out.steps.push_back(record(i, current, tracked(current), options.reference_observer));
        }
        break;
    }
    case LearningMethod::Filtering: {
        RelevanceRanking ranking = default_ranking(current, options.seed, focus);
        for (std::size_t i = 0; i < options.steps; ++i) {
            if (current.mc().empty()) {
                out.terminal_reason = "machine empty";
                break;
            }
            current = filter_step(current, ranking, 1);
            ranking.order.erase(ranking.order.begin());
            out.steps.push_back(record(i, current, tracked(current), options.reference_observer));
        }
        break;
    }
    case LearningMethod::Specialization: {
        IdSet ib_star = focus != nullptr ? focus->ib_star : universe.ib();
        Rng rng(options.seed);
        for (std::size_t i = 0; i < options.steps; ++i) {
            if (ib_star.empty()) {
                out.terminal_reason = "focus exhausted";
                break;
            }
            auto it = ib_star.begin();
            std::advance(it, static_cast<std::ptrdiff_t>(rng.below(ib_star.size())));
            ib_star.erase(it);
            const SpecializedView sv = specialize(current, Focus{ib_star});
            out.steps.push_back(record(i, sv.universe, sv.imc_star.size(), options.reference_observer));
        }
        break;
    }
    }
    return out;
}

std::strong_ordering compare_machines(const Universe& a, const Universe& b) noexcept
{
    return a.imc().size() <=> b.imc().size();
}

namespace {

// Area cut from a circle of radius r by a chord subtending 2 * half_angle.
double circular_segment(double r, double half_angle)
{
    const double t = 2.0 * half_angle;
    double t_minus_sin = 0.0;
    if (t < 1e-2) {
        // t - sin t, series to t^9
        const double t2 = t * t;
        t_minus_sin = t * t2 / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0 * (1.0 - t2 / 72.0)));
    } else {
        t_minus_sin = t - std::sin(t);
    }
    return 0.5 * r * r * t_minus_sin;
}

} // namespace

void validate(const VennConfiguration& v)
{
    const bool ok = std::isfinite(v.r_truth) && std::isfinite(v.r_belief) && std::isfinite(v.d) && v.r_truth > 0.0
        && v.r_belief > 0.0 && v.d >= 0.0;
    if (!ok) {
        throw Error(ErrorKind::InvalidVenn, "radii must be positive and finite, distance nonnegative");
    }
}

double lens_area(const VennConfiguration& v)
{
    validate(v);
    const double r1 = v.r_truth;
    const double r2 = v.r_belief;
    const double d = v.d;
    if (d >= r1 + r2) {
        return 0.0;
    }
    if (d <= std::abs(r1 - r2)) {
        const double r = std::min(r1, r2);
        return std::numbers::pi * r * r;
    }
    // Half-chord from the factored Heron form; each factor is a direct sum,
    // so it stays accurate as the circles approach tangency.
    const double k = (-d + r1 + r2) * (d + r1 - r2) * (d - r1 + r2) * (d + r1 + r2);
    const double half_chord = std::sqrt(std::max(k, 0.0)) / (2.0 * d);
    const double x1 = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double x2 = d - x1;
    const double area = circular_segment(r1, std::atan2(half_chord, x1))
        + circular_segment(r2, std::atan2(half_chord, x2));
    return std::clamp(area, 0.0, std::numbers::pi * std::min(r1, r2) * std::min(r1, r2));
}

VennConfiguration venn_step(const VennConfiguration& v, LearningMethod method, double delta)
{
    validate(v);
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        throw Error(ErrorKind::OutOfRange, "step size must be positive");
    }
    VennConfiguration next = v;
    switch (method) {
    case LearningMethod::Acquirement:
        next.r_belief += delta;
        break;
    case LearningMethod::Filtering:
        next.r_belief -= delta;
        next.d = std::max(0.0, next.d - delta);
        break;
    case LearningMethod::Specialization:
        next.r_truth -= delta;
        break;
    }
    if (next.r_truth <= 0.0 || next.r_belief <= 0.0) {
        throw Error(ErrorKind::RadiusUnderflow, "a radius would drop to zero or below");
    }
    return next;
}

} // namespace mie
