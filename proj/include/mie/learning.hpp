#ifndef MIE_LEARNING_HPP
#define MIE_LEARNING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mie/universe.hpp"

namespace mie {

enum class LearningMethod { Acquirement, Filtering, Specialization };

std::string_view to_string(LearningMethod m) noexcept;
std::optional<LearningMethod> parse_learning_method(std::string_view text) noexcept;

/// Adds k characteristics drawn uniformly (seeded) from IB \ MC to MC.
/// Throws AcquisitionExhausted when fewer than k remain.
Universe acquire(const Universe& universe, std::size_t k, std::uint64_t seed);

/// A localized part of IB. Never replaces the universe's IB.
struct Focus {
    IdSet ib_star;
};

/// Permutation of MC, least relevant first.
struct RelevanceRanking {
    std::vector<CharacteristicId> order;
};

/// Characteristics outside the tracked intelligent set (IMC, or IB* ∩ MC
/// under a focus) come first; each band is shuffled with `seed`.
RelevanceRanking default_ranking(const Universe& universe, std::uint64_t seed,
                                 const Focus* focus = nullptr);

/// Drops the k lowest-ranked characteristics from MC.
/// Throws KTooLarge or InvalidRanking (not a permutation of MC).
Universe filter_step(const Universe& universe, const RelevanceRanking& ranking, std::size_t k);

struct SpecializedView {
    Universe universe;
    IdSet imc_star;
};

/// Throws FocusOutsideIB unless focus.ib_star ⊆ ib.
SpecializedView specialize(const Universe& universe, const Focus& focus);

struct TrajectoryStep {
    std::size_t step = 0;
    std::size_t mc_size = 0;
    std::size_t imc_size = 0;
    double ratio = 1.0;
    double eta = 0.0;
};

struct Trajectory {
    std::vector<TrajectoryStep> steps;
    // Set when the run stopped before the requested number of steps.
    std::optional<std::string> terminal_reason;
};

struct TrajectoryOptions {
    LearningMethod method = LearningMethod::Acquirement;
    std::size_t steps = 1;
    std::uint64_t seed = 0;
    Observer reference_observer;
    // Filtering ranks against IB* ∩ MC and specialization starts from IB*
    // when set; specialization otherwise starts from all of IB.
    std::optional<Focus> focus;
};

/// One unit step per iteration, recording the state after each step.
/// imc_size tracks IB* ∩ MC under a focus and for specialization; eta always
/// uses the unfocused IMC. Mask observers are clipped to the current MC.
Trajectory run_trajectory(const Universe& universe, const TrajectoryOptions& options);

/// Orders machines by |IMC|; the intelligent fraction plays no part.
std::strong_ordering compare_machines(const Universe& a, const Universe& b) noexcept;

/// Truth and belief as circles: radius tracks cardinality, the lens of
/// overlap stands for knowledge.
struct VennConfiguration {
    double r_truth = 1.0;
    double r_belief = 1.0;
    double d = 0.0;

    friend bool operator==(const VennConfiguration&, const VennConfiguration&) = default;
};

void validate(const VennConfiguration& v);

/// Exact area of intersection of the two circles.
double lens_area(const VennConfiguration& v);

/// acquirement grows r_belief; filtering shrinks r_belief and d (d clamped
/// at 0); specialization shrinks r_truth. Throws RadiusUnderflow.
VennConfiguration venn_step(const VennConfiguration& v, LearningMethod method, double delta);

} // namespace mie

#endif
