// Test-only generators and brute-force oracles. Nothing here calls into the
// library code paths it is used to check.
#ifndef MIE_TESTS_SUPPORT_HPP
#define MIE_TESTS_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mie/learning.hpp"
#include "mie/test_model.hpp"
#include "mie/universe.hpp"

namespace mie::testing {

inline CharacteristicId id_of(int n) { return CharacteristicId("x" + std::to_string(n)); }

struct RandomUniverse {
    IdSet ib;
    IdSet mc;
};

// Draws IB and MC from a pool of up to 40 ids; each id lands in IB, MC,
// both or neither independently.
inline RandomUniverse random_sets(std::mt19937_64& gen, bool monistic = false)
{
    std::uniform_int_distribution<int> pool_size(0, 40);
    std::uniform_int_distribution<int> region(0, 3);
    RandomUniverse out;
    const int n = pool_size(gen);
    for (int i = 0; i < n; ++i) {
        const int r = region(gen);
        const bool in_ib = r == 1 || r == 3;
        bool in_mc = r == 2 || r == 3;
        if (monistic && !in_ib) {
            in_mc = false;
        }
        if (in_ib) out.ib.insert(id_of(i));
        if (in_mc) out.mc.insert(id_of(i));
    }
    return out;
}

// Membership-by-membership set checks, independent of <algorithm>.
inline bool brute_subset(const IdSet& a, const IdSet& b)
{
    for (const auto& x : a) {
        if (b.find(x) == b.end()) return false;
    }
    return true;
}

inline IdSet brute_intersection(const IdSet& a, const IdSet& b)
{
    IdSet out;
    for (const auto& x : a) {
        if (b.count(x) != 0) out.insert(x);
    }
    return out;
}

// Random assignment pair over `n` ids drawn from `space`.
struct AssignmentPair {
    LabelAssignment oracle;
    LabelAssignment test;
};

inline AssignmentPair random_assignments(std::mt19937_64& gen, const LabelSpace& space, int n)
{
    std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);
    AssignmentPair p;
    for (int i = 0; i < n; ++i) {
        p.oracle.labels[id_of(i)] = space.labels()[pick(gen)].name;
        p.test.labels[id_of(i)] = space.labels()[pick(gen)].name;
    }
    return p;
}

inline std::size_t brute_mismatches(const AssignmentPair& p, const LabelSpace& space)
{
    std::size_t n = 0;
    for (const auto& [id, label] : p.oracle.labels) {
        const auto& other = p.test.labels.at(id);
        double a = 0, b = 0;
        for (const auto& l : space.labels()) {
            if (l.name == label) a = l.encoding;
            if (l.name == other) b = l.encoding;
        }
        if (a != b) ++n;
    }
    return n;
}

struct MonteCarloEstimate {
    double area = 0.0;
    double standard_error = 0.0;
};

// Hit-or-miss estimate of the circle intersection area: sample the bounding
// square of the smaller circle and count points inside both circles.
inline MonteCarloEstimate monte_carlo_lens(const VennConfiguration& v, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    // truth circle at the origin, belief circle at (d, 0)
    const bool truth_smaller = v.r_truth <= v.r_belief;
    const double r = truth_smaller ? v.r_truth : v.r_belief;
    const double cx = truth_smaller ? 0.0 : v.d;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double x = cx + r * unit(gen);
        const double y = r * unit(gen);
        const bool in_truth = x * x + y * y <= v.r_truth * v.r_truth;
        const double bx = x - v.d;
        const bool in_belief = bx * bx + y * y <= v.r_belief * v.r_belief;
        if (in_truth && in_belief) ++hits;
    }
    const double box = 4.0 * r * r;
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    return {box * p, box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

} // namespace mie::testing

#endif
