#ifndef MIE_UNIVERSE_HPP
#define MIE_UNIVERSE_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace mie {

/// Opaque identifier of a single characteristic (an element of IB, MC, WC, ...).
/// Kept as a distinct type from label names so a characteristic can never be
/// passed where a classification label is expected.
struct CharacteristicId {
    std::string value;

    CharacteristicId() = default;
    explicit CharacteristicId(std::string v) : value(std::move(v)) {}

    friend auto operator<=>(const CharacteristicId&, const CharacteristicId&) = default;
};

using IdSet = std::set<CharacteristicId>;

IdSet make_ids(std::initializer_list<const char*> names);

IdSet set_intersection(const IdSet& a, const IdSet& b);
IdSet set_difference(const IdSet& a, const IdSet& b);
bool is_subset(const IdSet& sub, const IdSet& super);

/// Characteristics of one machine against the fixed space of intelligent
/// behavior. IB is shared immutably between a universe and every universe
/// derived from it by a learning step, so `&u.ib()` identifies it.
class Universe {
public:
    [[nodiscard]] const IdSet& ib() const noexcept { return *ib_; }
    [[nodiscard]] const IdSet& mc() const noexcept { return mc_; }
    [[nodiscard]] const IdSet& imc() const noexcept { return imc_; }
    [[nodiscard]] bool monistic() const noexcept { return monistic_; }

    [[nodiscard]] const std::shared_ptr<const IdSet>& shared_ib() const noexcept { return ib_; }

    /// Same IB, different machine. Revalidates the monistic constraint.
    [[nodiscard]] Universe with_mc(IdSet mc) const;

private:
    friend Universe build_universe(const std::vector<CharacteristicId>&,
                                   const std::vector<CharacteristicId>&, bool);
    friend Universe build_universe(IdSet, IdSet, bool);

    Universe(std::shared_ptr<const IdSet> ib, IdSet mc, bool monistic);

    std::shared_ptr<const IdSet> ib_;
    IdSet mc_;
    IdSet imc_;
    bool monistic_ = false;
};

/// Throws DuplicateId on repeated ids within either list and
/// MonisticViolation when `monistic` and MC is not contained in IB.
Universe build_universe(const std::vector<CharacteristicId>& ib,
                        const std::vector<CharacteristicId>& mc, bool monistic);
Universe build_universe(IdSet ib, IdSet mc, bool monistic);

struct BernoulliObserver {
    std::uint64_t seed = 0;
    double inclusion_probability = 1.0;
};

struct MaskObserver {
    IdSet mask;
};

/// Either a seeded per-characteristic sampler or a fixed mask over MC.
struct Observer {
    std::variant<BernoulliObserver, MaskObserver> mode;

    static Observer bernoulli(std::uint64_t seed, double p);
    static Observer mask(IdSet ids);
    static Observer full(const Universe& u) { return mask(u.mc()); }
};

struct ObservedView {
    IdSet omc;
    IdSet oimc;
};

/// Pure in (universe, observer). Bernoulli observers walk MC in sorted order
/// drawing one uniform per element, so the result depends only on the seed
/// and the contents of MC.
ObservedView observe(const Universe& universe, const Observer& observer);

struct PlatonicSets {
    IdSet truth;
    IdSet belief;
    IdSet knowledge;
};

PlatonicSets map_to_platonic(const Universe& universe);

/// An entity observing the world: OWC is the noticed part of WC, and the
/// intelligence function maps OWC into IB.
struct WorldModel {
    IdSet wc;
    IdSet owc;
    std::map<CharacteristicId, CharacteristicId> fi;
};

struct PropertyReport {
    bool total = false;
    bool surjective_onto_ib = false;
    bool injective = false;
};

PropertyReport check_world_function(const WorldModel& world, const IdSet& ib);

// JSON document with sorted "ib", "mc", "monistic" and, when a view is
// supplied, "omc".
nlohmann::json to_json(const Universe& universe, const ObservedView* view = nullptr);
Universe universe_from_json(const nlohmann::json& doc);

} // namespace mie

#endif
