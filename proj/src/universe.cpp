#include "mie/universe.hpp"

#include <algorithm>
#include <iterator>

#include "mie/error.hpp"
#include "mie/random.hpp"

namespace mie {

IdSet make_ids(std::initializer_list<const char*> names)
{
    IdSet out;
    for (const char* n : names) {
        out.emplace(n);
    }
    return out;
}

IdSet set_intersection(const IdSet& a, const IdSet& b)
{
    IdSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

IdSet set_difference(const IdSet& a, const IdSet& b)
{
    IdSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

bool is_subset(const IdSet& sub, const IdSet& super)
{
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

namespace {

IdSet unique_ids(const std::vector<CharacteristicId>& ids, const char* which)
{
    IdSet out;
    for (const auto& id : ids) {
        if (!out.insert(id).second) {
            throw Error(ErrorKind::DuplicateId, std::string(which) + " repeats id '" + id.value + "'");
        }
    }
    return out;
}

void check_monistic(const IdSet& ib, const IdSet& mc)
{
    for (const auto& id : mc) {
        if (!ib.contains(id)) {
            throw Error(ErrorKind::MonisticViolation,
                        "machine characteristic '" + id.value + "' lies outside intelligent behavior");
        }
    }
}

} // namespace

Universe::Universe(std::shared_ptr<const IdSet> ib, IdSet mc, bool monistic)
    : ib_(std::move(ib)), mc_(std::move(mc)), monistic_(monistic)
{
    if (monistic_) {
        check_monistic(*ib_, mc_);
    }
    imc_ = set_intersection(*ib_, mc_);
}

Universe Universe::with_mc(IdSet mc) const { return Universe(ib_, std::move(mc), monistic_); }

Universe build_universe(const std::vector<CharacteristicId>& ib,
                        const std::vector<CharacteristicId>& mc, bool monistic)
{
    return build_universe(unique_ids(ib, "ib"), unique_ids(mc, "mc"), monistic);
}

Universe build_universe(IdSet ib, IdSet mc, bool monistic)
{
    return Universe(std::make_shared<const IdSet>(std::move(ib)), std::move(mc), monistic);
}

Observer Observer::bernoulli(std::uint64_t seed, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidProbability, "inclusion probability must lie in [0, 1]");
    }
    return Observer{BernoulliObserver{seed, p}};
}

Observer Observer::mask(IdSet ids) { return Observer{MaskObserver{std::move(ids)}}; }

ObservedView observe(const Universe& universe, const Observer& observer)
{
    ObservedView view;
    if (const auto* b = std::get_if<BernoulliObserver>(&observer.mode)) {
        if (!(b->inclusion_probability >= 0.0 && b->inclusion_probability <= 1.0)) {
            throw Error(ErrorKind::InvalidProbability, "inclusion probability must lie in [0, 1]");
        }
        Rng rng(b->seed);
        for (const auto& id : universe.mc()) {
            if (rng.bernoulli(b->inclusion_probability)) {
                view.omc.insert(view.omc.end(), id);
            }
        }
    } else {
        const auto& m = std::get<MaskObserver>(observer.mode);
        for (const auto& id : m.mask) {
            if (!universe.mc().contains(id)) {
                throw Error(ErrorKind::MaskOutsideMC, "mask id '" + id.value + "' is not in mc");
            }
        }
        view.omc = m.mask;
    }
    view.oimc = set_intersection(universe.imc(), view.omc);
    return view;
}

PlatonicSets map_to_platonic(const Universe& universe)
{
    return PlatonicSets{universe.ib(), universe.mc(), universe.imc()};
}

PropertyReport check_world_function(const WorldModel& world, const IdSet& ib)
{
    if (!is_subset(world.owc, world.wc)) {
        throw Error(ErrorKind::WorldOutsideDomain, "owc is not a subset of wc");
    }
    IdSet image;
    for (const auto& x : world.owc) {
        auto it = world.fi.find(x);
        if (it == world.fi.end()) {
            throw Error(ErrorKind::PartialFunction, "f_i is undefined for '" + x.value + "'");
        }
        if (!ib.contains(it->second)) {
            throw Error(ErrorKind::WorldOutsideDomain,
                        "f_i maps '" + x.value + "' outside ib to '" + it->second.value + "'");
        }
        image.insert(it->second);
    }
    for (const auto& [x, y] : world.fi) {
        if (!world.owc.contains(x)) {
            throw Error(ErrorKind::WorldOutsideDomain, "f_i defined on '" + x.value + "' outside owc");
        }
    }

    PropertyReport report;
    report.total = true;
    report.surjective_onto_ib = image == ib;
    report.injective = image.size() == world.owc.size();
    return report;
}

namespace {

nlohmann::json id_array(const IdSet& ids)
{
    auto arr = nlohmann::json::array();
    for (const auto& id : ids) {
        arr.push_back(id.value);
    }
    return arr;
}

std::vector<CharacteristicId> id_list(const nlohmann::json& arr)
{
    std::vector<CharacteristicId> out;
    for (const auto& v : arr) {
        out.emplace_back(v.get<std::string>());
    }
    return out;
}

} // namespace

nlohmann::json to_json(const Universe& universe, const ObservedView* view)
{
    nlohmann::json doc;
    doc["ib"] = id_array(universe.ib());
    doc["mc"] = id_array(universe.mc());
    doc["monistic"] = universe.monistic();
    if (view != nullptr) {
        doc["omc"] = id_array(view->omc);
    }
    return doc;
}

Universe universe_from_json(const nlohmann::json& doc)
{
    return build_universe(id_list(doc.at("ib")), id_list(doc.at("mc")), doc.value("monistic", false));
}

} // namespace mie
