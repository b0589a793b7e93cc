#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mie/error.hpp"
#include "mie/metrics.hpp"
#include "support.hpp"

using namespace mie;
using mie::testing::id_of;

namespace {

template <typename F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected mie::Error");
    return ErrorKind::EmptyField;
}

LabelAssignment binary_assignment(std::initializer_list<int> bits)
{
    LabelAssignment a;
    int i = 0;
    for (int b : bits) a.labels[id_of(i++)] = b != 0 ? "intelligent" : "unintelligent";
    return a;
}

} // namespace

TEST_CASE("efficiency worked values and zero cases")
{
    CHECK(efficiency({2, 5, 4, 10}) == (2.0 * 5.0) / (4.0 * 10.0));
    CHECK(efficiency({2, 5, 4, 10}) == 0.25);
    CHECK(efficiency({4, 10, 4, 10}) == 1.0);
    CHECK(efficiency({0, 3, 0, 10}) == 0.0);
    CHECK(efficiency({0, 0, 0, 0}) == 0.0);
    CHECK(kind_of([] { efficiency({3, 5, 2, 10}); }) == ErrorKind::InconsistentCardinalities);
    CHECK(kind_of([] { efficiency({1, 11, 2, 10}); }) == ErrorKind::InconsistentCardinalities);
    CHECK(kind_of([] { efficiency({4, 3, 4, 10}); }) == ErrorKind::InconsistentCardinalities);
}

TEST_CASE("efficiency strictly decreases as imc grows with the rest fixed")
{
    double previous = 2.0;
    for (std::size_t imc = 3; imc <= 10; ++imc) {
        const double eta = efficiency({3, 6, imc, 10});
        CHECK(eta < previous);
        previous = eta;
    }
}

TEST_CASE("error_sum over binary assignments")
{
    auto space = LabelSpace::binary();
    auto oracle = binary_assignment({1, 0, 1, 0});
    auto test = binary_assignment({1, 1, 1, 0});
    // per-element |oracle - test| = 0 + 1 + 0 + 0
    auto s = error_sum(test, oracle, space);
    CHECK(s.value == 1.0);
    CHECK(s.max_possible == 4.0);
    CHECK(*s.domain_size == 4);

    CHECK(error_sum(oracle, oracle, space).value == 0.0);
    CHECK(error_sum(binary_assignment({0, 1, 0, 1}), oracle, space).value == 4.0);

    auto shorter = binary_assignment({1, 0, 1});
    CHECK(kind_of([&] { error_sum(shorter, oracle, space); }) == ErrorKind::DomainMismatch);
}

TEST_CASE("accuracy finite branch")
{
    CHECK(accuracy(ErrorSum{1.0, 4, 4.0}) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(accuracy(ErrorSum{0.0, 4, 4.0}) == 1.0);
    CHECK(accuracy(ErrorSum{4.0, 4, 4.0}) == 0.0);
    // degenerate: empty domain or zero-width label space
    CHECK(accuracy(ErrorSum{0.0, 0, 0.0}) == 1.0);
    CHECK(accuracy(ErrorSum{0.0, 3, 0.0}) == 1.0);
    CHECK(kind_of([] { accuracy(ErrorSum{5.0, 4, 4.0}); }) == ErrorKind::InvalidErrorSum);
    CHECK(kind_of([] { accuracy(ErrorSum{-1.0, 4, 4.0}); }) == ErrorKind::InvalidErrorSum);
}

TEST_CASE("accuracy streaming branch")
{
    CHECK(accuracy(ErrorSum{0.0, std::nullopt, 0.0}) == 1.0);
    CHECK(accuracy(ErrorSum{1e6, std::nullopt, 0.0}) < 0.001);
    double previous = 1.0;
    for (int i = 1; i <= 100; ++i) {
        const double c = accuracy(ErrorSum{0.25 * i, std::nullopt, 0.0});
        CHECK(c < previous);
        CHECK(c > 0.0);
        previous = c;
    }
}

TEST_CASE("streaming accumulator agrees with the batch sum")
{
    auto space = LabelSpace::binary();
    std::mt19937_64 gen(3);
    auto pair = mie::testing::random_assignments(gen, space, 25);
    StreamingErrorSum acc(space);
    for (const auto& [id, label] : pair.oracle.labels) acc.add(label, pair.test.labels.at(id));
    auto batch = error_sum(pair.test, pair.oracle, space);
    CHECK(acc.value() == batch.value);
    CHECK(acc.mismatches() == error_count(pair.test, pair.oracle, space));
    CHECK(acc.finalize().max_possible == batch.max_possible);
    CHECK(acc.snapshot().streaming());
}

TEST_CASE("quality")
{
    CHECK(quality(1, 1) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    CHECK(quality(0.6, 0.8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quality(0, 0) == 0.0);
    CHECK(kind_of([] { quality(1.1, 0.5); }) == ErrorKind::OutOfRange);
    CHECK(kind_of([] { quality(0.5, -0.1); }) == ErrorKind::OutOfRange);
}

TEST_CASE("error_count")
{
    auto space = LabelSpace::binary();
    auto oracle = binary_assignment({1, 1, 0, 0, 1, 0, 1, 0, 1, 1});
    auto test = binary_assignment({1, 0, 0, 1, 1, 0, 1, 1, 1, 1});
    // mismatches at positions 1, 3, 7
    mie::testing::AssignmentPair pair{oracle, test};
    CHECK(mie::testing::brute_mismatches(pair, space) == 3);
    CHECK(error_count(test, oracle, space) == 3);
    CHECK(error_count(oracle, oracle, space) == 0);
    CHECK(error_count(binary_assignment({0, 0, 0, 0, 0}), binary_assignment({1, 1, 1, 1, 1}), space) == 5);
}

TEST_CASE("evaluate_test fixed points and hand trace")
{
    auto space = LabelSpace::binary();
    auto u = build_universe(make_ids({"a", "b", "c"}), make_ids({"b", "c", "d"}), false);

    auto perfect = oracle_for(u, observe(u, Observer::full(u)), space);
    auto r = evaluate_test(perfect, u, space);
    CHECK(r.eta == 1.0);
    CHECK(r.c_a == 1.0);
    CHECK(r.q == doctest::Approx(std::numbers::sqrt2).epsilon(1e-12));
    CHECK(r.q_normalized == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.n_e == 0);

    IntelligenceTest blind{"blind", Observer::bernoulli(1, 0.0), {}};
    auto rb = evaluate_test(blind, u, space);
    CHECK(rb.eta == 0.0);
    CHECK(rb.c_a == 1.0);
    CHECK(rb.n_e == 0);

    // mask {c,d}: oimc={c}; eta=(1*2)/(2*3); wrong on c only
    IntelligenceTest dull{"dull",
                          Observer::mask(make_ids({"c", "d"})),
                          {{CharacteristicId("c"), "unintelligent"}, {CharacteristicId("d"), "unintelligent"}}};
    auto rd = evaluate_test(dull, u, space);
    CHECK(rd.eta == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rd.s_e == 1.0);
    CHECK(rd.c_a == 0.5);
    CHECK(rd.n_e == 1);
    CHECK(rd.q == doctest::Approx(std::sqrt(0.25 + 1.0 / 9.0)).epsilon(1e-12));
}

TEST_CASE("evaluate_test refuses ids that collide with label names")
{
    auto space = LabelSpace::binary();
    auto u = build_universe(make_ids({"intelligent"}), make_ids({"intelligent"}), false);
    auto t = oracle_for(u, ObservedView{}, space);
    CHECK(kind_of([&] { evaluate_test(t, u, space); }) == ErrorKind::LabelCollision);
}

TEST_CASE("finite accuracy is invariant under positive affine re-encoding")
{
    std::mt19937_64 gen(8);
    auto base = LabelSpace::create({{"u", 0}, {"m", 0.5}, {"i", 1}});
    auto moved = LabelSpace::create({{"u", 7}, {"m", 8.5}, {"i", 10}});
    for (int i = 0; i < 50; ++i) {
        auto pair = mie::testing::random_assignments(gen, base, 12);
        const double a = accuracy(error_sum(pair.test, pair.oracle, base));
        const double b = accuracy(error_sum(pair.test, pair.oracle, moved));
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("ranking tiebreaks on accuracy, then efficiency, then name")
{
    // imc = {k0, k1}, |mc| = 10, labels s0..s10 encoded 0..10
    IdSet ib = make_ids({"k0", "k1", "t0"});
    IdSet mc = make_ids({"k0", "k1", "m0", "m1", "m2", "m3", "m4", "m5", "m6", "m7"});
    auto u = build_universe(ib, mc, false);
    std::vector<Label> labels;
    for (int i = 0; i <= 10; ++i) labels.push_back({"s" + std::to_string(i), static_cast<double>(i)});
    auto space = LabelSpace::create(labels);
    auto truth = oracle_for(u, ObservedView{}, space).classifier;

    // A sees 6 (eta 0.6) and errs by 6+6 of a possible 60 (c_a 0.8)
    IntelligenceTest a{"zeta", Observer::mask(make_ids({"k0", "k1", "m0", "m1", "m2", "m3"})), truth};
    a.classifier[CharacteristicId("m0")] = "s6";
    a.classifier[CharacteristicId("m1")] = "s6";
    // B sees 8 (eta 0.8) and errs by 4*8 of a possible 80 (c_a 0.6)
    IntelligenceTest b{"alpha", Observer::mask(make_ids({"k0", "k1", "m0", "m1", "m2", "m3", "m4", "m5"})), truth};
    for (const char* m : {"m0", "m1", "m2", "m3"}) b.classifier[CharacteristicId(m)] = "s8";

    auto ra = evaluate_test(a, u, space);
    auto rb = evaluate_test(b, u, space);
    CHECK(ra.c_a == doctest::Approx(0.8));
    CHECK(ra.eta == doctest::Approx(0.6));
    CHECK(rb.c_a == doctest::Approx(0.6));
    CHECK(rb.eta == doctest::Approx(0.8));
    REQUIRE(ra.q == rb.q);

    std::vector<IntelligenceTest> field{b, a};
    auto ranked = tournament(field, u, space);
    CHECK(ranked[0].name == "zeta");
    CHECK(ranked[1].name == "alpha");

    QualityReport same{0.5, 0.5, quality(0.5, 0.5), 0, 0, 0};
    auto by_name = rank_reports({{"b", same}, {"a", same}});
    CHECK(by_name[0].name == "a");
    QualityReport more_eta{0.7, 0.5, quality(0.5, 0.7), 0, 0, 0};
    QualityReport more_ca{0.5, 0.7, quality(0.7, 0.5), 0, 0, 0};
    REQUIRE(more_eta.q == more_ca.q);
    CHECK(rank_reports({{"x", more_eta}, {"y", more_ca}})[0].name == "y");
}

TEST_CASE("tournament basics")
{
    auto space = LabelSpace::binary();
    auto u = build_universe(make_ids({"a", "b", "c"}), make_ids({"b", "c", "d"}), false);
    auto perfect = oracle_for(u, ObservedView{}, space);
    IntelligenceTest dull{"all-unintelligent", Observer::full(u), {}};
    for (const auto& id : u.mc()) dull.classifier[id] = "unintelligent";

    std::vector<IntelligenceTest> field{dull, perfect};
    auto ranked = tournament(field, u, space);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].name == "oracle");

    std::vector<IntelligenceTest> single{dull};
    CHECK(tournament(single, u, space).size() == 1);
    CHECK(kind_of([&] { tournament(std::span<const IntelligenceTest>{}, u, space); }) == ErrorKind::EmptyField);
}

TEST_CASE("quality report JSON uses 12 significant digits")
{
    QualityReport r{1.0 / 3.0, 0.5, quality(0.5, 1.0 / 3.0), quality(0.5, 1.0 / 3.0) / std::numbers::sqrt2, 1, 1.0};
    auto doc = to_json(r);
    CHECK(doc.dump() == R"({"c_a":0.5,"eta":0.333333333333,"n_e":1,"q":0.600925212577,"q_normalized":0.424918292799,"s_e":1.0})");
}
