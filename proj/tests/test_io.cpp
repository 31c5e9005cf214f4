// test_io.cpp

#include <stdexcept>
#include "doctest.h"
#include "otlab/fuzz.hpp"
#include "otlab/io.hpp"
#include "otlab/radiation.hpp"

using namespace otlab;
using nlohmann::json;

TEST_CASE("measure json round trip is loss free") {
    FuzzRng rng(17);
    for (int iter = 0; iter < 30; ++iter) {
        LatticeMeasure m = random_dyadic_measure(rng, 8, 10);
        CHECK(measure_from_json(measure_to_json(m)) == m);
    }
    // irrational pitch and offset survive the trip bit for bit
    LatticeMeasure half = normalized_power(rademacher_sum(3), 2);
    CHECK(measure_from_json(measure_to_json(half)) == half);
    LatticeMeasure shifted = convolve(normalized_power(rademacher_sum(1), 2),
                                      scale(normalized_power(dirac(Rational(1)), 2), Rational(3)));
    CHECK(measure_from_json(measure_to_json(shifted)) == shifted);
    // big weights: denominators beyond 64 bits
    BinomialFamily f = binomial_family(20);
    CHECK(measure_from_json(measure_to_json(f.tau)) == f.tau);
}

TEST_CASE("measure json rejects malformed input") {
    json j = measure_to_json(rademacher_sum(2));
    j["offset"]["sqrt_div"] = 3;
    j["offset"]["num"] = "1";
    CHECK_THROWS_AS(measure_from_json(j), std::invalid_argument);

    json bad_digit = measure_to_json(rademacher_sum(2));
    bad_digit["weights"][0]["num"] = "1x";
    CHECK_THROWS_AS(measure_from_json(bad_digit), std::invalid_argument);

    json not_normalized = measure_to_json(rademacher_sum(2));
    not_normalized["weights"][0]["num"] = "1";
    not_normalized["weights"][0]["den"] = "8";
    CHECK_THROWS_AS(measure_from_json(not_normalized), std::invalid_argument);
}

TEST_CASE("plan json round trip") {
    TransportPlan plan = radiation_plan(3);
    TransportPlan back = plan_from_json(plan_to_json(plan));
    CHECK(back.source == plan.source);
    CHECK(back.target == plan.target);
    REQUIRE(back.moves.size() == plan.moves.size());
    for (std::size_t i = 0; i < plan.moves.size(); ++i) CHECK(back.moves[i] == plan.moves[i]);
    CHECK_NOTHROW(validate_plan(back));

    json j = plan_to_json(plan);
    j["moves"][0]["from"] = 10000;
    CHECK_THROWS_AS(plan_from_json(j), std::invalid_argument);
}

TEST_CASE("moves serialization shape") {
    TransportPlan plan = monotone_coupling(rademacher_sum(1), rademacher_sum(2));
    json j = plan_to_json(plan);
    REQUIRE(j["moves"].is_array());
    const json& first = j["moves"][0];
    CHECK(first.at("from").get<std::size_t>() == 0);
    CHECK(first.at("to").get<std::size_t>() == 0);
    CHECK(first.at("mass").at("num").get<std::string>() == "1");
    CHECK(first.at("mass").at("den").get<std::string>() == "4");
}
