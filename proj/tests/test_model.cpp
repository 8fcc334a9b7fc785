#include <random>

#include "doctest.h"
#include "qvrp/model.hpp"

using namespace qvrp;

TEST_CASE("distance basics") {
    CHECK(distance({0, 0}, {0, 0}) == doctest::Approx(0.0));
    CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
    CHECK(distance({1, 1}, {2, 2}) == doctest::Approx(1.41421356).epsilon(1e-7));
}

TEST_CASE("distance is a metric on random triples") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int it = 0; it < 500; ++it) {
        Point p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
        double pq = distance(p, q), qr = distance(q, r), pr = distance(p, r);
        CHECK(pq >= 0.0);
        CHECK(pq == doctest::Approx(distance(q, p)));
        CHECK(pr <= pq + qr + 1e-12);
    }
}

TEST_CASE("tour_cost") {
    CvrpInstance inst;
    inst.depot = {0, 0};
    inst.points = {{5, 0}, {1, 0}, {1, 1}};
    inst.capacity = 3;

    CHECK(tour_cost(inst, Tour{{}}) == doctest::Approx(0.0));
    CHECK(tour_cost(inst, Tour{{0}}) == doctest::Approx(10.0));
    CHECK(tour_cost(inst, Tour{{1, 2}}) == doctest::Approx(1 + 1 + std::sqrt(2.0)));
    CHECK_THROWS(tour_cost(inst, Tour{{9}}));
}

TEST_CASE("validate_cvrp_solution") {
    CvrpInstance inst;
    inst.depot = {0, 0};
    inst.points = {{1, 0}, {0, 1}, {2, 0}};
    inst.capacity = 2;

    CvrpSolution ok;
    ok.tours = {Tour{{0, 2}}, Tour{{1}}};
    ok.cost = cvrp_solution_cost(inst, ok);
    CHECK(validate_cvrp_solution(inst, ok).ok());

    CvrpSolution overfull;
    overfull.tours = {Tour{{0, 1, 2}}};
    overfull.cost = cvrp_solution_cost(inst, overfull);
    auto rep = validate_cvrp_solution(inst, overfull);
    CHECK_FALSE(rep.ok());
    CHECK(rep.issues[0].rule == "capacity");

    CvrpSolution dup;
    dup.tours = {Tour{{0, 1}}, Tour{{1, 2}}};
    dup.cost = cvrp_solution_cost(inst, dup);
    rep = validate_cvrp_solution(inst, dup);
    CHECK_FALSE(rep.ok());
    bool has_cov = false;
    for (auto& i : rep.issues) has_cov |= (i.rule == "coverage");
    CHECK(has_cov);
}

TEST_CASE("validate_mpaths_solution") {
    MPathsInstance inst;
    inst.square_origin = {0, 0};
    inst.side = 1.0;
    inst.a = {0, 0.25};
    inst.b = {0, 0.75};
    inst.m = 1;
    inst.points = {{0.5, 0.5}, {0.25, 0.5}};

    MPathsSolution sol;
    sol.paths = {MPath{{1, 0}, {}}};
    sol.cost = mpaths_solution_cost(inst, sol);
    CHECK(validate_mpaths_solution(inst, sol).ok());

    MPathsSolution wrong_count = sol;
    wrong_count.paths.push_back(MPath{{}, {}});
    wrong_count.cost = mpaths_solution_cost(inst, wrong_count);
    auto rep = validate_mpaths_solution(inst, wrong_count);
    CHECK_FALSE(rep.ok());
    CHECK(rep.issues[0].rule == "path-count");

    MPathsSolution skip;
    skip.paths = {MPath{{0}, {}}};
    skip.cost = mpaths_solution_cost(inst, skip);
    rep = validate_mpaths_solution(inst, skip);
    CHECK_FALSE(rep.ok());
    bool has_cov = false;
    for (auto& i : rep.issues) has_cov |= (i.rule == "coverage");
    CHECK(has_cov);
}

TEST_CASE("epsilon reciprocal must be integral") {
    CHECK(check_epsilon(0.5));
    CHECK(check_epsilon(0.25));
    CHECK_FALSE(check_epsilon(0.3));
    CHECK_FALSE(check_epsilon(1.0));
}
