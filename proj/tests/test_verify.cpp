#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "darboux/potentials.hpp"
#include "darboux/verify.hpp"
#include "test_util.hpp"

using darboux::Grid;
using darboux::Jet;
using testutil::close_rel;

TEST_CASE("relative gap normalizer") {
    CHECK(darboux::relative_gap(2.0, 2.0) == 0.0);
    CHECK(close_rel(darboux::relative_gap(2.0, 1.0), 0.5, 1e-15));
    CHECK(darboux::relative_gap(0.0, 0.0) == 0.0);
}

TEST_CASE("proportionality fitting") {
    const std::vector<double> g = {1.0, -2.0, 0.5, 3.0};

    SUBCASE("exact scaling") {
        std::vector<double> f;
        for (double v : g) f.push_back(2.0 * v);
        const auto rep = darboux::proportionality(f, g);
        CHECK(rep.constant == 2.0);
        CHECK(rep.deviation == 0.0);
    }
    SUBCASE("tiny perturbation") {
        std::vector<double> f;
        for (double v : g) f.push_back(v + 1e-12);
        const auto rep = darboux::proportionality(f, g);
        CHECK(close_rel(rep.constant, 1.0, 1e-11));
        CHECK(rep.deviation <= 1e-11);
    }
    SUBCASE("scale covariance") {
        std::vector<double> f = {0.3, 1.1, -0.4, 2.0};
        const auto base = darboux::proportionality(f, g);
        std::vector<double> gk;
        for (double v : g) gk.push_back(8.0 * v);
        const auto scaled = darboux::proportionality(f, gk);
        CHECK(close_rel(scaled.constant, base.constant / 8.0, 1e-14));
        CHECK(close_rel(scaled.deviation, base.deviation, 1e-14));
    }
    SUBCASE("degenerate comparand") {
        const std::vector<double> z(4, 0.0);
        const std::vector<double> f = {1.0, 1.0, 1.0, 1.0};
        CHECK_THROWS_AS(darboux::proportionality(f, z), darboux::DegenerateComparand);
    }
    SUBCASE("length mismatch") {
        const std::vector<double> f = {1.0};
        CHECK_THROWS_AS(darboux::proportionality(f, g), darboux::DomainError);
    }
}

TEST_CASE("Schrodinger residual") {
    const auto fam = darboux::morse_family({2.0 * std::numbers::sqrt2, 1.0}, 3);
    const Grid grid = darboux::uniform_grid(-3.0, 3.0, 121);

    SUBCASE("exact eigenfunction") {
        const auto rep = darboux::schrodinger_residual(fam.potential, fam.eigenpairs[0].wavefunction,
                                                       fam.eigenpairs[0].eigenvalue, grid);
        CHECK(rep.max_residual <= 1e-10);
        CHECK(rep.singular_points.empty());
    }
    SUBCASE("wrong eigenvalue is flagged") {
        const auto rep = darboux::schrodinger_residual(fam.potential, fam.eigenpairs[0].wavefunction,
                                                       fam.eigenpairs[1].eigenvalue, grid);
        CHECK(rep.max_residual > 0.1);
    }
    SUBCASE("invariant under wavefunction scaling") {
        const darboux::JetFun scaled = [f = fam.eigenpairs[1].wavefunction](double x, int order) {
            return 77.0 * f(x, order);
        };
        const auto a = darboux::schrodinger_residual(fam.potential, fam.eigenpairs[1].wavefunction,
                                                     fam.eigenpairs[1].eigenvalue, grid);
        const auto b = darboux::schrodinger_residual(fam.potential, scaled,
                                                     fam.eigenpairs[1].eigenvalue, grid);
        CHECK(std::abs(a.max_residual - b.max_residual) <= 1e-12);
    }
}

TEST_CASE("grid construction") {
    const auto morse = darboux::morse_family({2.0 * std::numbers::sqrt2, 1.0}, 2);
    const auto gin = darboux::ginocchio_family({0.8, 4.0}, 4);

    SUBCASE("degenerate input") {
        CHECK_THROWS_AS(darboux::uniform_grid(-3.0, 3.0, 1), darboux::EmptyGrid);
        CHECK_THROWS_AS(darboux::build_grid(morse, -3.0, 3.0, 1, false, 0), darboux::EmptyGrid);
    }
    SUBCASE("nodeless Morse Wronskians leave the grid whole") {
        const Grid g = darboux::build_grid(morse, -3.0, 3.0, 121, true, 2);
        CHECK(g.points.size() == 121);
        CHECK(g.exclusions.empty());
    }
    SUBCASE("coordinate band is carved for the Ginocchio family") {
        const Grid g = darboux::build_grid(gin, -2.5, 2.5, 101, true, 2);
        CHECK(!g.exclusions.empty());
        CHECK(g.points.size() < 101);
        const auto& y_of = *gin.coordinate;
        for (double x : g.points) CHECK(std::abs(y_of(x)) >= 0.05);
        // points strictly increasing, none inside an exclusion
        for (std::size_t i = 1; i < g.points.size(); ++i) CHECK(g.points[i] > g.points[i - 1]);
        for (const auto& [lo, hi] : g.exclusions)
            for (double x : g.points) CHECK((x < lo || x > hi));
    }
    SUBCASE("grid entirely inside the excluded band") {
        CHECK_THROWS_AS(darboux::build_grid(gin, -0.01, 0.01, 5, false, 0), darboux::EmptyGrid);
    }
    SUBCASE("node scan carves a manufactured node") {
        // A family whose "ground state" is sinh: node at the origin.
        darboux::PotentialFamily fake = morse;
        fake.coordinate.reset();
        fake.eigenpairs[0].wavefunction = [](double x, int order) {
            return darboux::sinh(Jet::variable(x, order));
        };
        const Grid g = darboux::build_grid(fake, -3.0, 3.0, 121, true, 1);
        CHECK(!g.exclusions.empty());
        for (double x : g.points) CHECK(std::abs(x) > 0.05);
        const Grid no_scan = darboux::build_grid(fake, -3.0, 3.0, 121, false, 1);
        CHECK(no_scan.points.size() == 121);
    }
}
