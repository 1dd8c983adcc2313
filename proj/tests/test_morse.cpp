#include <cmath>
#include <numbers>

#include <doctest.h>

#include "darboux/potentials.hpp"
#include "darboux/verify.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using testutil::close;
using testutil::close_rel;

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
}

TEST_CASE("spectrum at the reference parameters") {
    const auto fam = darboux::morse_family({2.0 * kSqrt2, 1.0}, 3);
    CHECK(fam.base_index == 1);
    CHECK(fam.levels() == 3);
    CHECK(fam.eigenvalue(1) == 0.0);
    CHECK(close(fam.eigenvalue(2), 7.0, 1e-13));
    CHECK(close(fam.eigenvalue(3), 12.0, 1e-13));
}

TEST_CASE("ground level sits at zero for any parameters") {
    for (const auto& [A, alpha] : {std::pair{1.3, 0.7}, {5.0, 2.0}, {0.9, 0.4}}) {
        const auto fam = darboux::morse_family({A, alpha}, 1);
        CHECK(fam.eigenvalue(1) == 0.0);
    }
}

TEST_CASE("compact eigenvalue formula matches the explicit low levels") {
    for (const auto& [A, alpha] : {std::pair{2.0 * kSqrt2, 1.0}, {3.0, 0.5}, {4.0, 1.3}}) {
        const auto fam = darboux::morse_family({A, alpha}, 3);
        CHECK(close_rel(fam.eigenvalue(2), 2.0 * kSqrt2 * A * alpha - alpha * alpha, 1e-13));
        CHECK(close_rel(fam.eigenvalue(3), 4.0 * kSqrt2 * A * alpha - 4.0 * alpha * alpha, 1e-13));
    }
}

TEST_CASE("unbound level is rejected") {
    CHECK_THROWS_AS(darboux::morse_family({kSqrt2, 1.0}, 3), darboux::UnboundLevel);
    CHECK_NOTHROW(darboux::morse_family({kSqrt2, 1.0}, 2));
    CHECK_THROWS_AS(darboux::morse_family({-1.0, 1.0}, 1), darboux::DomainError);
    CHECK_THROWS_AS(darboux::morse_family({2.0, 1.0}, 4), darboux::Unsupported);
}

TEST_CASE("parameter flow") {
    const auto fam = darboux::morse_family({2.0 * kSqrt2, 1.0}, 3);
    REQUIRE(fam.flow.has_value());
    const auto a1 = fam.flow->step(fam.params);
    CHECK(close(a1[0], 3.0 / kSqrt2, 1e-15));
    CHECK(a1[1] == 1.0);
    CHECK(close(fam.flow->remainder(fam.params, a1), 7.0, 1e-13));

    const auto a2 = fam.flow->step(a1);
    CHECK(close(a2[0], fam.params[0] - 2.0 / kSqrt2, 1e-14));
}

TEST_CASE("eigenfunctions satisfy the eigenvalue equation") {
    const auto fam = darboux::morse_family({2.0 * kSqrt2, 1.0}, 3);
    const auto grid = darboux::build_grid(fam, -3.0, 3.0, 121, false, 0);
    for (const auto& e : fam.eigenpairs) {
        const auto rep = darboux::schrodinger_residual(fam.potential, e.wavefunction, e.eigenvalue, grid);
        CHECK(rep.max_residual <= 1e-7);
        CHECK(rep.singular_points.empty());
    }
}

TEST_CASE("potential and ground state match the closed forms") {
    const oracle::Morse ref{2.0 * kSqrt2, 1.0};
    const auto fam = darboux::morse_family({ref.A, ref.alpha}, 3);
    for (double x : {-2.1, -0.4, 0.0, 0.9, 2.8}) {
        CHECK(close_rel(fam.potential(x, 0).value(), ref.potential(x), 1e-13));
        CHECK(close_rel(fam.eigenpairs[0].wavefunction(x, 0).value(), ref.psi1(x), 1e-13));
    }
}

TEST_CASE("log-derivative of the ground state") {
    const double A = 2.0 * kSqrt2;
    for (double alpha : {1.0, 0.6}) {
        const auto fam = darboux::morse_family({A, alpha}, 1);
        for (double x : {-1.7, 0.3, 2.5}) {
            const auto h = darboux::log_derivative(fam.eigenpairs[0], x, 1);
            CHECK(close_rel(h.value(), -kSqrt2 * A * std::tanh(alpha * x), 1e-12));
        }
    }
}

TEST_CASE("remake rebuilds at shifted parameters") {
    const auto fam = darboux::morse_family({2.0 * kSqrt2, 1.0}, 3);
    const auto flowed = fam.remake(fam.flow->step(fam.params), 2);
    CHECK(flowed.levels() == 2);
    // psi_1(x; A_1) = cosh(alpha x) psi_1(x; A) with unit constants
    for (double x : {-1.2, 0.8}) {
        const double lhs = flowed.eigenpairs[0].wavefunction(x, 0).value();
        const double rhs = std::cosh(x) * fam.eigenpairs[0].wavefunction(x, 0).value();
        CHECK(close_rel(lhs, rhs, 1e-13));
    }
}
