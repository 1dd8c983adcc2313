#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "darboux/potentials.hpp"
#include "darboux/wronskian.hpp"
#include "test_util.hpp"

using darboux::DetPath;
using darboux::Jet;
using darboux::JetFun;
using darboux::MinorSelection;
using testutil::close_rel;

namespace {

const JetFun kSinh = [](double x, int order) { return darboux::sinh(Jet::variable(x, order)); };
const JetFun kCosh = [](double x, int order) { return darboux::cosh(Jet::variable(x, order)); };

std::vector<JetFun> morse_functions(double A, double alpha, int levels) {
    const darboux::PotentialFamily fam = darboux::morse_family({A, alpha}, levels);
    std::vector<JetFun> fs;
    for (const auto& e : fam.eigenpairs) fs.push_back(e.wavefunction);
    return fs;
}

std::vector<JetFun> monomials(int count) {
    std::vector<JetFun> fs;
    for (int p = 0; p < count; ++p)
        fs.push_back([p](double x, int order) {
            Jet acc = Jet::constant(1.0, x, order);
            for (int i = 0; i < p; ++i) acc = acc * Jet::variable(x, order);
            return acc;
        });
    return fs;
}

}  // namespace

TEST_CASE("hyperbolic pair has constant Wronskian -1") {
    const std::vector<JetFun> fs = {kSinh, kCosh};
    for (double x : {-2.0, 0.0, 0.7}) {
        const Jet w = darboux::wronskian(fs, x, 2);
        CHECK(close_rel(w.value(), -1.0, 1e-14));
        CHECK(std::abs(w.derivative(1)) < 1e-13);
        CHECK(std::abs(w.derivative(2)) < 1e-13);
    }
}

TEST_CASE("single-function Wronskian is the function itself") {
    const auto fs = morse_functions(2.0 * std::numbers::sqrt2, 1.0, 1);
    const Jet w = darboux::wronskian(fs, 0.8, 3);
    const Jet psi = fs[0](0.8, 3);
    for (int j = 0; j <= 3; ++j) CHECK(w.coeff(j) == psi.coeff(j));
}

TEST_CASE("two-state Morse Wronskian matches the closed form") {
    const double A = 2.0 * std::numbers::sqrt2;
    const auto fs = morse_functions(A, 1.0, 2);
    for (double x : {0.5, -1.3, 2.2}) {
        const double psi1 = std::pow(1.0 / std::cosh(x), std::numbers::sqrt2 * A);
        const double expect = std::cosh(x) * psi1 * psi1;  // alpha = 1
        CHECK(close_rel(darboux::wronskian(fs, x, 0).value(), expect, 1e-12));
    }
}

TEST_CASE("derivative of the Wronskian equals the bumped-row determinant") {
    SUBCASE("constant Wronskian: both sides vanish exactly") {
        const std::vector<JetFun> fs = {kSinh, kCosh};
        const auto check = darboux::wronskian_derivative_check(fs, 0.9);
        CHECK(check.lhs == 0.0);
        CHECK(check.rhs == 0.0);
        CHECK(check.gap == 0.0);
    }
    SUBCASE("polynomials: third derivatives vanish, determinant is exactly zero") {
        const auto fs = monomials(3);
        const auto check = darboux::wronskian_derivative_check(fs, 1.7);
        CHECK(check.lhs == 0.0);
        CHECK(check.rhs == 0.0);
        CHECK(check.gap == 0.0);
    }
    SUBCASE("Morse triple") {
        const auto fs = morse_functions(2.0 * std::numbers::sqrt2, 1.0, 3);
        const auto check = darboux::wronskian_derivative_check(fs, 0.3);
        CHECK(check.gap <= 1e-9);
    }
}

TEST_CASE("Wronskian-of-Wronskians identity") {
    const double A = 2.0 * std::numbers::sqrt2;
    const auto fs = morse_functions(A, 1.0, 3);

    SUBCASE("n = 2 against the third state") {
        const std::vector<JetFun> seeds = {fs[0], fs[1]};
        const auto check = darboux::two_wronskian_identity_check(seeds, fs[2], 0.4);
        CHECK(check.gap <= 1e-9);
    }
    SUBCASE("extra function equal to the last seed collapses both sides") {
        const std::vector<JetFun> seeds = {fs[0], fs[1]};
        const auto check = darboux::two_wronskian_identity_check(seeds, fs[1], 0.4);
        CHECK(std::abs(check.lhs) <= 1e-12);
        CHECK(std::abs(check.rhs) <= 1e-12);
    }
    SUBCASE("n = 3 with a second-family function as the extra") {
        // The identity is determinant algebra: the extra function need not be
        // an eigenfunction of the same problem.
        const auto other = morse_functions(4.0, 1.0, 1);
        const auto check = darboux::two_wronskian_identity_check(fs, other[0], 0.35);
        CHECK(check.gap <= 1e-9);
    }
}

TEST_CASE("antisymmetry and linearity") {
    const auto fs = morse_functions(2.0 * std::numbers::sqrt2, 1.0, 3);

    SUBCASE("swapping the first two functions negates the jet bitwise") {
        std::vector<JetFun> swapped = {fs[1], fs[0], fs[2]};
        for (double x : {-0.8, 0.45}) {
            const Jet w = darboux::wronskian(fs, x, 2);
            const Jet v = darboux::wronskian(swapped, x, 2);
            for (int j = 0; j <= 2; ++j) CHECK(v.coeff(j) == -w.coeff(j));
        }
    }
    SUBCASE("swapping the outer functions negates to roundoff") {
        std::vector<JetFun> swapped = {fs[2], fs[1], fs[0]};
        const Jet w = darboux::wronskian(fs, 0.45, 0);
        const Jet v = darboux::wronskian(swapped, 0.45, 0);
        CHECK(close_rel(v.value(), -w.value(), 2e-15));
    }
    SUBCASE("scaling one function scales the determinant") {
        auto scaled = fs;
        scaled[1] = [f = fs[1]](double x, int order) { return 2.0 * f(x, order); };
        const Jet w = darboux::wronskian(fs, 0.45, 1);
        const Jet v = darboux::wronskian(scaled, 0.45, 1);
        for (int j = 0; j <= 1; ++j) CHECK(v.coeff(j) == 2.0 * w.coeff(j));

        scaled[1] = [f = fs[1]](double x, int order) { return 1.7 * f(x, order); };
        const Jet u = darboux::wronskian(scaled, 0.45, 1);
        for (int j = 0; j <= 1; ++j) CHECK(close_rel(u.coeff(j), 1.7 * w.coeff(j), 1e-14));
    }
}

TEST_CASE("expansion and LU determinant paths agree") {
    const auto fs = morse_functions(2.0 * std::numbers::sqrt2, 1.0, 3);
    std::vector<JetFun> four = fs;
    four.push_back(morse_functions(4.0, 1.0, 1)[0]);
    for (double x : {-1.1, 0.25, 1.9}) {
        for (std::size_t k = 2; k <= four.size(); ++k) {
            const std::span<const JetFun> head(four.data(), k);
            const Jet a = darboux::wronskian(head, x, 1, DetPath::expansion);
            const Jet b = darboux::wronskian(head, x, 1, DetPath::lu);
            for (int j = 0; j <= 1; ++j) CHECK(close_rel(a.coeff(j), b.coeff(j), 1e-11));
        }
    }
}

TEST_CASE("LU path on five polynomial seeds") {
    const auto fs = monomials(5);
    const Jet w = darboux::wronskian(fs, 1.5, 0);  // k = 5 selects LU
    CHECK(w.value() == 288.0);                     // 1! 2! 3! 4!
    const Jet e = darboux::wronskian(fs, 1.5, 0, DetPath::expansion);
    CHECK(e.value() == 288.0);
}

TEST_CASE("LU pivot underflow reports a singularity") {
    // Two identical columns make every pivot in the second column vanish.
    const std::vector<JetFun> fs = {kSinh, kSinh, kCosh};
    CHECK_THROWS_AS(darboux::wronskian(fs, 0.4, 0, DetPath::lu), darboux::SingularDivision);
    // The division-free path returns the exact zero instead.
    CHECK(darboux::wronskian(fs, 0.4, 0, DetPath::expansion).value() == 0.0);
}

TEST_CASE("determinant properties on random jet matrices") {
    std::mt19937 rng(5150u);
    for (int size = 2; size <= 4; ++size) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<std::vector<darboux::Jet>> m(size);
            for (auto& row : m)
                for (int j = 0; j < size; ++j) row.push_back(testutil::random_jet(rng, 0.2, 3));

            const Jet det = darboux::jet_determinant(m, DetPath::expansion);
            const Jet lu = darboux::jet_determinant(m, DetPath::lu);
            for (int j = 0; j <= 3; ++j) CHECK(testutil::close(lu.coeff(j), det.coeff(j), 1e-11));

            auto swapped = m;
            for (auto& row : swapped) std::swap(row[0], row[1]);
            const Jet neg = darboux::jet_determinant(swapped, DetPath::expansion);
            for (int j = 0; j <= 3; ++j) CHECK(neg.coeff(j) == -det.coeff(j));
        }
    }
}

TEST_CASE("minor-of-cofactors identity") {
    SUBCASE("r = 1 is the cofactor definition") {
        const std::vector<std::vector<double>> a = {{1, 2}, {3, 4}};
        const auto check = darboux::jacobi_check(a, MinorSelection{{0}, {0}});
        CHECK(check.cofactor_minor == 4.0);
        CHECK(check.scaled_complement == 4.0);
        CHECK(check.exact);
    }
    SUBCASE("identity matrix") {
        std::vector<std::vector<double>> a(4, std::vector<double>(4, 0.0));
        for (int i = 0; i < 4; ++i) a[i][i] = 1.0;
        const auto check = darboux::jacobi_check(a, MinorSelection{{1, 3}, {1, 3}});
        CHECK(check.cofactor_minor == 1.0);
        CHECK(check.scaled_complement == 1.0);
        CHECK(check.exact);
    }
    SUBCASE("random integer matrices, exact equality") {
        std::mt19937 rng(4242u);
        std::uniform_int_distribution<int> entry(-9, 9);
        for (int n : {4, 5}) {
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<std::vector<double>> a(n, std::vector<double>(n));
                for (auto& row : a)
                    for (auto& v : row) v = entry(rng);
                const auto check =
                    darboux::jacobi_check(a, MinorSelection{{n - 2, n - 1}, {n - 2, n - 1}});
                CHECK(check.exact);
            }
        }
    }
    SUBCASE("selection validation") {
        const std::vector<std::vector<double>> a = {{1, 2}, {3, 4}};
        CHECK_THROWS_AS(darboux::jacobi_check(a, MinorSelection{{0, 1}, {0, 1}}), darboux::Unsupported);
        CHECK_THROWS_AS(darboux::jacobi_check(a, MinorSelection{{1, 0}, {0, 1}}), darboux::Unsupported);
    }
}

TEST_CASE("order budget: requesting more derivatives needs deeper seeds") {
    // A seed evaluator that refuses to produce more than the requested order
    // exposes any violation of the (k-1)+m budget rule.
    int max_requested = 0;
    const std::vector<JetFun> fs = {
        [&max_requested](double x, int order) {
            max_requested = std::max(max_requested, order);
            return darboux::sinh(Jet::variable(x, order));
        },
        kCosh,
        [](double x, int order) { return darboux::exp(Jet::variable(x, order)); },
    };
    (void)darboux::wronskian(fs, 0.2, 2);
    CHECK(max_requested == 4);  // (k-1) + out_order = 2 + 2
}
