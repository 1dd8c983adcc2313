#include <cmath>
#include <numbers>

#include "darboux/potentials.hpp"

namespace darboux {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double shifted(double A, double alpha, int n) { return A - n * alpha / kSqrt2; }

}  // namespace

ParameterFlow morse_flow(const MorseParams&) {
    ParameterFlow flow;
    flow.step = [](const std::vector<double>& a) {
        return std::vector<double>{a[0] - a[1] / kSqrt2, a[1]};
    };
    flow.remainder = [](const std::vector<double>& prev, const std::vector<double>& next) {
        return 2.0 * (prev[0] * prev[0] - next[0] * next[0]);
    };
    return flow;
}

PotentialFamily morse_family(const MorseParams& p, int levels) {
    if (!(p.A > 0.0) || !(p.alpha > 0.0)) throw DomainError("Morse family requires A > 0 and alpha > 0");
    if (levels < 1 || levels > 3) throw Unsupported("Morse family provides one to three closed-form levels");
    // The bound condition A_{levels-1} > 0 with a roundoff floor, so boundary
    // parameters (shifted strength exactly zero in exact arithmetic) reject.
    if (shifted(p.A, p.alpha, levels - 1) <= 1e-12 * std::max(1.0, p.A))
        throw UnboundLevel("Morse level " + std::to_string(levels) + " is not bound for these parameters");

    const double A = p.A;
    const double al = p.alpha;

    PotentialFamily fam;
    fam.name = "morse";
    fam.param_names = {"A", "alpha"};
    fam.params = {A, al};
    fam.base_index = 1;

    fam.potential_at = [](const std::vector<double>& a, double x, int order) {
        const Jet s = sech(a[1] * Jet::variable(x, order));
        return 2.0 * (a[0] * a[0] - a[0] * (a[0] + a[1] / kSqrt2) * s * s);
    };
    fam.potential = [pa = fam.potential_at, prms = fam.params](double x, int order) {
        return pa(prms, x, order);
    };

    const JetFun ground = [A, al](double x, int order) {
        return pow(sech(al * Jet::variable(x, order)), kSqrt2 * A / al);
    };
    std::vector<JetFun> wavefunctions = {
        ground,
        [A, al, ground](double x, int order) {
            return sinh(al * Jet::variable(x, order)) * ground(x, order);
        },
        [A, al, ground](double x, int order) {
            const Jet v = Jet::variable(x, order);
            const Jet ch = cosh(al * v);
            const Jet sh = sinh(al * v);
            return (-(ch * ch) + (2.0 * kSqrt2 * A - al) / al * sh * sh) * ground(x, order);
        },
    };
    for (int n = 1; n <= levels; ++n) {
        const double an1 = shifted(A, al, n - 1);
        fam.eigenpairs.push_back({n, 2.0 * (A * A - an1 * an1), wavefunctions[static_cast<std::size_t>(n - 1)]});
    }

    fam.flow = morse_flow(p);
    fam.remake = [](const std::vector<double>& a, int lv) {
        return morse_family({a[0], a[1]}, lv);
    };
    fam.params_valid = [](const std::vector<double>& a) { return a[0] > 0.0 && a[1] > 0.0; };
    return fam;
}

}  // namespace darboux
