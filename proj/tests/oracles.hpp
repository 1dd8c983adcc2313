#pragma once

// Test-only closed-form oracles, evaluated in plain y-space double arithmetic
// with no jets or determinants: an independent route against the engine.
//
// The Ginocchio transformed forms are the corrected ones obtained by
// differentiating the definitions directly (the published versions drop the
// level-dependent eigenfunction prefactor; see the reference observations the
// verification suite emits for their deviation).

#include <cmath>

namespace oracle {

// ---- Morse ----------------------------------------------------------------

struct Morse {
    double A, alpha;
    static constexpr double sqrt2 = 1.4142135623730951;

    double shifted(int n) const { return A - n * alpha / sqrt2; }
    double lambda(int n) const {
        const double an1 = shifted(n - 1);
        return 2.0 * (A * A - an1 * an1);
    }
    double sech(double x) const { return 1.0 / std::cosh(alpha * x); }
    double psi1(double x) const { return std::pow(sech(x), sqrt2 * A / alpha); }

    double potential(double x) const {
        const double s = sech(x);
        return 2.0 * (A * A - A * (A + alpha / sqrt2) * s * s);
    }
    // u - 2 (ln W_n)'' collapses to the same sech^2 profile with shifted
    // strength at every order.
    double partner_potential(int n, double x) const {
        const double s = sech(x);
        return 2.0 * (A * A - shifted(n - 1) * shifted(n) * s * s);
    }
    double first_transform_second_state(double x) const {
        return alpha * std::cosh(alpha * x) * psi1(x);
    }
    double first_transform_third_state(double x) const {
        return 4.0 * sqrt2 * shifted(1) * std::sinh(alpha * x) * std::cosh(alpha * x) * psi1(x);
    }
    double second_transform_third_state(double x) const {
        const double ch = std::cosh(alpha * x);
        return lambda(3) * ch * ch * psi1(x);
    }
};

// ---- Ginocchio -------------------------------------------------------------

struct Ginocchio {
    double beta, upsilon;

    double c() const { return 1.0 - beta * beta; }
    double mu(int n) const {
        const double b2 = beta * beta;
        const double half = n + 0.5;
        return (std::sqrt(b2 * (upsilon + 0.5) * (upsilon + 0.5) + (1.0 - b2) * half * half) - half) / b2;
    }
    double eps(int n) const {
        const double m = mu(n);
        return -m * m * beta * beta * beta * beta;
    }
    double g(double y) const { return 1.0 - c() * y * y; }
    double potential(double y) const {
        const double y2 = y * y;
        return (-beta * beta * upsilon * (upsilon + 1.0) +
                0.25 * c() * (5.0 * c() * y2 * y2 - (7.0 - beta * beta) * y2 + 2.0)) *
               (1.0 - y2);
    }

    // Log-derivatives of the bound states, closed in y.
    double h0(double y) const { return -mu(0) * beta * beta * y + 0.5 * c() * y * (1.0 - y * y); }
    double h1(double y) const { return h0_like(1, y) + (1.0 - y * y) / y; }
    double h2(double y) const {
        const double k = 1.0 / (2.0 * mu(2) + 3.0);
        return h0_like(2, y) +
               2.0 * beta * beta * y * (1.0 - y * y) / (beta * beta * y * y - k * g(y));
    }
    double h0_like(int n, double y) const {
        return -mu(n) * beta * beta * y + 0.5 * c() * y * (1.0 - y * y);
    }

    // V - 2 (ln psi_0)'' expanded in y.
    double first_partner(double y) const {
        return potential(y) +
               (1.0 - y * y) * g(y) * (2.0 * mu(0) * beta * beta - c() * (1.0 - 3.0 * y * y));
    }

    // V - 2 (ln W_2)'' expanded in y, with
    // ln W_2 = (mu0+mu1)/2 ln(1-y^2) - (mu0+mu1+2)/2 ln g + ln(1 - e y^2),
    // e = 1 - (mu0-mu1) beta^2.
    double second_partner(double y) const {
        const double y2 = y * y;
        const double gg = g(y);
        const double e = 1.0 - (mu(0) - mu(1)) * beta * beta;
        const double G2 = 1.0 - e * y2;
        const double d2_log_one_minus_y2 = -2.0 * (1.0 - y2) * gg * (gg - 2.0 * c() * y2);
        const double d2_log_g = -2.0 * c() * (1.0 - y2) * gg * (1.0 - 3.0 * y2);
        const double Dy = (1.0 - y2) * gg - 2.0 * y2 * gg - 2.0 * c() * y2 * (1.0 - y2);
        const double d2_log_G2 =
            -2.0 * e * (1.0 - y2) * gg * (Dy * G2 + 2.0 * e * y2 * (1.0 - y2) * gg) / (G2 * G2);
        return potential(y) - (mu(0) + mu(1)) * d2_log_one_minus_y2 +
               (mu(0) + mu(1) + 2.0) * d2_log_g - 2.0 * d2_log_G2;
    }

    // (1-y^2)^(mu2/2) g^-(2mu2+1)/4 times the eigenvalue-weighted bracket of
    // log-derivative differences over (h1-h0), times C_2(f). Proportional to
    // W_3/W_2 with constant -1.
    double second_transform_third_state(double y) const {
        const double bracket = eps(0) * (h2(y) - h1(y)) - eps(1) * (h2(y) - h0(y)) +
                               eps(2) * (h1(y) - h0(y));
        const double a = mu(2) + 0.5;
        const double f2 = beta * beta * y * y / g(y);
        const double c2 = 2.0 * a * (a + 1.0) * f2 - a;
        return std::pow(1.0 - y * y, 0.5 * mu(2)) * std::pow(g(y), -0.25 * (2.0 * mu(2) + 1.0)) *
               bracket / (h1(y) - h0(y)) * c2;
    }
};

}  // namespace oracle
