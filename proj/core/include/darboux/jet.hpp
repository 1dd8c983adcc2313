#pragma once

#include <functional>
#include <vector>

#include "darboux/errors.hpp"

namespace darboux {

/// Truncated Taylor expansion of a scalar function at a point.
///
/// Coefficients are stored normalized, coeff(j) = f^(j)(x0)/j!, which keeps
/// magnitudes tame at high order; derivative(m) multiplies the factorial back.
/// Jets are immutable values and all operations on them are pure, so grids of
/// points can be evaluated concurrently.
///
/// Binary operations require both operands to share the expansion point and
/// the order exactly; a mismatch throws JetMismatch rather than re-expanding,
/// since re-expansion would hide accuracy loss.
class Jet {
public:
    /// Zero function represented at x0 with the given order.
    Jet(double x0, int order);

    /// Jet of the identity function x at x0: value x0, slope 1.
    static Jet variable(double x0, int order);

    /// Constant function c represented at x0.
    static Jet constant(double value, double x0, int order);

    int order() const noexcept { return static_cast<int>(coeff_.size()) - 1; }
    double expansion_point() const noexcept { return x0_; }

    /// Normalized coefficient c_j = f^(j)(x0)/j!.
    double coeff(int j) const;
    double& coeff(int j);

    /// f(x0).
    double value() const noexcept { return coeff_[0]; }

    /// m-th derivative f^(m)(x0) = m! * c_m. Exact for polynomial jets of
    /// degree <= order.
    double derivative(int m) const;

    /// Copy truncated to a lower order.
    Jet truncated(int new_order) const;

    /// Jet of f', one order lower.
    Jet derivative_jet() const;

    Jet operator-() const;

    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator+=(double rhs);
    Jet& operator-=(double rhs);
    Jet& operator*=(double rhs);
    Jet& operator/=(double rhs);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator/(const Jet& a, const Jet& b);

    friend Jet operator+(Jet a, double b) { return a += b; }
    friend Jet operator+(double a, Jet b) { return b += a; }
    friend Jet operator-(Jet a, double b) { return a -= b; }
    friend Jet operator-(double a, const Jet& b);
    friend Jet operator*(Jet a, double b) { return a *= b; }
    friend Jet operator*(double a, Jet b) { return b *= a; }
    friend Jet operator/(Jet a, double b) { return a /= b; }
    friend Jet operator/(double a, const Jet& b);

private:
    double x0_;
    std::vector<double> coeff_;

    friend void check_compatible(const Jet& a, const Jet& b);
};

/// Evaluator producing a jet of the requested order at a point. The universal
/// function representation of the library.
using JetFun = std::function<Jet(double, int)>;

Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet tanh(const Jet& a);
Jet sech(const Jet& a);
Jet sqrt(const Jet& a);

/// a(x)^r via exp(r log a); requires a positive value at the expansion point.
Jet pow(const Jet& a, double r);

}  // namespace darboux
