#include "darboux/jet.hpp"

#include <cmath>
#include <cstddef>

namespace darboux {

namespace {

// Relative floor under which a denominator's leading value counts as a node.
constexpr double kDivisionEps = 1e-12;

}  // namespace

Jet::Jet(double x0, int order) : x0_(x0) {
    if (order < 0) throw JetMismatch("jet order must be >= 0");
    coeff_.assign(static_cast<std::size_t>(order) + 1, 0.0);
}

Jet Jet::variable(double x0, int order) {
    Jet j(x0, order);
    j.coeff_[0] = x0;
    if (order >= 1) j.coeff_[1] = 1.0;
    return j;
}

Jet Jet::constant(double value, double x0, int order) {
    Jet j(x0, order);
    j.coeff_[0] = value;
    return j;
}

double Jet::coeff(int j) const {
    if (j < 0 || j > order()) throw JetMismatch("jet coefficient index out of range");
    return coeff_[static_cast<std::size_t>(j)];
}

double& Jet::coeff(int j) {
    if (j < 0 || j > order()) throw JetMismatch("jet coefficient index out of range");
    return coeff_[static_cast<std::size_t>(j)];
}

double Jet::derivative(int m) const {
    double factorial = 1.0;
    for (int i = 2; i <= m; ++i) factorial *= i;
    return factorial * coeff(m);
}

Jet Jet::truncated(int new_order) const {
    if (new_order < 0 || new_order > order()) throw JetMismatch("invalid truncation order");
    Jet j(x0_, new_order);
    for (int i = 0; i <= new_order; ++i) j.coeff_[static_cast<std::size_t>(i)] = coeff_[static_cast<std::size_t>(i)];
    return j;
}

Jet Jet::derivative_jet() const {
    if (order() < 1) throw JetMismatch("derivative of an order-0 jet");
    Jet j(x0_, order() - 1);
    for (int i = 0; i < order(); ++i)
        j.coeff_[static_cast<std::size_t>(i)] = (i + 1) * coeff_[static_cast<std::size_t>(i) + 1];
    return j;
}

void check_compatible(const Jet& a, const Jet& b) {
    if (a.x0_ != b.x0_) throw JetMismatch("jets expanded at different points");
    if (a.order() != b.order()) throw JetMismatch("jets of different order");
}

Jet Jet::operator-() const {
    Jet j = *this;
    for (double& c : j.coeff_) c = -c;
    return j;
}

Jet& Jet::operator+=(const Jet& rhs) {
    check_compatible(*this, rhs);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    check_compatible(*this, rhs);
    for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
    return *this;
}

Jet& Jet::operator+=(double rhs) {
    coeff_[0] += rhs;
    return *this;
}

Jet& Jet::operator-=(double rhs) {
    coeff_[0] -= rhs;
    return *this;
}

Jet& Jet::operator*=(double rhs) {
    for (double& c : coeff_) c *= rhs;
    return *this;
}

Jet& Jet::operator/=(double rhs) {
    for (double& c : coeff_) c /= rhs;
    return *this;
}

Jet operator-(double a, const Jet& b) {
    Jet j = -b;
    j.coeff_[0] += a;
    return j;
}

Jet operator*(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    const int n = a.order();
    Jet out(a.x0_, n);
    // Normalized coefficients convolve directly: (fg)^(k)/k! = sum_j c_j d_{k-j}.
    for (int k = 0; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 0; j <= k; ++j) acc += a.coeff_[static_cast<std::size_t>(j)] * b.coeff_[static_cast<std::size_t>(k - j)];
        out.coeff_[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

namespace {

double denominator_scale(const Jet& b) {
    double scale = 0.0;
    for (int j = 0; j <= b.order(); ++j) {
        const double m = std::abs(b.coeff(j));
        if (m > scale) scale = m;
    }
    return scale;
}

}  // namespace

Jet operator/(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    // The node threshold scales with the largest coefficient of the
    // denominator jet so that true nodes are distinguished from underflow.
    const double scale = denominator_scale(b);
    if (scale == 0.0 || std::abs(b.value()) < kDivisionEps * scale)
        throw SingularDivision(b.expansion_point());

    const int n = a.order();
    Jet q(a.expansion_point(), n);
    for (int k = 0; k <= n; ++k) {
        double acc = a.coeff(k);
        for (int j = 0; j < k; ++j) acc -= q.coeff(j) * b.coeff(k - j);
        q.coeff(k) = acc / b.value();
    }
    return q;
}

Jet operator/(double a, const Jet& b) {
    return Jet::constant(a, b.expansion_point(), b.order()) / b;
}

Jet exp(const Jet& a) {
    const int n = a.order();
    Jet e(a.expansion_point(), n);
    e.coeff(0) = std::exp(a.value());
    for (int k = 1; k <= n; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * a.coeff(j) * e.coeff(k - j);
        e.coeff(k) = acc / k;
    }
    return e;
}

Jet log(const Jet& a) {
    if (!(a.value() > 0.0)) throw DomainError("log of a jet with non-positive value");
    const int n = a.order();
    Jet l(a.expansion_point(), n);
    l.coeff(0) = std::log(a.value());
    for (int k = 1; k <= n; ++k) {
        double acc = k * a.coeff(k);
        for (int j = 1; j < k; ++j) acc -= j * l.coeff(j) * a.coeff(k - j);
        l.coeff(k) = acc / (k * a.value());
    }
    return l;
}

namespace {

// sinh and cosh propagate as a coupled pair.
void sinh_cosh(const Jet& a, Jet& s, Jet& c) {
    const int n = a.order();
    s = Jet(a.expansion_point(), n);
    c = Jet(a.expansion_point(), n);
    s.coeff(0) = std::sinh(a.value());
    c.coeff(0) = std::cosh(a.value());
    for (int k = 1; k <= n; ++k) {
        double sa = 0.0;
        double ca = 0.0;
        for (int j = 1; j <= k; ++j) {
            sa += j * a.coeff(j) * c.coeff(k - j);
            ca += j * a.coeff(j) * s.coeff(k - j);
        }
        s.coeff(k) = sa / k;
        c.coeff(k) = ca / k;
    }
}

}  // namespace

Jet sinh(const Jet& a) {
    Jet s(0, 0), c(0, 0);
    sinh_cosh(a, s, c);
    return s;
}

Jet cosh(const Jet& a) {
    Jet s(0, 0), c(0, 0);
    sinh_cosh(a, s, c);
    return c;
}

Jet tanh(const Jet& a) {
    Jet s(0, 0), c(0, 0);
    sinh_cosh(a, s, c);
    return s / c;
}

Jet sech(const Jet& a) {
    Jet s(0, 0), c(0, 0);
    sinh_cosh(a, s, c);
    return 1.0 / c;
}

Jet sqrt(const Jet& a) { return pow(a, 0.5); }

Jet pow(const Jet& a, double r) {
    if (!(a.value() > 0.0)) throw DomainError("pow of a jet with non-positive base");
    return exp(r * log(a));
}

}  // namespace darboux
