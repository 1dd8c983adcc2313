#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "darboux/jet.hpp"

namespace darboux {

/// One bound state: family label, eigenvalue and a jet-producing evaluator.
struct EigenPair {
    int index = 0;
    double eigenvalue = 0.0;
    JetFun wavefunction;
};

/// Shape-invariance flow on the family's parameter vector: the map f taking
/// a to f(a), plus the remainder R. The remainder is stored as a function of
/// (a_prev, a_next) rather than of a single parameter set; the customary
/// one-argument notation R(a1) hides a dependency on both.
struct ParameterFlow {
    std::function<std::vector<double>(const std::vector<double>&)> step;
    std::function<double(const std::vector<double>&, const std::vector<double>&)> remainder;
};

/// A closed-form solvable potential with its ordered bound states.
/// Families are immutable after construction and their evaluators are pure.
struct PotentialFamily {
    std::string name;
    std::vector<std::string> param_names;
    std::vector<double> params;
    /// Label of the first eigenpair. Conventions differ per family (Morse
    /// counts from 1, Ginocchio from 0); ops take labels and convert.
    int base_index = 1;
    JetFun potential;
    std::vector<EigenPair> eigenpairs;
    std::optional<ParameterFlow> flow;
    /// The same potential form evaluated at an arbitrary parameter vector.
    std::function<Jet(const std::vector<double>&, double, int)> potential_at;
    /// Rebuild the family at new parameters with the requested level count.
    std::function<PotentialFamily(const std::vector<double>&, int)> remake;
    /// Whether a parameter vector still describes a valid family member.
    std::function<bool(const std::vector<double>&)> params_valid;
    /// Implicit coordinate y(x) when the family lives on one (Ginocchio);
    /// used by grid construction to carve the |y| pole band.
    std::optional<std::function<double(double)>> coordinate;

    int levels() const noexcept { return static_cast<int>(eigenpairs.size()); }
    int ordinal(int label) const;             ///< label -> position, IndexError when out of range
    const EigenPair& pair(int label) const;    ///< eigenpair by family label
    double eigenvalue(int label) const { return pair(label).eigenvalue; }
};

struct MorseParams {
    double A = 0.0;
    double alpha = 1.0;
};

/// Morse family u(x;A) = 2[A^2 - A(A + alpha/sqrt2) sech^2(alpha x)] with up
/// to three closed-form bound states (labels 1..3) and its parameter flow.
/// All normalization constants are set to 1.
PotentialFamily morse_family(const MorseParams& p, int levels);

/// Flow A -> A - alpha/sqrt2 (alpha fixed), remainder 2(A_prev^2 - A_next^2).
ParameterFlow morse_flow(const MorseParams& p);

struct GinocchioParams {
    double beta = 1.0;
    double upsilon = 1.0;
};

/// Ginocchio family on the implicit coordinate y(x) with up to four bound
/// states (labels 0..3) built from Gegenbauer polynomials. Solvable but not
/// shape invariant: no flow.
PotentialFamily ginocchio_family(const GinocchioParams& p, int levels);

/// mu_n of the Ginocchio spectrum; the eigenvalue is -mu_n^2 beta^4.
double ginocchio_mu(const GinocchioParams& p, int n);

/// Jet of the coordinate y(x): the order-0 value inverts the closed-form
/// antiderivative x(y) (monotone bijection R -> (-1,1)), higher coefficients
/// come from the Taylor recurrence of dy/dx = (1-y^2)[1-(1-beta^2)y^2].
Jet ginocchio_coordinate(const GinocchioParams& p, double x, int order);
double ginocchio_coordinate_value(const GinocchioParams& p, double x);

/// Gegenbauer polynomial C_n^(a) on a jet, n <= 3.
Jet gegenbauer(int n, double a, const Jet& z);

/// Jet of h = psi'/psi. Throws SingularDivision at nodes of psi.
Jet log_derivative(const EigenPair& e, double x, int order);

}  // namespace darboux
