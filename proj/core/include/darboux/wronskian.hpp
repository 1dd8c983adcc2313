#pragma once

#include <span>
#include <vector>

#include "darboux/jet.hpp"

namespace darboux {

/// Determinant route over the jet ring.
enum class DetPath {
    automatic,  ///< expansion for k <= 4, LU above
    expansion,  ///< division-free Laplace expansion along the first row
    lu,         ///< LU with pivoting by order-0 magnitude
};

/// Wronskian of the functions fs as a jet of the requested order at x.
///
/// Entry (i, j) of the underlying matrix is the (i-1)-fold derivative shift
/// of the jet of fs[j]; computing the determinant over jets yields W together
/// with as many of its derivatives as out_order asks for in one pass, which
/// is exactly what the transformed potential needs. Each evaluator is seeded
/// at order (k-1) + out_order (the order budget of the k-1 derivative rows).
Jet wronskian(std::span<const JetFun> fs, double x, int out_order,
              DetPath path = DetPath::automatic);

/// Wronskian of fs extended by one extra function (the W_{k,s} arrangement).
Jet wronskian_with(std::span<const JetFun> fs, const JetFun& extra, double x,
                   int out_order, DetPath path = DetPath::automatic);

/// Determinant of a matrix of jets sharing one expansion point and order.
Jet jet_determinant(std::vector<std::vector<Jet>> m, DetPath path = DetPath::automatic);

/// Two evaluations of an identity and their relative gap,
/// |lhs-rhs| / max(|lhs|, |rhs|, 1e-300).
struct IdentityCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
};

IdentityCheck make_identity_check(double lhs, double rhs);

/// Derivative of a Wronskian determinant vs the determinant with its last
/// row bumped to n-th derivatives; the two agree identically.
IdentityCheck wronskian_derivative_check(std::span<const JetFun> fs, double x);

/// W(W_n, W_{n-1,s}) vs W_{n,s} W_{n-1} for seeds fs = (psi_1..psi_n) and a
/// distinguished extra function.
IdentityCheck two_wronskian_identity_check(std::span<const JetFun> fs,
                                           const JetFun& extra, double x);

/// Retained line/column indices of a minor (0-based, strictly increasing).
struct MinorSelection {
    std::vector<int> lines;
    std::vector<int> columns;
};

/// Scalar determinant by expansion along the first row. Exact whenever all
/// entries and intermediate products are integers below 2^53.
double expansion_det(const std::vector<std::vector<double>>& a);

struct JacobiCheck {
    double cofactor_minor = 0.0;       ///< minor of the cofactor matrix at the selection
    double scaled_complement = 0.0;    ///< |A|^(r-1) times the signed complementary minor
    double gap = 0.0;
    bool exact = false;                ///< the two sides compare bitwise equal
};

/// Minor-of-cofactors identity on a square matrix: the minor M'_r of the
/// cofactor matrix equals |A|^(r-1) times the signed complementary minor of A.
JacobiCheck jacobi_check(const std::vector<std::vector<double>>& a, const MinorSelection& sel);

}  // namespace darboux
