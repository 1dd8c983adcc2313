#include "darboux/wronskian.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace darboux {

namespace {

using JetMatrix = std::vector<std::vector<Jet>>;

// Laplace expansion along the first row, left-to-right accumulation.
// Division-free; swapping the first two columns negates the result exactly.
Jet expansion_det_jets(const JetMatrix& m, int row, const std::vector<int>& cols) {
    if (cols.size() == 1) return m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[0])];
    Jet acc(m[0][0].expansion_point(), m[0][0].order());
    std::vector<int> sub(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::size_t t = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (i != j) sub[t++] = cols[i];
        Jet term = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(cols[j])] *
                   expansion_det_jets(m, row + 1, sub);
        if (j % 2 == 1) term = -term;
        acc += term;
    }
    return acc;
}

Jet lu_det_jets(JetMatrix m) {
    const std::size_t n = m.size();
    const double x0 = m[0][0].expansion_point();
    const int ord = m[0][0].order();
    double sign = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col].value()) > std::abs(m[pivot][col].value())) pivot = r;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const Jet factor = m[r][col] / m[col][col];  // throws SingularDivision on an underflowing pivot
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    Jet det = Jet::constant(sign, x0, ord);
    for (std::size_t i = 0; i < n; ++i) det = det * m[i][i];
    return det;
}

JetMatrix wronskian_matrix(std::span<const JetFun> fs, double x, int out_order, int extra_shift = 0) {
    const int k = static_cast<int>(fs.size());
    const int seed_order = out_order + (k - 1) + extra_shift;
    std::vector<Jet> current;
    current.reserve(fs.size());
    for (const auto& f : fs) current.push_back(f(x, seed_order));

    JetMatrix m(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        m[static_cast<std::size_t>(i)].reserve(fs.size());
        const bool bump = extra_shift > 0 && i == k - 1;
        for (int j = 0; j < k; ++j) {
            Jet& cur = current[static_cast<std::size_t>(j)];
            if (i > 0) cur = cur.derivative_jet();
            if (bump) for (int b = 0; b < extra_shift; ++b) cur = cur.derivative_jet();
            m[static_cast<std::size_t>(i)].push_back(cur.truncated(out_order));
        }
    }
    return m;
}

}  // namespace

Jet jet_determinant(JetMatrix m, DetPath path) {
    if (m.empty()) throw Unsupported("determinant of an empty matrix");
    const std::size_t n = m.size();
    if (path == DetPath::automatic) path = n <= 4 ? DetPath::expansion : DetPath::lu;
    if (path == DetPath::lu && n > 1) return lu_det_jets(std::move(m));
    std::vector<int> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = static_cast<int>(i);
    return expansion_det_jets(m, 0, cols);
}

Jet wronskian(std::span<const JetFun> fs, double x, int out_order, DetPath path) {
    if (fs.empty()) throw Unsupported("Wronskian of an empty function list");
    return jet_determinant(wronskian_matrix(fs, x, out_order), path);
}

Jet wronskian_with(std::span<const JetFun> fs, const JetFun& extra, double x, int out_order,
                   DetPath path) {
    std::vector<JetFun> all(fs.begin(), fs.end());
    all.push_back(extra);
    return wronskian(all, x, out_order, path);
}

IdentityCheck make_identity_check(double lhs, double rhs) {
    const double norm = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return {lhs, rhs, std::abs(lhs - rhs) / norm};
}

IdentityCheck wronskian_derivative_check(std::span<const JetFun> fs, double x) {
    const double derivative = wronskian(fs, x, 1).derivative(1);
    // Same matrix with the last row bumped from (n-1)-th to n-th derivatives.
    const double bumped = jet_determinant(wronskian_matrix(fs, x, 0, 1)).value();
    return make_identity_check(derivative, bumped);
}

IdentityCheck two_wronskian_identity_check(std::span<const JetFun> fs, const JetFun& extra,
                                           double x) {
    const std::size_t n = fs.size();
    if (n < 2) throw Unsupported("two-Wronskian identity needs at least two seed functions");
    const auto head = fs.subspan(0, n - 1);

    const Jet wn = wronskian(fs, x, 1);
    const Jet wn1s = wronskian_with(head, extra, x, 1);
    const double lhs = wn.value() * wn1s.derivative(1) - wn.derivative(1) * wn1s.value();

    const double wns = wronskian_with(fs, extra, x, 0).value();
    const double wn1 = wronskian(head, x, 0).value();
    return make_identity_check(lhs, wns * wn1);
}

double expansion_det(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    if (n == 1) return a[0][0];
    std::vector<std::vector<double>> minor(n - 1, std::vector<double>(n - 1));
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t t = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1][t++] = a[r][c];
        }
        const double term = a[0][j] * expansion_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

namespace {

std::vector<std::vector<double>> submatrix_keeping(const std::vector<std::vector<double>>& a,
                                                   const std::vector<int>& lines,
                                                   const std::vector<int>& columns) {
    std::vector<std::vector<double>> out(lines.size(), std::vector<double>(columns.size()));
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < columns.size(); ++j)
            out[i][j] = a[static_cast<std::size_t>(lines[i])][static_cast<std::size_t>(columns[j])];
    return out;
}

std::vector<int> complement_of(const std::vector<int>& kept, int n) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - kept.size());
    std::size_t t = 0;
    for (int i = 0; i < n; ++i) {
        if (t < kept.size() && kept[t] == i) {
            ++t;
            continue;
        }
        out.push_back(i);
    }
    return out;
}

void validate_selection(const std::vector<int>& idx, int n) {
    if (idx.empty()) throw Unsupported("empty minor selection");
    int prev = -1;
    for (int i : idx) {
        if (i <= prev || i < 0 || i >= n) throw Unsupported("minor selection must be strictly increasing and in range");
        prev = i;
    }
}

}  // namespace

JacobiCheck jacobi_check(const std::vector<std::vector<double>>& a, const MinorSelection& sel) {
    const int n = static_cast<int>(a.size());
    if (sel.lines.size() != sel.columns.size()) throw Unsupported("minor selection must be square");
    const int r = static_cast<int>(sel.lines.size());
    if (r >= n) throw Unsupported("minor order must be below the matrix order");
    validate_selection(sel.lines, n);
    validate_selection(sel.columns, n);

    std::vector<std::vector<double>> cof(static_cast<std::size_t>(n),
                                         std::vector<double>(static_cast<std::size_t>(n)));
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const auto rows = complement_of({i}, n);
            const auto cols = complement_of({j}, n);
            const double minor = expansion_det(submatrix_keeping(a, rows, cols));
            cof[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((i + j) % 2 == 0) ? minor : -minor;
        }
    }

    const double cofactor_minor = expansion_det(submatrix_keeping(cof, sel.lines, sel.columns));

    int parity = 0;
    for (int i : sel.lines) parity += i;
    for (int j : sel.columns) parity += j;
    const double complement =
        expansion_det(submatrix_keeping(a, complement_of(sel.lines, n), complement_of(sel.columns, n)));
    const double signed_complement = (parity % 2 == 0) ? complement : -complement;

    const double det = expansion_det(a);
    double det_power = 1.0;
    for (int i = 1; i < r; ++i) det_power *= det;

    JacobiCheck out;
    out.cofactor_minor = cofactor_minor;
    out.scaled_complement = det_power * signed_complement;
    out.gap = make_identity_check(out.cofactor_minor, out.scaled_complement).gap;
    out.exact = out.cofactor_minor == out.scaled_complement;
    return out;
}

}  // namespace darboux
