#include "weyl/linalg.hpp"

#include <algorithm>

namespace weyl {

bool is_zero_vec(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c.is_zero(); });
}

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t ncols = 0;
    for (const auto& r : m) ncols = std::max(ncols, r.size());
    for (auto& r : m) r.resize(ncols, Rational(0));

    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col].is_zero()) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rational inv = m[row][col].inverse();
        for (size_t j = col; j < ncols; ++j) m[row][j] = inv * m[row][j];
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rational f = m[i][col];
            for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

QVec reduce_against(QVec v, const QMat& rows, const std::vector<int>& pivots) {
    for (size_t r = 0; r < rows.size(); ++r) {
        size_t p = static_cast<size_t>(pivots[r]);
        if (p >= v.size() || v[p].is_zero()) continue;
        Rational f = v[p];
        for (size_t j = 0; j < rows[r].size() && j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return v;
}

QMat kernel_basis(QMat m, int ncols) {
    for (auto& r : m) r.resize(static_cast<size_t>(ncols), Rational(0));
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;

    QMat basis;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        QVec x(static_cast<size_t>(ncols), Rational(0));
        x[static_cast<size_t>(free)] = Rational(1);
        for (size_t r = 0; r < m.size(); ++r)
            x[static_cast<size_t>(pivots[r])] = -m[r][static_cast<size_t>(free)];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<QVec> express_in_span(const QMat& rows, const QVec& target) {
    if (rows.empty()) return is_zero_vec(target) ? std::optional<QVec>(QVec{}) : std::nullopt;
    size_t ncols = target.size();
    for (const auto& r : rows) ncols = std::max(ncols, r.size());
    // Augment each row with its identity tag; elimination tracks coefficients.
    QMat work(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        work[i] = rows[i];
        work[i].resize(ncols, Rational(0));
        for (size_t k = 0; k < rows.size(); ++k) work[i].push_back(i == k ? Rational(1) : Rational(0));
    }
    // Plain forward/backward elimination restricted to the first ncols columns.
    std::vector<int> pivots;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < work.size(); ++col) {
        size_t sel = row;
        while (sel < work.size() && work[sel][col].is_zero()) ++sel;
        if (sel == work.size()) continue;
        std::swap(work[row], work[sel]);
        Rational inv = work[row][col].inverse();
        for (size_t j = 0; j < work[row].size(); ++j) work[row][j] = inv * work[row][j];
        for (size_t i = 0; i < work.size(); ++i) {
            if (i == row || work[i][col].is_zero()) continue;
            Rational f = work[i][col];
            for (size_t j = 0; j < work[i].size(); ++j) work[i][j] -= f * work[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    QVec t = target;
    t.resize(ncols, Rational(0));
    QVec coeff(rows.size(), Rational(0));
    for (size_t r = 0; r < row; ++r) {
        size_t p = static_cast<size_t>(pivots[r]);
        if (t[p].is_zero()) continue;
        Rational f = t[p];
        for (size_t j = 0; j < ncols; ++j) t[j] -= f * work[r][j];
        for (size_t k = 0; k < rows.size(); ++k) coeff[k] += f * work[r][ncols + k];
    }
    if (!is_zero_vec(t)) return std::nullopt;
    return coeff;
}

}  // namespace weyl
