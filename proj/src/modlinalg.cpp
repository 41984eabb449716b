#include "glc/modlinalg.hpp"

namespace glc {

namespace {

PadicResidue exact_div_p_power(const PadicResidue& a, int e) {
    u64 pe = prime_power(a.prime(), e);
    return PadicResidue(a.prime(), a.precision(), a.value() / pe);
}

ModMatrix reduce_mod_p(const ModMatrix& A) {
    ModMatrix R = A;
    for (auto& row : R)
        for (auto& x : row) x = x.reduce(1);
    return R;
}

// Row echelon form over F_p in place; returns pivot columns.
std::vector<std::size_t> echelon(ModMatrix& A) {
    std::vector<std::size_t> pivots;
    if (A.empty()) return pivots;
    std::size_t rows = A.size(), cols = A[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!A[i][c].is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        std::swap(A[r], A[piv]);
        PadicResidue inv = A[r][c].inv();
        for (auto& x : A[r]) x = x * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].is_zero()) continue;
            PadicResidue f = A[i][c];
            for (std::size_t k = 0; k < cols; ++k) A[i][k] = A[i][k] - f * A[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

ModMatrix from_columns(const std::vector<ModVector>& cols, std::size_t rows, const PadicResidue& proto) {
    ModMatrix A(rows, ModVector(cols.size(), proto.zero()));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) A[i][j] = cols[j].at(i);
    return A;
}

int rank_mod_p(const ModMatrix& A) {
    ModMatrix R = reduce_mod_p(A);
    return static_cast<int>(echelon(R).size());
}

std::vector<ModVector> nullspace_mod_p(const ModMatrix& A, std::size_t cols, u64 p) {
    PadicResidue z(p, 1, 0);
    ModMatrix R = reduce_mod_p(A);
    auto pivots = echelon(R);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<ModVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        ModVector x(cols, z);
        x[f] = z.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -R[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::size_t> independent_columns_mod_p(const std::vector<ModVector>& cols) {
    std::vector<std::size_t> keep;
    std::vector<ModVector> chosen;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        chosen.push_back(cols[j]);
        ModMatrix A = from_columns(chosen, cols[j].size(), cols[j][0]);
        if (rank_mod_p(A) == static_cast<int>(chosen.size())) keep.push_back(j);
        else chosen.pop_back();
    }
    return keep;
}

SpanTest span_membership(const std::vector<ModVector>& cols, const ModVector& v) {
    SpanTest out;
    std::size_t g = v.size(), k = cols.size();
    const PadicResidue z = v.at(0).zero();
    ModMatrix A = from_columns(cols, g, z);
    ModMatrix C(k, ModVector(k, z));
    for (std::size_t i = 0; i < k; ++i) C[i][i] = z.one();
    ModVector w = v;
    std::vector<int> exps;
    std::size_t t = 0;
    for (; t < std::min(g, k); ++t) {
        int best = z.precision();
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < g; ++i)
            for (std::size_t j = t; j < k; ++j)
                if (!A[i][j].is_zero() && A[i][j].valuation() < best) {
                    best = A[i][j].valuation();
                    bi = i;
                    bj = j;
                }
        if (best == z.precision()) break;
        std::swap(A[t], A[bi]);
        std::swap(w[t], w[bi]);
        for (std::size_t i = 0; i < g; ++i) std::swap(A[i][t], A[i][bj]);
        for (std::size_t i = 0; i < k; ++i) std::swap(C[i][t], C[i][bj]);
        int e = best;
        PadicResidue u = exact_div_p_power(A[t][t], e).inv();
        for (std::size_t i = 0; i < g; ++i) A[i][t] = A[i][t] * u;
        for (std::size_t i = 0; i < k; ++i) C[i][t] = C[i][t] * u;
        for (std::size_t i = 0; i < g; ++i) {
            if (i == t || A[i][t].is_zero()) continue;
            PadicResidue f = exact_div_p_power(A[i][t], e);
            for (std::size_t j = 0; j < k; ++j) A[i][j] = A[i][j] - f * A[t][j];
            w[i] = w[i] - f * w[t];
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (j == t || A[t][j].is_zero()) continue;
            PadicResidue f = exact_div_p_power(A[t][j], e);
            for (std::size_t i = 0; i < g; ++i) A[i][j] = A[i][j] - f * A[i][t];
            for (std::size_t i = 0; i < k; ++i) C[i][j] = C[i][j] - f * C[i][t];
        }
        exps.push_back(e);
    }
    out.member = true;
    ModVector y(k, z);
    for (std::size_t i = 0; i < g; ++i) {
        bool ok = i < t ? w[i].valuation() >= exps[i] : w[i].is_zero();
        if (!ok) {
            out.member = false;
            out.residual.push_back(w[i]);
        } else if (i < t) {
            y[i] = exact_div_p_power(w[i], exps[i]);
        }
    }
    if (out.member) {
        out.solution.assign(k, z);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) out.solution[i] = out.solution[i] + C[i][j] * y[j];
    }
    return out;
}

}  // namespace glc
