#include "glc/lattice.hpp"

#include "glc/errors.hpp"

namespace glc {

namespace {

bool is_zero_row(const IntRow& r) {
    for (const auto& x : r)
        if (x != 0) return false;
    return true;
}

void sub_multiple(IntRow& a, const IntRow& b, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= q * b[i];
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntegerLattice hermite_normal_form(std::vector<IntRow> rows, int dimension) {
    for (auto& r : rows)
        if (static_cast<int>(r.size()) != dimension) fail(ErrorCode::Internal, "lattice row has the wrong length");
    std::vector<IntRow> done;
    std::vector<int> pivots;
    for (int col = 0; col < dimension && !rows.empty(); ++col) {
        // Euclid on this column among the remaining rows
        for (;;) {
            int best = -1;
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                const BigInt& x = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
                if (x == 0) continue;
                if (best < 0 || abs(x) < abs(rows[static_cast<std::size_t>(best)][static_cast<std::size_t>(col)])) best = i;
            }
            if (best < 0) break;
            bool others = false;
            const IntRow piv = rows[static_cast<std::size_t>(best)];
            for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
                if (i == best) continue;
                IntRow& r = rows[static_cast<std::size_t>(i)];
                if (r[static_cast<std::size_t>(col)] == 0) continue;
                BigInt q;
                mpz_tdiv_q(q.get_mpz_t(), r[static_cast<std::size_t>(col)].get_mpz_t(), piv[static_cast<std::size_t>(col)].get_mpz_t());
                sub_multiple(r, piv, q);
                if (r[static_cast<std::size_t>(col)] != 0) others = true;
            }
            if (!others) {
                IntRow p = piv;
                if (p[static_cast<std::size_t>(col)] < 0)
                    for (auto& x : p) x = -x;
                rows.erase(rows.begin() + best);
                done.push_back(std::move(p));
                pivots.push_back(col);
                break;
            }
        }
        std::erase_if(rows, is_zero_row);
    }
    // reduce above pivots
    for (std::size_t k = 0; k < done.size(); ++k) {
        std::size_t col = static_cast<std::size_t>(pivots[k]);
        for (std::size_t i = 0; i < k; ++i) sub_multiple(done[i], done[k], floor_div(done[i][col], done[k][col]));
    }
    IntegerLattice L;
    L.dimension = dimension;
    L.basis = std::move(done);
    return L;
}

IntRow IntegerLattice::reduce(const IntRow& v) const {
    IntRow r = v;
    for (const auto& b : basis) {
        std::size_t col = 0;
        while (b[col] == 0) ++col;
        sub_multiple(r, b, floor_div(r[col], b[col]));
    }
    return r;
}

bool IntegerLattice::contains(const IntRow& v) const { return is_zero_row(reduce(v)); }

BigInt IntegerLattice::index() const {
    if (rank() != dimension) fail(ErrorCode::Internal, "index of a lattice that is not full rank");
    BigInt d = 1;
    for (int i = 0; i < rank(); ++i) d *= basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    return d;
}

IntegerLattice lattice_kernel(const std::vector<std::vector<long long>>& images, const std::vector<long long>& moduli) {
    std::size_t r = images.size(), J = moduli.size();
    int dim = static_cast<int>(J + r);
    std::vector<IntRow> rows;
    for (std::size_t i = 0; i < r; ++i) {
        IntRow row(static_cast<std::size_t>(dim), BigInt(0));
        for (std::size_t j = 0; j < J; ++j) row[j] = BigInt(static_cast<long>(images[i].at(j)));
        row[J + i] = 1;
        rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < J; ++j) {
        IntRow row(static_cast<std::size_t>(dim), BigInt(0));
        row[j] = BigInt(static_cast<long>(moduli[j]));
        rows.push_back(std::move(row));
    }
    IntegerLattice H = hermite_normal_form(std::move(rows), dim);
    std::vector<IntRow> kernel;
    for (const auto& b : H.basis) {
        bool in_kernel = true;
        for (std::size_t j = 0; j < J; ++j)
            if (b[j] != 0) in_kernel = false;
        if (in_kernel) kernel.emplace_back(b.begin() + static_cast<std::ptrdiff_t>(J), b.end());
    }
    return hermite_normal_form(std::move(kernel), static_cast<int>(r));
}

}  // namespace glc
