#include "seshadri/normal_form.hpp"

#include <algorithm>
#include <utility>

namespace seshadri {

namespace {

std::size_t column_count(const IntMatrix& m) { return m.empty() ? 0 : m.front().size(); }

void sub_row_multiple(std::vector<Integer>& target, const std::vector<Integer>& source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
    const std::size_t cols = column_count(rows);
    std::size_t pivot_row = 0;

    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        // Euclid on column c among rows pivot_row.. until a single nonzero remains.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
            }
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
                sub_row_multiple(rows[r], rows[pivot_row], q);
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivot_row][c] == 0) continue;
        if (rows[pivot_row][c] < 0) {
            for (auto& x : rows[pivot_row]) x = -x;
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
            sub_row_multiple(rows[r], rows[pivot_row], q);
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
    const std::size_t nrows = m.size();
    const std::size_t ncols = column_count(m);
    const std::size_t rank_bound = std::min(nrows, ncols);

    for (std::size_t t = 0; t < rank_bound; ++t) {
        for (;;) {
            // Smallest nonzero magnitude in the trailing block becomes the pivot.
            std::size_t pr = nrows, pc = ncols;
            for (std::size_t i = t; i < nrows; ++i) {
                for (std::size_t j = t; j < ncols; ++j) {
                    if (m[i][j] == 0) continue;
                    if (pr == nrows || abs(m[i][j]) < abs(m[pr][pc])) {
                        pr = i;
                        pc = j;
                    }
                }
            }
            if (pr == nrows) break;
            std::swap(m[t], m[pr]);
            for (auto& row : m) std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (m[i][t] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), m[t][t].get_mpz_t());
                sub_row_multiple(m[i], m[t], q);
                if (m[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (m[t][j] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), m[t][t].get_mpz_t());
                for (std::size_t i = 0; i < nrows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold an offending row into the pivot row and retry.
            std::size_t bad = nrows;
            for (std::size_t i = t + 1; i < nrows && bad == nrows; ++i) {
                for (std::size_t j = t + 1; j < ncols; ++j) {
                    if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
                }
            }
            if (bad == nrows) break;
            for (std::size_t j = 0; j < ncols; ++j) m[t][j] += m[bad][j];
        }
    }

    std::vector<Integer> diag(rank_bound);
    for (std::size_t t = 0; t < rank_bound; ++t) diag[t] = abs(m[t][t]);
    // Zeros (rank deficiency) sort last; the chain is already divisibility-ordered otherwise.
    std::stable_partition(diag.begin(), diag.end(), [](const Integer& v) { return v != 0; });
    return diag;
}

}  // namespace seshadri
