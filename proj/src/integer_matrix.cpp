#include "cremona/integer_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cremona {

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer addition overflow");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer multiplication overflow");
    return r;
}

IntegerMatrix::IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : IntegerMatrix(static_cast<int>(rows.size()),
                    rows.size() ? static_cast<int>(rows.begin()->size()) : 0) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw std::invalid_argument("ragged matrix initializer");
        int c = 0;
        for (long long v : row) at(r, c++) = v;
        ++r;
    }
}

IntegerMatrix IntegerMatrix::diagonal(const std::vector<long long>& entries) {
    IntegerMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.at(static_cast<int>(i), static_cast<int>(i)) = entries[i];
    return m;
}

std::size_t IntegerMatrix::index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
}

namespace {

void add_row(IntegerMatrix& m, int dst, int src, long long factor) {
    for (int c = 0; c < m.cols(); ++c)
        m.at(dst, c) = checked_add(m.at(dst, c), checked_mul(factor, m.at(src, c)));
}

void add_col(IntegerMatrix& m, int dst, int src, long long factor) {
    for (int r = 0; r < m.rows(); ++r)
        m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(factor, m.at(r, src)));
}

void swap_rows(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntegerMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// Smallest nonzero |entry| in the submatrix starting at (t,t); false if all zero.
bool find_pivot(const IntegerMatrix& m, int t, int& pr, int& pc) {
    long long best = 0;
    bool found = false;
    for (int r = t; r < m.rows(); ++r)
        for (int c = t; c < m.cols(); ++c) {
            long long v = std::llabs(m.at(r, c));
            if (v != 0 && (!found || v < best)) {
                best = v;
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

}  // namespace

std::vector<long long> smith_normal_form(IntegerMatrix m) {
    const int n = std::min(m.rows(), m.cols());
    std::vector<long long> diag;
    diag.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) {
        int pr = t, pc = t;
        if (!find_pivot(m, t, pr, pc)) {
            for (int i = t; i < n; ++i) diag.push_back(0);
            break;
        }
        for (;;) {
            swap_rows(m, t, pr);
            swap_cols(m, t, pc);
            bool clean = true;
            for (int r = t + 1; r < m.rows(); ++r)
                if (m.at(r, t) != 0) {
                    add_row(m, r, t, -(m.at(r, t) / m.at(t, t)));
                    if (m.at(r, t) != 0) clean = false;
                }
            for (int c = t + 1; c < m.cols(); ++c)
                if (m.at(t, c) != 0) {
                    add_col(m, c, t, -(m.at(t, c) / m.at(t, t)));
                    if (m.at(t, c) != 0) clean = false;
                }
            if (!clean) {
                find_pivot(m, t, pr, pc);
                continue;
            }
            // pivot divides the rest of the submatrix, or pull a bad row up and retry
            bool divides = true;
            for (int r = t + 1; r < m.rows() && divides; ++r)
                for (int c = t + 1; c < m.cols(); ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        add_row(m, t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            pr = pc = t;
        }
        diag.push_back(std::llabs(m.at(t, t)));
    }
    return diag;
}

}  // namespace cremona
