#pragma once

#include <initializer_list>
#include <vector>

namespace cremona {

// Checked 64-bit integer arithmetic: overflow throws std::overflow_error.
// Keeps the desk-scale bounds soft without dragging in a bignum dependency.
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Dense integer matrix with exact (overflow-checked) entries.
class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols);
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    static IntegerMatrix diagonal(const std::vector<long long>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long& at(int r, int c) { return data_[index(r, c)]; }
    long long at(int r, int c) const { return data_[index(r, c)]; }

private:
    std::size_t index(int r, int c) const;
    int rows_ = 0, cols_ = 0;
    std::vector<long long> data_;
};

/// Smith normal form diagonal d_1 | d_2 | ... with d_i >= 0, computed by
/// unimodular row/column operations. Zero entries sort to the end; an empty
/// matrix yields an empty diagonal.
std::vector<long long> smith_normal_form(IntegerMatrix m);

}  // namespace cremona
