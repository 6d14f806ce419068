#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qm {

// Dense integer matrix, sized for quivers (n <= a few dozen).
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        IntMatrix m(static_cast<int>(rows.size()), rows.size() ? static_cast<int>(rows.begin()->size()) : 0);
        int i = 0;
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != m.cols_) throw std::invalid_argument("ragged matrix literal");
            int j = 0;
            for (long long v : r) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    long long at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (long long v : e_)
            if (v != 0) return false;
        return true;
    }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != -at(j, i)) return false;
        return true;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        check_same_shape(a, b);
        IntMatrix c = a;
        for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] += b.e_[k];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        check_same_shape(a, b);
        IntMatrix c = a;
        for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] -= b.e_[k];
        return c;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix c = a;
        for (auto& v : c.e_) v = -v;
        return c;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                long long v = a.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += v * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    // Integer power, exponent >= 0 (used for the cyclic permutation block A).
    IntMatrix pow(int k) const {
        if (rows_ != cols_) throw std::invalid_argument("pow needs a square matrix");
        IntMatrix r = identity(rows_);
        for (int i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    std::string to_string() const;

private:
    static void check_same_shape(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0, cols_ = 0;
    std::vector<long long> e_;
};

}  // namespace qm
