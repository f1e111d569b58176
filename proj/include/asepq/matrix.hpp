#pragma once

#include <stdexcept>
#include <type_traits>
#include <vector>

namespace asepq {

template <class T>
T one_value() {
    if constexpr (std::is_arithmetic_v<T>)
        return T(1);
    else
        return T::one();
}

// dense row-major matrix; operators act on column vectors, so for a Markov
// generator entry (i,j) is the rate from state i to state j and rows sum to 0
template <class T>
class DenseMatrix {
  public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static DenseMatrix identity(long n) {
        DenseMatrix m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = one_value<T>();
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    T& operator()(long i, long j) { return a_[i * cols_ + j]; }
    const T& operator()(long i, long j) const { return a_[i * cols_ + j]; }

    DenseMatrix transpose() const {
        DenseMatrix m(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    DenseMatrix& operator-=(const DenseMatrix& o) {
        check_same_shape(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        DenseMatrix m(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T()) continue;
                for (long j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == T()) continue;
                    m(i, j) += aik * b(k, j);
                }
            }
        return m;
    }

    DenseMatrix& scale(const T& s) {
        for (auto& v : a_) v = v * s;
        return *this;
    }

    bool operator==(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return false;
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == T())) return false;
        return true;
    }

  private:
    void check_same_shape(const DenseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    long rows_, cols_;
    std::vector<T> a_;
};

}  // namespace asepq
