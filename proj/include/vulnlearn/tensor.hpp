#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "vulnlearn/errors.hpp"
#include "vulnlearn/rng.hpp"

namespace vulnlearn {

// Dense row-major tensor of doubles. Rank 1 and 2 cover everything the
// pipeline needs; higher ranks are representable but unused.
class Tensor {
  public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(count(shape_), 0.0) {}

    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        require_shape(data_.size() == count(shape_), "tensor data length does not match shape");
    }

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

    static Tensor vector(std::initializer_list<double> xs) {
        return Tensor({xs.size()}, std::vector<double>(xs));
    }

    static Tensor matrix(std::size_t rows, std::size_t cols, std::initializer_list<double> xs) {
        require_shape(xs.size() == rows * cols, "matrix literal size mismatch");
        return Tensor({rows, cols}, std::vector<double>(xs));
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t dim(std::size_t i) const { return shape_.at(i); }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    std::size_t rows() const { return rank() >= 1 ? shape_[0] : 0; }
    std::size_t cols() const { return rank() >= 2 ? shape_[1] : 1; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& at(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols(); }
    const double* row(std::size_t i) const { return data_.data() + i * cols(); }

    void fill(double x) { std::fill(data_.begin(), data_.end(), x); }

    void fill_uniform(Rng& rng, double lo, double hi) {
        for (double& x : data_) x = uniform_range(rng, lo, hi);
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool all_finite() const {
        for (double x : data_)
            if (!std::isfinite(x)) return false;
        return true;
    }

  private:
    static std::size_t count(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }

    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

// ---- raw GEMM kernels -------------------------------------------------
// ikj loop order keeps the B row contiguous in the inner loop. These sit on
// the training hot path; everything else in the library can afford to be
// shape-checked Tensor code.

// C = A(n x k) * B(k x m), C preallocated n x m.
inline void gemm_nn(const double* a, std::size_t n, std::size_t k, const double* b, std::size_t m,
                    double* c, bool accumulate = false) {
    if (!accumulate) std::fill(c, c + n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        for (std::size_t p = 0; p < k; ++p) {
            double av = arow[p];
            if (av == 0.0) continue;
            const double* brow = b + p * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

// C = A(n x k) * B(m x k)^T -> n x m.
inline void gemm_nt(const double* a, std::size_t n, std::size_t k, const double* b, std::size_t m,
                    double* c, bool accumulate = false) {
    if (!accumulate) std::fill(c, c + n * m, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            const double* brow = b + j * k;
            double s = 0.0;
            for (std::size_t p = 0; p < k; ++p) s += arow[p] * brow[p];
            crow[j] += s;
        }
    }
}

// C = A(k x n)^T * B(k x m) -> n x m.
inline void gemm_tn(const double* a, std::size_t k, std::size_t n, const double* b, std::size_t m,
                    double* c, bool accumulate = false) {
    if (!accumulate) std::fill(c, c + n * m, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
        const double* arow = a + p * n;
        const double* brow = b + p * m;
        for (std::size_t i = 0; i < n; ++i) {
            double av = arow[i];
            if (av == 0.0) continue;
            double* crow = c + i * m;
            for (std::size_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

inline Tensor matmul(const Tensor& a, const Tensor& b) {
    require_shape(a.rank() == 2 && b.rank() == 2, "matmul expects rank-2 tensors");
    require_shape(a.cols() == b.rows(), "matmul inner dimension mismatch");
    Tensor c({a.rows(), b.cols()});
    gemm_nn(a.data(), a.rows(), a.cols(), b.data(), b.cols(), c.data());
    return c;
}

inline double dot(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

}  // namespace vulnlearn
