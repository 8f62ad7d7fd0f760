#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "txer/errors.hpp"

namespace txer {

// All internal arithmetic runs on 64-bit scalars; checkpoints store binary32
// (see checkpoint.hpp).
using Scalar = double;
using Shape = std::vector<int>;

inline std::int64_t numel(const Shape& s) {
    std::int64_t n = 1;
    for (int d : s) n *= d;
    return n;
}

std::string shape_str(const Shape& s);

// Dense row-major tensor. Data is shared between copies and treated as
// immutable once a tensor has been handed to the tape or another thread;
// mut_data() exists for construction and deserialization only.
class Tensor {
public:
    Tensor() : data_(std::make_shared<std::vector<Scalar>>()) {}

    explicit Tensor(Shape shape)
        : shape_(std::move(shape)), data_(std::make_shared<std::vector<Scalar>>(check_numel(shape_), 0.0)) {}

    Tensor(Shape shape, std::vector<Scalar> data)
        : shape_(std::move(shape)), data_(std::make_shared<std::vector<Scalar>>(std::move(data))) {
        if (numel(shape_) != static_cast<std::int64_t>(data_->size()))
            throw ShapeError("tensor data length " + std::to_string(data_->size()) +
                             " does not match shape " + shape_str(shape_));
    }

    static Tensor scalar(Scalar v) { return Tensor({}, {v}); }
    static Tensor zeros(Shape shape) { return Tensor(std::move(shape)); }
    static Tensor full(Shape shape, Scalar v) {
        Tensor t(std::move(shape));
        std::fill(t.mut_data(), t.mut_data() + t.size(), v);
        return t;
    }
    static Tensor ones(Shape shape) { return full(std::move(shape), 1.0); }

    const Shape& shape() const { return shape_; }
    int rank() const { return static_cast<int>(shape_.size()); }
    int dim(int i) const { return shape_[static_cast<std::size_t>(i)]; }
    std::int64_t size() const { return static_cast<std::int64_t>(data_->size()); }

    // Rank-1 and rank-2 conveniences; the model graph is matrices and vectors.
    int rows() const { return rank() == 2 ? shape_[0] : (rank() == 1 ? 1 : throw_rank()); }
    int cols() const { return rank() == 2 ? shape_[1] : (rank() == 1 ? shape_[0] : throw_rank()); }

    const Scalar* data() const { return data_->data(); }
    Scalar* mut_data() { return data_->data(); }
    Scalar operator[](std::int64_t i) const { return (*data_)[static_cast<std::size_t>(i)]; }

    bool requires_grad() const { return requires_grad_; }
    Tensor& set_requires_grad(bool b) {
        requires_grad_ = b;
        return *this;
    }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    Tensor reshaped(Shape s) const {
        if (numel(s) != size())
            throw ShapeError("cannot reshape " + shape_str(shape_) + " to " + shape_str(s));
        Tensor t = *this;
        t.shape_ = std::move(s);
        return t;
    }

    Tensor clone() const { return Tensor(shape_, *data_); }

private:
    static std::size_t check_numel(const Shape& s) {
        for (int d : s)
            if (d <= 0) throw ShapeError("non-positive dimension in shape " + shape_str(s));
        return static_cast<std::size_t>(numel(s));
    }
    [[noreturn]] static int throw_rank() { throw ShapeError("matrix access on tensor of rank > 2"); }

    Shape shape_;
    std::shared_ptr<std::vector<Scalar>> data_;
    bool requires_grad_ = false;
};

using EMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Views of the flat buffer as an Eigen matrix. For rank > 2 the caller picks
// the (rows, cols) factorization explicitly.
inline Eigen::Map<const EMat> mat_view(const Tensor& t, int rows, int cols) {
    return {t.data(), rows, cols};
}
inline Eigen::Map<const EMat> mat_view(const Tensor& t) { return {t.data(), t.rows(), t.cols()}; }
inline Eigen::Map<EMat> mat_view_mut(Tensor& t, int rows, int cols) {
    return {t.mut_data(), rows, cols};
}
inline Eigen::Map<EMat> mat_view_mut(Tensor& t) { return {t.mut_data(), t.rows(), t.cols()}; }

// Last-axis factorization: every tensor is (outer) rows of width `last`.
inline Eigen::Map<const EMat> lastdim_view(const Tensor& t) {
    if (t.rank() == 0) return {t.data(), 1, 1};
    int last = t.dim(t.rank() - 1);
    return {t.data(), static_cast<int>(t.size() / last), last};
}
inline Eigen::Map<EMat> lastdim_view_mut(Tensor& t) {
    if (t.rank() == 0) return {t.mut_data(), 1, 1};
    int last = t.dim(t.rank() - 1);
    return {t.mut_data(), static_cast<int>(t.size() / last), last};
}

void require_same_shape(const Tensor& a, const Tensor& b, const char* op);

}  // namespace txer
