#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace glcgan {

/// NCHW tensor with shared storage. Copies are shallow; use clone() for a
/// deep copy. Ops allocate fresh buffers for their outputs, so aliasing only
/// occurs where it is intended (parameter leaves in the autodiff graph).
template <typename T>
class TensorT {
public:
    TensorT() = default;

    TensorT(int n, int c, int h, int w)
        : shape_{n, c, h, w},
          buf_(std::make_shared<std::vector<T>>(static_cast<size_t>(n) * c * h * w, T(0))) {
        if (n < 0 || c < 0 || h < 0 || w < 0)
            throw std::invalid_argument("tensor: negative dimension");
    }

    static TensorT zeros_like(const TensorT& o) {
        return TensorT(o.n(), o.c(), o.h(), o.w());
    }

    static TensorT full(int n, int c, int h, int w, T v) {
        TensorT t(n, c, h, w);
        t.fill(v);
        return t;
    }

    static TensorT scalar(T v) { return full(1, 1, 1, 1, v); }

    int n() const { return shape_[0]; }
    int c() const { return shape_[1]; }
    int h() const { return shape_[2]; }
    int w() const { return shape_[3]; }
    const std::array<int, 4>& shape() const { return shape_; }

    size_t size() const {
        return static_cast<size_t>(shape_[0]) * shape_[1] * shape_[2] * shape_[3];
    }
    bool empty() const { return !buf_ || buf_->empty(); }

    T* data() { return buf_->data(); }
    const T* data() const { return buf_->data(); }

    T& at(int n, int c, int y, int x) {
        return (*buf_)[((static_cast<size_t>(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
    }
    T at(int n, int c, int y, int x) const {
        return (*buf_)[((static_cast<size_t>(n) * shape_[1] + c) * shape_[2] + y) * shape_[3] + x];
    }

    T* plane(int n, int c) {
        return buf_->data() + (static_cast<size_t>(n) * shape_[1] + c) * shape_[2] * shape_[3];
    }
    const T* plane(int n, int c) const {
        return buf_->data() + (static_cast<size_t>(n) * shape_[1] + c) * shape_[2] * shape_[3];
    }

    T item() const {
        if (size() != 1) throw std::logic_error("tensor: item() on non-scalar");
        return (*buf_)[0];
    }

    void fill(T v) { std::fill(buf_->begin(), buf_->end(), v); }

    TensorT clone() const {
        TensorT t;
        t.shape_ = shape_;
        t.buf_ = buf_ ? std::make_shared<std::vector<T>>(*buf_) : nullptr;
        return t;
    }

    /// Same buffer reinterpreted with a new shape of equal element count.
    TensorT reshaped(int n, int c, int h, int w) const {
        if (static_cast<size_t>(n) * c * h * w != size())
            throw std::invalid_argument("tensor: reshape size mismatch");
        TensorT t;
        t.shape_ = {n, c, h, w};
        t.buf_ = buf_;
        return t;
    }

    bool same_shape(const TensorT& o) const { return shape_ == o.shape_; }

    std::string shape_str() const {
        return "[" + std::to_string(shape_[0]) + "," + std::to_string(shape_[1]) + "," +
               std::to_string(shape_[2]) + "," + std::to_string(shape_[3]) + "]";
    }

    template <typename U>
    TensorT<U> cast() const {
        TensorT<U> t(shape_[0], shape_[1], shape_[2], shape_[3]);
        const T* s = data();
        U* d = t.data();
        for (size_t i = 0; i < size(); ++i) d[i] = static_cast<U>(s[i]);
        return t;
    }

private:
    std::array<int, 4> shape_{0, 0, 0, 0};
    std::shared_ptr<std::vector<T>> buf_;
};

using Tensor = TensorT<float>;
using TensorD = TensorT<double>;

}  // namespace glcgan
