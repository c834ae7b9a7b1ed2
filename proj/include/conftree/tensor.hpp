#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "conftree/error.hpp"
#include "conftree/rng.hpp"

namespace conftree {

// Dense row-major 64-bit real tensor. Everything in the encoders is rank 2
// by convention: scalars are 1x1 and row vectors 1xn. Values are written
// once by the op that creates them; gradients accumulate during backward.
struct TensorData {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> value;
    std::vector<double> grad;  // sized on demand, same length as value
    bool requires_grad = false;

    std::size_t size() const { return rows * cols; }
    void ensure_grad() {
        if (grad.size() != value.size()) grad.assign(value.size(), 0.0);
    }
};

// Shared handle; ops hold inputs alive through these.
class Tensor {
public:
    Tensor() = default;
    Tensor(std::size_t rows, std::size_t cols, bool requires_grad = false);
    static Tensor from_values(std::size_t rows, std::size_t cols, std::vector<double> values,
                              bool requires_grad = false);
    static Tensor scalar(double v);

    std::size_t rows() const { return d_->rows; }
    std::size_t cols() const { return d_->cols; }
    std::size_t size() const { return d_->size(); }
    bool defined() const { return d_ != nullptr; }

    double& at(std::size_t r, std::size_t c) { return d_->value[r * d_->cols + c]; }
    double at(std::size_t r, std::size_t c) const { return d_->value[r * d_->cols + c]; }
    double item() const;  // value of a 1x1 tensor

    std::vector<double>& value() { return d_->value; }
    const std::vector<double>& value() const { return d_->value; }
    std::vector<double>& grad() { d_->ensure_grad(); return d_->grad; }
    const std::vector<double>& grad_const() const { return d_->grad; }

    bool requires_grad() const { return d_->requires_grad; }
    void set_requires_grad(bool b) { d_->requires_grad = b; }
    void zero_grad() { d_->grad.assign(d_->value.size(), 0.0); }

    std::string shape_str() const;
    std::shared_ptr<TensorData> data_ptr() const { return d_; }

private:
    std::shared_ptr<TensorData> d_;
};

// Reverse-mode tape. Ops append their backward rule in execution order,
// which is a topological order by construction; backward() replays the
// rules in reverse with plain serial loops, so accumulation order is fixed
// and every run is bit-identical.
class Tape {
public:
    // elementwise
    Tensor add(const Tensor& a, const Tensor& b);
    Tensor sub(const Tensor& a, const Tensor& b);
    Tensor mul(const Tensor& a, const Tensor& b);
    Tensor scale(const Tensor& a, double c);
    Tensor relu(const Tensor& x);

    // broadcast a 1xn row over every row of an mxn matrix
    Tensor add_rowvec(const Tensor& x, const Tensor& row);

    Tensor matmul(const Tensor& a, const Tensor& b);
    Tensor transpose(const Tensor& x);

    Tensor softmax_rows(const Tensor& x);
    Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                      double eps = 1e-5);
    Tensor l2_normalize_rows(const Tensor& x);
    // per-row ln(sum(exp(x))), stabilized; -inf entries contribute zero
    Tensor logsumexp_rows(const Tensor& x);

    Tensor concat_rows(const std::vector<Tensor>& parts);
    Tensor concat_cols(const std::vector<Tensor>& parts);
    Tensor slice_rows(const Tensor& x, std::size_t first, std::size_t count);

    // pick x(r,c) for each (r,c), result is 1xK
    Tensor gather(const Tensor& x, const std::vector<std::pair<std::size_t, std::size_t>>& idx);

    Tensor sum_all(const Tensor& x);
    Tensor mean_all(const Tensor& x);

    // Accumulate gradients of `loss` (a 1x1 tensor) into every tensor
    // recorded on this tape. Callers zero parameter grads beforehand;
    // tensors not on a path from the loss keep zero grad.
    void backward(const Tensor& loss);

    std::size_t num_entries() const { return entries_.size(); }
    void clear() { entries_.clear(); }

private:
    struct Entry {
        std::function<void()> backward;
    };
    std::vector<Entry> entries_;

    void record(std::function<void()> fn) { entries_.push_back({std::move(fn)}); }
    friend class TapeOps;
};

// Adaptive-moment optimizer over a flat parameter list. Moments are part
// of the checkpoint.
class AdamOptimizer {
public:
    AdamOptimizer(std::vector<Tensor> params, double lr, double beta1 = 0.9,
                  double beta2 = 0.999, double eps = 1e-8);

    void step();        // one update from accumulated grads, then zero them
    void zero_grads();

    std::int64_t step_count() const { return t_; }
    void set_step_count(std::int64_t t) { t_ = t; }
    const std::vector<Tensor>& params() const { return params_; }
    std::vector<std::vector<double>>& moments_m() { return m_; }
    std::vector<std::vector<double>>& moments_v() { return v_; }

private:
    std::vector<Tensor> params_;
    double lr_, beta1_, beta2_, eps_;
    std::int64_t t_ = 0;
    std::vector<std::vector<double>> m_, v_;
};

// Max relative error between analytic gradients and central differences,
// over every component of every parameter. `loss_fn` must rebuild the
// forward pass on the tape it is given and be deterministic.
double grad_check(const std::function<Tensor(Tape&)>& loss_fn, std::vector<Tensor> params,
                  double epsilon = 1e-5);

// seeded N(0, stddev) fill, used by all parameter initializers
void fill_normal(Tensor& t, Rng& rng, double stddev);

}  // namespace conftree
