#ifndef EDSCREEN_DATASET_HPP
#define EDSCREEN_DATASET_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edscreen {

// Column-major numeric matrix. Columns are contiguous, which is the access
// pattern of every per-feature statistic.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }

    std::span<const double> col(std::size_t c) const {
        return {data_.data() + c * rows_, rows_};
    }
    std::span<double> col(std::size_t c) {
        return {data_.data() + c * rows_, rows_};
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    void append_col(std::span<const double> v) {
        if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++cols_;
    }

    bool all_finite() const {
        for (double x : data_)
            if (!std::isfinite(x)) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Labeled two-class training or test data: observations in rows, features in
// columns. Both classes share the feature axis.
struct TwoClassSample {
    Matrix class1;
    Matrix class2;
    std::vector<std::string> feature_names;  // optional; empty or size d

    std::size_t n1() const { return class1.rows(); }
    std::size_t n2() const { return class2.rows(); }
    std::size_t dim() const { return class1.cols(); }

    // n1, n2 >= 2, equal column counts, all entries finite.
    void validate() const {
        if (class1.cols() != class2.cols())
            throw std::invalid_argument("class matrices must have the same number of columns");
        if (class1.rows() < 2 || class2.rows() < 2)
            throw std::invalid_argument("each class needs at least 2 observations");
        if (!class1.all_finite() || !class2.all_finite())
            throw std::invalid_argument("sample contains a non-finite value");
        if (!feature_names.empty() && feature_names.size() != class1.cols())
            throw std::invalid_argument("feature_names length does not match column count");
    }
};

}  // namespace edscreen

#endif
