#pragma once

#include <cstddef>
#include <vector>

#include "riskml/errors.hpp"

namespace riskml {

// Dense row-major matrix. Column extraction is explicit; the LASSO solver
// keeps its own column-major copy for contiguous per-feature access.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    const double* row_ptr(std::size_t r) const { return data.data() + r * cols; }
    double* row_ptr(std::size_t r) { return data.data() + r * cols; }

    std::vector<double> col(std::size_t j) const {
        std::vector<double> out(rows);
        for (std::size_t i = 0; i < rows; ++i) out[i] = data[i * cols + j];
        return out;
    }

    Matrix select_rows(const std::vector<std::size_t>& idx) const {
        Matrix out(idx.size(), cols);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] >= rows) fail(Err::Shape, "row index out of range");
            const double* src = row_ptr(idx[i]);
            double* dst = out.row_ptr(i);
            for (std::size_t j = 0; j < cols; ++j) dst[j] = src[j];
        }
        return out;
    }

    Matrix select_cols(const std::vector<std::size_t>& idx) const {
        Matrix out(rows, idx.size());
        for (std::size_t i = 0; i < rows; ++i) {
            const double* src = row_ptr(i);
            double* dst = out.row_ptr(i);
            for (std::size_t j = 0; j < idx.size(); ++j) {
                if (idx[j] >= cols) fail(Err::Shape, "column index out of range");
                dst[j] = src[idx[j]];
            }
        }
        return out;
    }
};

template <class T>
std::vector<T> select(const std::vector<T>& v, const std::vector<std::size_t>& idx) {
    std::vector<T> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(v[i]);
    return out;
}

} // namespace riskml
