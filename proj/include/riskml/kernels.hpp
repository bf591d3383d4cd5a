#pragma once

#include <cstddef>
#include <vector>

// Dense arithmetic kernels behind the numeric modules. Every kernel has a
// scalar reference implementation and, on x86-64 with AVX2+FMA, a vector
// variant selected once at startup. The scalar path is the semantic
// reference; vector variants may reassociate sums and are equivalence-tested
// against it.

namespace riskml::kernels {

enum class Backend {
    scalar,
    avx2,
};

// Active backend for all kernels. Defaults to the best the CPU supports.
Backend active_backend();
const char* backend_name();

// Force a backend (tests, reproducibility debugging). Throws Err::Spec if
// the requested backend is not supported on this CPU.
void set_backend(Backend b);
bool backend_supported(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n);

// sum_i a[i] * b[i] * c[i]  (weighted inner products in IRLS)
double dot3(const double* a, const double* b, const double* c, std::size_t n);

// sum_i a[i]
double sum(const double* a, std::size_t n);

// sum_i a[i]^2
double sumsq(const double* a, std::size_t n);

// y[i] += alpha * x[i]
void axpy(double alpha, const double* x, double* y, std::size_t n);

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return dot(a.data(), b.data(), a.size());
}
inline double sum(const std::vector<double>& a) { return sum(a.data(), a.size()); }
inline double sumsq(const std::vector<double>& a) { return sumsq(a.data(), a.size()); }

} // namespace riskml::kernels
