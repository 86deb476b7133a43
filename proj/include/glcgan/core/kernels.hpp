#pragma once

#include <cstddef>
#include <cstdint>

namespace glcgan::kern {

/// Instruction set selected for the float fast path. The double path always
/// runs the scalar reference kernels (it exists for oracle/verification use).
enum class Isa { scalar, avx2 };

Isa active_isa();
void set_isa(Isa isa);          // throws if unsupported on this CPU
const char* isa_name(Isa isa);
bool cpu_supports_avx2();

// ---- float fast path (runtime-dispatched) ----
// Row-major GEMM. nn: C = A[MxK] * B[KxN]; nt: C = A[MxK] * Bt[NxK]^T.
// acc=true accumulates into C instead of overwriting.
void sgemm_nn(int M, int N, int K, const float* A, int lda, const float* B, int ldb,
              float* C, int ldc, bool acc);
void sgemm_nt(int M, int N, int K, const float* A, int lda, const float* Bt, int ldb,
              float* C, int ldc, bool acc);

void sadd(size_t n, const float* a, const float* b, float* out);
void ssub(size_t n, const float* a, const float* b, float* out);
void sacc(size_t n, float* dst, const float* src);                    // dst += src
void saxpy(size_t n, float alpha, const float* x, float* y);          // y += alpha*x
void sscale(size_t n, const float* x, float alpha, float* out);
void sleaky_fwd(size_t n, const float* x, float slope, float* y);
void sleaky_bwd(size_t n, const float* x, const float* dy, float slope, float* dx_acc);
void stanh_bwd(size_t n, const float* y, const float* dy, float* dx_acc);

// Reductions accumulate in double on every backend.
double ssum(size_t n, const float* x);
double ssumsq(size_t n, const float* x);
double ssumabs(size_t n, const float* x);

void sadam(size_t n, float* w, const float* g, float* m, float* v, float lr, float beta1,
           float beta2, float eps, float bias_c1, float bias_c2);

// ---- generic entry points used by the templated op layer ----
template <typename T>
void gemm_nn(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc,
             bool acc);
template <typename T>
void gemm_nt(int M, int N, int K, const T* A, int lda, const T* Bt, int ldb, T* C, int ldc,
             bool acc);
template <typename T>
void acc(size_t n, T* dst, const T* src);
template <typename T>
void axpy(size_t n, T alpha, const T* x, T* y);
template <typename T>
double sum(size_t n, const T* x);
template <typename T>
double sumsq(size_t n, const T* x);
template <typename T>
double sumabs(size_t n, const T* x);
template <typename T>
void leaky_fwd(size_t n, const T* x, T slope, T* y);
template <typename T>
void leaky_bwd(size_t n, const T* x, const T* dy, T slope, T* dx_acc);
template <typename T>
void adam(size_t n, T* w, const T* g, T* m, T* v, T lr, T beta1, T beta2, T eps, T bias_c1,
          T bias_c2);

}  // namespace glcgan::kern

#include "glcgan/core/kernels_ref.hpp"

namespace glcgan::kern {

template <typename T>
void gemm_nn(int M, int N, int K, const T* A, int lda, const T* B, int ldb, T* C, int ldc,
             bool acc) {
    if constexpr (std::is_same_v<T, float>)
        sgemm_nn(M, N, K, A, lda, B, ldb, C, ldc, acc);
    else
        ref::gemm_nn(M, N, K, A, lda, B, ldb, C, ldc, acc);
}

template <typename T>
void gemm_nt(int M, int N, int K, const T* A, int lda, const T* Bt, int ldb, T* C, int ldc,
             bool acc) {
    if constexpr (std::is_same_v<T, float>)
        sgemm_nt(M, N, K, A, lda, Bt, ldb, C, ldc, acc);
    else
        ref::gemm_nt(M, N, K, A, lda, Bt, ldb, C, ldc, acc);
}

template <typename T>
void acc(size_t n, T* dst, const T* src) {
    if constexpr (std::is_same_v<T, float>)
        sacc(n, dst, src);
    else
        ref::acc(n, dst, src);
}

template <typename T>
void axpy(size_t n, T alpha, const T* x, T* y) {
    if constexpr (std::is_same_v<T, float>)
        saxpy(n, alpha, x, y);
    else
        ref::axpy(n, alpha, x, y);
}

template <typename T>
double sum(size_t n, const T* x) {
    if constexpr (std::is_same_v<T, float>)
        return ssum(n, x);
    else
        return ref::sum(n, x);
}

template <typename T>
double sumsq(size_t n, const T* x) {
    if constexpr (std::is_same_v<T, float>)
        return ssumsq(n, x);
    else
        return ref::sumsq(n, x);
}

template <typename T>
double sumabs(size_t n, const T* x) {
    if constexpr (std::is_same_v<T, float>)
        return ssumabs(n, x);
    else
        return ref::sumabs(n, x);
}

template <typename T>
void leaky_fwd(size_t n, const T* x, T slope, T* y) {
    if constexpr (std::is_same_v<T, float>)
        sleaky_fwd(n, x, slope, y);
    else
        ref::leaky_fwd(n, x, slope, y);
}

template <typename T>
void leaky_bwd(size_t n, const T* x, const T* dy, T slope, T* dx_acc) {
    if constexpr (std::is_same_v<T, float>)
        sleaky_bwd(n, x, dy, slope, dx_acc);
    else
        ref::leaky_bwd(n, x, dy, slope, dx_acc);
}

template <typename T>
void adam(size_t n, T* w, const T* g, T* m, T* v, T lr, T beta1, T beta2, T eps, T bias_c1,
          T bias_c2) {
    if constexpr (std::is_same_v<T, float>)
        sadam(n, w, g, m, v, lr, beta1, beta2, eps, bias_c1, bias_c2);
    else
        ref::adam(n, w, g, m, v, lr, beta1, beta2, eps, bias_c1, bias_c2);
}

}  // namespace glcgan::kern
