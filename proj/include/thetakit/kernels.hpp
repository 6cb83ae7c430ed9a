#pragma once

#include <cstddef>
#include <string_view>

// Dense double-precision kernels behind the eigensolver and the conic
// solver's iterate updates. Every kernel has a scalar reference
// implementation; on x86-64 an AVX2+FMA variant is compiled as well and the
// dispatched entry points route to whichever backend is active. The backend
// is picked once at startup from CPUID (env THETAKIT_ISA=scalar|avx2
// overrides); tests flip it explicitly to cross-check the two lanes.
//
// AVX2 results may differ from scalar in the last bits (FMA contraction,
// tree reduction order); equivalence tests compare within 1e-12 relative.

namespace thetakit::kern {

enum class Isa { scalar, avx2 };

Isa active();
// Returns false (and leaves the backend unchanged) when `isa` is not
// supported on this CPU.
bool select(Isa isa);
std::string_view name(Isa isa);

// dot(a,b) = sum_i a[i]*b[i]
double dot(const double* a, const double* b, std::size_t n);
// sum(a) = sum_i a[i]
double sum(const double* a, std::size_t n);
// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// y = a*x + b*y
void axpby(double a, const double* x, double b, double* y, std::size_t n);
// plane rotation: (x, y) <- (c*x - s*y, s*x + c*y)
void rot(double* x, double* y, double c, double s, std::size_t n);
// sum_i (a[i]-b[i])^2
double diff_norm_sq(const double* a, const double* b, std::size_t n);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void axpby(double a, const double* x, double b, double* y, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
double diff_norm_sq(const double* a, const double* b, std::size_t n);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define THETAKIT_HAVE_AVX2_KERNELS 1
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void axpby(double a, const double* x, double b, double* y, std::size_t n);
void rot(double* x, double* y, double c, double s, std::size_t n);
double diff_norm_sq(const double* a, const double* b, std::size_t n);
} // namespace avx2
#endif

} // namespace thetakit::kern
