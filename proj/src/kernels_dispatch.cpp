#include "thetakit/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace thetakit::kern {

namespace {

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sum)(const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*axpby)(double, const double*, double, double*, std::size_t);
    void (*rot)(double*, double*, double, double, std::size_t);
    double (*diff_norm_sq)(const double*, const double*, std::size_t);
};

constexpr Vtable kScalar = {scalar::dot, scalar::sum,  scalar::axpy,
                            scalar::axpby, scalar::rot, scalar::diff_norm_sq};

#if defined(THETAKIT_HAVE_AVX2_KERNELS)
constexpr Vtable kAvx2 = {avx2::dot, avx2::sum,  avx2::axpy,
                          avx2::axpby, avx2::rot, avx2::diff_norm_sq};
#endif

bool cpu_has_avx2() {
#if defined(THETAKIT_HAVE_AVX2_KERNELS) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

struct State {
    std::atomic<const Vtable*> table;
    std::atomic<Isa> isa;

    State() {
        Isa pick = cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
        if (const char* env = std::getenv("THETAKIT_ISA")) {
            if (std::strcmp(env, "scalar") == 0) pick = Isa::scalar;
            if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) pick = Isa::avx2;
        }
        set(pick);
    }

    void set(Isa i) {
#if defined(THETAKIT_HAVE_AVX2_KERNELS)
        table.store(i == Isa::avx2 ? &kAvx2 : &kScalar, std::memory_order_relaxed);
#else
        table.store(&kScalar, std::memory_order_relaxed);
#endif
        isa.store(i, std::memory_order_relaxed);
    }
};

State& state() {
    static State s;
    return s;
}

} // namespace

Isa active() { return state().isa.load(std::memory_order_relaxed); }

bool select(Isa isa) {
    if (isa == Isa::avx2 && !cpu_has_avx2()) return false;
    state().set(isa);
    return true;
}

std::string_view name(Isa isa) {
    return isa == Isa::avx2 ? "avx2" : "scalar";
}

double dot(const double* a, const double* b, std::size_t n) {
    return state().table.load(std::memory_order_relaxed)->dot(a, b, n);
}

double sum(const double* a, std::size_t n) {
    return state().table.load(std::memory_order_relaxed)->sum(a, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
    state().table.load(std::memory_order_relaxed)->axpy(alpha, x, y, n);
}

void axpby(double a, const double* x, double b, double* y, std::size_t n) {
    state().table.load(std::memory_order_relaxed)->axpby(a, x, b, y, n);
}

void rot(double* x, double* y, double c, double s, std::size_t n) {
    state().table.load(std::memory_order_relaxed)->rot(x, y, c, s, n);
}

double diff_norm_sq(const double* a, const double* b, std::size_t n) {
    return state().table.load(std::memory_order_relaxed)->diff_norm_sq(a, b, n);
}

} // namespace thetakit::kern
