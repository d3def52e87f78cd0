#include <atomic>
#include <cstdlib>
#include <string>

#include "renorm/simd/kernels.hpp"

namespace renorm::simd {

#ifndef RENORM_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return has;
#else
    return false;
#endif
}

namespace {

Isa detect() {
    if (const char* env = std::getenv("RENORM_SIMD")) {
        if (std::string(env) == "scalar") return Isa::scalar;
    }
    return (avx2_kernels() != nullptr && cpu_has_avx2()) ? Isa::avx2 : Isa::scalar;
}

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Isa> g_isa{Isa::scalar};

const KernelTable* table_for(Isa isa) {
    if (isa == Isa::avx2 && avx2_kernels() != nullptr && cpu_has_avx2()) return avx2_kernels();
    return &scalar_kernels();
}

}  // namespace

void force_isa(Isa isa) {
    const KernelTable* t = table_for(isa);
    g_isa.store(t == &scalar_kernels() ? Isa::scalar : Isa::avx2);
    g_table.store(t);
}

Isa active_isa() {
    kernels();
    return g_isa.load();
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const KernelTable& kernels() {
    const KernelTable* t = g_table.load(std::memory_order_acquire);
    if (t == nullptr) {
        force_isa(detect());
        t = g_table.load(std::memory_order_acquire);
    }
    return *t;
}

}  // namespace renorm::simd
