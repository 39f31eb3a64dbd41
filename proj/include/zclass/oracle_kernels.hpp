// Scan kernels over element-id ranges. Each kernel has a plain serial
// reference and an OpenMP version working on fixed 4096-id blocks merged in
// block order, so results are identical for every thread count.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zclass::oracle {

enum class Exec { Serial, Parallel };

// Worker count for parallel kernels; 0 = auto (ZCLASS_THREADS env, else the
// OpenMP default). Never affects results.
void set_threads(int threads);
int effective_threads();

inline constexpr std::int32_t kBlockIds = 4096;

namespace kernels {

template <typename Pred>
std::vector<std::int32_t> collect_ids_serial(std::int32_t count, Pred&& pred) {
    std::vector<std::int32_t> out;
    for (std::int32_t i = 0; i < count; ++i)
        if (pred(i)) out.push_back(i);
    return out;
}

template <typename Pred>
std::vector<std::int32_t> collect_ids_parallel(std::int32_t count, Pred&& pred) {
#ifdef _OPENMP
    const std::int32_t nblocks = (count + kBlockIds - 1) / kBlockIds;
    std::vector<std::vector<std::int32_t>> blocks(nblocks);
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
    for (std::int32_t b = 0; b < nblocks; ++b) {
        const std::int32_t lo = b * kBlockIds;
        const std::int32_t hi = std::min(count, lo + kBlockIds);
        auto& out = blocks[b];
        for (std::int32_t i = lo; i < hi; ++i)
            if (pred(i)) out.push_back(i);
    }
    std::vector<std::int32_t> out;
    for (auto& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());
    return out;
#else
    return collect_ids_serial(count, pred);
#endif
}

template <typename Pred>
std::vector<std::int32_t> collect_ids(std::int32_t count, Exec exec, Pred&& pred) {
    if (exec == Exec::Serial || effective_threads() <= 1)
        return collect_ids_serial(count, pred);
    return collect_ids_parallel(count, pred);
}

template <typename Pred>
bool exists_id_serial(std::int32_t count, Pred&& pred) {
    for (std::int32_t i = 0; i < count; ++i)
        if (pred(i)) return true;
    return false;
}

template <typename Pred>
bool exists_id_parallel(std::int32_t count, Pred&& pred) {
#ifdef _OPENMP
    const std::int32_t nblocks = (count + kBlockIds - 1) / kBlockIds;
    bool found = false;
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
    for (std::int32_t b = 0; b < nblocks; ++b) {
        bool seen;
#pragma omp atomic read
        seen = found;
        if (seen) continue;
        const std::int32_t lo = b * kBlockIds;
        const std::int32_t hi = std::min(count, lo + kBlockIds);
        for (std::int32_t i = lo; i < hi; ++i) {
            if (pred(i)) {
#pragma omp atomic write
                found = true;
                break;
            }
        }
    }
    return found;
#else
    return exists_id_serial(count, pred);
#endif
}

template <typename Pred>
bool exists_id(std::int32_t count, Exec exec, Pred&& pred) {
    if (exec == Exec::Serial || effective_threads() <= 1)
        return exists_id_serial(count, pred);
    return exists_id_parallel(count, pred);
}

template <typename Fn>
void transform_ids_serial(std::int32_t count, std::int32_t* out, Fn&& fn) {
    for (std::int32_t i = 0; i < count; ++i) out[i] = fn(i);
}

template <typename Fn>
void transform_ids_parallel(std::int32_t count, std::int32_t* out, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(effective_threads())
    for (std::int32_t i = 0; i < count; ++i) out[i] = fn(i);
#else
    transform_ids_serial(count, out, fn);
#endif
}

template <typename Fn>
void transform_ids(std::int32_t count, Exec exec, std::int32_t* out, Fn&& fn) {
    if (exec == Exec::Serial || effective_threads() <= 1)
        transform_ids_serial(count, out, fn);
    else
        transform_ids_parallel(count, out, fn);
}

}  // namespace kernels
}  // namespace zclass::oracle
