#pragma once

#include <atomic>
#include <complex>
#include <thread>
#include <vector>

namespace phmf::par {

// Process-wide worker budget. Order of precedence at startup:
// explicit set_thread_budget() > PHMF_THREADS env > 1.
int thread_budget();
void set_thread_budget(int n);
int budget_from_env_or(int fallback);

// Compensated accumulator. Results must not depend on how work is
// distributed, so every reduction below sums fixed-size blocks in
// index order with this.
struct Kahan {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

struct KahanC {
    Kahan re, im;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.s, im.s}; }
};

// Splits [lo, hi) into consecutive blocks of `block` indices, evaluates
// blockfn(a, b) for each sub-range on the worker pool, then combines the
// per-block values in block order. Identical output for any thread count:
// each block is a pure function of its range, and the final reduction
// order is fixed.
template <class F>
std::complex<double> sum_blocks(long long lo, long long hi, long long block, F&& blockfn) {
    if (hi <= lo) return {0.0, 0.0};
    long long nblocks = (hi - lo + block - 1) / block;
    std::vector<std::complex<double>> partial(static_cast<size_t>(nblocks));
    int nt = thread_budget();
    if (nt <= 1 || nblocks == 1) {
        for (long long i = 0; i < nblocks; ++i) {
            long long a = lo + i * block;
            long long b = std::min(hi, a + block);
            partial[static_cast<size_t>(i)] = blockfn(a, b);
        }
    } else {
        std::atomic<long long> next{0};
        auto worker = [&] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= nblocks) return;
                long long a = lo + i * block;
                long long b = std::min(hi, a + block);
                partial[static_cast<size_t>(i)] = blockfn(a, b);
            }
        };
        std::vector<std::thread> pool;
        int spawn = static_cast<int>(std::min<long long>(nt, nblocks));
        pool.reserve(static_cast<size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    KahanC total;
    for (auto& p : partial) total.add(p);
    return total.value();
}

// Vector-valued variant of sum_blocks: blockfn(a, b) returns `width`
// component sums which are combined elementwise in block order.
template <class F>
std::vector<std::complex<double>> sum_blocks_vec(long long lo, long long hi, long long block,
                                                 size_t width, F&& blockfn) {
    std::vector<std::complex<double>> out(width, {0.0, 0.0});
    if (hi <= lo) return out;
    long long nblocks = (hi - lo + block - 1) / block;
    std::vector<std::vector<std::complex<double>>> partial(static_cast<size_t>(nblocks));
    int nt = thread_budget();
    if (nt <= 1 || nblocks == 1) {
        for (long long i = 0; i < nblocks; ++i) {
            long long a = lo + i * block;
            long long b = std::min(hi, a + block);
            partial[static_cast<size_t>(i)] = blockfn(a, b);
        }
    } else {
        std::atomic<long long> next{0};
        auto worker = [&] {
            for (;;) {
                long long i = next.fetch_add(1);
                if (i >= nblocks) return;
                long long a = lo + i * block;
                long long b = std::min(hi, a + block);
                partial[static_cast<size_t>(i)] = blockfn(a, b);
            }
        };
        std::vector<std::thread> pool;
        int spawn = static_cast<int>(std::min<long long>(nt, nblocks));
        pool.reserve(static_cast<size_t>(spawn));
        for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::vector<KahanC> total(width);
    for (auto& p : partial)
        for (size_t j = 0; j < width; ++j) total[j].add(p[j]);
    for (size_t j = 0; j < width; ++j) out[j] = total[j].value();
    return out;
}

} // namespace phmf::par
