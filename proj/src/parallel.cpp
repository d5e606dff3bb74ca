#include "phmf/parallel.hpp"

#include <cstdlib>
#include <string>

namespace phmf::par {

namespace {
std::atomic<int> g_budget{0}; // 0 = not set yet
}

int budget_from_env_or(int fallback) {
    const char* e = std::getenv("PHMF_THREADS");
    if (!e) return fallback;
    try {
        int v = std::stoi(e);
        return v >= 1 ? v : fallback;
    } catch (...) {
        return fallback;
    }
}

int thread_budget() {
    int v = g_budget.load();
    if (v > 0) return v;
    int env = budget_from_env_or(1);
    g_budget.store(env);
    return env;
}

void set_thread_budget(int n) {
    g_budget.store(n >= 1 ? n : 1);
}

} // namespace phmf::par
