#include "heap_tracker.hpp"

#include <gmp.h>
#include <malloc.h>

#include <atomic>
#include <cstdlib>
#include <new>

namespace pfdtool::heap {
namespace {

std::atomic<std::size_t> live{0};
std::atomic<std::size_t> peak{0};
std::atomic<std::size_t> limit{0};
std::atomic<void (*)()> handler{nullptr};

// Returns false when the allocation would cross the limit.
bool account(std::size_t n) {
    std::size_t now = live.fetch_add(n, std::memory_order_relaxed) + n;
    std::size_t prev = peak.load(std::memory_order_relaxed);
    while (now > prev && !peak.compare_exchange_weak(prev, now, std::memory_order_relaxed)) {
    }
    std::size_t cap = limit.load(std::memory_order_relaxed);
    return cap == 0 || now <= cap;
}

void release(void* p) {
    if (p) live.fetch_sub(malloc_usable_size(p), std::memory_order_relaxed);
}

void over_limit(void* p) {
    if (auto h = handler.load()) h();
    release(p);
    std::free(p);
    throw std::bad_alloc();
}

void* tracked_malloc(std::size_t n) {
    void* p = std::malloc(n == 0 ? 1 : n);
    if (!p) throw std::bad_alloc();
    if (!account(malloc_usable_size(p))) over_limit(p);
    return p;
}

void* tracked_aligned(std::size_t n, std::size_t align) {
    std::size_t size = (n + align - 1) / align * align;
    void* p = std::aligned_alloc(align, size == 0 ? align : size);
    if (!p) throw std::bad_alloc();
    if (!account(malloc_usable_size(p))) over_limit(p);
    return p;
}

void tracked_free(void* p) {
    release(p);
    std::free(p);
}

// GMP cannot unwind exceptions, so over-limit there goes straight to the
// handler; without one the allocation succeeds and is only counted.
void* gmp_alloc(std::size_t n) {
    void* p = std::malloc(n);
    if (!p) std::abort();
    if (!account(malloc_usable_size(p)))
        if (auto h = handler.load()) h();
    return p;
}

void* gmp_realloc(void* old, std::size_t, std::size_t n) {
    std::size_t before = old ? malloc_usable_size(old) : 0;
    void* p = std::realloc(old, n);
    if (!p) std::abort();
    live.fetch_sub(before, std::memory_order_relaxed);
    if (!account(malloc_usable_size(p)))
        if (auto h = handler.load()) h();
    return p;
}

void gmp_free(void* p, std::size_t) { tracked_free(p); }

}  // namespace

void install_gmp_hooks() { mp_set_memory_functions(gmp_alloc, gmp_realloc, gmp_free); }

std::size_t reset_peak() {
    std::size_t now = live.load();
    peak.store(now);
    return now;
}

std::size_t live_bytes() { return live.load(); }
std::size_t peak_bytes() { return peak.load(); }

void set_limit(std::size_t bytes, void (*on_exceeded)()) {
    handler.store(on_exceeded);
    limit.store(bytes);
}

}  // namespace pfdtool::heap

void* operator new(std::size_t n) { return pfdtool::heap::tracked_malloc(n); }
void* operator new[](std::size_t n) { return pfdtool::heap::tracked_malloc(n); }
void* operator new(std::size_t n, const std::nothrow_t&) noexcept {
    try {
        return pfdtool::heap::tracked_malloc(n);
    } catch (...) {
        return nullptr;
    }
}
void* operator new[](std::size_t n, const std::nothrow_t&) noexcept {
    try {
        return pfdtool::heap::tracked_malloc(n);
    } catch (...) {
        return nullptr;
    }
}
void* operator new(std::size_t n, std::align_val_t a) {
    return pfdtool::heap::tracked_aligned(n, static_cast<std::size_t>(a));
}
void* operator new[](std::size_t n, std::align_val_t a) {
    return pfdtool::heap::tracked_aligned(n, static_cast<std::size_t>(a));
}

void operator delete(void* p) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete[](void* p) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete(void* p, std::size_t) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete[](void* p, std::size_t) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete(void* p, std::align_val_t) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete[](void* p, std::align_val_t) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete(void* p, std::size_t, std::align_val_t) noexcept { pfdtool::heap::tracked_free(p); }
void operator delete[](void* p, std::size_t, std::align_val_t) noexcept { pfdtool::heap::tracked_free(p); }
