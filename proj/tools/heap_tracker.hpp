#pragma once

// Live-heap accounting for the bench runner. Global operator new/delete and
// the GMP allocator hooks feed one counter; the peak is the high-water mark
// since the last reset.

#include <cstddef>

namespace pfdtool::heap {

/// Routes GMP's allocations through the tracker. Call once at startup.
void install_gmp_hooks();

/// Starts a new measurement window; returns the current live byte count.
std::size_t reset_peak();

std::size_t live_bytes();
std::size_t peak_bytes();

/// Live-byte ceiling (0 = none). Crossing it calls the handler, which must
/// not return; without a handler the allocation fails with bad_alloc.
void set_limit(std::size_t bytes, void (*on_exceeded)());

}  // namespace pfdtool::heap
