// SPDX-License-Identifier: Apache-2.0
//
// Per-item fan-out for parameter-grid sweeps. Each item is independent and
// writes only its own result slot, so the parallel and serial paths produce
// identical vectors; callers sort before emitting.
#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <vector>

namespace ulrich {

enum class Exec { serial, parallel };

// Thread cap: ULRICH_SCROLLS_THREADS if set to a positive integer, else the
// OpenMP default. Always 1 when built without OpenMP.
int thread_cap();

// Runs fn(i) for i in [0, n). The first exception thrown by any item is
// rethrown on the calling thread after the loop.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn, Exec exec);

template <class In, class Out, class Fn>
std::vector<Out> map_items(const std::vector<In>& items, Fn fn, Exec exec) {
    std::vector<Out> out(items.size());
    for_each_index(items.size(), [&](std::size_t i) { out[i] = fn(items[i]); }, exec);
    return out;
}

}  // namespace ulrich
