// SPDX-License-Identifier: Apache-2.0
#include "asymex/parallel.hpp"

namespace asymex {

namespace {
std::atomic<std::size_t> g_threads{1};
}

void set_thread_count(std::size_t threads) { g_threads.store(threads == 0 ? 1 : threads); }

std::size_t thread_count() { return g_threads.load(); }

}  // namespace asymex
