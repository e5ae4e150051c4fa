#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace collatz_sigma {

inline constexpr const char* kThreadsEnv = "COLLATZ_SIGMA_THREADS";

/// 0 means "decide": COLLATZ_SIGMA_THREADS if set and positive, else all cores.
inline std::size_t resolve_threads(std::size_t requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv(kThreadsEnv)) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs task(0..parts-1), one thread per part; the first exception is rethrown.
template <class Task>
void run_parts(std::size_t parts, Task&& task) {
  if (parts <= 1) {
    if (parts == 1) task(std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(parts);
  std::vector<std::thread> pool;
  pool.reserve(parts);
  for (std::size_t p = 0; p < parts; ++p) {
    pool.emplace_back([&, p] {
      try {
        task(p);
      } catch (...) {
        errors[p] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace collatz_sigma
