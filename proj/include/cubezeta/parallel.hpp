#pragma once

// Minimal work distribution over an index range.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace cubezeta {

// CUBEZETA_THREADS if set to a positive integer, else the hardware count.
inline unsigned default_thread_count() {
	if (const char* env = std::getenv("CUBEZETA_THREADS")) {
		try {
			int v = std::stoi(env);
			if (v > 0)
				return static_cast<unsigned>(v);
		} catch (const std::exception&) {
		}
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(i) for every i in [0, n) using up to `threads` workers. The
// first exception thrown by any call is rethrown after all workers stop.
template <class Body>
void parallel_for(size_t n, unsigned threads, Body&& body) {
	threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<size_t>(n, 1u << 16))));
	if (threads <= 1) {
		for (size_t i = 0; i < n; ++i)
			body(i);
		return;
	}
	std::atomic<size_t> next{0};
	std::atomic<bool> failed{false};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto worker = [&] {
		for (;;) {
			size_t i = next.fetch_add(1);
			if (i >= n || failed.load())
				return;
			try {
				body(i);
			} catch (...) {
				std::lock_guard lock(error_mutex);
				if (!error)
					error = std::current_exception();
				failed = true;
			}
		}
	};
	std::vector<std::thread> pool;
	for (unsigned t = 0; t < threads; ++t)
		pool.emplace_back(worker);
	for (auto& t : pool)
		t.join();
	if (error)
		std::rethrow_exception(error);
}

} // namespace cubezeta
