#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

#include "sigdom/graph_io.hpp"

namespace sigdom {

/// Where a graph came from: 0-based position in the stream and the input
/// line of its record (0 when the source is not text).
struct GraphOrigin {
  std::size_t index;
  std::size_t line;
};

/// Maps `work(graph, origin)` over the stream with up to `jobs` threads and
/// hands results to `emit` in stream order. Graphs are pulled in batches, so memory stays
/// bounded by the batch size. An exception from `work` is rethrown at the
/// position of the graph that raised it, after earlier results are emitted.
template <class Result, class Work, class Emit>
void ordered_parallel_map(GraphStream& stream, int jobs, Work&& work, Emit&& emit) {
  jobs = std::max(1, jobs);
  const std::size_t batch_size = jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 32;
  std::size_t base = 0;
  for (;;) {
    std::vector<Graph> batch;
    std::vector<GraphOrigin> origins;
    while (batch.size() < batch_size) {
      auto g = stream.next();
      if (!g) break;
      origins.push_back({base + batch.size(), stream.line()});
      batch.push_back(std::move(*g));
    }
    if (batch.empty()) return;

    std::vector<std::optional<Result>> results(batch.size());
    std::vector<std::exception_ptr> errors(batch.size());
    auto run = [&](std::size_t i) {
      try {
        results[i].emplace(work(batch[i], origins[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };

    if (jobs == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) run(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> workers;
      const int used = static_cast<int>(std::min<std::size_t>(jobs, batch.size()));
      for (int t = 0; t < used; ++t)
        workers.emplace_back([&] {
          for (std::size_t i; (i = next.fetch_add(1)) < batch.size();) run(i);
        });
      for (auto& w : workers) w.join();
    }

    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      emit(origins[i], *results[i]);
    }
    base += batch.size();
  }
}

}  // namespace sigdom
