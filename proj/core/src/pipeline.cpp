#include "evframe/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace evframe {

FrameTensor encode_stream(const EventStream& stream, const EncodeOptions& options) {
  const std::vector<EventWindow> windows = segment(stream, options.window);

  FrameTensor tensor;
  tensor.width = stream.geometry().width;
  tensor.height = stream.geometry().height;
  tensor.channels = options.polarity == PolarityMode::merged ? 3 : 1;
  tensor.frames.resize(windows.size());

  const std::size_t workers = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(windows.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < windows.size(); ++i)
      tensor.frames[i] = encode(windows[i], options.kind, options.polarity);
    return tensor;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < windows.size(); i = next++) {
          try {
            tensor.frames[i] = encode(windows[i], options.kind, options.polarity);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return tensor;
}

}  // namespace evframe
