#pragma once

#include <exception>
#include <mutex>

namespace prf {

/// Parallel kernels run under OpenMP; Serial is the reference path the tests
/// compare against.
enum class Execution { Serial, Parallel };

/// Captures the first exception thrown inside an OpenMP region so it can be
/// rethrown on the calling thread.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace prf
