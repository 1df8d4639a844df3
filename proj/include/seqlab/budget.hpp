#pragma once

#include <cstdint>

namespace seqlab::budget {

// Process-wide cap on live table memory. Default 4096 MB, overridable via
// the SEQLAB_MEM_BUDGET_MB environment variable or set_limit_bytes().
std::uint64_t limit_bytes();
void set_limit_bytes(std::uint64_t bytes);
std::uint64_t live_bytes();

// RAII slice of the budget. Construction throws Error(capacity) when the
// reservation would push live_bytes past the limit.
class Reservation {
 public:
  Reservation() = default;
  explicit Reservation(std::uint64_t bytes);
  Reservation(Reservation&& other) noexcept;
  Reservation& operator=(Reservation&& other) noexcept;
  Reservation(const Reservation&) = delete;
  Reservation& operator=(const Reservation&) = delete;
  ~Reservation();

  void grow(std::uint64_t extra_bytes);
  std::uint64_t bytes() const noexcept { return bytes_; }

 private:
  std::uint64_t bytes_ = 0;
};

}  // namespace seqlab::budget
