#include "seqlab/budget.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "seqlab/error.hpp"

namespace seqlab::budget {

namespace {

std::uint64_t initial_limit() {
  if (const char* env = std::getenv("SEQLAB_MEM_BUDGET_MB")) {
    char* end = nullptr;
    unsigned long long mb = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && mb > 0) return mb * 1024ull * 1024ull;
  }
  return 4096ull * 1024ull * 1024ull;
}

std::atomic<std::uint64_t>& limit_ref() {
  static std::atomic<std::uint64_t> limit{initial_limit()};
  return limit;
}

std::atomic<std::uint64_t>& live_ref() {
  static std::atomic<std::uint64_t> live{0};
  return live;
}

}  // namespace

std::uint64_t limit_bytes() { return limit_ref().load(std::memory_order_relaxed); }

void set_limit_bytes(std::uint64_t bytes) {
  limit_ref().store(bytes, std::memory_order_relaxed);
}

std::uint64_t live_bytes() { return live_ref().load(std::memory_order_relaxed); }

Reservation::Reservation(std::uint64_t bytes) { grow(bytes); }

Reservation::Reservation(Reservation&& other) noexcept : bytes_(other.bytes_) {
  other.bytes_ = 0;
}

Reservation& Reservation::operator=(Reservation&& other) noexcept {
  if (this != &other) {
    if (bytes_ > 0) live_ref().fetch_sub(bytes_, std::memory_order_relaxed);
    bytes_ = other.bytes_;
    other.bytes_ = 0;
  }
  return *this;
}

Reservation::~Reservation() {
  if (bytes_ > 0) live_ref().fetch_sub(bytes_, std::memory_order_relaxed);
}

void Reservation::grow(std::uint64_t extra_bytes) {
  if (extra_bytes == 0) return;
  std::uint64_t prev = live_ref().fetch_add(extra_bytes, std::memory_order_relaxed);
  if (prev + extra_bytes > limit_bytes()) {
    live_ref().fetch_sub(extra_bytes, std::memory_order_relaxed);
    fail(ErrorCode::capacity,
         "allocation of " + std::to_string(extra_bytes) +
             " bytes exceeds the memory budget (" +
             std::to_string(limit_bytes()) +
             " bytes, SEQLAB_MEM_BUDGET_MB to raise)");
  }
  bytes_ += extra_bytes;
}

}  // namespace seqlab::budget
