#pragma once

#include <stdexcept>
#include <string>

namespace seqlab {

enum class ErrorCode {
  invalid_argument,     // unusable parameters or malformed inputs
  unsupported_modulus,  // cases the tool declines to guess about (32 | m, odd part 1)
  capacity,             // allocation would exceed the memory budget
  budget,               // search ran past its tuple or wall-clock budget
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace seqlab
