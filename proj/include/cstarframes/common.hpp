#pragma once

#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace csf {

/// Classifies every failure the library can raise; the C API maps these
/// one-to-one onto status codes.
enum class ErrorKind {
  InvalidArgument,
  ShapeMismatch,
  Singular,
  NotAFrame,
  NotRiesz,
  Parse,
  Io,
  Infeasible,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// printf-style formatting into a std::string.
inline std::string strfmt(const char* fmt, ...) {
  va_list args;
  va_start(args, fmt);
  va_list args2;
  va_copy(args2, args);
  int n = std::vsnprintf(nullptr, 0, fmt, args);
  va_end(args);
  std::string out(n > 0 ? static_cast<std::size_t>(n) : 0, '\0');
  if (n > 0) {
    std::vsnprintf(out.data(), out.size() + 1, fmt, args2);
  }
  va_end(args2);
  return out;
}

/// Pairwise (cascade) summation of term(0) + ... + term(count-1).
/// The reduction tree depends only on count, so results are identical
/// run to run regardless of evaluation order of the terms themselves.
template <typename T, typename Term>
T pairwise_sum(std::size_t count, const T& zero, Term&& term) {
  struct Rec {
    const Term& f;
    T run(std::size_t lo, std::size_t n) const {
      if (n == 1) return f(lo);
      std::size_t half = n / 2;
      T left = run(lo, half);
      T right = run(lo + half, n - half);
      return left + right;
    }
  };
  if (count == 0) return zero;
  return Rec{term}.run(0, count);
}

/// FNV-1a 64-bit content hash, rendered as "fnv1a:<16 hex digits>".
inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view bytes) {
  return strfmt("fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
}

}  // namespace csf
