// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <type_traits>
#include <cstdint>
#include <string>

namespace tbench {

// Shortest round-trip decimal form, locale-independent: reruns with the same
// inputs produce byte-identical output.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

inline std::string format_u64(std::uint64_t v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

class CsvWriter {
 public:
  explicit CsvWriter(std::string header) { buffer_ = std::move(header); buffer_ += '\n'; }

  template <typename... Fields>
  void row(const Fields&... fields) {
    bool first = true;
    auto emit = [&](const auto& f) {
      if (!first) buffer_ += ',';
      first = false;
      append(f);
    };
    (emit(fields), ...);
    buffer_ += '\n';
  }

  const std::string& str() const { return buffer_; }

 private:
  void append(double v) { buffer_ += format_double(v); }
  template <typename T>
    requires std::is_integral_v<T>
  void append(T v) {
    buffer_ += format_u64(static_cast<std::uint64_t>(v));
  }
  void append(const std::string& v) { buffer_ += v; }
  void append(const char* v) { buffer_ += v; }

  std::string buffer_;
};

} // namespace tbench
