#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srw {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the offending location.
struct ParseError : Error {
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_name(file),
        line_number(line) {}
  std::string file_name;
  std::size_t line_number;
};

// Iterative solver exceeded its iteration budget; carries the last iterate.
struct ConvergenceError : Error {
  ConvergenceError(std::string what, std::vector<double> iterate, long iters)
      : Error(std::move(what)), last_iterate(std::move(iterate)), iterations(iters) {}
  std::vector<double> last_iterate;
  long iterations = 0;
};

// Candidate scores sum to zero; the instance cannot be normalized or ranked.
struct DegenerateInstanceError : Error {
  using Error::Error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Round-trippable decimal rendering, stable across runs of the same binary.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// splitmix64; used to derive independent rng streams from one seed.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream));
}

}  // namespace detail

using Rng = std::mt19937_64;

}  // namespace srw
