/*
Copyright (c) 2026 The hybridgraph Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace hg {

using vid_t = std::uint32_t;
using eid_t = std::uint64_t;
using weight_t = float;

inline constexpr vid_t kInvalidVertex = std::numeric_limits<vid_t>::max();

// Process exit codes used by the command-line driver.
enum class ExitCode : int {
  kOk = 0,
  kValidation = 2,
  kCapacity = 3,
  kIo = 4,
  kInternal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ExitCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ExitCode::kValidation, what) {}
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : ValidationError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Misconfigured pipeline: wrong graph kind for an algorithm, too many
// partitions for the tag width, missing weights.
class ConfigurationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what)
      : Error(ExitCode::kCapacity, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ExitCode::kIo, what) {}
};

// Byte width of a vertex id / edge index for a graph of the given size:
// 4 bytes below 2^32 entries, 8 above.
constexpr std::size_t id_width_for(std::uint64_t count) {
  return count < (std::uint64_t{1} << 32) ? 4 : 8;
}

}  // namespace hg
