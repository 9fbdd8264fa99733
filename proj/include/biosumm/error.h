// Copyright 2026 The Biosumm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIOSUMM_ERROR_H_
#define BIOSUMM_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace biosumm {

// Broad classes of failure. The CLI maps these onto exit codes 1, 2 and 3.
enum class ErrorKind {
  kUsage,      // bad arguments or configuration
  kInput,      // malformed or missing input data
  kInvariant,  // internal consistency check failed
};

// All library failures are reported by throwing Error. Parse errors carry the
// byte offset into the input at which the problem was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<size_t> offset = std::nullopt)
      : std::runtime_error(Format(message, offset)),
        kind_(kind),
        offset_(offset) {}

  ErrorKind kind() const { return kind_; }
  std::optional<size_t> offset() const { return offset_; }

 private:
  static std::string Format(const std::string& message,
                            std::optional<size_t> offset) {
    if (!offset) return message;
    return message + " (at offset " + std::to_string(*offset) + ")";
  }

  ErrorKind kind_;
  std::optional<size_t> offset_;
};

inline Error UsageError(const std::string& message) {
  return Error(ErrorKind::kUsage, message);
}

inline Error InputError(const std::string& message,
                        std::optional<size_t> offset = std::nullopt) {
  return Error(ErrorKind::kInput, message, offset);
}

inline Error InvariantError(const std::string& message) {
  return Error(ErrorKind::kInvariant, message);
}

}  // namespace biosumm

#endif  // BIOSUMM_ERROR_H_
