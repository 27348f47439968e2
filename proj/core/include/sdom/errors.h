// Copyright 2026 The sdom Authors
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

#ifndef SDOM_ERRORS_H_
#define SDOM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sdom {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied value is outside the operation's domain (vertex index out
// of range, family parameter out of range, mismatched set owner, ...).
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list text or harness configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An exact search was asked to run on an instance larger than its configured
// size guard.
class GuardExceededError : public Error {
 public:
  GuardExceededError(const std::string& what, int order, int guard)
      : Error(what + ": order " + std::to_string(order) + " exceeds guard " +
              std::to_string(guard)),
        order_(order),
        guard_(guard) {}

  int order() const { return order_; }
  int guard() const { return guard_; }

 private:
  int order_;
  int guard_;
};

}  // namespace sdom

#endif  // SDOM_ERRORS_H_
