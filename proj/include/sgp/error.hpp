/*
 * Copyright 2026 The sgp-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SGP_ERROR_HPP
#define SGP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated: bad argument, unknown name, invalid parameter range.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A computation would exceed the configured order, class-count or time bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Two independent evaluations disagreed. Always indicates a bug.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgp

#endif  // SGP_ERROR_HPP
