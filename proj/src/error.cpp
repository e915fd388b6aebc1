/*
 * Copyright 2026 The Remetrica Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "remetrica/error.hpp"

namespace remetrica {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::empty_set: return "empty-set";
    case ErrorKind::negative_base: return "negative-base";
    case ErrorKind::numeric: return "numeric";
    case ErrorKind::params: return "params";
    case ErrorKind::no_pairs: return "no-pairs";
    case ErrorKind::self_map: return "self-map";
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace remetrica
