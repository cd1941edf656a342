// Copyright 2026 The BLANC Toolkit Authors.
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
#pragma once

#include <stdexcept>
#include <string>

namespace blanc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transport failure, malformed response, or any failure inside a model backend.
class BackendError : public Error {
 public:
  using Error::Error;
};

// The backend does not support the requested operation (e.g. tuning).
class CapabilityError : public BackendError {
 public:
  using BackendError::BackendError;
};

// The summary (context) does not fit the backend input limit.
class InputTooLongError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class CorpusError : public Error {
 public:
  using Error::Error;
};

}  // namespace blanc
