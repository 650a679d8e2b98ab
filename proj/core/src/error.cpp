// Copyright 2026 The LDGP Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldgp/error.hpp"

namespace ldgp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kUnreadableFile:
      return "unreadable file";
    case ErrorKind::kUnsupportedFormat:
      return "unsupported format";
    case ErrorKind::kEmptyDataset:
      return "empty dataset";
    case ErrorKind::kDuplicatePath:
      return "duplicate path";
    case ErrorKind::kLengthMismatch:
      return "length mismatch";
    case ErrorKind::kEmptyGallery:
      return "empty gallery";
  }
  return "error";
}

namespace {

std::string compose(ErrorKind kind, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(compose(kind, detail)), kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace ldgp
