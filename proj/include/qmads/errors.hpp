/*
   Copyright 2026 The qmads Authors

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

#include <stdexcept>
#include <string>

namespace qmads {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QMADS_DEFINE_ERROR(Name)                 \
  class Name : public Error {                    \
   public:                                       \
    explicit Name(const std::string& what)       \
        : Error(std::string(#Name ": ") + what) {} \
  }

QMADS_DEFINE_ERROR(ParseError);
QMADS_DEFINE_ERROR(PoleError);
QMADS_DEFINE_ERROR(GenericityError);
QMADS_DEFINE_ERROR(DomainError);
QMADS_DEFINE_ERROR(ArityError);
QMADS_DEFINE_ERROR(PositionError);
QMADS_DEFINE_ERROR(NotYangBaxter);
QMADS_DEFINE_ERROR(NotSymmetry);
QMADS_DEFINE_ERROR(NotSkewInvertible);
QMADS_DEFINE_ERROR(BirankError);
QMADS_DEFINE_ERROR(InversionError);
QMADS_DEFINE_ERROR(ResourceError);
QMADS_DEFINE_ERROR(NormalizationError);
QMADS_DEFINE_ERROR(InsufficientTruncation);
QMADS_DEFINE_ERROR(ZeroVector);

#undef QMADS_DEFINE_ERROR

}  // namespace qmads
