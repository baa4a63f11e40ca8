/* Copyright (c) 2026 higp Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#pragma once

#include <stdexcept>
#include <string>

namespace higp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HIGP_DEFINE_ERROR(Name)                                   \
  struct Name : Error {                                           \
    explicit Name(const std::string& m) : Error(#Name ": " + m) {} \
  }

HIGP_DEFINE_ERROR(NonPositiveJacobian);
HIGP_DEFINE_ERROR(SingularC);
HIGP_DEFINE_ERROR(NotCoaxial);
HIGP_DEFINE_ERROR(KindMismatch);
HIGP_DEFINE_ERROR(Unphysical);
HIGP_DEFINE_ERROR(DegenerateCloud);
HIGP_DEFINE_ERROR(InitializationFailure);
HIGP_DEFINE_ERROR(NoConvergence);
HIGP_DEFINE_ERROR(DuplicateInputs);
HIGP_DEFINE_ERROR(IllConditioned);
HIGP_DEFINE_ERROR(DimensionMismatch);
HIGP_DEFINE_ERROR(ConfigError);
HIGP_DEFINE_ERROR(IoError);

#undef HIGP_DEFINE_ERROR

}  // namespace higp
