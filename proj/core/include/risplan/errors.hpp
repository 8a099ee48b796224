// SPDX-License-Identifier: Apache-2.0
//
// risplan - RIS coverage planning and link-budget toolkit for mobile networks
// Copyright (C) 2026 The risplan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace risplan
{

/// A scene file or data structure violates one of its invariants.
class validation_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// A file could not be read or written.
class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace risplan
