/*
   Copyright 2026 The kappa-feq Authors

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

#include <vector>

#include "kappafeq/rat_func.hpp"

namespace kappafeq {

/// The default evaluation points for identity checks:
/// t, t+1, t^2, t^3-2, 1/(t+1), (t^2+1)/(t-3), 2, 1/2, -1.
/// A mix of polynomial and proper-rational elements of distinct degrees;
/// identity checks against it are falsification checks, not proofs.
const std::vector<RatFunc>& default_samples();

}  // namespace kappafeq
