// Copyright 2026 The qfdiv Authors.
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

#ifndef QFDIV_EXEC_HPP
#define QFDIV_EXEC_HPP

namespace qfdiv {

/// Execution policy for the data-parallel kernels (Monte Carlo ball
/// sampling, measurement grid scans). `serial` is the reference path kept
/// for testing and benchmarking; `parallel` uses OpenMP when compiled in and
/// must produce identical results.
enum class Exec { serial, parallel };

}  // namespace qfdiv

#endif  // QFDIV_EXEC_HPP
