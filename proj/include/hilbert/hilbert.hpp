// Copyright 2026 The hilbert Authors
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

#ifndef HILBERT_HILBERT_HPP
#define HILBERT_HILBERT_HPP

#include "hilbert/clifford.hpp"
#include "hilbert/combinat.hpp"
#include "hilbert/core.hpp"
#include "hilbert/designs.hpp"
#include "hilbert/gf.hpp"
#include "hilbert/io.hpp"
#include "hilbert/mub.hpp"
#include "hilbert/sic.hpp"
#include "hilbert/weyl.hpp"
#include "hilbert/wigner.hpp"

#endif  // HILBERT_HILBERT_HPP
