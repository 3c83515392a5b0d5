// Copyright 2026 The mdlc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef MDLC_MDLC_HPP
#define MDLC_MDLC_HPP

#include "mdlc/annihilator.hpp"
#include "mdlc/census.hpp"
#include "mdlc/error.hpp"
#include "mdlc/gf.hpp"
#include "mdlc/kerror.hpp"
#include "mdlc/monomial.hpp"
#include "mdlc/polynomial.hpp"
#include "mdlc/probbounds.hpp"
#include "mdlc/rng.hpp"
#include "mdlc/seqarray.hpp"
#include "mdlc/version.hpp"

#endif  // MDLC_MDLC_HPP
