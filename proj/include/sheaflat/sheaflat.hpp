// Copyright 2026 The Authors.
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

#include "sheaflat/arrangement.hpp"
#include "sheaflat/arrangement_io.hpp"
#include "sheaflat/broken_circuit.hpp"
#include "sheaflat/chain_complex.hpp"
#include "sheaflat/error.hpp"
#include "sheaflat/field.hpp"
#include "sheaflat/lattice.hpp"
#include "sheaflat/les.hpp"
#include "sheaflat/linalg.hpp"
#include "sheaflat/matrix.hpp"
#include "sheaflat/natural.hpp"
#include "sheaflat/order_complex.hpp"
#include "sheaflat/polynomial.hpp"
#include "sheaflat/poset.hpp"
#include "sheaflat/sheaf.hpp"
#include "sheaflat/simplicial.hpp"
