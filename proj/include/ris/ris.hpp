// SPDX-License-Identifier: Apache-2.0
//
// risphase - phase-alignment analysis for RIS-assisted wireless channels
// Copyright (C) 2026 the risphase contributors
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

#ifndef RIS_RIS_HPP
#define RIS_RIS_HPP

#include "ris/alignment.hpp"
#include "ris/fading.hpp"
#include "ris/io_csv.hpp"
#include "ris/laplace.hpp"
#include "ris/multi_access.hpp"
#include "ris/outage.hpp"
#include "ris/pattern.hpp"
#include "ris/random.hpp"
#include "ris/special_functions.hpp"

#endif // RIS_RIS_HPP
