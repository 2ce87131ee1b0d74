/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
#ifndef SIGWIND_SIGWIND_HPP
#define SIGWIND_SIGWIND_HPP

#include "sigwind/enclosure.hpp"
#include "sigwind/errors.hpp"
#include "sigwind/interp.hpp"
#include "sigwind/moments.hpp"
#include "sigwind/oracle.hpp"
#include "sigwind/polynomial.hpp"
#include "sigwind/scalar.hpp"
#include "sigwind/signature.hpp"
#include "sigwind/tensor_words.hpp"
#include "sigwind/winding.hpp"

#endif  // SIGWIND_SIGWIND_HPP
