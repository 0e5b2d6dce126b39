/* Copyright 2026 The qwire Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QWIRE_QWIRE_HPP
#define QWIRE_QWIRE_HPP

#include "qwire/errors.hpp"
#include "qwire/time_domain.hpp"
#include "qwire/transport.hpp"
#include "qwire/tridiag.hpp"
#include "qwire/wire_matrix.hpp"

#endif // QWIRE_QWIRE_HPP
