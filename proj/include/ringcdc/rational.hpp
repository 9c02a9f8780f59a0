/* Copyright 2026 The ringcdc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RINGCDC_RATIONAL_HPP_
#define RINGCDC_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ringcdc {

using Rational = boost::rational<std::int64_t>;

// Renders "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

// Fixed six-decimal rendering used by every CSV/JSON float column.
std::string to_decimal(const Rational& q);

double to_double(const Rational& q);

// Smallest integer >= q.
std::int64_t ceil(const Rational& q);

// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace ringcdc

#endif  // RINGCDC_RATIONAL_HPP_
