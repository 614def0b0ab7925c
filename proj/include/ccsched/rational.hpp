/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace ccsched {

// Exact rational number in lowest terms with a positive denominator.
// Arithmetic goes through boost::rational; intermediate products are checked
// for 64-bit overflow before they reach it.
class Rational {
  public:
    using Int = std::int64_t;

    Rational() = default;
    Rational(Int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(Int numerator, Int denominator);

    Int numerator() const { return value_.numerator(); }
    Int denominator() const { return value_.denominator(); }

    bool is_integer() const { return value_.denominator() == 1; }
    double to_double() const;

    // "n" for integers, "n/d" otherwise.
    std::string to_string() const;
    // Fixed-point with the given number of decimals, rounded half away from zero.
    std::string to_decimal(int places = 6) const;

    static Rational parse(const std::string &text);

    Rational &operator+=(const Rational &rhs);
    Rational &operator-=(const Rational &rhs);
    Rational &operator*=(const Rational &rhs);
    Rational &operator/=(const Rational &rhs);

    friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational(-numerator(), denominator()); }

    friend bool operator==(const Rational &lhs, const Rational &rhs) { return lhs.value_ == rhs.value_; }
    friend bool operator<(const Rational &lhs, const Rational &rhs) { return lhs.value_ < rhs.value_; }
    friend bool operator>(const Rational &lhs, const Rational &rhs) { return rhs < lhs; }
    friend bool operator<=(const Rational &lhs, const Rational &rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Rational &lhs, const Rational &rhs) { return !(lhs < rhs); }

  private:
    explicit Rational(boost::rational<Int> value) : value_(value) {}
    boost::rational<Int> value_{0};
};

// Ceiling of a non-negative rational.
Rational::Int ceil(const Rational &value);

}  // namespace ccsched
