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

#include "ccsched/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ccsched {

namespace {

using Wide = __int128;

Rational::Int narrow(Wide value) {
    if (value > std::numeric_limits<Rational::Int>::max() || value < std::numeric_limits<Rational::Int>::min()) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<Rational::Int>(value);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduces n/d in 128-bit before narrowing, so only the reduced result must fit.
boost::rational<Rational::Int> make_reduced(Wide n, Wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {narrow(n), narrow(d)};
}

}  // namespace

Rational::Rational(Int numerator, Int denominator) : value_(make_reduced(numerator, denominator)) {}

double Rational::to_double() const {
    return static_cast<double>(numerator()) / static_cast<double>(denominator());
}

std::string Rational::to_string() const {
    if (is_integer()) return std::to_string(numerator());
    return std::to_string(numerator()) + "/" + std::to_string(denominator());
}

std::string Rational::to_decimal(int places) const {
    if (places < 0) throw std::invalid_argument("negative decimal places");
    Wide scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    Wide n = numerator();
    Wide d = denominator();
    bool negative = n < 0;
    if (negative) n = -n;
    // round half away from zero
    Wide scaled = (n * scale * 2 + d) / (d * 2);
    Wide whole = scaled / scale;
    Wide frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    if (places > 0) {
        std::string digits = std::to_string(static_cast<long long>(frac));
        out += "." + std::string(static_cast<std::size_t>(places) - digits.size(), '0') + digits;
    }
    return out;
}

Rational Rational::parse(const std::string &text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            Int n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(n);
        }
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        Int n = std::stoll(num, &used);
        if (used != num.size()) throw std::invalid_argument(text);
        Int d = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument(text);
        return Rational(n, d);
    } catch (const std::logic_error &) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

Rational &Rational::operator+=(const Rational &rhs) {
    Wide n = Wide(numerator()) * rhs.denominator() + Wide(rhs.numerator()) * denominator();
    Wide d = Wide(denominator()) * rhs.denominator();
    value_ = make_reduced(n, d);
    return *this;
}

Rational &Rational::operator-=(const Rational &rhs) { return *this += -rhs; }

Rational &Rational::operator*=(const Rational &rhs) {
    value_ = make_reduced(Wide(numerator()) * rhs.numerator(), Wide(denominator()) * rhs.denominator());
    return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
    if (rhs.numerator() == 0) throw std::domain_error("rational division by zero");
    value_ = make_reduced(Wide(numerator()) * rhs.denominator(), Wide(denominator()) * rhs.numerator());
    return *this;
}

Rational::Int ceil(const Rational &value) {
    Rational::Int n = value.numerator();
    Rational::Int d = value.denominator();
    if (n >= 0) return (n + d - 1) / d;
    return -((-n) / d);
}

}  // namespace ccsched
