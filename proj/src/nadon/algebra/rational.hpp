#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace nadon {

using Rational = mpq_class;
using QVector = std::vector<Rational>;

// Accepts "p/q", "p", or a leading sign; throws InvalidConfig otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Rational lcm_of_denominators(const QVector& values);

}  // namespace nadon
