#pragma once

#include "weiljac/expansions.hpp"

#include <string>
#include <vector>

namespace weiljac {

/// Half-integral weight k + 1/2 form in Kohnen's plus space: a_n = 0 unless
/// (-1)^k n = 0, 1 mod 4.
struct PlusSpaceForm {
    ScalarQSeries series;
    Rational weight;  // k + 1/2
    [[nodiscard]] long k() const { return to_long((weight - Rational(1, 2)).num()); }
};

/// Level 3 form of odd weight with character; the plus space has a_n = 0 for
/// n = 2 mod 3, the minus space a_n = 0 for n = 1 mod 3.
struct Level3Form {
    ScalarQSeries series;
    long weight = 1;
    bool plus = true;
};

enum class Pattern { Level3Plus, Level3Minus, Kohnen };

/// Exponents violating the vanishing pattern (k only used for Kohnen).
std::vector<Rational> check_pattern(const ScalarQSeries& s, Pattern p, long k = 0);

/// 1 + 2q + 2q^4 + 2q^9 + ... below prec.
ScalarQSeries theta_standard(const Rational& prec);

/// Halve a_n for n != 0 mod 3, q -> q^(4/3), multiply by theta(tau/3), keep integer exponents.
PlusSpaceForm minus_to_plus(const Level3Form& f);

/// f(3 tau / 4) theta(tau / 4), keep integer exponents.
Level3Form plus_to_level3(const PlusSpaceForm& f);

/// Sum of all components after q -> q^level.
ScalarQSeries bb_scalarize(const VVExpansion& f);

}  // namespace weiljac
