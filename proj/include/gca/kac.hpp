#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gca/linalg.hpp"
#include "gca/rational.hpp"
#include "gca/weight_poly.hpp"

namespace gca {

// Integer partition in non-increasing part order.
struct Partition {
    std::vector<int> parts;

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    std::string str() const;
};

// All partitions of n in reverse-lexicographic order; n = 0 gives the
// empty partition.
std::vector<Partition> partitions(int n);

// Number of ordered splittings of the parts into two sub-multisets; equals
// the product of (multiplicity + 1) over distinct parts.
Integer splitting_count(const Partition& p);

// Brute-force splitting count by enumerating index subsets and collecting
// distinct sub-multiset pairs. Test oracle for splitting_count.
Integer splitting_count_brute(const Partition& p);

struct KacPrediction {
    int level = 0;
    Integer power;  // exponent of rho1^2 + rho2^2
    std::optional<Rational> reference_constant;
};

// Exponent of (rho1^2 + rho2^2) in the level-n determinant:
//   sum over ordered (a, b), a + b = n, of
//   sum over partitions A of a, B of b, of s(A) s(B) (l(A) + l(B)) / 2.
// Computed from the per-size aggregates sum s and sum s*l. Levels 1..3
// carry the published constants 2, 2^18, 2^72 3^6 for reference.
KacPrediction kac_power(int level);

// Same exponent by literal enumeration of partition pairs. Test oracle.
Integer kac_power_brute(int level);

struct KacTrial {
    WeightPoint weights;
    Rational determinant;
    Rational quotient;  // determinant / (rho1^2 + rho2^2)^power
};

struct KacReport {
    int level = 0;
    std::uint64_t seed = 0;
    Integer power;
    bool power_matches_reference = true;  // reference known only for 1..3
    Rational constant;                    // the common quotient K_level
    std::optional<Rational> reference_constant;
    std::optional<Rational> constant_ratio;  // K_level / reference
    std::vector<KacTrial> trials;
    bool constant_across_trials = false;
    bool independent_of_other_weights = false;
    bool vanishes_at_zero_rho = false;
    bool pass = false;
    std::string failure;  // witness description when !pass
};

// Draws `trials` random weight tuples (numerators and denominators
// uniform in [1, 97], deterministic in `seed`), evaluates the level Gram
// matrix, divides the exact determinant by (rho1^2+rho2^2)^power and
// checks that the quotient is one fixed Rational: across all trials,
// under changes of h, mu, alpha, beta alone, and that the determinant
// vanishes at rho1 = rho2 = 0.
KacReport verify_theorem(int level, int trials, std::uint64_t seed, int jobs = 1);

// Gram matrix evaluated at a weight point, rows computed in parallel when
// jobs > 1.
RationalMatrix gram_evaluated(int level, const WeightPoint& point, int jobs = 1);

}  // namespace gca
