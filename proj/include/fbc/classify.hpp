#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "fbc/word.hpp"

namespace fbc {

/// UPG automorphism of F_3 = F_{a,b,c}:
///   a -> a,  b -> b a^k,  c -> c w(a,b).
/// Normalized means k >= 0 and w cyclically reduced.
struct AutomorphismSpec {
    long long twist_exponent = 0;  // k
    Word twisting_word;            // w

    friend bool operator==(const AutomorphismSpec&, const AutomorphismSpec&) = default;
};

/// Flips the sign of a (negating every a-exponent of w) when k < 0, then
/// replaces w by its cyclic-reduction core. Both moves are basis changes that
/// do not alter the suspension up to isomorphism.
AutomorphismSpec normalize_spec(long long k, const Word& w);

bool is_normalized(const AutomorphismSpec& spec);

enum class Verdict { Cat0, NotWeaklyCat0, Cat0PriorWork, Excluded, Unknown };

enum class Reason {
    DirectProduct,
    NonzeroAbelianization,
    Condition1,
    Condition2,
    CommutatorObstruction,
    TotallyBalancedH1,
    NonBBalanced,
    PowerOfA,
    NoCriterionApplies,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Reason r);

/// Quadratic-term criterion: (sum_j N_j)^2 < k * sum_j (1 + 2(j0-j)) N_j,
/// evaluated in exact integers. Requires k > 0.
struct Condition1Result {
    bool holds = false;
    long long lhs = 0;  // (sum N_j)^2
    long long rhs = 0;  // k * sum (1 + 2(j0-j)) N_j
};
Condition1Result condition1(const LevelProfile& p, long long k);

/// Alternating-sum criterion: 0 < sum_j (-1)^{j0-j} N_j < k, exact integers.
/// Requires k > 0.
struct Condition2Result {
    bool holds = false;
    long long alternating_sum = 0;  // s
};
Condition2Result condition2(const LevelProfile& p, long long k);

/// Data backing a verdict. Which fields are set depends on the reason:
/// Condition1/Condition2 carry the successful rotation, its profile and the
/// exact values of both sides; abelianization reasons carry the exponent
/// sums; TotallyBalancedH1 carries the profile.
struct Witness {
    std::optional<Word> rotation;
    std::optional<std::size_t> rotation_index;
    std::optional<LevelProfile> profile;
    std::optional<long long> lhs;  // condition1: (sum N)^2;  condition2: s
    std::optional<long long> rhs;  // condition1: k*sum(...);  condition2: k
    std::optional<long long> a_exponent_sum;
    std::optional<long long> b_exponent_sum;
};

struct Classification {
    Verdict verdict = Verdict::Unknown;
    Reason reason = Reason::NoCriterionApplies;
    Witness witness;
};

/// Decision tree over a normalized spec (throws std::invalid_argument
/// otherwise):
///   k = 0: direct product / nonzero abelianization / commutator obstruction;
///   k > 0: non-b-balanced words fall to the nonzero-b-sum result in the
///          literature; powers of a are outside both criteria; otherwise every
///          rotation of w is tested against condition1 and condition2 (the
///          first success wins), and failing that the totally-balanced h = 1
///          obstruction or Unknown.
Classification classify(const AutomorphismSpec& spec);

}  // namespace fbc
