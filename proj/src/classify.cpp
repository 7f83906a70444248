#include "fbc/classify.hpp"

#include <stdexcept>

namespace fbc {

AutomorphismSpec normalize_spec(long long k, const Word& w) {
    Word word = w;
    if (k < 0) {
        // conjugate by a -> a^-1, b -> b, c -> c
        std::vector<Syllable> flipped = word.syllables();
        for (auto& s : flipped)
            if (s.gen == Gen::a) s.exp = -s.exp;
        word = Word::from_syllables(flipped);
        k = -k;
    }
    return {k, cyclic_reduce(word).core};
}

bool is_normalized(const AutomorphismSpec& spec) {
    return spec.twist_exponent >= 0 && is_cyclically_reduced(spec.twisting_word);
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Cat0: return "Cat0";
        case Verdict::NotWeaklyCat0: return "NotWeaklyCat0";
        case Verdict::Cat0PriorWork: return "Cat0PriorWork";
        case Verdict::Excluded: return "Excluded";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::DirectProduct: return "DirectProduct";
        case Reason::NonzeroAbelianization: return "NonzeroAbelianization";
        case Reason::Condition1: return "Condition1";
        case Reason::Condition2: return "Condition2";
        case Reason::CommutatorObstruction: return "CommutatorObstruction";
        case Reason::TotallyBalancedH1: return "TotallyBalancedH1";
        case Reason::NonBBalanced: return "NonBBalanced";
        case Reason::PowerOfA: return "PowerOfA";
        case Reason::NoCriterionApplies: return "NoCriterionApplies";
    }
    return "?";
}

Condition1Result condition1(const LevelProfile& p, long long k) {
    if (k <= 0) throw std::invalid_argument("condition1: k must be positive");
    long long total = 0, weighted = 0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        total += p.weights[j];
        weighted += (1 + 2 * (static_cast<long long>(p.starting_level) - static_cast<long long>(j))) *
                    p.weights[j];
    }
    Condition1Result r;
    r.lhs = total * total;
    r.rhs = k * weighted;
    r.holds = r.lhs < r.rhs;
    return r;
}

Condition2Result condition2(const LevelProfile& p, long long k) {
    if (k <= 0) throw std::invalid_argument("condition2: k must be positive");
    long long s = 0;
    for (std::size_t j = 0; j < p.weights.size(); ++j) {
        const long long diff = static_cast<long long>(p.starting_level) - static_cast<long long>(j);
        s += (diff % 2 == 0 ? 1 : -1) * p.weights[j];
    }
    Condition2Result r;
    r.alternating_sum = s;
    r.holds = 0 < s && s < k;
    return r;
}

Classification classify(const AutomorphismSpec& spec) {
    if (!is_normalized(spec)) throw std::invalid_argument("classify: spec must be normalized");
    const long long k = spec.twist_exponent;
    const Word& w = spec.twisting_word;

    Classification c;
    if (k == 0) {
        const long long na = exponent_sum(w, Gen::a);
        const long long nb = exponent_sum(w, Gen::b);
        c.witness.a_exponent_sum = na;
        c.witness.b_exponent_sum = nb;
        if (w.empty()) {
            c.verdict = Verdict::Cat0;
            c.reason = Reason::DirectProduct;
        } else if (na != 0 || nb != 0) {
            c.verdict = Verdict::Cat0;
            c.reason = Reason::NonzeroAbelianization;
        } else {
            c.verdict = Verdict::NotWeaklyCat0;
            c.reason = Reason::CommutatorObstruction;
        }
        return c;
    }

    if (!is_b_balanced(w)) {
        c.verdict = Verdict::Cat0PriorWork;
        c.reason = Reason::NonBBalanced;
        c.witness.b_exponent_sum = exponent_sum(w, Gen::b);
        return c;
    }

    if (is_power_of_a(w)) {
        c.verdict = Verdict::Excluded;
        c.reason = Reason::PowerOfA;
        c.witness.a_exponent_sum = exponent_sum(w, Gen::a);
        return c;
    }

    const std::vector<Word> rots = rotations(w);
    for (std::size_t i = 0; i < rots.size(); ++i) {
        const LevelProfile p = level_profile(rots[i]);
        if (const auto c1 = condition1(p, k); c1.holds) {
            c.verdict = Verdict::Cat0;
            c.reason = Reason::Condition1;
            c.witness.rotation = rots[i];
            c.witness.rotation_index = i;
            c.witness.profile = p;
            c.witness.lhs = c1.lhs;
            c.witness.rhs = c1.rhs;
            return c;
        }
        if (const auto c2 = condition2(p, k); c2.holds) {
            c.verdict = Verdict::Cat0;
            c.reason = Reason::Condition2;
            c.witness.rotation = rots[i];
            c.witness.rotation_index = i;
            c.witness.profile = p;
            c.witness.lhs = c2.alternating_sum;
            c.witness.rhs = k;
            return c;
        }
    }

    const LevelProfile p = level_profile(w);
    if (is_totally_balanced(p) && p.height == 1) {
        c.verdict = Verdict::NotWeaklyCat0;
        c.reason = Reason::TotallyBalancedH1;
        c.witness.profile = p;
        return c;
    }

    c.verdict = Verdict::Unknown;
    c.reason = Reason::NoCriterionApplies;
    c.witness.profile = p;
    return c;
}

}  // namespace fbc
