#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "fbc/classify.hpp"
#include "fbc/word.hpp"

namespace fbc {

/// Number of freely reduced words of exactly this letter length over {a, b},
/// counted by the same DFS that backs enumeration (4 * 3^{n-1} for n >= 1).
std::uint64_t count_freely_reduced(int length);

/// Streams every cyclically reduced b-balanced word of letter length
/// <= max_len, one representative per rotation class (the lexicographically
/// least rotation under a < A < b < B), by increasing length then
/// lexicographic order. Includes the identity word.
void enumerate_words(int max_len, const std::function<void(const Word&)>& sink);
std::vector<Word> enumerate_words(int max_len);

struct SurveyCell {
    Verdict verdict;
    Reason reason;
    std::uint64_t count = 0;
    std::vector<std::pair<long long, Word>> witnesses;  // (k, word), at most 5
};

struct SurveyReport {
    int max_length = 0;
    std::vector<long long> k_range;
    std::uint64_t word_class_count = 0;
    std::vector<SurveyCell> cells;  // nonempty cells in (verdict, reason) order
};

/// Classifies every (canonical word, k) pair and tallies verdicts.
/// Deterministic for fixed inputs. Requires max_len >= 0 and positive ks.
SurveyReport run_survey(int max_len, const std::vector<long long>& k_values);

}  // namespace fbc
