#include "fbc/survey.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace fbc {

namespace {

// Letter codes 0..3 = a, A, b, B; x and x^-1 differ in the low bit.
constexpr int kInverse = 1;

Letter letter_from_code(int code) {
    return {code < 2 ? Gen::a : Gen::b, (code & kInverse) ? -1 : 1};
}

int b_step(int code) { return code == 2 ? 1 : code == 3 ? -1 : 0; }

bool is_least_rotation(const std::vector<int>& codes) {
    const std::size_t n = codes.size();
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            const int mine = codes[i];
            const int theirs = codes[(r + i) % n];
            if (theirs < mine) return false;
            if (theirs > mine) break;
        }
    }
    return true;
}

struct Dfs {
    int target_len = 0;
    bool cyclic = false;     // forbid last letter inverse to the first
    bool balanced = false;   // keep only b-exponent sum zero
    bool canonical = false;  // keep only lexicographically least rotations
    std::vector<int> codes;
    std::uint64_t leaves = 0;
    const std::function<void(const Word&)>* sink = nullptr;

    void run() {
        codes.clear();
        descend(0);
    }

    void descend(int b_sum) {
        const int depth = static_cast<int>(codes.size());
        if (depth == target_len) {
            ++leaves;
            if (sink) emit();
            return;
        }
        // balance can recover by at most one per remaining letter
        if (balanced && std::abs(b_sum) > target_len - depth) return;
        for (int code = 0; code < 4; ++code) {
            if (depth > 0 && (codes.back() ^ kInverse) == code) continue;
            if (cyclic && depth > 0 && depth == target_len - 1 &&
                (codes.front() ^ kInverse) == code)
                continue;
            codes.push_back(code);
            descend(b_sum + b_step(code));
            codes.pop_back();
        }
    }

    void emit() {
        if (balanced) {
            int sum = 0;
            for (int c : codes) sum += b_step(c);
            if (sum != 0) return;
        }
        if (canonical && !codes.empty() && !is_least_rotation(codes)) return;
        std::vector<Letter> letters;
        letters.reserve(codes.size());
        for (int c : codes) letters.push_back(letter_from_code(c));
        (*sink)(Word::from_letters(letters));
    }
};

}  // namespace

std::uint64_t count_freely_reduced(int length) {
    if (length < 0) throw std::invalid_argument("count_freely_reduced: negative length");
    Dfs dfs;
    dfs.target_len = length;
    dfs.run();
    return dfs.leaves;
}

void enumerate_words(int max_len, const std::function<void(const Word&)>& sink) {
    if (max_len < 0) throw std::invalid_argument("enumerate_words: negative max_len");
    sink(Word{});
    Dfs dfs;
    dfs.cyclic = true;
    dfs.balanced = true;
    dfs.canonical = true;
    dfs.sink = &sink;
    for (int n = 1; n <= max_len; ++n) {
        dfs.target_len = n;
        dfs.run();
    }
}

std::vector<Word> enumerate_words(int max_len) {
    std::vector<Word> out;
    enumerate_words(max_len, [&](const Word& w) { out.push_back(w); });
    return out;
}

SurveyReport run_survey(int max_len, const std::vector<long long>& k_values) {
    if (k_values.empty()) throw std::invalid_argument("run_survey: empty k range");
    for (long long k : k_values)
        if (k <= 0) throw std::invalid_argument("run_survey: k values must be positive");

    SurveyReport report;
    report.max_length = max_len;
    report.k_range = k_values;

    std::map<std::pair<int, int>, SurveyCell> cells;
    enumerate_words(max_len, [&](const Word& w) {
        ++report.word_class_count;
        for (long long k : k_values) {
            const Classification c = classify({k, w});
            auto& cell = cells[{static_cast<int>(c.verdict), static_cast<int>(c.reason)}];
            cell.verdict = c.verdict;
            cell.reason = c.reason;
            ++cell.count;
            if (cell.witnesses.size() < 5) cell.witnesses.emplace_back(k, w);
        }
    });
    report.cells.reserve(cells.size());
    for (auto& [key, cell] : cells) report.cells.push_back(std::move(cell));
    return report;
}

}  // namespace fbc
