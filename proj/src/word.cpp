#include "fbc/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

namespace fbc {

namespace {

void push_reduced(std::vector<Syllable>& out, Gen gen, long long exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back({gen, exp});
}

}  // namespace

Word Word::from_syllables(const std::vector<Syllable>& syllables) {
    Word w;
    for (const auto& s : syllables) push_reduced(w.syllables_, s.gen, s.exp);
    return w;
}

Word Word::from_letters(const std::vector<Letter>& letters) {
    Word w;
    for (const auto& l : letters) push_reduced(w.syllables_, l.gen, l.sign);
    return w;
}

Word Word::parse(std::string_view text) {
    std::vector<Syllable> sylls;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '1') {
            // identity term; an exponent on it is not part of the grammar
            ++i;
            if (i < n && text[i] == '^')
                throw WordParseError("exponent not allowed after '1'", i);
            continue;
        }
        Gen gen;
        int base;
        switch (c) {
            case 'a': gen = Gen::a; base = 1; break;
            case 'A': gen = Gen::a; base = -1; break;
            case 'b': gen = Gen::b; base = 1; break;
            case 'B': gen = Gen::b; base = -1; break;
            default:
                throw WordParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
        long long exp = 1;
        if (i < n && text[i] == '^') {
            const std::size_t exp_pos = ++i;
            if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
            const char* first = text.data() + exp_pos;
            const char* last = text.data() + n;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            auto [ptr, ec] = std::from_chars(first, last, exp);
            if (ec != std::errc() || ptr != text.data() + i)
                throw WordParseError("malformed exponent", exp_pos);
            if (exp == 0) throw WordParseError("zero exponent", exp_pos);
        }
        push_reduced(sylls, gen, base * exp);
    }
    Word w;
    w.syllables_ = std::move(sylls);
    return w;
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> out;
    out.reserve(static_cast<std::size_t>(letter_length()));
    for (const auto& s : syllables_) {
        const int sign = s.exp > 0 ? 1 : -1;
        for (long long i = 0; i < std::abs(s.exp); ++i) out.push_back({s.gen, sign});
    }
    return out;
}

long long Word::letter_length() const {
    long long n = 0;
    for (const auto& s : syllables_) n += std::abs(s.exp);
    return n;
}

Word Word::inverse() const {
    Word w;
    w.syllables_.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        w.syllables_.push_back({it->gen, -it->exp});
    return w;
}

std::string Word::str() const {
    if (syllables_.empty()) return "1";
    std::string out;
    for (const auto& s : syllables_) {
        char base = s.gen == Gen::a ? 'a' : 'b';
        if (s.exp < 0) base = static_cast<char>(std::toupper(base));
        out += base;
        const long long mag = std::abs(s.exp);
        if (mag >= 2) {
            out += '^';
            out += std::to_string(mag);
        }
    }
    return out;
}

Word operator*(const Word& lhs, const Word& rhs) {
    std::vector<Syllable> all = lhs.syllables();
    all.insert(all.end(), rhs.syllables().begin(), rhs.syllables().end());
    return Word::from_syllables(all);
}

Word free_reduce(const std::vector<Letter>& letters) { return Word::from_letters(letters); }

bool is_cyclically_reduced(const Word& w) {
    const auto& s = w.syllables();
    if (s.size() < 2) return true;
    return !(s.front().gen == s.back().gen && (s.front().exp > 0) != (s.back().exp > 0));
}

CyclicReduction cyclic_reduce(const Word& w) {
    std::vector<Syllable> core = w.syllables();
    std::vector<Syllable> stripped;  // prefix taken off the front, in order
    while (core.size() >= 2 && core.front().gen == core.back().gen &&
           (core.front().exp > 0) != (core.back().exp > 0)) {
        const long long cancel = std::min(std::abs(core.front().exp), std::abs(core.back().exp));
        const long long front_sign = core.front().exp > 0 ? 1 : -1;
        stripped.push_back({core.front().gen, front_sign * cancel});
        core.front().exp -= front_sign * cancel;
        core.back().exp += front_sign * cancel;
        if (core.front().exp == 0) core.erase(core.begin());
        if (core.back().exp == 0) core.pop_back();
    }
    CyclicReduction r;
    r.core = Word::from_syllables(core);
    r.conjugator = Word::from_syllables(stripped).inverse();
    return r;
}

int letter_code(Letter l) { return 2 * static_cast<int>(l.gen) + (l.sign < 0 ? 1 : 0); }

std::vector<Word> rotations(const Word& w) {
    if (!is_cyclically_reduced(w))
        throw std::invalid_argument("rotations: word must be cyclically reduced");
    if (w.empty()) return {Word{}};
    const std::vector<Letter> base = w.letters();
    const std::size_t n = base.size();
    std::vector<Word> out;
    std::set<std::vector<int>> seen;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<Letter> rot;
        rot.reserve(n);
        std::vector<int> key;
        key.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            rot.push_back(base[(r + i) % n]);
            key.push_back(letter_code(rot.back()));
        }
        if (seen.insert(std::move(key)).second) out.push_back(Word::from_letters(rot));
    }
    return out;
}

long long exponent_sum(const Word& w, Gen g) {
    long long sum = 0;
    for (const auto& s : w.syllables())
        if (s.gen == g) sum += s.exp;
    return sum;
}

bool is_b_balanced(const Word& w) { return exponent_sum(w, Gen::b) == 0; }

bool in_commutator_subgroup(const Word& w) {
    return exponent_sum(w, Gen::a) == 0 && exponent_sum(w, Gen::b) == 0;
}

bool is_power_of_a(const Word& w) {
    const auto& s = w.syllables();
    if (s.empty()) return true;
    return s.size() == 1 && s.front().gen == Gen::a;
}

LevelProfile level_profile(const Word& w) {
    if (w.empty()) throw std::invalid_argument("level_profile: empty word has no levels");
    if (!is_cyclically_reduced(w))
        throw std::invalid_argument("level_profile: word must be cyclically reduced");
    if (!is_b_balanced(w))
        throw std::invalid_argument("level_profile: word must be b-balanced");

    // Running b-exponent sum over syllables; a b^e syllable sweeps the range
    // between its endpoints, so min/max only need the endpoints.
    long long s = 0, min_s = 0, max_s = 0;
    std::vector<std::pair<long long, long long>> a_hits;  // (running sum, weight)
    for (const auto& syl : w.syllables()) {
        if (syl.gen == Gen::a) {
            a_hits.emplace_back(s, syl.exp);
        } else {
            s += syl.exp;
            min_s = std::min(min_s, s);
            max_s = std::max(max_s, s);
        }
    }

    LevelProfile p;
    p.height = static_cast<int>(max_s - min_s);
    p.starting_level = static_cast<int>(-min_s);
    p.weights.assign(static_cast<std::size_t>(p.height) + 1, 0);
    for (const auto& [sum, weight] : a_hits)
        p.weights[static_cast<std::size_t>(sum - min_s)] += weight;
    p.balanced_flags.resize(p.weights.size());
    for (std::size_t j = 0; j < p.weights.size(); ++j) p.balanced_flags[j] = p.weights[j] == 0;
    return p;
}

bool is_totally_balanced(const LevelProfile& p) {
    return std::all_of(p.weights.begin(), p.weights.end(), [](long long n) { return n == 0; });
}

}  // namespace fbc
