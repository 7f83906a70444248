#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fbc {

enum class Gen : std::uint8_t { a = 0, b = 1 };

/// One signed letter: a generator or its inverse. sign is +1 or -1.
struct Letter {
    Gen gen;
    int sign;

    friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

/// Maximal run of one generator, nonzero exponent.
struct Syllable {
    Gen gen;
    long long exp;

    friend bool operator==(const Syllable&, const Syllable&) = default;
};

class WordParseError : public std::runtime_error {
  public:
    WordParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position_(position) {}

    /// 0-based offset into the input text.
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Freely reduced word over {a, b}, stored syllable-merged.
/// The empty word is the identity. Immutable value type.
class Word {
  public:
    Word() = default;

    /// Grammar: word := term* ; term := gen ('^' int)? | '1' ;
    /// gen := 'a'|'b'|'A'|'B' (uppercase = inverse). Whitespace ignored,
    /// exponents may be negative, zero exponents rejected.
    /// Throws WordParseError with the offending position.
    static Word parse(std::string_view text);

    /// Free reduction of an arbitrary letter sequence.
    static Word from_letters(const std::vector<Letter>& letters);

    /// Free reduction of an arbitrary syllable sequence.
    static Word from_syllables(const std::vector<Syllable>& syllables);

    const std::vector<Syllable>& syllables() const { return syllables_; }

    /// Flattened letter sequence.
    std::vector<Letter> letters() const;

    /// Letter length N = sum of |exponents|.
    long long letter_length() const;

    bool empty() const { return syllables_.empty(); }

    Word inverse() const;

    /// Canonical text form; identity renders as "1", |exp| >= 2 as "a^2".
    /// parse(str()) round-trips.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<Syllable> syllables_;
};

/// Concatenation followed by free reduction.
Word operator*(const Word& lhs, const Word& rhs);

/// Free reduction of a letter sequence (idempotent on words).
Word free_reduce(const std::vector<Letter>& letters);

struct CyclicReduction {
    Word core;        // cyclically reduced
    Word conjugator;  // w == conjugator^-1 * core * conjugator
};

/// Strips inverse first/last letters until the core is cyclically reduced.
/// Requires a freely reduced input (any Word qualifies).
CyclicReduction cyclic_reduce(const Word& w);

/// First and last letters are not inverse to each other.
bool is_cyclically_reduced(const Word& w);

/// All distinct cyclic rotations of the letter sequence, starting with w
/// itself, in rotation order. Requires w cyclically reduced.
std::vector<Word> rotations(const Word& w);

/// Sum of the exponents of generator g in w.
long long exponent_sum(const Word& w, Gen g);

/// Total b-exponent of w is zero.
bool is_b_balanced(const Word& w);

/// Both exponent sums vanish, i.e. w maps to 0 in Z^2 under abelianization.
bool in_commutator_subgroup(const Word& w);

/// w = a^m for some m (m = 0 included).
bool is_power_of_a(const Word& w);

/// Cyclic level decomposition of a cyclically reduced b-balanced word.
///
/// Walking the word with running b-exponent sum s (s = 0 at the start),
/// every a^{+-1} occurrence at running sum s sits in level s - min(s);
/// height = max(s) - min(s) and the starting level is -min(s).
struct LevelProfile {
    int height = 0;                    // h(w)
    int starting_level = 0;            // j0, in [0, height]
    std::vector<long long> weights;    // N_0..N_h, dense (empty levels = 0)
    std::vector<bool> balanced_flags;  // weights[j] == 0

    friend bool operator==(const LevelProfile&, const LevelProfile&) = default;
};

/// Throws std::invalid_argument if w is empty, not cyclically reduced or
/// not b-balanced.
LevelProfile level_profile(const Word& w);

/// Every level has a-weight zero.
bool is_totally_balanced(const LevelProfile& p);

/// Order code used for canonical (least) rotations: a < A < b < B.
int letter_code(Letter l);

}  // namespace fbc
