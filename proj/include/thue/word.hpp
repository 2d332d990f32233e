// Words over small integer alphabets, the fixed anchor words q, q-bar and p,
// and square (repetition) detection on linear and circular words.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thue {

// Letters are small non-negative integers. Vertex colors are ternary {0,1,2};
// edge-color alphabets may be larger.
using Letter = int;

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Build from a digit string such as "120212".
    static Word from_digits(std::string_view digits);
    /// Accepts a digit string or whitespace-separated integers.
    static Word parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    void push_back(Letter a) { letters_.push_back(a); }
    void pop_back() { letters_.pop_back(); }
    void append(const Word& w);
    Word subword(std::size_t pos, std::size_t len) const;

    bool starts_with(const Word& prefix) const;
    bool ends_with(const Word& suffix) const;

    /// Digit string when every letter is a single digit, else space-separated.
    std::string str() const;

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

Word operator+(const Word& a, const Word& b);

/// w read right to left.
Word mirror(const Word& w);

bool is_ternary(const Word& w);

/// Location proof of a repetition: letters[start+i] == letters[start+period+i]
/// for all 0 <= i < period. `context` carries a graph-path locus when the
/// witness comes from a graph verifier.
struct SquareWitness {
    std::size_t start = 0;
    std::size_t period = 0;
    std::string context;
};

/// Re-check a witness by direct letter comparison.
bool witness_valid(const Word& w, const SquareWitness& sw);

// The fixed 19-letter anchor word, its mirror image, and the 39-letter
// square-free palindrome p = qbar 0 q that delimits blocks everywhere below.
const Word& anchor_q();
const Word& anchor_qbar();
const Word& anchor_p();

/// Fast detector: rolling longest-common-suffix table, O(|w|^2) time and
/// O(|w|) memory. Reports the leftmost square, ties broken by smallest period.
std::optional<SquareWitness> find_square(const Word& w);

/// Independent all-windows oracle (start ascending, period ascending,
/// letter-by-letter compare). Same witness convention.
std::optional<SquareWitness> find_square_naive(const Word& w);

inline bool is_squarefree(const Word& w) { return !find_square(w).has_value(); }

/// All start positions of `pattern` inside `w`, ascending. Empty patterns are
/// rejected.
std::vector<std::size_t> occurrences(const Word& pattern, const Word& w);

/// Number of ternary square-free words of length n, by pruned DFS extension.
/// Cost grows like 1.3^n; the caller bounds n.
std::uint64_t count_squarefree(int n);

/// Detects a square of total length <= max_len in the cyclic word c, i.e. a
/// square of c.c starting before position |c|. Witness positions index into
/// c.c. Requires max_len <= |c|.
std::optional<SquareWitness> circular_squares(const Word& c, std::size_t max_len);

/// All-windows oracle for the cyclic case.
std::optional<SquareWitness> circular_squares_naive(const Word& c, std::size_t max_len);

/// Lexicographically least square-free word of the given length over {0,1,2}.
Word lex_least_squarefree(std::size_t len);

/// Incremental square check for DFS searches: push appends one letter and
/// reports the smallest period of a square ending at the new last position
/// (0 if none), in O(current length) letter probes.
class SquareScanner {
public:
    SquareScanner() = default;
    explicit SquareScanner(const Word& seed) : w_(seed.letters()) {}

    void reserve(std::size_t n) { w_.reserve(n); }
    std::size_t size() const { return w_.size(); }
    Letter at(std::size_t i) const { return w_[i]; }
    const std::vector<Letter>& letters() const { return w_; }

    std::size_t push(Letter a);
    void pop() { w_.pop_back(); }

    /// Do the last |pattern| letters equal pattern?
    bool suffix_is(const Word& pattern) const;

    Word word() const { return Word(w_); }
    /// Letters from position `from` to the end.
    Word tail(std::size_t from) const;

private:
    std::vector<Letter> w_;
};

} // namespace thue
