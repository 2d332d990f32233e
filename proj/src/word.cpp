#include "thue/word.hpp"

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace thue {

Word Word::from_digits(std::string_view digits) {
    std::vector<Letter> v;
    v.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("word digit string: unexpected character");
        v.push_back(c - '0');
    }
    return Word(std::move(v));
}

Word Word::parse(std::string_view text) {
    bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (!spaced) return from_digits(text);
    std::istringstream in{std::string(text)};
    std::vector<Letter> v;
    long x;
    while (in >> x) {
        if (x < 0) throw std::invalid_argument("word: negative letter");
        v.push_back(static_cast<Letter>(x));
    }
    if (!in.eof()) throw std::invalid_argument("word: malformed letter list");
    return Word(std::move(v));
}

void Word::append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
}

Word Word::subword(std::size_t pos, std::size_t len) const {
    if (pos > size() || len > size() - pos)
        throw std::out_of_range("subword out of range");
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

bool Word::starts_with(const Word& prefix) const {
    if (prefix.size() > size()) return false;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (letters_[i] != prefix[i]) return false;
    return true;
}

bool Word::ends_with(const Word& suffix) const {
    if (suffix.size() > size()) return false;
    std::size_t off = size() - suffix.size();
    for (std::size_t i = 0; i < suffix.size(); ++i)
        if (letters_[off + i] != suffix[i]) return false;
    return true;
}

std::string Word::str() const {
    bool digits = true;
    for (Letter a : letters_)
        if (a < 0 || a > 9) { digits = false; break; }
    std::string s;
    if (digits) {
        s.reserve(size());
        for (Letter a : letters_) s.push_back(static_cast<char>('0' + a));
        return s;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(letters_[i]);
    }
    return s;
}

Word operator+(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
}

Word mirror(const Word& w) {
    std::vector<Letter> v(w.letters().rbegin(), w.letters().rend());
    return Word(std::move(v));
}

bool is_ternary(const Word& w) {
    for (Letter a : w.letters())
        if (a < 0 || a > 2) return false;
    return true;
}

bool witness_valid(const Word& w, const SquareWitness& sw) {
    if (sw.period == 0) return false;
    if (sw.start + 2 * sw.period > w.size()) return false;
    for (std::size_t t = 0; t < sw.period; ++t)
        if (w[sw.start + t] != w[sw.start + sw.period + t]) return false;
    return true;
}

const Word& anchor_q() {
    static const Word q = Word::from_digits("1202120121021201021");
    return q;
}

const Word& anchor_qbar() {
    static const Word qb = mirror(anchor_q());
    return qb;
}

const Word& anchor_p() {
    static const Word p = anchor_qbar() + Word::from_digits("0") + anchor_q();
    return p;
}

namespace {

// Shared scan over the longest-common-suffix table. lcs(i, j) is the length
// of the longest common suffix of the prefixes ending at i and j; a square of
// period d = j - i ends at j exactly when lcs(i, j) >= d. One row is kept and
// updated in place with i ascending (row[i-1] still holds the diagonal value).
template <typename Accept>
std::optional<SquareWitness> lcs_scan(const std::vector<Letter>& a, Accept accept) {
    const std::size_t n = a.size();
    if (n < 2) return std::nullopt;
    bool have = false;
    SquareWitness best;
    std::vector<std::uint32_t> row(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        std::uint32_t diag = row[0];
        row[0] = (a[0] == a[j]) ? 1 : 0;
        if (j == 1 && row[0] >= 1) {
            SquareWitness cand{0, 1, {}};
            if (accept(cand) && (!have || cand.start < best.start ||
                                 (cand.start == best.start && cand.period < best.period))) {
                best = cand;
                have = true;
            }
        }
        for (std::size_t i = 1; i < j; ++i) {
            std::uint32_t up = row[i];
            row[i] = (a[i] == a[j]) ? diag + 1 : 0;
            diag = up;
            std::size_t d = j - i;
            if (row[i] >= d) {
                SquareWitness cand{i + 1 - d, d, {}};
                if (accept(cand) && (!have || cand.start < best.start ||
                                     (cand.start == best.start && cand.period < best.period))) {
                    best = cand;
                    have = true;
                }
            }
        }
    }
    if (!have) return std::nullopt;
    return best;
}

} // namespace

std::optional<SquareWitness> find_square(const Word& w) {
    return lcs_scan(w.letters(), [](const SquareWitness&) { return true; });
}

std::optional<SquareWitness> find_square_naive(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t s = 0; s + 2 <= n; ++s) {
        for (std::size_t d = 1; s + 2 * d <= n; ++d) {
            bool eq = true;
            for (std::size_t t = 0; t < d; ++t) {
                if (w[s + t] != w[s + d + t]) { eq = false; break; }
            }
            if (eq) return SquareWitness{s, d, {}};
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> occurrences(const Word& pattern, const Word& w) {
    if (pattern.empty()) throw std::invalid_argument("occurrences: empty pattern");
    std::vector<std::size_t> out;
    if (pattern.size() > w.size()) return out;
    for (std::size_t s = 0; s + pattern.size() <= w.size(); ++s) {
        bool eq = true;
        for (std::size_t t = 0; t < pattern.size(); ++t) {
            if (w[s + t] != pattern[t]) { eq = false; break; }
        }
        if (eq) out.push_back(s);
    }
    return out;
}

namespace {

std::uint64_t count_squarefree_rec(SquareScanner& scan, int remaining) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (Letter a = 0; a <= 2; ++a) {
        if (scan.push(a) == 0)
            total += count_squarefree_rec(scan, remaining - 1);
        scan.pop();
    }
    return total;
}

} // namespace

std::uint64_t count_squarefree(int n) {
    if (n < 0) throw std::invalid_argument("count_squarefree: negative length");
    SquareScanner scan;
    scan.reserve(static_cast<std::size_t>(n));
    return count_squarefree_rec(scan, n);
}

std::optional<SquareWitness> circular_squares(const Word& c, std::size_t max_len) {
    if (max_len > c.size())
        throw std::invalid_argument("circular_squares: max_len exceeds word length");
    if (c.size() < 2 || max_len < 2) return std::nullopt;
    Word cc = c + c;
    const std::size_t n = c.size();
    return lcs_scan(cc.letters(), [&](const SquareWitness& sw) {
        return sw.start < n && 2 * sw.period <= max_len;
    });
}

std::optional<SquareWitness> circular_squares_naive(const Word& c, std::size_t max_len) {
    if (max_len > c.size())
        throw std::invalid_argument("circular_squares: max_len exceeds word length");
    if (c.size() < 2 || max_len < 2) return std::nullopt;
    Word cc = c + c;
    const std::size_t n = c.size();
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t d = 1; 2 * d <= max_len; ++d) {
            bool eq = true;
            for (std::size_t t = 0; t < d; ++t) {
                if (cc[s + t] != cc[s + d + t]) { eq = false; break; }
            }
            if (eq) return SquareWitness{s, d, {}};
        }
    }
    return std::nullopt;
}

Word lex_least_squarefree(std::size_t len) {
    SquareScanner scan;
    scan.reserve(len);
    // Depth-first in letter order; the first completed word is the least.
    std::vector<Letter> next{0};
    while (true) {
        if (scan.size() == len) return scan.word();
        if (next.back() > 2) {
            next.pop_back();
            if (next.empty())
                throw std::logic_error("no square-free word of requested length");
            scan.pop();
            ++next.back();
            continue;
        }
        if (scan.push(next.back()) == 0) {
            next.push_back(0);
        } else {
            scan.pop();
            ++next.back();
        }
    }
}

std::size_t SquareScanner::push(Letter a) {
    w_.push_back(a);
    const std::size_t m = w_.size();
    const std::size_t last = m - 1;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        if (w_[last] != w_[last - d]) continue;
        bool eq = true;
        for (std::size_t t = 1; t < d; ++t) {
            if (w_[last - t] != w_[last - d - t]) { eq = false; break; }
        }
        if (eq) return d;
    }
    return 0;
}

bool SquareScanner::suffix_is(const Word& pattern) const {
    if (pattern.size() > w_.size()) return false;
    std::size_t off = w_.size() - pattern.size();
    for (std::size_t i = 0; i < pattern.size(); ++i)
        if (w_[off + i] != pattern[i]) return false;
    return true;
}

Word SquareScanner::tail(std::size_t from) const {
    if (from > w_.size()) throw std::out_of_range("scanner tail");
    return Word(std::vector<Letter>(w_.begin() + from, w_.end()));
}

} // namespace thue
