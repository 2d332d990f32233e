// Nice words: v is nice when p v p is square-free and q / qbar occur only
// inside the two p anchors. Lexicographically-least search, bounded
// enumeration, constructive generation through the branching morphism, and a
// persistent cache of the found lex-least words.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/word.hpp"

namespace thue {

struct NiceCertificate {
    bool squarefree = false;
    std::size_t q_count = 0;
    std::size_t qbar_count = 0;
    bool anchored = false; // occurrences sit exactly where the two p copies put them
    bool nice() const { return squarefree && q_count == 2 && qbar_count == 2 && anchored; }
};

/// Full check of the nice-word conditions on p v p.
NiceCertificate check_nice(const Word& v);
bool is_nice(const Word& v);

/// Same check driven by the all-windows oracle; used by re-verification paths.
bool is_nice_naive(const Word& v);

struct SearchStats {
    std::uint64_t nodes = 0;
};

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

/// Lexicographically least nice word of the given length, by DFS over ternary
/// prefixes in letter order 0 < 1 < 2. Returns nothing when the search space
/// is exhausted (no nice word of that length exists); throws BudgetExhausted
/// when the node budget runs out first.
std::optional<Word> lex_least_nice(std::size_t len,
                                   std::uint64_t node_budget = kDefaultSearchBudget,
                                   SearchStats* stats = nullptr);

/// Up to `limit` nice words of the given length, in lexicographic order.
std::vector<Word> enumerate_nice(std::size_t len, std::size_t limit,
                                 SearchStats* stats = nullptr);

struct NiceWord {
    Word word;
    NiceCertificate cert;
};

/// Constructive route: pick 24m + a = target with 0 <= a <= m, find the least
/// admissible w (|w| = m-2, "10" + w + "01" square-free) and take the image of
/// 0 w 0 whose first `a` letters use the 25-letter images. Returns nothing for
/// unrepresentable targets.
std::optional<NiceWord> nice_word_via_morphism(std::size_t target);

/// Map from length to the lex-least nice word of that length, persisted as
/// lines "<length> <digits>". Entries are re-validated on load; lines that do
/// not pass are dropped.
class NiceCache {
public:
    NiceCache() = default;
    explicit NiceCache(std::string path);

    const Word* lookup(std::size_t len) const;

    /// Cached value, or run the search and persist the result. Throws
    /// std::runtime_error when no nice word of that length exists and
    /// BudgetExhausted when the search budget runs out.
    const Word& get(std::size_t len, std::uint64_t node_budget = kDefaultSearchBudget);

    void put(std::size_t len, const Word& w);
    void save() const;
    const std::map<std::size_t, Word>& entries() const { return map_; }
    std::size_t dropped_on_load() const { return dropped_; }

private:
    std::string path_;
    std::map<std::size_t, Word> map_;
    std::size_t dropped_ = 0;
};

} // namespace thue
