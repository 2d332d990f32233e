// Good sets: mirror-free sets of equal-length nice words whose pairwise
// combinations with the lex-least separator words stay square-free. The
// forbids relation, candidate-pool construction, greedy independent set, and
// independent re-certification.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/graph.hpp"
#include "thue/nice.hpp"
#include "thue/word.hpp"

namespace thue {

struct GoodSet {
    std::size_t n = 0;                  // word length
    std::vector<Word> words;            // sorted lexicographically
    std::vector<std::size_t> index_set; // separator lengths, ascending
    bool certified = false;
};

/// The four words whose square-freeness the relation checks, family 1..4:
///   1: p u p v p l p      2: p u~ p v p l p
///   3: p u p v~ p l~ p    4: p u~ p v~ p l~ p
Word forbids_family_word(const Word& u, const Word& v, const Word& l, int family);

struct ForbidsWitness {
    int family = 0;
    std::size_t index = 0; // separator length
    SquareWitness sq;
};

/// u forbids v when one of the four family words has a square for some
/// separator length in index_set. Requires |u| == |v| and u != v.
std::optional<ForbidsWitness> forbids(const Word& u, const Word& v,
                                      const std::vector<std::size_t>& index_set,
                                      NiceCache& lwords);

class PoolExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PoolConfig {
    std::size_t enumerate_limit = 32;
    std::uint64_t search_budget = kDefaultSearchBudget;
};

/// Assemble a pool of nice words of length n, filter it mirror-free and clear
/// of prefixes / suffixes of the separators, build the conflict graph under
/// forbids, and return a greedy independent set trimmed to target_size.
/// The result is not yet certified; run verify_good_set for that.
GoodSet build_good_set(std::size_t n, std::size_t target_size,
                       std::vector<std::size_t> index_set, const PoolConfig& pool,
                       NiceCache& lwords);

struct GoodSetCheck {
    bool ok = false;
    std::string counterexample;
};

/// Re-checks everything from scratch with the all-windows oracle only:
/// member niceness, mirror-freeness, the prefix/suffix exclusions, and all
/// four families over all ordered pairs and separator lengths. Sets
/// s.certified on success.
GoodSetCheck verify_good_set(GoodSet& s, NiceCache& lwords);

/// Independent set of size at least |V| / (1 + average degree): repeatedly
/// take a minimum-degree vertex (ties to the smallest id) and delete its
/// closed neighborhood. Returns vertex ids ascending.
std::vector<int> greedy_independent_set(const Graph& g);

} // namespace thue
