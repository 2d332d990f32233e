#include "thue/goodset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace thue {

Word forbids_family_word(const Word& u, const Word& v, const Word& l, int family) {
    const Word& p = anchor_p();
    switch (family) {
        case 1: return p + u + p + v + p + l + p;
        case 2: return p + mirror(u) + p + v + p + l + p;
        case 3: return p + u + p + mirror(v) + p + mirror(l) + p;
        case 4: return p + mirror(u) + p + mirror(v) + p + mirror(l) + p;
        default: throw std::invalid_argument("forbids_family_word: family must be 1..4");
    }
}

std::optional<ForbidsWitness> forbids(const Word& u, const Word& v,
                                      const std::vector<std::size_t>& index_set,
                                      NiceCache& lwords) {
    if (u.size() != v.size())
        throw std::invalid_argument("forbids: words must have equal length");
    if (u == v) throw std::invalid_argument("forbids: defined only for distinct words");
    for (std::size_t i : index_set) {
        const Word& l = lwords.get(i);
        for (int family = 1; family <= 4; ++family) {
            Word w = forbids_family_word(u, v, l, family);
            if (auto sq = find_square(w)) return ForbidsWitness{family, i, *sq};
        }
    }
    return std::nullopt;
}

namespace {

void validate_index_set(std::size_t n, const std::vector<std::size_t>& index_set) {
    if (index_set.empty())
        throw std::invalid_argument("good set: empty index set");
    for (std::size_t i : index_set) {
        if (i < 2 * n + 100 || i > 7 * n)
            throw std::invalid_argument("good set: separator length " + std::to_string(i) +
                                        " outside [2n+100, 7n]");
    }
}

} // namespace

GoodSet build_good_set(std::size_t n, std::size_t target_size,
                       std::vector<std::size_t> index_set, const PoolConfig& pool,
                       NiceCache& lwords) {
    std::sort(index_set.begin(), index_set.end());
    index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());
    validate_index_set(n, index_set);
    for (std::size_t i : index_set) lwords.get(i, pool.search_budget);

    std::vector<Word> cand = enumerate_nice(n, pool.enumerate_limit);

    // mirror-free: keep the lexicographically smaller of each mirror pair
    std::set<Word> kept;
    std::vector<Word> filtered;
    for (const Word& w : cand) {
        Word wm = mirror(w);
        if (wm != w && kept.count(wm)) continue;
        kept.insert(w);
        filtered.push_back(w);
    }

    // no member may be a prefix or suffix of a separator word
    std::erase_if(filtered, [&](const Word& w) {
        for (std::size_t i : index_set) {
            const Word& l = lwords.get(i);
            if (l.starts_with(w) || l.ends_with(w)) return true;
        }
        return false;
    });

    if (filtered.size() < target_size)
        throw PoolExhausted("good set pool: only " + std::to_string(filtered.size()) +
                            " candidates for target size " + std::to_string(target_size));

    // conflict graph: an edge when either word forbids the other
    std::vector<std::pair<int, int>> conflict_edges;
    for (std::size_t a = 0; a < filtered.size(); ++a) {
        for (std::size_t b = a + 1; b < filtered.size(); ++b) {
            if (forbids(filtered[a], filtered[b], index_set, lwords) ||
                forbids(filtered[b], filtered[a], index_set, lwords)) {
                conflict_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
            }
        }
    }
    Graph conflict = Graph::from_edges(static_cast<int>(filtered.size()),
                                       std::move(conflict_edges));
    std::vector<int> independent = greedy_independent_set(conflict);
    if (independent.size() < target_size)
        throw PoolExhausted("good set: greedy independent set has " +
                            std::to_string(independent.size()) + " words, need " +
                            std::to_string(target_size));

    GoodSet out;
    out.n = n;
    out.index_set = std::move(index_set);
    for (std::size_t j = 0; j < target_size; ++j)
        out.words.push_back(filtered[independent[j]]);
    std::sort(out.words.begin(), out.words.end());
    return out;
}

GoodSetCheck verify_good_set(GoodSet& s, NiceCache& lwords) {
    s.certified = false;
    auto fail = [](std::string msg) { return GoodSetCheck{false, std::move(msg)}; };

    validate_index_set(s.n, s.index_set);

    for (const Word& w : s.words) {
        if (w.size() != s.n)
            return fail("member of wrong length: " + w.str());
        if (!is_nice_naive(w))
            return fail("member is not nice: " + w.str());
    }
    for (std::size_t i : s.index_set) {
        const Word& l = lwords.get(i);
        if (l.size() != i || !is_nice_naive(l))
            return fail("separator of length " + std::to_string(i) + " is not nice");
    }

    for (std::size_t a = 0; a < s.words.size(); ++a) {
        for (std::size_t b = 0; b < s.words.size(); ++b) {
            if (a == b) continue;
            if (s.words[a] == s.words[b])
                return fail("duplicate member: " + s.words[a].str());
            if (mirror(s.words[a]) == s.words[b])
                return fail("mirror pair in set: " + s.words[a].str() + " and " +
                            s.words[b].str());
        }
    }

    for (const Word& w : s.words) {
        for (std::size_t i : s.index_set) {
            const Word& l = lwords.get(i);
            if (l.starts_with(w))
                return fail(w.str() + " is a prefix of the separator of length " +
                            std::to_string(i));
            if (l.ends_with(w))
                return fail(w.str() + " is a suffix of the separator of length " +
                            std::to_string(i));
        }
    }

    for (std::size_t a = 0; a < s.words.size(); ++a) {
        for (std::size_t b = 0; b < s.words.size(); ++b) {
            if (a == b) continue;
            for (std::size_t i : s.index_set) {
                const Word& l = lwords.get(i);
                for (int family = 1; family <= 4; ++family) {
                    Word w = forbids_family_word(s.words[a], s.words[b], l, family);
                    if (auto sq = find_square_naive(w)) {
                        std::ostringstream os;
                        os << "family " << family << " word for (" << s.words[a].str()
                           << ", " << s.words[b].str() << ", l_" << i
                           << ") has a square at " << sq->start << " period "
                           << sq->period;
                        return fail(os.str());
                    }
                }
            }
        }
    }

    s.certified = true;
    return GoodSetCheck{true, ""};
}

std::vector<int> greedy_independent_set(const Graph& g) {
    std::vector<char> alive(g.n, 1);
    std::vector<int> degree(g.n, 0);
    for (int v = 0; v < g.n; ++v) degree[v] = static_cast<int>(g.adj[v].size());
    std::vector<int> result;
    int remaining = g.n;
    while (remaining > 0) {
        int best = -1;
        for (int v = 0; v < g.n; ++v) {
            if (!alive[v]) continue;
            if (best < 0 || degree[v] < degree[best]) best = v;
        }
        result.push_back(best);
        std::vector<int> removed{best};
        for (int nb : g.adj[best])
            if (alive[nb]) removed.push_back(nb);
        for (int v : removed) {
            alive[v] = 0;
            --remaining;
            for (int nb : g.adj[v])
                if (alive[nb]) --degree[nb];
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace thue
