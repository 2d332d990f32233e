#include <doctest.h>

#include <random>

#include "support.hpp"
#include "thue/goodset.hpp"

using namespace thue;

namespace {

constexpr std::size_t kDeskN = 44;
constexpr std::size_t kDeskIndex = 2 * kDeskN + 100; // 188

// exact maximum independent set by branch and bound, for graphs up to ~20
// vertices
int exact_mis(const Graph& g) {
    std::vector<std::uint32_t> nb(g.n, 0);
    for (auto [u, v] : g.edges) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    int best = 0;
    auto rec = [&](auto&& self, std::uint32_t avail, int size) -> void {
        if (size + __builtin_popcount(avail) <= best) return;
        if (avail == 0) {
            best = std::max(best, size);
            return;
        }
        int v = __builtin_ctz(avail);
        self(self, avail & ~(1u << v) & ~nb[v], size + 1); // take v
        self(self, avail & ~(1u << v), size);              // skip v
    };
    rec(rec, (g.n == 32) ? ~0u : ((1u << g.n) - 1), 0);
    return best;
}

} // namespace

TEST_CASE("greedy independent set") {
    Graph empty = Graph::from_edges(5, {});
    CHECK(greedy_independent_set(empty) == std::vector<int>{0, 1, 2, 3, 4});

    Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(greedy_independent_set(k4).size() == 1);

    std::mt19937 rng(909);
    std::bernoulli_distribution coin(0.3);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < 20; ++i)
            for (int j = i + 1; j < 20; ++j)
                if (coin(rng)) es.emplace_back(i, j);
        Graph g = Graph::from_edges(20, std::move(es));
        auto is = greedy_independent_set(g);
        for (std::size_t a = 0; a < is.size(); ++a)
            for (std::size_t b = a + 1; b < is.size(); ++b)
                CHECK(g.edge_index(is[a], is[b]) == -1);
        auto bound = static_cast<std::size_t>(
            std::ceil(g.n / (1.0 + g.average_degree())));
        CHECK(is.size() >= bound);
        CHECK(static_cast<int>(is.size()) <= exact_mis(g));
    }
}

TEST_CASE("forbids preconditions and harness cases") {
    NiceCache cache;
    auto words = enumerate_nice(kDeskN, 4);
    REQUIRE(words.size() == 4);

    CHECK_THROWS_AS(forbids(words[0], words[0], {kDeskIndex}, cache),
                    std::invalid_argument);
    CHECK_THROWS_AS(forbids(words[0], enumerate_nice(12, 1)[0], {kDeskIndex}, cache),
                    std::invalid_argument);

    // a member that is a prefix of a separator word is always forbidden:
    // p u p v p l p then contains (p v)(p v)
    const Word& l = cache.get(kDeskIndex);
    Word vprefix = l.subword(0, kDeskN);
    REQUIRE(words[0] != vprefix);
    auto hit = forbids(words[0], vprefix, {kDeskIndex}, cache);
    REQUIRE(hit.has_value());
    CHECK(hit->family == 1);
    CHECK(hit->index == kDeskIndex);
    Word family_word = forbids_family_word(words[0], vprefix, l, hit->family);
    CHECK(witness_valid(family_word, hit->sq));
}

TEST_CASE("good set construction and certification at desk scale") {
    NiceCache cache;
    GoodSet s = build_good_set(kDeskN, 3, {kDeskIndex}, {}, cache);
    REQUIRE(s.words.size() == 3);
    CHECK(!s.certified);

    auto check = verify_good_set(s, cache);
    INFO(check.counterexample);
    CHECK(check.ok);
    CHECK(s.certified);

    for (const Word& w : s.words) {
        CHECK(w.size() == kDeskN);
        CHECK(is_nice(w));
    }

    // no pair of members forbids each other
    for (const Word& u : s.words)
        for (const Word& v : s.words)
            if (u != v) CHECK(!forbids(u, v, s.index_set, cache).has_value());

    // idempotent
    auto again = verify_good_set(s, cache);
    CHECK(again.ok);
    CHECK(s.certified);
}

TEST_CASE("good set certification failures") {
    NiceCache cache;

    // mirror pair
    auto pool = enumerate_nice(kDeskN, 32);
    Word asym;
    for (const Word& w : pool) {
        if (mirror(w) != w) { asym = w; break; }
    }
    REQUIRE(!asym.empty());
    GoodSet bad;
    bad.n = kDeskN;
    bad.index_set = {kDeskIndex};
    bad.words = {asym, mirror(asym)};
    std::sort(bad.words.begin(), bad.words.end());
    auto check = verify_good_set(bad, cache);
    CHECK(!check.ok);
    CHECK(!bad.certified);
    CHECK(check.counterexample.find("mirror") != std::string::npos);

    // member that is a prefix of a separator
    const Word& l = cache.get(kDeskIndex);
    Word vprefix = l.subword(0, kDeskN);
    GoodSet pref;
    pref.n = kDeskN;
    pref.index_set = {kDeskIndex};
    pref.words = {vprefix};
    auto check2 = verify_good_set(pref, cache);
    CHECK(!check2.ok);

    // non-nice member
    GoodSet ugly;
    ugly.n = 4;
    ugly.index_set = {0};
    CHECK_THROWS_AS(verify_good_set(ugly, cache), std::invalid_argument);
}

TEST_CASE("pool exhaustion") {
    NiceCache cache;
    CHECK_THROWS_AS(build_good_set(kDeskN, 40, {kDeskIndex}, {.enumerate_limit = 16}, cache),
                    PoolExhausted);
}

TEST_CASE("singleton good set") {
    NiceCache cache;
    GoodSet s = build_good_set(kDeskN, 1, {kDeskIndex}, {.enumerate_limit = 8}, cache);
    REQUIRE(s.words.size() == 1);
    auto check = verify_good_set(s, cache);
    CHECK(check.ok);
    CHECK(s.certified);
}

TEST_CASE("separator sandwich words are square-free over a certified set") {
    NiceCache cache;
    GoodSet s = build_good_set(kDeskN, 3, {kDeskIndex}, {}, cache);
    REQUIRE(verify_good_set(s, cache).ok);
    const Word& p = anchor_p();
    for (const Word& u : s.words) {
        for (const Word& v : s.words) { // u == v allowed here
            for (std::size_t i : s.index_set) {
                Word w = p + u + p + cache.get(i) + p + v + p;
                CHECK(!find_square_naive(w).has_value());
            }
        }
    }
}

namespace {

// word built from blocks f(w_i) p l_{s_i} p f(w_i), mirrored per r_i, with a
// p between consecutive blocks and around the whole thing
Word chain_word(const std::vector<Word>& blocks) {
    Word out = anchor_p();
    for (const Word& b : blocks) {
        out.append(b);
        out.append(anchor_p());
    }
    return out;
}

Word encode_block(const Word& f, const Word& l, bool mirrored) {
    Word b = f + anchor_p() + l + anchor_p() + f;
    return mirrored ? mirror(b) : b;
}

} // namespace

TEST_CASE("random encoded chains stay square-free") {
    NiceCache cache;
    std::vector<std::size_t> index_set{188, 189, 190, 191, 192};
    GoodSet s = build_good_set(kDeskN, 3, index_set, {}, cache);
    REQUIRE(verify_good_set(s, cache).ok);

    std::mt19937 rng(606);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t k = 2 + rng() % 7;
        Word colors = testsupport::random_squarefree(rng, k);
        std::vector<Word> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            const Word& f = s.words[colors[i]];
            const Word& l = cache.get(index_set[rng() % index_set.size()]);
            blocks.push_back(encode_block(f, l, rng() % 2 == 1));
        }
        Word w = chain_word(blocks);
        auto sq = find_square(w);
        INFO("trial ", trial);
        CHECK(!sq.has_value());
    }
}

TEST_CASE("rotated encoded chains stay square-free") {
    NiceCache cache;
    std::vector<std::size_t> index_set{188, 189, 190};
    GoodSet s = build_good_set(kDeskN, 3, index_set, {}, cache);
    REQUIRE(verify_good_set(s, cache).ok);

    std::mt19937 rng(707);
    int done = 0;
    while (done < 60) {
        std::size_t k = 3 + rng() % 6;
        Word colors = testsupport::random_squarefree(rng, k);
        // the rotated color word must be square-free as well
        std::vector<Letter> rot(colors.letters().begin() + 1, colors.letters().end());
        rot.push_back(colors[0]);
        if (find_square(Word(rot)).has_value()) continue;

        std::vector<Word> blocks;
        for (std::size_t i = 0; i < k; ++i) {
            const Word& f = s.words[colors[i]];
            const Word& l = cache.get(index_set[rng() % index_set.size()]);
            blocks.push_back(encode_block(f, l, rng() % 2 == 1));
        }
        // split the first block (with its trailing p) as a|b and wrap around
        Word first = blocks[0] + anchor_p();
        std::size_t cut = rng() % (first.size() + 1);
        Word a = first.subword(0, cut);
        Word b = first.subword(cut, first.size() - cut);
        Word w = b;
        for (std::size_t i = 1; i < k; ++i) {
            w.append(blocks[i]);
            w.append(anchor_p());
        }
        w.append(a);
        INFO("trial ", done);
        CHECK(!find_square(w).has_value());
        ++done;
    }
}
