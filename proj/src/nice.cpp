#include "thue/nice.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "thue/morphism.hpp"

namespace thue {

namespace {

NiceCertificate certify(const Word& v, bool naive) {
    NiceCertificate cert;
    const std::size_t n = v.size();
    Word w = anchor_p() + v + anchor_p();
    cert.squarefree = naive ? !find_square_naive(w).has_value()
                            : !find_square(w).has_value();
    auto occ_q = occurrences(anchor_q(), w);
    auto occ_qb = occurrences(anchor_qbar(), w);
    cert.q_count = occ_q.size();
    cert.qbar_count = occ_qb.size();
    // the two p copies put q at 20 and 59+n, qbar at 0 and 39+n
    cert.anchored = occ_q == std::vector<std::size_t>{20, 59 + n} &&
                    occ_qb == std::vector<std::size_t>{0, 39 + n};
    return cert;
}

} // namespace

NiceCertificate check_nice(const Word& v) {
    if (!is_ternary(v)) throw std::invalid_argument("check_nice: non-ternary word");
    return certify(v, false);
}

bool is_nice(const Word& v) { return check_nice(v).nice(); }

bool is_nice_naive(const Word& v) {
    if (!is_ternary(v)) throw std::invalid_argument("is_nice_naive: non-ternary word");
    return certify(v, true).nice();
}

namespace {

// DFS over ternary extensions of p. A prefix u is cut as soon as p u gets a
// square or an occurrence of q / qbar ends past the seeded anchor; neither
// condition can be repaired by extending. Niceness itself is only decided at
// full length (the trailing p can still interact with the end of v).
struct NiceSearch {
    std::size_t len;
    std::uint64_t budget;
    SearchStats stats;
    SquareScanner scan{anchor_p()};
    bool budget_hit = false;
    bool stop = false;

    // returns false to abort the whole search
    virtual bool emit(const Word& v) = 0;
    virtual ~NiceSearch() = default;

    void run() {
        scan.reserve(anchor_p().size() + len);
        rec(0);
    }

    void rec(std::size_t depth) {
        if (depth == len) {
            Word v = scan.tail(anchor_p().size());
            if (is_nice(v) && !emit(v)) stop = true;
            return;
        }
        for (Letter a = 0; a <= 2 && !stop; ++a) {
            if (++stats.nodes > budget) {
                budget_hit = true;
                stop = true;
                return;
            }
            if (scan.push(a) == 0 && !premature_anchor()) rec(depth + 1);
            scan.pop();
        }
    }

    bool premature_anchor() const {
        // every push happens past the seeded p, so any q / qbar suffix here
        // would be a third occurrence
        return scan.suffix_is(anchor_q()) || scan.suffix_is(anchor_qbar());
    }
};

} // namespace

std::optional<Word> lex_least_nice(std::size_t len, std::uint64_t node_budget,
                                   SearchStats* stats) {
    if (len == 0) throw std::invalid_argument("lex_least_nice: length must be positive");
    struct First : NiceSearch {
        std::optional<Word> found;
        bool emit(const Word& v) override {
            found = v;
            return false;
        }
    } search;
    search.len = len;
    search.budget = node_budget;
    search.run();
    if (stats) *stats = search.stats;
    if (search.found) return search.found;
    if (search.budget_hit) throw BudgetExhausted("lex_least_nice: node budget exhausted");
    return std::nullopt;
}

std::vector<Word> enumerate_nice(std::size_t len, std::size_t limit, SearchStats* stats) {
    if (len == 0) throw std::invalid_argument("enumerate_nice: length must be positive");
    struct Collect : NiceSearch {
        std::vector<Word> out;
        std::size_t limit = 0;
        bool emit(const Word& v) override {
            out.push_back(v);
            return out.size() < limit;
        }
    } search;
    if (limit == 0) return {};
    search.len = len;
    search.limit = limit;
    search.budget = UINT64_MAX;
    search.run();
    if (stats) *stats = search.stats;
    return search.out;
}

namespace {

// least w with "10" + w + "01" square-free (w itself is then square-free too)
std::optional<Word> least_admissible_core(std::size_t len) {
    SquareScanner scan{Word::from_digits("10")};
    std::vector<Letter> next{0};
    auto backtrack = [&]() -> bool {
        next.pop_back();
        if (next.empty()) return false;
        scan.pop();
        ++next.back();
        return true;
    };
    while (true) {
        if (scan.size() == 2 + len) {
            bool ok = scan.push(0) == 0;
            if (ok) {
                ok = scan.push(1) == 0;
                scan.pop();
            }
            scan.pop();
            if (ok) return scan.tail(2);
            if (!backtrack()) return std::nullopt;
            continue;
        }
        if (next.back() > 2) {
            if (!backtrack()) return std::nullopt;
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

} // namespace

std::optional<NiceWord> nice_word_via_morphism(std::size_t target) {
    if (target < 144) return std::nullopt;
    std::size_t m = target / 24;
    std::size_t a = target % 24;
    if (a > m) return std::nullopt; // length not representable as 24m + a with a <= m
    auto w = least_admissible_core(m - 2);
    if (!w) return std::nullopt;
    Word source = Word::from_digits("0") + *w + Word::from_digits("0");
    ChoiceVector choices(source.size(), 0);
    for (std::size_t i = 0; i < a; ++i) choices[i] = 1;
    Word image = image_for_choices(source, choices);
    NiceWord out{image, check_nice(image)};
    if (image.size() != target || !out.cert.nice())
        throw std::logic_error("nice_word_via_morphism: constructed word is not nice");
    return out;
}

NiceCache::NiceCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::size_t len;
        std::string digits;
        if (!(ls >> len >> digits)) {
            ++dropped_;
            continue;
        }
        try {
            Word w = Word::from_digits(digits);
            if (w.size() == len && is_nice(w))
                map_.emplace(len, std::move(w));
            else
                ++dropped_;
        } catch (const std::invalid_argument&) {
            ++dropped_;
        }
    }
}

const Word* NiceCache::lookup(std::size_t len) const {
    auto it = map_.find(len);
    return it == map_.end() ? nullptr : &it->second;
}

const Word& NiceCache::get(std::size_t len, std::uint64_t node_budget) {
    if (const Word* w = lookup(len)) return *w;
    auto found = lex_least_nice(len, node_budget);
    if (!found)
        throw std::runtime_error("no nice word of length " + std::to_string(len));
    auto [it, fresh] = map_.emplace(len, std::move(*found));
    (void)fresh;
    save();
    return it->second;
}

void NiceCache::put(std::size_t len, const Word& w) {
    if (w.size() != len || !is_nice(w))
        throw std::invalid_argument("cache entry is not a nice word of the stated length");
    map_[len] = w;
    save();
}

void NiceCache::save() const {
    if (path_.empty()) return;
    std::filesystem::path target(path_);
    if (target.has_parent_path())
        std::filesystem::create_directories(target.parent_path());
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        for (const auto& [len, w] : map_) out << len << ' ' << w.str() << '\n';
    }
    std::filesystem::rename(tmp, target);
}

} // namespace thue
