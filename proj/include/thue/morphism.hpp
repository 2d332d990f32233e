// The branching morphism on {0,1,2}: each letter maps to a choice between a
// 24-letter and a 25-letter image. Image enumeration plus the machine checks
// of the synchronization / anchor-freeness facts that the rest of the
// construction leans on.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "thue/word.hpp"

namespace thue {

struct BranchingMorphism {
    // images[letter][choice]; choice 0 is the 24-letter image.
    std::array<std::array<Word, 2>, 3> images;
};

/// The fixed morphism used throughout.
const BranchingMorphism& branching_morphism();

// One image choice per letter of the source word.
using ChoiceVector = std::vector<int>;

Word image_for_choices(const Word& source, const ChoiceVector& choices,
                       const BranchingMorphism& m = branching_morphism());

/// Walks the 2^|source| images in lexicographic choice order. Call next()
/// before reading; it returns false once all images have been produced.
class ImageEnumerator {
public:
    explicit ImageEnumerator(Word source, const BranchingMorphism& m = branching_morphism());

    bool next();
    const ChoiceVector& choices() const { return choices_; }
    const Word& word() const { return word_; }

private:
    void rebuild(std::size_t from);

    const BranchingMorphism& m_;
    Word source_;
    ChoiceVector choices_;
    Word word_;
    std::vector<std::size_t> offsets_; // start of each letter's image in word_
    bool started_ = false;
    bool done_ = false;
};

/// Convenience wrapper; the caller bounds |source|.
std::vector<std::pair<ChoiceVector, Word>> all_images(
    const Word& source, const BranchingMorphism& m = branching_morphism());

struct FactReport {
    bool pass = false;
    std::string counterexample; // empty when pass
};

struct MorphismFactsReport {
    // 1: images of single letters never occur internally in images of pairs
    // 2: q and qbar occur in no image of any two-letter word
    // 3: p + image(0ab) square-free with one occurrence each of q, qbar
    // 4: mirror case, image(ba0) + p
    std::array<FactReport, 4> facts;
    bool all_pass() const {
        for (const auto& f : facts)
            if (!f.pass) return false;
        return true;
    }
};

/// Exhaustive check of the four morphism facts.
MorphismFactsReport verify_morphism_facts(const BranchingMorphism& m = branching_morphism());

struct ImageSpotCheckReport {
    std::uint64_t words_checked = 0;
    std::uint64_t images_checked = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

/// Every image of every square-free ternary word of length <= max_len must be
/// square-free.
ImageSpotCheckReport spot_check_squarefree_images(
    int max_len, const BranchingMorphism& m = branching_morphism());

} // namespace thue
