#include "thue/morphism.hpp"

#include <sstream>
#include <stdexcept>

namespace thue {

const BranchingMorphism& branching_morphism() {
    static const BranchingMorphism m = [] {
        BranchingMorphism b;
        b.images[0][0] = Word::from_digits("012102120210201021201210");
        b.images[0][1] = Word::from_digits("0121021202102012021201210");
        b.images[1][0] = Word::from_digits("120210201021012102012021");
        b.images[1][1] = Word::from_digits("1202102010210120102012021");
        b.images[2][0] = Word::from_digits("201021012102120210120102");
        b.images[2][1] = Word::from_digits("2010210121021201210120102");
        return b;
    }();
    return m;
}

Word image_for_choices(const Word& source, const ChoiceVector& choices,
                       const BranchingMorphism& m) {
    if (choices.size() != source.size())
        throw std::invalid_argument("image_for_choices: choice vector length mismatch");
    Word out;
    for (std::size_t i = 0; i < source.size(); ++i) {
        Letter a = source[i];
        if (a < 0 || a > 2) throw std::invalid_argument("image_for_choices: non-ternary letter");
        int c = choices[i];
        if (c < 0 || c > 1) throw std::invalid_argument("image_for_choices: bad choice");
        out.append(m.images[a][c]);
    }
    return out;
}

ImageEnumerator::ImageEnumerator(Word source, const BranchingMorphism& m)
    : m_(m), source_(std::move(source)), choices_(source_.size(), 0) {
    if (!is_ternary(source_))
        throw std::invalid_argument("images: non-ternary source word");
    offsets_.resize(source_.size(), 0);
}

void ImageEnumerator::rebuild(std::size_t from) {
    // positions before `from` are unchanged, so their letters can be kept
    std::size_t keep = (from == 0) ? 0 : offsets_[from];
    std::vector<Letter> letters(word_.letters().begin(),
                                word_.letters().begin() + static_cast<std::ptrdiff_t>(keep));
    Word w(std::move(letters));
    for (std::size_t i = from; i < source_.size(); ++i) {
        offsets_[i] = w.size();
        w.append(m_.images[source_[i]][choices_[i]]);
    }
    word_ = std::move(w);
}

bool ImageEnumerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        rebuild(0);
        return true;
    }
    // odometer increment from the rightmost position
    std::size_t i = choices_.size();
    while (i > 0 && choices_[i - 1] == 1) choices_[--i] = 0;
    if (i == 0) {
        done_ = true;
        return false;
    }
    choices_[i - 1] = 1;
    rebuild(i - 1);
    return true;
}

std::vector<std::pair<ChoiceVector, Word>> all_images(const Word& source,
                                                      const BranchingMorphism& m) {
    std::vector<std::pair<ChoiceVector, Word>> out;
    ImageEnumerator it(source, m);
    while (it.next()) out.emplace_back(it.choices(), it.word());
    return out;
}

namespace {

std::string describe(const Word& source, const ChoiceVector& choices) {
    std::ostringstream os;
    os << "source=" << source.str() << " choices=";
    for (int c : choices) os << c;
    return os.str();
}

} // namespace

MorphismFactsReport verify_morphism_facts(const BranchingMorphism& m) {
    MorphismFactsReport rep;
    for (auto& f : rep.facts) f.pass = true;

    auto fail = [&](int fact, const std::string& msg) {
        if (rep.facts[fact].pass) {
            rep.facts[fact].pass = false;
            rep.facts[fact].counterexample = msg;
        }
    };

    // fact 1: an image of a single letter occurs in an image of a two-letter
    // word only as a prefix or a suffix
    for (Letter a = 0; a <= 2; ++a) {
        for (Letter b = 0; b <= 2; ++b) {
            Word ab(std::vector<Letter>{a, b});
            for (const auto& [ch, v] : all_images(ab, m)) {
                for (Letter c = 0; c <= 2; ++c) {
                    for (int j = 0; j < 2; ++j) {
                        const Word& vp = m.images[c][j];
                        for (std::size_t pos : occurrences(vp, v)) {
                            if (pos != 0 && pos != v.size() - vp.size()) {
                                std::ostringstream os;
                                os << "image of " << c << " (choice " << j
                                   << ") occurs internally at " << pos << " in "
                                   << describe(ab, ch);
                                fail(0, os.str());
                            }
                        }
                    }
                }
            }
        }
    }

    // fact 2: q and qbar occur in no image of a two-letter word
    for (Letter a = 0; a <= 2; ++a) {
        for (Letter b = 0; b <= 2; ++b) {
            Word ab(std::vector<Letter>{a, b});
            for (const auto& [ch, v] : all_images(ab, m)) {
                auto occ_q = occurrences(anchor_q(), v);
                auto occ_qb = occurrences(anchor_qbar(), v);
                if (!occ_q.empty() || !occ_qb.empty()) {
                    std::ostringstream os;
                    os << (occ_q.empty() ? "qbar" : "q") << " occurs at position "
                       << (occ_q.empty() ? occ_qb.front() : occ_q.front()) << " in "
                       << describe(ab, ch);
                    fail(1, os.str());
                }
            }
        }
    }

    // facts 3 and 4: p-prefixed / p-suffixed images of 0ab / ba0 are
    // square-free and contain one occurrence each of q and qbar
    for (Letter a = 1; a <= 2; ++a) {
        for (Letter b = 0; b <= 2; ++b) {
            if (b == a) continue;
            Word w0ab(std::vector<Letter>{0, a, b});
            for (const auto& [ch, v] : all_images(w0ab, m)) {
                Word pv = anchor_p() + v;
                if (find_square(pv).has_value() ||
                    occurrences(anchor_q(), pv).size() != 1 ||
                    occurrences(anchor_qbar(), pv).size() != 1) {
                    fail(2, "p-prefixed image fails for " + describe(w0ab, ch));
                }
            }
            Word wba0(std::vector<Letter>{b, a, 0});
            for (const auto& [ch, v] : all_images(wba0, m)) {
                Word vp = v + anchor_p();
                if (find_square(vp).has_value() ||
                    occurrences(anchor_q(), vp).size() != 1 ||
                    occurrences(anchor_qbar(), vp).size() != 1) {
                    fail(3, "p-suffixed image fails for " + describe(wba0, ch));
                }
            }
        }
    }

    return rep;
}

namespace {

void spot_check_rec(SquareScanner& scan, int remaining, const BranchingMorphism& m,
                    ImageSpotCheckReport& rep) {
    if (scan.size() > 0) {
        ++rep.words_checked;
        Word w = scan.word();
        for (const auto& [ch, img] : all_images(w, m)) {
            ++rep.images_checked;
            if (auto sq = find_square(img)) {
                std::ostringstream os;
                os << "square (start " << sq->start << ", period " << sq->period
                   << ") in image of " << describe(w, ch);
                rep.failures.push_back(os.str());
            }
        }
    }
    if (remaining == 0) return;
    for (Letter a = 0; a <= 2; ++a) {
        if (scan.push(a) == 0) spot_check_rec(scan, remaining - 1, m, rep);
        scan.pop();
    }
}

} // namespace

ImageSpotCheckReport spot_check_squarefree_images(int max_len, const BranchingMorphism& m) {
    if (max_len < 1) throw std::invalid_argument("spot check: max_len must be positive");
    ImageSpotCheckReport rep;
    SquareScanner scan;
    spot_check_rec(scan, max_len, m, rep);
    return rep;
}

} // namespace thue
