#include "symdyn/alphabet.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace symdyn {

MetricAlphabet::MetricAlphabet(std::vector<Letter> letters, int dim)
    : letters_(std::move(letters)), dim_(dim) {
    if (dim_ <= 0) fail(ErrorKind::InvalidInput, "alphabet dimension must be positive");
    if (letters_.empty()) fail(ErrorKind::InvalidInput, "alphabet must be nonempty");
    std::set<std::string> names;
    for (const auto& l : letters_) {
        if (l.name.empty()) fail(ErrorKind::InvalidInput, "letter name must be nonempty");
        if (!names.insert(l.name).second)
            fail(ErrorKind::InvalidInput, "duplicate letter name: " + l.name);
        if ((int)l.point.size() != dim_)
            fail(ErrorKind::InvalidInput, "letter " + l.name + " has wrong dimension");
        for (const Rat& c : l.point)
            if (c < 0 || c > 1)
                fail(ErrorKind::InvalidInput, "coordinate of " + l.name + " outside [0,1]");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            if (letters_[i].point == letters_[j].point)
                fail(ErrorKind::InvalidInput, "letters " + letters_[i].name + " and " +
                                                  letters_[j].name + " coincide");
}

std::uint32_t MetricAlphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].name == name) return (std::uint32_t)i;
    fail(ErrorKind::InvalidInput, "no letter named " + name);
}

bool MetricAlphabet::has(const std::string& name) const {
    for (const auto& l : letters_)
        if (l.name == name) return true;
    return false;
}

Rat MetricAlphabet::diameter() const {
    Rat d = 0;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        for (std::size_t j = i + 1; j < letters_.size(); ++j)
            d = std::max(d, letter_dist(*this, (std::uint32_t)i, (std::uint32_t)j));
    return d;
}

bool MetricAlphabet::operator==(const MetricAlphabet& other) const {
    if (dim_ != other.dim_ || letters_.size() != other.letters_.size()) return false;
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (letters_[i].name != other.letters_[i].name ||
            letters_[i].point != other.letters_[i].point)
            return false;
    return true;
}

Rat letter_dist(const MetricAlphabet& alpha, std::uint32_t i, std::uint32_t j) {
    return letter_dist(alpha, i, alpha, j);
}

Rat letter_dist(const MetricAlphabet& a, std::uint32_t i,
                const MetricAlphabet& b, std::uint32_t j) {
    if (a.dim() != b.dim())
        fail(ErrorKind::InvalidInput, "letter_dist across different dimensions");
    const auto& p = a.letter(i).point;
    const auto& q = b.letter(j).point;
    Rat d = 0;
    for (int c = 0; c < a.dim(); ++c) {
        Rat diff = p[c] - q[c];
        if (diff < 0) diff = -diff;
        if (diff > d) d = diff;
    }
    return d;
}

void Word::validate() const {
    if (!alphabet) fail(ErrorKind::InvalidInput, "word without alphabet");
    if (letters.empty()) fail(ErrorKind::InvalidInput, "word must be nonempty");
    for (auto i : letters)
        if (i >= alphabet->size()) fail(ErrorKind::InvalidInput, "letter index out of range");
}

std::string Word::str() const {
    std::ostringstream os;
    bool simple = true;
    for (auto i : letters)
        if (alphabet->letter(i).name.size() != 1) simple = false;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (k && !simple) os << ' ';
        os << alphabet->letter(letters[k]).name;
    }
    return os.str();
}

bool Word::operator==(const Word& other) const {
    return letters == other.letters && *alphabet == *other.alphabet;
}

bool Word::operator<(const Word& other) const { return letters < other.letters; }

Word word_from_names(const AlphabetRef& alpha, const std::string& names) {
    std::vector<std::uint32_t> idx;
    if (names.find(' ') != std::string::npos) {
        std::istringstream is(names);
        std::string tok;
        while (is >> tok) idx.push_back(alpha->index_of(tok));
    } else {
        for (char c : names) idx.push_back(alpha->index_of(std::string(1, c)));
    }
    return word_from_indices(alpha, std::move(idx));
}

Word word_from_indices(const AlphabetRef& alpha, std::vector<std::uint32_t> idx) {
    Word w{alpha, std::move(idx)};
    w.validate();
    return w;
}

Rat word_dist_sup(const Word& a, const Word& b) {
    if (a.length() != b.length())
        fail(ErrorKind::InvalidInput, "word_dist_sup: length mismatch");
    if (a.alphabet->dim() != b.alphabet->dim())
        fail(ErrorKind::InvalidInput, "word_dist_sup: dimension mismatch");
    Rat d = 0;
    for (std::size_t i = 0; i < a.length(); ++i)
        d = std::max(d, letter_dist(*a.alphabet, a.letters[i], *b.alphabet, b.letters[i]));
    return d;
}

std::vector<std::size_t> eps_appearances(const Word& a, const Word& b, const Rat& eps) {
    if (eps <= 0) fail(ErrorKind::InvalidInput, "eps_appearances: eps must be positive");
    if (a.length() > b.length())
        fail(ErrorKind::InvalidInput, "eps_appearances: pattern longer than text");
    EpsMatrix close(*a.alphabet, *b.alphabet, eps);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + a.length() <= b.length(); ++i) {
        bool ok = true;
        for (std::size_t j = 0; j < a.length() && ok; ++j)
            ok = close.lt(a.letters[j], b.letters[i + j]);
        if (ok) out.push_back(i + 1);  // 1-based alignments
    }
    return out;
}

Refinement refine_alphabet(const AlphabetRef& alpha, std::uint32_t base,
                           std::size_t count, const Rat& eta) {
    if (eta <= 0) fail(ErrorKind::InvalidInput, "refine_alphabet: eta must be positive");
    if (count == 0) fail(ErrorKind::InvalidInput, "refine_alphabet: count must be positive");
    if (base >= alpha->size()) fail(ErrorKind::InvalidInput, "refine_alphabet: bad base index");

    std::vector<Letter> letters = alpha->letters();
    const Rat& x0 = letters[base].point[0];
    // Work along coordinate 0 on whichever side has more room; offsets are
    // eta*j/M for increasing j, skipping exact collisions with existing points.
    Rat room_up = 1 - x0, room_down = x0;
    bool up = room_up >= room_down;
    Rat span = std::min(eta, up ? room_up : room_down);
    if (span == 0) {
        up = !up;
        span = std::min(eta, up ? room_up : room_down);
    }
    long M = (long)(count + alpha->size() + 1);
    std::vector<std::uint32_t> fresh;
    long suffix = 1;
    for (long j = 1; fresh.size() < count; ++j) {
        if (j > 4 * M)
            fail(ErrorKind::BudgetExhausted, "refine_alphabet: could not place letters");
        std::vector<Rat> pt = letters[base].point;
        Rat delta = span * Rat(j, M);
        if (delta > span) break;
        pt[0] = up ? x0 + delta : x0 - delta;
        bool clash = false;
        for (const auto& l : letters)
            if (l.point == pt) clash = true;
        if (clash) continue;
        std::string name;
        do {
            name = letters[base].name + "'" + std::to_string(suffix++);
        } while (std::any_of(letters.begin(), letters.end(),
                             [&](const Letter& l) { return l.name == name; }));
        fresh.push_back((std::uint32_t)letters.size());
        letters.push_back(Letter{name, std::move(pt)});
    }
    if (fresh.size() < count)
        fail(ErrorKind::BudgetExhausted, "refine_alphabet: could not place letters");
    return Refinement{MetricAlphabet::make(std::move(letters), alpha->dim()), std::move(fresh)};
}

EpsMatrix::EpsMatrix(const MetricAlphabet& a, const MetricAlphabet& b, const Rat& eps)
    : nb_(b.size()), lt_(a.size() * b.size(), 0) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            lt_[i * nb_ + j] =
                letter_dist(a, (std::uint32_t)i, b, (std::uint32_t)j) < eps ? 1 : 0;
}

}  // namespace symdyn
