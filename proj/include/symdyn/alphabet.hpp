/* alphabet.hpp -- finite metric alphabets and finite words over them.
 *
 * Letters are named rational points of [0,1]^dim under the sup-coordinate
 * metric. Alphabets are immutable after construction; "refining" returns a
 * new alphabet that extends the old one, which is how the library models
 * the paper-style infinitesimal perturbations at a chosen resolution eta.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symdyn/rational.hpp"

namespace symdyn {

struct Letter {
    std::string name;
    std::vector<Rat> point;  // coordinates in [0,1]
};

class MetricAlphabet;
using AlphabetRef = std::shared_ptr<const MetricAlphabet>;

class MetricAlphabet {
  public:
    MetricAlphabet(std::vector<Letter> letters, int dim);

    int dim() const { return dim_; }
    std::size_t size() const { return letters_.size(); }
    const Letter& letter(std::size_t i) const { return letters_.at(i); }
    const std::vector<Letter>& letters() const { return letters_; }

    /// index of the named letter; InvalidInput if absent
    std::uint32_t index_of(const std::string& name) const;
    bool has(const std::string& name) const;

    /// max pairwise letter distance (0 for singleton alphabets)
    Rat diameter() const;

    bool operator==(const MetricAlphabet& other) const;

    static AlphabetRef make(std::vector<Letter> letters, int dim) {
        return std::make_shared<MetricAlphabet>(std::move(letters), dim);
    }

  private:
    std::vector<Letter> letters_;
    int dim_;
};

/// sup-coordinate distance between letters i and j of one alphabet
Rat letter_dist(const MetricAlphabet& alpha, std::uint32_t i, std::uint32_t j);

/// distance across two alphabets of equal dimension
Rat letter_dist(const MetricAlphabet& a, std::uint32_t i,
                const MetricAlphabet& b, std::uint32_t j);

struct Word {
    AlphabetRef alphabet;
    std::vector<std::uint32_t> letters;

    std::size_t length() const { return letters.size(); }
    void validate() const;  // indices in range, length >= 1
    std::string str() const;

    bool operator==(const Word& other) const;
    bool operator<(const Word& other) const;  // by letter sequence
};

/// Build a word from space-separated or single-character letter names
/// ("p q p" or "pqp" when all names are single characters).
Word word_from_names(const AlphabetRef& alpha, const std::string& names);
Word word_from_indices(const AlphabetRef& alpha, std::vector<std::uint32_t> idx);

/// d_inf(a, b) = max letterwise distance; requires equal lengths.
/// Alphabets may differ as long as dimensions agree.
Rat word_dist_sup(const Word& a, const Word& b);

/// All 1-based alignments i with d_inf(a, b[i..i+len(a))) < eps (strict).
std::vector<std::size_t> eps_appearances(const Word& a, const Word& b, const Rat& eps);

struct Refinement {
    AlphabetRef alphabet;                     // extends the input alphabet
    std::vector<std::uint32_t> new_letters;   // indices of the fresh letters
};

/// Extend `alpha` with `count` fresh pairwise-distinct letters within
/// distance <= eta of the base letter. Original letters are unchanged
/// (the new alphabet's prefix is the old one).
Refinement refine_alphabet(const AlphabetRef& alpha, std::uint32_t base,
                           std::size_t count, const Rat& eta);

/// Precomputed strict comparisons dist(a_i, b_j) < eps for hot scan loops.
class EpsMatrix {
  public:
    EpsMatrix(const MetricAlphabet& a, const MetricAlphabet& b, const Rat& eps);
    bool lt(std::uint32_t i, std::uint32_t j) const { return lt_[i * nb_ + j] != 0; }

  private:
    std::size_t nb_;
    std::vector<char> lt_;
};

}  // namespace symdyn
