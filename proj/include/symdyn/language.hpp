/* language.hpp -- finite languages and block parsings. */

#pragma once

#include <optional>
#include <vector>

#include "symdyn/alphabet.hpp"

namespace symdyn {

/// A finite nonempty set of nonempty words over one alphabet. `window`,
/// when present, is a unique-parsing window size established by
/// verify_unique_parsing (bounded certification; see retract.hpp).
struct LanguageSpec {
    std::vector<Word> words;           // deduplicated, sorted
    std::optional<long> window;

    static LanguageSpec make(std::vector<Word> words);
    const AlphabetRef& alphabet() const { return words.at(0).alphabet; }
    std::size_t max_word_length() const;
    void validate() const;
};

/// One decomposition a = prefix v_1..v_m suffix with v_i in L, the prefix a
/// proper suffix of some L-word and the suffix a proper prefix of some
/// L-word (both may be empty, m may be 0).
struct Parsing {
    std::vector<std::uint32_t> prefix;
    std::vector<std::size_t> blocks;           // indices into LanguageSpec::words
    std::vector<std::uint32_t> suffix;
    // provenance: which L-word donates each margin (meaningless when empty)
    std::size_t prefix_source = 0;
    std::size_t suffix_source = 0;

    std::size_t total_length(const LanguageSpec& lang) const;
    /// re-concatenate; must equal the parsed word (round-trip identity)
    std::vector<std::uint32_t> concatenate(const LanguageSpec& lang) const;
    bool operator==(const Parsing& other) const {
        return prefix == other.prefix && blocks == other.blocks && suffix == other.suffix;
    }
    bool operator<(const Parsing& other) const;
};

}  // namespace symdyn
