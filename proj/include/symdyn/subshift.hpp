/* subshift.hpp -- subshift representations and their transition graphs.
 *
 * Every representation compiles (lazily, cached) to a pruned vertex-labeled
 * transition graph whose bi-infinite label sequences are exactly the points
 * of the subshift. Word enumeration, cross-sections and products all go
 * through this presentation, with fast paths for finite cycles.
 */

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <vector>

#include "symdyn/language.hpp"

namespace symdyn {

/// Pruned labeled graph: every state has in- and out-degree >= 1.
class TransitionGraph {
  public:
    /// Builds from an edge list, pruning states that are not bi-extendable.
    /// Surviving states keep their relative order.
    static TransitionGraph build(AlphabetRef alphabet, std::vector<std::uint32_t> labels,
                                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

    std::size_t size() const { return label_.size(); }
    bool empty() const { return label_.empty(); }
    std::uint32_t label(std::uint32_t s) const { return label_[s]; }
    std::span<const std::uint32_t> out(std::uint32_t s) const {
        return {out_edges_.data() + out_off_[s], out_off_[s + 1] - out_off_[s]};
    }
    std::span<const std::uint32_t> in(std::uint32_t s) const {
        return {in_edges_.data() + in_off_[s], in_off_[s + 1] - in_off_[s]};
    }
    const AlphabetRef& alphabet() const { return alphabet_; }

    bool strongly_connected() const;
    /// gcd of all cycle lengths (cycles always exist in a pruned graph)
    long period() const;
    /// states reachable from `from` in exactly `steps` steps
    std::vector<char> exact_reach(const std::vector<char>& from, long steps) const;

  private:
    AlphabetRef alphabet_;
    std::vector<std::uint32_t> label_;
    std::vector<std::uint32_t> out_off_, out_edges_, in_off_, in_edges_;
};

struct ConcatData {
    LanguageSpec language;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> adjacency;  // sorted pairs of word indices
    std::set<std::uint32_t> forbid_double;  // words that may not repeat as consecutive blocks
};

class SubshiftRep {
  public:
    enum class Kind { FiniteCycle, SFT, Concat, Product, Graph };

    /// orbit of the bi-infinite repetition of a primitive word
    static SubshiftRep finite_cycle(Word w);
    /// order-m SFT; the allowed set is pruned to its bi-extendable core
    static SubshiftRep sft(AlphabetRef alphabet, int order, std::vector<Word> allowed);
    /// edge shift of the word-chain graph with adjacency-restricted splices
    static SubshiftRep concat(ConcatData data);
    static SubshiftRep product_of(SubshiftRep left, SubshiftRep right);
    static SubshiftRep graph(TransitionGraph g);

    Kind kind() const;
    const AlphabetRef& alphabet() const;
    const TransitionGraph& graph() const;  // compiled on first use, cached

    const Word& cycle_word() const;                     // FiniteCycle
    int sft_order() const;                              // SFT
    const std::vector<Word>& sft_allowed() const;       // SFT (pruned)
    const ConcatData& concat_data() const;              // Concat
    const SubshiftRep& left() const;                    // Product
    const SubshiftRep& right() const;                   // Product

    /// structural equality of representations
    bool operator==(const SubshiftRep& other) const;

    /// re-derives the per-variant invariants, throwing on violation
    void validate() const;

  private:
    struct Impl;
    explicit SubshiftRep(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// exactly the length-n words occurring in points of X, sorted
std::vector<Word> words_of(const SubshiftRep& X, std::size_t n);

/// |words_of(X, n)| for every n = 1..nmax (single incremental pass)
std::vector<std::size_t> word_counts(const SubshiftRep& X, std::size_t nmax);

/// letters of words_of(X, 1), sorted letter indices
std::vector<std::uint32_t> cross_section(const SubshiftRep& X);

/// pair system over the pair alphabet with max-of-components metric
SubshiftRep product(const SubshiftRep& X, const SubshiftRep& Y);

/// does some point of X contain this letter sequence
bool realizes(const SubshiftRep& X, const std::vector<std::uint32_t>& word);

/// least rotation of the primitive root of w (canonical cycle identity)
Word canonical_cycle_word(const Word& w);
bool is_primitive(const std::vector<std::uint32_t>& w);

}  // namespace symdyn
