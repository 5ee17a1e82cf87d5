#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "urep/errors.hpp"

namespace urep {

// A finite sequence of positive integer letters. Immutable after
// construction; all operations below are pure functions returning new values.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters);

    // Space-separated decimal letters, e.g. "1 3 1 2 3".
    static Word parse(std::string_view text);
    // Contiguous digits 1..9, e.g. "14213243". Single-digit alphabets only.
    static Word parse_compact(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    int at(std::size_t pos) const { return letters_[pos]; }  // 0-based
    const std::vector<int>& letters() const { return letters_; }

    // A(w), the set of letters occurring in the word.
    std::set<int> alphabet() const;
    // Largest letter; 0 for the empty word.
    int max_letter() const;

    // Space-separated text form.
    std::string str() const;

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

// A reduced word over {1,2} of length >= 2: the forbidden consecutive
// pattern u. Over {1,2} reducedness means: if any 2 occurs, some 1 occurs.
class Pattern {
public:
    explicit Pattern(std::vector<int> letters);

    // Contiguous digits over {1,2}, e.g. "112".
    static Pattern parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    int at(std::size_t pos) const { return letters_[pos]; }
    const std::vector<int>& letters() const { return letters_; }
    std::string str() const;

    bool contains_two() const;
    // u^r. Always a valid pattern (the letter multiset is preserved).
    Pattern reversed() const;
    // u^c relative to u's own largest letter: swaps 1<->2 when a 2 occurs,
    // leaves 1^k unchanged.
    Pattern complemented() const;
    Word as_word() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::vector<int> letters_;
};

// Ascending 1-based start positions of every u-match in a word.
// Overlapping matches are all reported.
struct MatchReport {
    std::vector<int> positions;
    bool empty() const { return positions.empty(); }
};

// red(w): replace the i-th smallest distinct letter by i, everywhere.
Word reduce(const Word& w);

// w_B: the subsequence of w keeping exactly the letters in `keep`.
Word restrict_to(const Word& w, const std::set<int>& keep);

// p(w): all but the leftmost occurrence of each letter removed.
Word initial_permutation(const Word& w);

// w^r.
Word reversed(const Word& w);

// w^c for declared alphabet size n: letter x becomes n+1-x.
// Throws AlphabetTooSmall if some letter exceeds n.
Word complement(const Word& w, int n);

// u[i,j]: 1 -> i and 2 -> j. Requires i < j.
Word substitute(const Pattern& u, int i, int j);

Word concat(const Word& a, const Word& b);
// x^k.
Word repeated(int letter, int count);
// lo (lo+1) ... hi; empty when lo > hi.
Word ascending_run(int lo, int hi);

MatchReport find_matches(const Word& w, const Pattern& u);
bool has_match(const Word& w, const Pattern& u);

namespace detail {
// First u-match start position, or nullopt. Short-circuit form of
// find_matches used where only existence (plus one witness) matters.
std::optional<int> first_match(const Word& w, const Pattern& u);
}  // namespace detail

}  // namespace urep
