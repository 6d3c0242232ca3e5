// wrapser: sparse chains over Z/p in a fixed basis order
#pragma once

#include <wrapser/common.hpp>
#include <wrapser/fp.hpp>

#include <optional>
#include <vector>

namespace wrapser {

struct ChainEntry {
    index_t index;
    coeff_t value;
    bool operator==(const ChainEntry& other) const {
        return index == other.index && value == other.value;
    }
};

// Entries are sorted by basis index and never zero. The basis a chain lives in
// (filtration positions, or a derived basis) is supplied by context.
class Chain {
  public:
    Chain() = default;
    explicit Chain(int degree) : degree_(degree) {}
    Chain(int degree, std::vector<ChainEntry> entries);  // sorts, drops zeros; duplicate indices are an error

    int degree() const { return degree_; }
    const std::vector<ChainEntry>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    coeff_t coefficient(index_t i) const;
    std::vector<index_t> support() const;

    // *this += scale * other  (merging sorted entry lists)
    void add_scaled(const Chain& other, coeff_t scale, const PrimeField& F);
    void scale(coeff_t s, const PrimeField& F);
    void set(index_t i, coeff_t v);  // insert/overwrite one coefficient (v may be 0)

    bool operator==(const Chain& other) const {
        return degree_ == other.degree_ && entries_ == other.entries_;
    }

  private:
    int degree_ = -1;
    std::vector<ChainEntry> entries_;
};

// maximal non-zero index, absent for the zero chain
std::optional<index_t> chain_pivot(const Chain& c);

enum class LexOrdering { less, equal_support, greater };

// Compare supports: A before B when the maximum of the symmetric difference
// lies in B. Total on supports; chains of different degree do not compare.
LexOrdering lex_compare_chains(const Chain& a, const Chain& b);

}  // namespace wrapser
