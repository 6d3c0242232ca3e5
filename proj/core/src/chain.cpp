#include <wrapser/chain.hpp>

#include <algorithm>

namespace wrapser {

Chain::Chain(int degree, std::vector<ChainEntry> entries)
    : degree_(degree), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const ChainEntry& a, const ChainEntry& b) { return a.index < b.index; });
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (entries_[i].index == entries_[i - 1].index)
            throw std::invalid_argument("Chain: duplicate basis index in entry list");
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [](const ChainEntry& e) { return e.value == 0; }),
                   entries_.end());
}

coeff_t Chain::coefficient(index_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const ChainEntry& e, index_t idx) { return e.index < idx; });
    return (it != entries_.end() && it->index == i) ? it->value : 0;
}

std::vector<index_t> Chain::support() const {
    std::vector<index_t> s;
    s.reserve(entries_.size());
    for (const auto& e : entries_) s.push_back(e.index);
    return s;
}

void Chain::add_scaled(const Chain& other, coeff_t scale, const PrimeField& F) {
    if (scale == 0 || other.entries_.empty()) return;
    std::vector<ChainEntry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    std::size_t a = 0, b = 0;
    while (a < entries_.size() || b < other.entries_.size()) {
        if (b == other.entries_.size() ||
            (a < entries_.size() && entries_[a].index < other.entries_[b].index)) {
            merged.push_back(entries_[a++]);
        } else if (a == entries_.size() || other.entries_[b].index < entries_[a].index) {
            coeff_t v = F.mul(other.entries_[b].value, scale);
            if (v != 0) merged.push_back({other.entries_[b].index, v});
            ++b;
        } else {
            coeff_t v = F.add(entries_[a].value, F.mul(other.entries_[b].value, scale));
            if (v != 0) merged.push_back({entries_[a].index, v});
            ++a, ++b;
        }
    }
    entries_ = std::move(merged);
}

void Chain::scale(coeff_t s, const PrimeField& F) {
    if (s == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.value = F.mul(e.value, s);
}

void Chain::set(index_t i, coeff_t v) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const ChainEntry& e, index_t idx) { return e.index < idx; });
    if (it != entries_.end() && it->index == i) {
        if (v == 0)
            entries_.erase(it);
        else
            it->value = v;
    } else if (v != 0) {
        entries_.insert(it, {i, v});
    }
}

std::optional<index_t> chain_pivot(const Chain& c) {
    if (c.is_zero()) return std::nullopt;
    return c.entries().back().index;
}

LexOrdering lex_compare_chains(const Chain& a, const Chain& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("lex_compare_chains: degrees differ");
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    std::size_t i = ea.size(), j = eb.size();
    // walk both supports from the top; the first disagreement is the maximum
    // of the symmetric difference
    while (i > 0 && j > 0) {
        index_t x = ea[i - 1].index, y = eb[j - 1].index;
        if (x == y) {
            --i, --j;
        } else if (x < y) {
            return LexOrdering::less;  // max symm-diff element y lies in b
        } else {
            return LexOrdering::greater;
        }
    }
    if (i == 0 && j == 0) return LexOrdering::equal_support;
    return i == 0 ? LexOrdering::less : LexOrdering::greater;
}

}  // namespace wrapser
