#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace epgdom {

/**
 * Dynamically sized bit set over the vertex range [0, capacity) of one graph.
 * Used for adjacency rows, dominating sets and the solver's working sets.
 */
class VertexSet
{
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) :
        _capacity(capacity),
        _words((capacity + 63) / 64, 0)
    {
    }

    static auto full(std::size_t capacity) -> VertexSet
    {
        VertexSet s(capacity);
        for (auto & w : s._words)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    auto capacity() const noexcept -> std::size_t { return _capacity; }

    auto set(std::size_t v) -> void { _words[v / 64] |= bit(v); }
    auto reset(std::size_t v) -> void { _words[v / 64] &= ~bit(v); }
    auto test(std::size_t v) const -> bool { return (_words[v / 64] & bit(v)) != 0; }

    auto count() const noexcept -> std::size_t
    {
        std::size_t c = 0;
        for (auto w : _words)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    auto any() const noexcept -> bool
    {
        for (auto w : _words)
            if (w)
                return true;
        return false;
    }

    auto none() const noexcept -> bool { return ! any(); }

    auto intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto intersection_count(const VertexSet & other) const -> std::size_t
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < _words.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(_words[i] & other._words[i]));
        return c;
    }

    auto is_subset_of(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    /// Set difference.
    auto operator-=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

    friend auto operator==(const VertexSet & a, const VertexSet & b) -> bool = default;

    /// Smallest member >= from, or npos.
    auto find_next(std::size_t from) const -> std::size_t
    {
        if (from >= _capacity)
            return npos;
        std::size_t wi = from / 64;
        std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (w)
                return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == _words.size())
                return npos;
            w = _words[wi];
        }
    }

    auto find_first() const -> std::size_t { return find_next(0); }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t wi = 0; wi < _words.size(); ++wi) {
            auto w = _words[wi];
            while (w) {
                f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    auto members() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t v) { out.push_back(v); });
        return out;
    }

private:
    static auto bit(std::size_t v) -> std::uint64_t { return std::uint64_t{1} << (v % 64); }

    auto trim() -> void
    {
        if (_capacity % 64 && ! _words.empty())
            _words.back() &= (std::uint64_t{1} << (_capacity % 64)) - 1;
    }

    std::size_t _capacity = 0;
    std::vector<std::uint64_t> _words;
};

} // namespace epgdom
