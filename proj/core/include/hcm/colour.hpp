#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "hcm/errors.hpp"

namespace hcm {

/// One of the three hyperedge colours, numbered 1..3.
class Colour {
public:
    constexpr explicit Colour(int value) : value_(static_cast<std::uint8_t>(value))
    {
        if (value < 1 || value > 3)
            throw InputError("colour must be 1, 2 or 3, got " + std::to_string(value));
    }

    constexpr int value() const noexcept { return value_; }

    /// Cyclic shift: shifted(+1) of colour 3 is colour 1.
    constexpr Colour shifted(int delta) const
    {
        int v = ((value_ - 1 + delta) % 3 + 3) % 3;
        return Colour(v + 1);
    }

    constexpr Colour next() const { return shifted(+1); }
    constexpr Colour prev() const { return shifted(-1); }

    constexpr auto operator<=>(const Colour&) const = default;

    static constexpr std::array<Colour, 3> all();

private:
    std::uint8_t value_;
};

constexpr std::array<Colour, 3> Colour::all() { return {Colour(1), Colour(2), Colour(3)}; }

/// Small set of colours stored as a 3-bit mask.
class ColourSet {
public:
    constexpr ColourSet() = default;
    constexpr ColourSet(std::initializer_list<Colour> colours)
    {
        for (Colour c : colours)
            insert(c);
    }

    static constexpr ColourSet full() { return ColourSet::from_bits(0b111); }
    static constexpr ColourSet from_bits(unsigned bits)
    {
        ColourSet s;
        s.bits_ = static_cast<std::uint8_t>(bits & 0b111u);
        return s;
    }

    constexpr void insert(Colour c) { bits_ |= bit(c); }
    constexpr void erase(Colour c) { bits_ &= static_cast<std::uint8_t>(~bit(c)); }
    constexpr bool contains(Colour c) const { return (bits_ & bit(c)) != 0; }
    constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned bits() const { return bits_; }
    constexpr ColourSet complement() const { return from_bits(~bits_ & 0b111u); }

    constexpr auto operator<=>(const ColourSet&) const = default;

    template <typename F>
    constexpr void for_each(F&& f) const
    {
        for (Colour c : Colour::all())
            if (contains(c))
                f(c);
    }

    /// Renders as "{1,3}".
    std::string to_string() const;

private:
    static constexpr std::uint8_t bit(Colour c) { return static_cast<std::uint8_t>(1u << (c.value() - 1)); }
    std::uint8_t bits_ = 0;
};

/// A permutation of the colours. `to_canonical(actual)` relabels a colouring so that a
/// procedure written for colours (1,2,3) can run on it; `to_actual` maps results back.
class ColourFrame {
public:
    constexpr ColourFrame() : forward_{1, 2, 3}, backward_{1, 2, 3} {}

    /// Frame in which `first` becomes colour 1 and `second` becomes colour 2.
    static constexpr ColourFrame mapping(Colour first, Colour second)
    {
        if (first == second)
            throw InputError("colour frame needs two distinct colours");
        Colour third(6 - first.value() - second.value());
        ColourFrame f;
        f.forward_[first.value() - 1] = 1;
        f.forward_[second.value() - 1] = 2;
        f.forward_[third.value() - 1] = 3;
        f.backward_[0] = static_cast<std::uint8_t>(first.value());
        f.backward_[1] = static_cast<std::uint8_t>(second.value());
        f.backward_[2] = static_cast<std::uint8_t>(third.value());
        return f;
    }

    /// Cyclic frame sending `first` to colour 1; preserves the +1/-1 orientation.
    static constexpr ColourFrame rotation(Colour first) { return mapping(first, first.next()); }

    constexpr Colour to_canonical(Colour actual) const { return Colour(forward_[actual.value() - 1]); }
    constexpr Colour to_actual(Colour canonical) const { return Colour(backward_[canonical.value() - 1]); }

    constexpr ColourSet to_actual(ColourSet canonical) const
    {
        ColourSet out;
        canonical.for_each([&](Colour c) { out.insert(to_actual(c)); });
        return out;
    }

    /// True when the frame is a rotation, i.e. it commutes with the cyclic shift.
    constexpr bool preserves_orientation() const
    {
        return to_canonical(Colour(1)).next() == to_canonical(Colour(2));
    }

private:
    std::array<std::uint8_t, 3> forward_;
    std::array<std::uint8_t, 3> backward_;
};

} // namespace hcm
