#pragma once

#include <cstdint>
#include <stdexcept>

namespace ct {

// Vertex colours. Red plays the role of the "in" side throughout.
enum class Colour : uint8_t { Red = 0, Blue = 1 };

// Edge colours for subdivided midsections; Black marks quad diagonals.
enum class EdgeColour : uint8_t { Red = 0, Blue = 1, Black = 2 };

inline Colour other(Colour c) { return c == Colour::Red ? Colour::Blue : Colour::Red; }

inline char to_char(Colour c) { return c == Colour::Red ? 'R' : 'B'; }

inline char to_char(EdgeColour c) {
    switch (c) {
        case EdgeColour::Red: return 'R';
        case EdgeColour::Blue: return 'B';
        default: return 'K';
    }
}

inline EdgeColour edge_colour(Colour c) {
    return c == Colour::Red ? EdgeColour::Red : EdgeColour::Blue;
}

}  // namespace ct
