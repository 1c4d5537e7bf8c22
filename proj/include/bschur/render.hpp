#pragma once

#include <string>

#include "bschur/tableaux.hpp"

namespace bschur {

/// Box-drawing rendering; horizontal dominoes are one wide box, vertical
/// dominoes span two text rows with the internal edge removed.
std::string render_ascii(const YoungTableau& t);
std::string render_ascii(const DominoTableau& t);
std::string render_ascii(const BiTableau& b);

/// Plain tabular environments, no TikZ.
std::string render_latex(const YoungTableau& t);
std::string render_latex(const DominoTableau& t);
std::string render_latex(const BiTableau& b);

} // namespace bschur
