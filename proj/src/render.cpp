#include "bschur/render.hpp"

#include <algorithm>
#include <sstream>

namespace bschur {

namespace {

// Cell occupancy as owner ids; -1 = outside. Edges are drawn between cells
// with different owners, so the two cells of one domino are joined.
struct Canvas {
    std::vector<std::vector<int>> owner;   // [row][col]
    std::vector<std::vector<int>> label;   // label shown per owner cell
    int cell_w = 1;

    int rows() const { return static_cast<int>(owner.size()); }
    int cols(int r) const {
        return r >= 0 && r < rows() ? static_cast<int>(owner[static_cast<size_t>(r)].size()) : 0;
    }
    int at(int r, int c) const {
        if (r < 0 || r >= rows() || c < 0 || c >= cols(r)) return -1;
        return owner[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
};

std::string junction(bool up, bool right, bool down, bool left) {
    const int mask = (up ? 1 : 0) | (right ? 2 : 0) | (down ? 4 : 0) | (left ? 8 : 0);
    static const char* glyph[16] = {" ", "\u2502", "\u2500", "\u2514", "\u2502", "\u2502",
                                    "\u250c", "\u251c", "\u2500", "\u2518", "\u2500",
                                    "\u2534", "\u2510", "\u2524", "\u252c", "\u253c"};
    return glyph[mask];
}

std::string centered(const std::string& text, int width) {
    if (static_cast<int>(text.size()) >= width) return text;
    const int pad = width - static_cast<int>(text.size());
    return std::string(static_cast<size_t>(pad / 2), ' ') + text +
           std::string(static_cast<size_t>(pad - pad / 2), ' ');
}

std::string draw(const Canvas& cv) {
    if (cv.rows() == 0) return "";
    const int w = cv.cell_w;
    int max_cols = 0;
    for (int r = 0; r < cv.rows(); ++r) max_cols = std::max(max_cols, cv.cols(r));

    std::ostringstream out;
    for (int y = 0; y <= cv.rows(); ++y) {
        // edge line above cell row y
        std::string line;
        for (int x = 0; x <= max_cols; ++x) {
            const bool up = cv.at(y - 1, x - 1) != cv.at(y - 1, x) &&
                            (cv.at(y - 1, x - 1) != -1 || cv.at(y - 1, x) != -1);
            const bool down = cv.at(y, x - 1) != cv.at(y, x) &&
                              (cv.at(y, x - 1) != -1 || cv.at(y, x) != -1);
            const bool left = x > 0 && cv.at(y - 1, x - 1) != cv.at(y, x - 1) &&
                              (cv.at(y - 1, x - 1) != -1 || cv.at(y, x - 1) != -1);
            const bool right = cv.at(y - 1, x) != cv.at(y, x) &&
                               (cv.at(y - 1, x) != -1 || cv.at(y, x) != -1);
            line += junction(up, right, down, left);
            if (x < max_cols) {
                const bool seg = cv.at(y - 1, x) != cv.at(y, x) &&
                                 (cv.at(y - 1, x) != -1 || cv.at(y, x) != -1);
                std::string fill = seg ? "\u2500" : " ";
                std::string horiz;
                for (int k = 0; k < w; ++k) horiz += fill;
                // a vertical domino shows its label on the joined edge row
                if (!seg && cv.at(y - 1, x) != -1 && cv.at(y - 1, x) == cv.at(y, x))
                    horiz = centered(std::to_string(
                                         cv.label[static_cast<size_t>(y - 1)][static_cast<size_t>(x)]),
                                     w);
                line += horiz;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";

        if (y == cv.rows()) break;
        // cell row y
        std::string body;
        for (int x = 0; x <= max_cols; ++x) {
            const bool bar = cv.at(y, x - 1) != cv.at(y, x) &&
                             (cv.at(y, x - 1) != -1 || cv.at(y, x) != -1);
            body += bar ? "\u2502" : " ";
            if (x < max_cols) {
                if (cv.at(y, x) == -1) {
                    body += std::string(static_cast<size_t>(w), ' ');
                } else if (cv.at(y, x) == cv.at(y, x + 1)) {
                    // left half of a horizontal domino: label centered across
                    // both cells, emitted when we reach the left cell
                    body += centered(std::to_string(
                                         cv.label[static_cast<size_t>(y)][static_cast<size_t>(x)]),
                                     2 * w + 1);
                    ++x;
                    continue;
                } else if (x > 0 && cv.at(y, x) == cv.at(y, x - 1)) {
                    body += std::string(static_cast<size_t>(w), ' ');
                } else if (cv.at(y - 1, x) == cv.at(y, x) || cv.at(y + 1, x) == cv.at(y, x)) {
                    // vertical domino: label lives on the joined edge row
                    body += std::string(static_cast<size_t>(w), ' ');
                } else {
                    body += centered(std::to_string(
                                         cv.label[static_cast<size_t>(y)][static_cast<size_t>(x)]),
                                     w);
                }
            }
        }
        while (!body.empty() && body.back() == ' ') body.pop_back();
        out << body << "\n";
    }
    return out.str();
}

int label_width(const Canvas& cv) {
    int w = 1;
    for (size_t r = 0; r < cv.label.size(); ++r)
        for (size_t c = 0; c < cv.label[r].size(); ++c)
            if (cv.owner[r][c] != -1)
                w = std::max(w, static_cast<int>(std::to_string(cv.label[r][c]).size()));
    return w;
}

Canvas young_canvas(const YoungTableau& t) {
    Canvas cv;
    int id = 0;
    for (const auto& row : t.rows) {
        cv.owner.push_back(std::vector<int>(row.size()));
        cv.label.push_back(row);
        for (size_t c = 0; c < row.size(); ++c) cv.owner.back()[c] = id++;
    }
    cv.cell_w = label_width(cv);
    return cv;
}

Canvas domino_canvas(const DominoTableau& t) {
    Canvas cv;
    const auto& sh = t.shape;
    for (int r = 0; r < sh.length(); ++r) {
        cv.owner.push_back(std::vector<int>(static_cast<size_t>(sh.part(r)), -1));
        cv.label.push_back(std::vector<int>(static_cast<size_t>(sh.part(r)), 0));
    }
    for (size_t i = 0; i < t.dominoes.size(); ++i)
        for (auto [r, c] : t.dominoes[i].cells()) {
            cv.owner[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
                static_cast<int>(i);
            cv.label[static_cast<size_t>(r - 1)][static_cast<size_t>(c - 1)] =
                t.dominoes[i].label;
        }
    cv.cell_w = label_width(cv);
    return cv;
}

std::string join_horizontal(const std::string& a, const std::string& b) {
    std::vector<std::string> la, lb;
    std::istringstream sa(a), sb(b);
    std::string line;
    size_t wa = 0;
    while (std::getline(sa, line)) {
        la.push_back(line);
        size_t len = 0;
        for (size_t i = 0; i < line.size(); ++i)
            if ((line[i] & 0xC0) != 0x80) ++len;  // count code points
        wa = std::max(wa, len);
    }
    while (std::getline(sb, line)) lb.push_back(line);
    std::ostringstream out;
    const size_t rows = std::max(la.size(), lb.size());
    for (size_t i = 0; i < rows; ++i) {
        std::string left = i < la.size() ? la[i] : "";
        size_t len = 0;
        for (size_t j = 0; j < left.size(); ++j)
            if ((left[j] & 0xC0) != 0x80) ++len;
        out << left << std::string(wa - len + 3, ' ') << (i < lb.size() ? lb[i] : "");
        out << "\n";
    }
    return out.str();
}

} // namespace

std::string render_ascii(const YoungTableau& t) {
    if (t.empty()) return "";
    return draw(young_canvas(t));
}

std::string render_ascii(const DominoTableau& t) {
    if (t.dominoes.empty()) return "";
    return draw(domino_canvas(t));
}

std::string render_ascii(const BiTableau& b) {
    if (b.t1.empty() && b.t2.empty()) return "";
    if (b.t1.empty()) return "( - , \n" + render_ascii(b.t2) + ")\n";
    if (b.t2.empty()) return render_ascii(b.t1) + ", - )\n";
    return join_horizontal(render_ascii(b.t1), render_ascii(b.t2));
}

static std::string latex_tabular(const std::vector<std::vector<std::string>>& rows, int width) {
    std::ostringstream os;
    os << "\\begin{tabular}{|";
    for (int i = 0; i < width; ++i) os << "c|";
    os << "}\n\\hline\n";
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << " & ";
            os << row[c];
        }
        for (size_t c = row.size(); c < static_cast<size_t>(width); ++c) os << " & ";
        os << " \\\\\n\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string render_latex(const YoungTableau& t) {
    if (t.empty()) return "\\emptyset\n";
    std::vector<std::vector<std::string>> rows;
    int width = 0;
    for (const auto& row : t.rows) {
        rows.push_back({});
        for (int v : row) rows.back().push_back(std::to_string(v));
        width = std::max(width, static_cast<int>(row.size()));
    }
    return latex_tabular(rows, width);
}

std::string render_latex(const DominoTableau& t) {
    if (t.dominoes.empty()) return "\\emptyset\n";
    Canvas cv = domino_canvas(t);
    std::vector<std::vector<std::string>> rows;
    for (size_t r = 0; r < cv.label.size(); ++r) {
        rows.push_back({});
        for (size_t c = 0; c < cv.label[r].size(); ++c)
            rows.back().push_back(std::to_string(cv.label[r][c]));
    }
    return latex_tabular(rows, t.shape.part(0));
}

std::string render_latex(const BiTableau& b) {
    return "\\left(" + render_latex(b.t1) + ",\n" + render_latex(b.t2) + "\\right)\n";
}

} // namespace bschur
