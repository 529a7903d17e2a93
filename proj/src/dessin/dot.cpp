#include "modcurve/dessin/dot.hpp"

#include <sstream>
#include <vector>

namespace modcurve {

std::string export_dot(const MonodromyTriple& triple) {
    triple.validate();
    long m = triple.degree();

    // Number the cycles of a permutation by least point and map each point
    // to the 1-based index of its cycle.
    auto cycle_index = [m](const Perm& s) {
        std::vector<long> idx(static_cast<size_t>(m), 0);
        long k = 0;
        for (const auto& cyc : s.cycles(true)) {
            ++k;
            for (long x : cyc) idx[static_cast<size_t>(x)] = k;
        }
        return idx;
    };
    std::vector<long> black = cycle_index(triple.sigma0);
    std::vector<long> white = cycle_index(triple.sigma1);
    long nb = static_cast<long>(triple.sigma0.cycles(true).size());
    long nw = static_cast<long>(triple.sigma1.cycles(true).size());

    std::ostringstream out;
    out << "graph dessin {\n";
    for (long i = 1; i <= nb; ++i)
        out << "  b" << i << " [shape=circle, style=filled, fillcolor=black, label=\"\"];\n";
    for (long j = 1; j <= nw; ++j)
        out << "  w" << j << " [shape=circle, style=filled, fillcolor=white, label=\"\"];\n";
    for (long x = 0; x < m; ++x)
        out << "  b" << black[static_cast<size_t>(x)] << " -- w" << white[static_cast<size_t>(x)]
            << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace modcurve
