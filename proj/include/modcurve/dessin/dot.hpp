#pragma once

#include <string>

#include "modcurve/dessin/passport.hpp"

namespace modcurve {

// Renders the bipartite graph of a dessin in Graphviz DOT syntax: one node
// per sigma0-cycle (black, named b1, b2, ...) and per sigma1-cycle (white,
// named w1, w2, ...), and one undirected edge per point connecting the two
// cycles containing it.  Cycles are numbered by their least point; edges are
// emitted in point order, so the output is deterministic.
std::string export_dot(const MonodromyTriple& triple);

}  // namespace modcurve
