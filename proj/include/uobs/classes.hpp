#pragma once

#include "uobs/graph.hpp"

namespace uobs {

// Membership tests for the named graph classes. Parallel edges count as
// cycles wherever acyclicity is involved.
bool is_forest(const MultiGraph& g);
bool is_linear_forest(const MultiGraph& g);
bool is_planar(const MultiGraph& g);
// Outerplanar iff adding a vertex adjacent to everything keeps it planar.
bool is_outerplanar(const MultiGraph& g);
// Some vertex (or none) can be deleted to leave a forest.
bool is_apex_forest(const MultiGraph& g);
bool is_subcubic_forest(const MultiGraph& g);
// Immersion-closure of the stars: simple, and some vertex x such that every
// other vertex has degree at most one (a star plus a matching plus isolated
// vertices).
bool is_star_or_edgeless(const MultiGraph& g);
// Immersion-closure of the thetas: at most two vertices.
bool is_theta_like(const MultiGraph& g);

}  // namespace uobs
