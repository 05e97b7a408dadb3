#pragma once

#include <string>

#include "p2c/graph.hpp"
#include "p2c/hc_engine.hpp"
#include "p2c/iso_engine.hpp"

namespace p2c {

// One Graphviz document per loop entry: the two gadget graphs side by side
// as clusters. Old vertices are drawn as filled circles, clique members as
// hollow ones.
std::string iso_snapshot_dot(const GadgetGraph& gg, const GadgetGraph& gh,
                             int loop);

// One Graphviz document per step entry: the contracted multigraph with edge
// ids on every edge and the context sides written into tracked vertices'
// labels.
std::string hc_snapshot_dot(const MultiGraph& g, const LeftRightContext& ctx,
                            int step);

}  // namespace p2c
