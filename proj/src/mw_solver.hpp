#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "oracle.hpp"
#include "params.hpp"

namespace vint {

enum class WmaxSource { SingleVertex, Module, PrimeUnion };

struct WmaxCandidate {
  Weight value = 0;
  WmaxSource source = WmaxSource::SingleVertex;
};

// Candidate weights for the heaviest surviving component: single vertices,
// strong modules, and unions of child modules of prime nodes. For an
// irredundant optimal separator the heaviest component is one of these.
// Series/Parallel nodes contribute only their full union: a partial union on
// a series node would leave a redundant separator vertex, and on a parallel
// node it is disconnected. Sorted by value; duplicates across sources stay.
std::vector<WmaxCandidate> candidate_wmax(const Graph& g, const MDTree& tree);

// Component-order solver invoked per candidate: the cheapest separator (by
// weight) leaving only components of weight <= ell, or nullopt if the backend
// cannot find one.
using CocBackend = std::function<std::optional<CocResult>(const Graph&, Weight ell)>;

// Weighted vertex integrity as min over candidate ell of ell + backend cost.
// Any superset of the candidate list stays exact, since each term is realized
// by an actual separator. The default backend enumerates exhaustively, so the
// default only suits small graphs; the candidate sweep itself scales with the
// modular width.
Solution wvi_mw(const Graph& g, const CocBackend& backend = {});

}  // namespace vint
