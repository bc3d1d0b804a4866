#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aperiodic/letters.hpp"

namespace aperiodic {

// Rooted linear multigraph with edge labels a, b, c, d, stored in the gap
// encoding: gap i (between vertices i and i+1, vertices 1..V) carries one
// letter describing the bundle there:
//   a -> a single a-edge
//   x -> parallel b,c edges plus a d-loop at each endpoint
//   y -> parallel b,d edges plus a c-loop at each endpoint
//   z -> parallel c,d edges plus a b-loop at each endpoint
// and b,c,d boundary loops sit at vertex 1 and vertex V. With gap letters
// alternating a / non-a and both end gaps equal to a, every vertex meets each
// label exactly once (loops counted once), i.e. the graph is 4-regular.
struct LabeledLinearGraph {
    Word gaps;              // V-1 letters
    std::int64_t root = 1;  // in 1..V

    std::int64_t vertex_count() const { return static_cast<std::int64_t>(gaps.size()) + 1; }
    bool operator==(const LabeledLinearGraph&) const = default;
};

// Throws "not in Word'" when alternation/boundary conditions fail, or a
// root-range error.
void validate(const LabeledLinearGraph& g);

// Graph of a window: V = |w|+1 vertices standing on the integer positions
// support(w) plus {max+1}, gap letters = letters of w, root = the vertex on
// position 1. The window must contain position 1 and be in Word' (starts and
// ends with a, alternation).
LabeledLinearGraph graph_of_word(const Window& w);

// Graph substitution: each a-gap expands to gaps a,x,a (two new vertices);
// non-a gaps advance x -> y -> z -> x (the edge-label permutation b->d, c->b,
// d->c read through the pair encoding above); the root moves to its image
// vertex. Intertwines with the letter substitution through graph_of_word.
LabeledLinearGraph theta(const LabeledLinearGraph& g);

// Level-n graph: 2^n vertices, gap word p(n-1), rooted at the rightmost
// vertex. theta(gamma_n(n)) equals gamma_n(n+1).
LabeledLinearGraph gamma_n(int n);

struct CanonicalForm {
    Word gaps;
    std::int64_t root = 1;
    bool reflected = false;  // true when the mirrored encoding won strictly

    bool operator==(const CanonicalForm& o) const { return gaps == o.gaps && root == o.root; }
    bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
};

// Lexicographically smaller of (gaps, root) and (reversed gaps, V+1-root);
// two graphs are isomorphic as rooted labeled graphs iff these agree.
CanonicalForm canonical_form(const LabeledLinearGraph& g);

struct Edge {
    std::int64_t u, v;  // 1-based; u == v for loops
    char label;         // 'a'..'d'
};

// Explicit deterministic edge list (boundary loops first, then per-gap
// bundles left to right; labels in a,b,c,d order within each bundle).
std::vector<Edge> edge_list(const LabeledLinearGraph& g);

std::string to_dot(const LabeledLinearGraph& g);
std::string to_json(const LabeledLinearGraph& g);

// ----- group actions on windows -----

// Words over the generators a,b,c,d.
using GroupWord = std::string;

// One generator acting on a window. The generator shifts the origin when its
// trigger set contains the letter at position 1 (shift one step that way) or
// position 0 (the inverse shift): 'a' triggers on {a}, 'b' on {x,y}, 'c' on
// {x,z}, 'd' on {y,z}; b,c,d act as the identity otherwise. Throws
// "insufficient context" when the window lacks the positions required.
Window act(char generator, Window w);

// Right-to-left composition of act over the letters of g.
Window act_group_word(const GroupWord& g, Window w);

// The two relator bases of the finite presentation.
inline const GroupWord relator_ad_4 = "adadadad";
inline const GroupWord relator_adacac_4 = "adacacadacacadacacadacac";

// Substitution a -> aca, b -> d, c -> b, d -> c on group words.
GroupWord kappa(const GroupWord& g);

// kappa applied k times to a base relator.
GroupWord lysenok_relator(int k, const GroupWord& base);

}  // namespace aperiodic
