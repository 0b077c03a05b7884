#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "xyz/graph.hpp"

namespace xyz {

struct code_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degree_mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Letter : char { Zero = '0', One = '1', Plus = '+', Minus = '-' };

// Bar pairing 0<->1, +<->-: G^{xyz} and G^{bar(x)bar(y)bar(z)} are complements.
Letter bar(Letter l);

struct XyzCode {
    Letter x = Letter::Zero;
    Letter y = Letter::Zero;
    Letter z = Letter::Zero;

    static XyzCode parse(const std::string& s);  // throws code_parse_error
    std::string str() const;
    XyzCode bar_complement() const { return {bar(x), bar(y), bar(z)}; }
    bool operator==(const XyzCode&) const = default;
};

// All 64 codes in table order: z outermost, then y, then x, each over 0,1,+,-.
const std::vector<XyzCode>& all_codes();

// B(G) (complemented=false): (v,e) adjacent iff v incident to e; B^c(G)
// otherwise. Vertex set V then E, 2m resp. m(n-2) edges.
Graph bipartite_incidence_graph(const RegularGraph& g, bool complemented);

// G^{xyz}: vertices are BaseVertex 0..n-1 then BaseEdge labels in base edge
// order; edges are the G^x part, then the (G^l)^y part, then the W part.
Graph xyz_transform(const RegularGraph& g, XyzCode code);

struct PartDegrees {
    long long v_part = 0;
    long long e_part = 0;
};

// Closed-form degrees of V-part and E-part vertices in terms of (n, m, r).
PartDegrees expected_part_degrees(long long n, long long m, long long r, XyzCode code);

// Builds the transformation and asserts every vertex degree matches the
// closed form; throws degree_mismatch_error on a construction bug.
PartDegrees transform_degree_check(const RegularGraph& g, XyzCode code);

}  // namespace xyz
