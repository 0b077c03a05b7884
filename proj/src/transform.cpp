#include "xyz/transform.hpp"

#include <sstream>

namespace xyz {

Letter bar(Letter l) {
    switch (l) {
        case Letter::Zero: return Letter::One;
        case Letter::One: return Letter::Zero;
        case Letter::Plus: return Letter::Minus;
        case Letter::Minus: return Letter::Plus;
    }
    throw std::logic_error("bad letter");
}

namespace {

Letter letter_of(char c) {
    switch (c) {
        case '0': return Letter::Zero;
        case '1': return Letter::One;
        case '+': return Letter::Plus;
        case '-': return Letter::Minus;
        default: throw code_parse_error(std::string("bad code character '") + c + "'");
    }
}

}  // namespace

XyzCode XyzCode::parse(const std::string& s) {
    if (s.size() != 3) throw code_parse_error("code must be 3 characters over {0,1,+,-}: '" + s + "'");
    return {letter_of(s[0]), letter_of(s[1]), letter_of(s[2])};
}

std::string XyzCode::str() const {
    return std::string{static_cast<char>(x), static_cast<char>(y), static_cast<char>(z)};
}

const std::vector<XyzCode>& all_codes() {
    static const std::vector<XyzCode> codes = [] {
        const Letter letters[4] = {Letter::Zero, Letter::One, Letter::Plus, Letter::Minus};
        std::vector<XyzCode> out;
        out.reserve(64);
        for (Letter z : letters)
            for (Letter y : letters)
                for (Letter x : letters) out.push_back({x, y, z});
        return out;
    }();
    return codes;
}

Graph bipartite_incidence_graph(const RegularGraph& g, bool complemented) {
    const int n = g.n(), m = g.m();
    std::vector<VertexLabel> labels;
    labels.reserve(n + m);
    for (int i = 0; i < n; ++i) labels.push_back(VertexLabel::base_vertex(i));
    for (const auto& [u, v] : g.graph.edges()) labels.push_back(VertexLabel::base_edge(u, v));
    Graph out(std::move(labels));
    if (!complemented) {
        for (int j = 0; j < m; ++j) {
            out.add_edge(g.graph.edges()[j].first, n + j);
            out.add_edge(g.graph.edges()[j].second, n + j);
        }
    } else {
        for (int v = 0; v < n; ++v)
            for (int j = 0; j < m; ++j) {
                const auto& e = g.graph.edges()[j];
                if (e.first != v && e.second != v) out.add_edge(v, n + j);
            }
    }
    return out;
}

Graph xyz_transform(const RegularGraph& g, XyzCode code) {
    const int n = g.n(), m = g.m();
    const Graph& base = g.graph;
    const Graph lg = line_graph(base);

    std::vector<VertexLabel> labels;
    labels.reserve(n + m);
    for (int i = 0; i < n; ++i) labels.push_back(VertexLabel::base_vertex(i));
    for (const auto& [u, v] : base.edges()) labels.push_back(VertexLabel::base_edge(u, v));
    Graph out(std::move(labels));

    // part on V, chosen by x
    switch (code.x) {
        case Letter::Zero: break;
        case Letter::One:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) out.add_edge(u, v);
            break;
        case Letter::Plus:
            for (const auto& [u, v] : base.edges()) out.add_edge(u, v);
            break;
        case Letter::Minus:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!base.adjacent(u, v)) out.add_edge(u, v);
            break;
    }
    // part on E, chosen by y
    switch (code.y) {
        case Letter::Zero: break;
        case Letter::One:
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) out.add_edge(n + i, n + j);
            break;
        case Letter::Plus:
            for (const auto& [i, j] : lg.edges()) out.add_edge(n + i, n + j);
            break;
        case Letter::Minus:
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (!lg.adjacent(i, j)) out.add_edge(n + i, n + j);
            break;
    }
    // part between V and E, chosen by z
    switch (code.z) {
        case Letter::Zero: break;
        case Letter::One:
            for (int v = 0; v < n; ++v)
                for (int j = 0; j < m; ++j) out.add_edge(v, n + j);
            break;
        case Letter::Plus:
            for (int j = 0; j < m; ++j) {
                out.add_edge(base.edges()[j].first, n + j);
                out.add_edge(base.edges()[j].second, n + j);
            }
            break;
        case Letter::Minus:
            for (int v = 0; v < n; ++v)
                for (int j = 0; j < m; ++j) {
                    const auto& e = base.edges()[j];
                    if (e.first != v && e.second != v) out.add_edge(v, n + j);
                }
            break;
    }
    return out;
}

PartDegrees expected_part_degrees(long long n, long long m, long long r, XyzCode code) {
    PartDegrees d;
    switch (code.x) {
        case Letter::Zero: break;
        case Letter::One: d.v_part += n - 1; break;
        case Letter::Plus: d.v_part += r; break;
        case Letter::Minus: d.v_part += n - 1 - r; break;
    }
    switch (code.y) {
        case Letter::Zero: break;
        case Letter::One: d.e_part += m - 1; break;
        case Letter::Plus: d.e_part += 2 * r - 2; break;
        case Letter::Minus: d.e_part += m - 2 * r + 1; break;
    }
    switch (code.z) {
        case Letter::Zero: break;
        case Letter::One:
            d.v_part += m;
            d.e_part += n;
            break;
        case Letter::Plus:
            d.v_part += r;
            d.e_part += 2;
            break;
        case Letter::Minus:
            d.v_part += m - r;
            d.e_part += n - 2;
            break;
    }
    return d;
}

PartDegrees transform_degree_check(const RegularGraph& g, XyzCode code) {
    const PartDegrees expect = expected_part_degrees(g.n(), g.m(), g.r, code);
    const Graph t = xyz_transform(g, code);
    for (int v = 0; v < t.n(); ++v) {
        long long want = v < g.n() ? expect.v_part : expect.e_part;
        if (t.degree(v) != want) {
            std::ostringstream os;
            os << "degree mismatch in G^" << code.str() << " at vertex " << v << ": built "
               << t.degree(v) << ", expected " << want;
            throw degree_mismatch_error(os.str());
        }
    }
    return expect;
}

}  // namespace xyz
