#include "xyz/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace xyz {

VertexLabel VertexLabel::base_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("edge label endpoints equal");
    if (a > b) std::swap(a, b);
    return {Kind::BaseEdge, a, b};
}

std::string VertexLabel::str() const {
    std::ostringstream os;
    if (kind == Kind::BaseVertex)
        os << "v" << u;
    else
        os << "e(" << u << "," << v << ")";
    return os.str();
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back(VertexLabel::base_vertex(i));
    adj_.assign(static_cast<size_t>(n) * n, false);
}

Graph::Graph(std::vector<VertexLabel> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size() * labels_.size(), false);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (adj_[idx(u, v)]) throw std::invalid_argument("duplicate edge rejected");
    adj_[idx(u, v)] = true;
    adj_[idx(v, u)] = true;
    edges_.emplace_back(std::min(u, v), std::max(u, v));
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < n(); ++w)
        if (adj_[idx(v, w)]) ++d;
    return d;
}

std::vector<int> Graph::degree_sequence_sorted() const {
    std::vector<int> degs(n());
    for (int i = 0; i < n(); ++i) degs[i] = degree(i);
    std::sort(degs.begin(), degs.end());
    return degs;
}

Graph Graph::induced_subgraph(const std::vector<int>& verts) const {
    std::vector<VertexLabel> sub;
    sub.reserve(verts.size());
    for (int v : verts) sub.push_back(labels_[v]);
    Graph out(std::move(sub));
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adjacent(verts[i], verts[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both parts nonempty");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph petersen() {
    // outer 5-cycle, spokes, inner pentagram
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, i + 5);
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);
    return g;
}

Graph hypercube(int d) {
    if (d < 1) throw std::invalid_argument("hypercube needs d >= 1");
    if (d > 20) throw std::invalid_argument("hypercube dimension too large");
    const int n = 1 << d;
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (!(u & (1 << b))) g.add_edge(u, u | (1 << b));
    return g;
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw std::invalid_argument("circulant needs n >= 3");
    Graph g(n);
    for (int o : offsets) {
        if (o < 1 || 2 * o > n) throw std::invalid_argument("circulant offset out of range (1..n/2)");
        for (int i = 0; i < n; ++i) {
            int j = (i + o) % n;
            if (!g.adjacent(i, j)) g.add_edge(i, j);
        }
    }
    return g;
}

Graph matching(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("matching needs even n >= 2");
    Graph g(n);
    for (int i = 0; i < n; i += 2) g.add_edge(i, i + 1);
    return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw graph_parse_error("bad integer in generator spec: '" + s + "'");
    }
    if (pos != s.size()) throw graph_parse_error("bad integer in generator spec: '" + s + "'");
    return v;
}

}  // namespace

Graph generate(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& name = parts[0];
    auto want_args = [&](size_t k) {
        if (parts.size() != k + 1)
            throw graph_parse_error("generator '" + name + "' expects " + std::to_string(k) + " parameter(s)");
    };
    try {
        if (name == "cycle") {
            want_args(1);
            return cycle(parse_int(parts[1]));
        }
        if (name == "complete") {
            want_args(1);
            return complete(parse_int(parts[1]));
        }
        if (name == "complete_bipartite") {
            want_args(2);
            return complete_bipartite(parse_int(parts[1]), parse_int(parts[2]));
        }
        if (name == "petersen") {
            want_args(0);
            return petersen();
        }
        if (name == "hypercube") {
            want_args(1);
            return hypercube(parse_int(parts[1]));
        }
        if (name == "circulant") {
            want_args(2);
            std::vector<int> offs;
            for (const auto& tok : split(parts[2], ',')) offs.push_back(parse_int(tok));
            return circulant(parse_int(parts[1]), offs);
        }
        if (name == "matching") {
            want_args(1);
            return matching(parse_int(parts[1]));
        }
    } catch (const std::invalid_argument& e) {
        throw graph_parse_error(std::string("invalid generator parameters: ") + e.what());
    }
    throw graph_parse_error("unknown generator '" + name + "'");
}

RegularGraph as_regular(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("empty graph");
    int r = g.degree(0);
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != r)
            throw not_regular_error("degrees differ: " + std::to_string(r) + " vs " +
                                    std::to_string(g.degree(v)));
    if (r == 0) throw degree_zero_error("0-regular graph rejected: transformations degenerate");
    return RegularGraph{g, r};
}

Graph complement(const Graph& g) {
    Graph out(g.labels());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

Graph line_graph(const Graph& g) {
    std::vector<VertexLabel> labels;
    labels.reserve(g.m());
    for (const auto& [u, v] : g.edges()) labels.push_back(VertexLabel::base_edge(u, v));
    Graph out(std::move(labels));
    for (int i = 0; i < g.m(); ++i)
        for (int j = i + 1; j < g.m(); ++j) {
            const auto& e = g.edges()[i];
            const auto& f = g.edges()[j];
            if (e.first == f.first || e.first == f.second || e.second == f.first ||
                e.second == f.second)
                out.add_edge(i, j);
        }
    return out;
}

namespace {

// Iterated neighborhood refinement; colors comparable across both graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& a, const Graph& b) {
    std::vector<int> ca(a.n()), cb(b.n());
    for (int i = 0; i < a.n(); ++i) ca[i] = a.degree(i);
    for (int i = 0; i < b.n(); ++i) cb[i] = b.degree(i);
    for (int round = 0; round < a.n(); ++round) {
        std::map<std::pair<int, std::vector<int>>, int> table;
        auto signature = [&](const Graph& g, const std::vector<int>& col, int v) {
            std::vector<int> nb;
            for (int w = 0; w < g.n(); ++w)
                if (g.adjacent(v, w)) nb.push_back(col[w]);
            std::sort(nb.begin(), nb.end());
            return std::make_pair(col[v], std::move(nb));
        };
        std::vector<int> na(a.n()), nb(b.n());
        for (int v = 0; v < a.n(); ++v) {
            auto sig = signature(a, ca, v);
            auto it = table.find(sig);
            if (it == table.end()) it = table.emplace(std::move(sig), static_cast<int>(table.size())).first;
            na[v] = it->second;
        }
        for (int v = 0; v < b.n(); ++v) {
            auto sig = signature(b, cb, v);
            auto it = table.find(sig);
            if (it == table.end()) it = table.emplace(std::move(sig), static_cast<int>(table.size())).first;
            nb[v] = it->second;
        }
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {ca, cb};
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> map_ab;   // a-vertex -> b-vertex or -1
    std::vector<bool> used_b;
    std::vector<int> order;    // a-vertices, most-constrained first

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < b.n(); ++w) {
            if (used_b[w] || cb[w] != ca[v]) continue;
            bool ok = true;
            for (size_t k = 0; k < pos && ok; ++k) {
                int u = order[k];
                if (a.adjacent(v, u) != b.adjacent(w, map_ab[u])) ok = false;
            }
            if (!ok) continue;
            map_ab[v] = w;
            used_b[w] = true;
            if (extend(pos + 1)) return true;
            used_b[w] = false;
            map_ab[v] = -1;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b, int size_bound) {
    if (a.n() > size_bound || b.n() > size_bound)
        throw size_limit_error("isomorphism search limited to " + std::to_string(size_bound) +
                               " vertices");
    if (a.n() != b.n() || a.m() != b.m()) return false;
    if (a.degree_sequence_sorted() != b.degree_sequence_sorted()) return false;
    auto [ca, cb] = refine_colors(a, b);
    {
        std::vector<int> ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return false;
    }
    // Order a's vertices greedily: next = unplaced vertex with the most
    // already-placed neighbors (ties by rarer color class).
    std::vector<int> class_size(a.n() + 1, 0);
    for (int c : ca) ++class_size[c];
    std::vector<int> order;
    std::vector<bool> placed(a.n(), false);
    for (int step = 0; step < a.n(); ++step) {
        int best = -1, best_links = -1, best_class = 1 << 30;
        for (int v = 0; v < a.n(); ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : order)
                if (a.adjacent(v, u)) ++links;
            if (links > best_links ||
                (links == best_links && class_size[ca[v]] < best_class)) {
                best = v;
                best_links = links;
                best_class = class_size[ca[v]];
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    IsoSearch search{a, b, ca, cb, std::vector<int>(a.n(), -1), std::vector<bool>(b.n(), false),
                     std::move(order)};
    return search.extend(0);
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::string> data;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::string cleaned;
        while (ls >> tok) cleaned += (cleaned.empty() ? "" : " ") + tok;
        if (!cleaned.empty()) data.push_back(cleaned);
    }
    if (data.empty()) throw graph_parse_error("empty edge-list input");
    std::istringstream head(data[0]);
    int n = 0, m = 0;
    if (!(head >> n >> m) || n < 0 || m < 0) throw graph_parse_error("bad header line, expected 'n m'");
    if (static_cast<size_t>(m) + 1 != data.size())
        throw graph_parse_error("edge count mismatch: header says " + std::to_string(m) +
                                ", found " + std::to_string(data.size() - 1) + " edge lines");
    Graph g(n);
    for (int i = 0; i < m; ++i) {
        std::istringstream es(data[i + 1]);
        int u = 0, v = 0;
        if (!(es >> u >> v)) throw graph_parse_error("bad edge line: '" + data[i + 1] + "'");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw graph_parse_error(std::string("bad edge: ") + e.what());
        }
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << " " << g.m() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace xyz
