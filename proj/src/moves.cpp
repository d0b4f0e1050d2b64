#include "rigidity/moves.hpp"

#include <algorithm>
#include <functional>

#include <nlohmann/json.hpp>

#include "rigidity/sparsity.hpp"

namespace rigidity {

Graph base_graph(BaseGraph base) {
    switch (base) {
    case BaseGraph::K1: return Graph(1, {});
    case BaseGraph::K2: return complete_graph(2);
    case BaseGraph::K4: return complete_graph(4);
    }
    fail(Err::InvalidInput, "unknown base graph");
}

Graph henneberg1(const Graph& g, int a, int b) {
    const int n = g.vertex_count();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
        fail(Err::InvalidVertices, "Henneberg 1 needs two distinct existing vertices");
    std::vector<Edge> edges = g.edges();
    edges.push_back({a, n});
    edges.push_back({b, n});
    return Graph(n + 1, std::move(edges));
}

Graph henneberg2(const Graph& g, Edge split, int third) {
    const int n = g.vertex_count();
    split = make_edge(split.first, split.second);
    if (!g.has_edge(split.first, split.second))
        fail(Err::InvalidEdge, "Henneberg 2 must split an existing edge");
    if (third < 0 || third >= n || third == split.first || third == split.second)
        fail(Err::InvalidThirdVertex, "third vertex must differ from the split edge endpoints");
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e != split) edges.push_back(e);
    edges.push_back({split.first, n});
    edges.push_back({split.second, n});
    edges.push_back({third, n});
    return Graph(n + 1, std::move(edges));
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) fail(Err::InvalidVertices, "vertex out of range");
    if (g.vertex_count() == 1) fail(Err::InvalidVertices, "cannot remove the last vertex");
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back({a - (a > v), b - (b > v)});
    }
    return Graph(g.vertex_count() - 1, std::move(edges));
}

std::vector<InverseH2Candidate> inverse_henneberg2_candidates(const Graph& g, int v, int k) {
    if (v < 0 || v >= g.vertex_count() || g.degree(v) != 3)
        fail(Err::WrongDegree, "reverse Henneberg 2 needs a degree-3 vertex");
    const auto& nb = g.neighbors(v); // sorted: x < y < z
    const Edge ghosts[3] = {make_edge(nb[0], nb[1]), make_edge(nb[0], nb[2]),
                            make_edge(nb[1], nb[2])};
    std::vector<InverseH2Candidate> out;
    for (const Edge& ghost : ghosts) {
        if (g.has_edge(ghost.first, ghost.second)) continue;
        Graph stripped = remove_vertex(g, v);
        std::vector<Edge> edges = stripped.edges();
        edges.push_back(make_edge(ghost.first - (ghost.first > v), ghost.second - (ghost.second > v)));
        Graph candidate(stripped.vertex_count(), std::move(edges));
        if (check_type(candidate, k).maximal) out.push_back({ghost, std::move(candidate)});
    }
    return out;
}

namespace {

// One reverse step in a Henneberg peel, parameters in the labels of the graph
// it was peeled from. Removal swaps the peeled vertex with the last label and
// drops it.
struct PeelStep {
    int vertex;
    bool h1;
    int a = -1, b = -1; // H1 neighbors
    Edge ghost{};       // H2 ghost pair
    int third = -1;     // H2 third neighbor
};

Graph remove_vertex_swap(const Graph& g, int v, std::vector<Edge> extra = {}) {
    const int last = g.vertex_count() - 1;
    auto mapped = [&](int w) { return w == last ? v : w; };
    std::vector<Edge> edges;
    for (const auto& [a, b] : extra) edges.push_back(make_edge(mapped(a), mapped(b)));
    for (const auto& [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back(make_edge(mapped(a), mapped(b)));
    }
    return Graph(last, std::move(edges));
}

// accept() decides membership of the class being peeled; the class theory
// guarantees a valid reverse move exists for every non-base member.
template <typename Accept>
std::optional<std::pair<PeelStep, Graph>> reverse_henneberg(const Graph& g, const Accept& accept,
                                                            bool unconditional_h1) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        const auto& nb = g.neighbors(v);
        Graph smaller = remove_vertex_swap(g, v);
        if (unconditional_h1 || accept(smaller)) {
            PeelStep step{v, true, nb[0], nb[1], {}, -1};
            return std::make_pair(step, std::move(smaller));
        }
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3) continue;
        const auto& nb = g.neighbors(v);
        const Edge ghosts[3] = {make_edge(nb[0], nb[1]), make_edge(nb[0], nb[2]),
                                make_edge(nb[1], nb[2])};
        for (const Edge& ghost : ghosts) {
            if (g.has_edge(ghost.first, ghost.second)) continue;
            Graph smaller = remove_vertex_swap(g, v, {ghost});
            if (!accept(smaller)) continue;
            int third = -1;
            for (int w : nb)
                if (w != ghost.first && w != ghost.second) third = w;
            PeelStep step{v, false, -1, -1, ghost, third};
            return std::make_pair(step, std::move(smaller));
        }
    }
    return std::nullopt;
}

// Bottom-up assembly of the forward sequence. Replay appends each new vertex
// at the end, which relabels everything peeled later; phi tracks where each
// vertex of the currently rebuilt graph lives in replay labels, and every
// move's parameters are translated through it.
DerivationSequence peel(Graph g, BaseGraph base, int base_size, Err not_in_class,
                        const std::function<bool(const Graph&)>& accept,
                        bool unconditional_h1) {
    std::vector<PeelStep> peeled;
    while (g.vertex_count() > base_size) {
        auto step = reverse_henneberg(g, accept, unconditional_h1);
        if (!step) fail(not_in_class, "no valid reverse Henneberg move found");
        peeled.push_back(step->first);
        g = std::move(step->second);
    }

    DerivationSequence seq;
    seq.base = base;
    std::vector<int> phi(base_size);
    for (int i = 0; i < base_size; ++i) phi[i] = i;
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const PeelStep& s = *it;
        const int size = static_cast<int>(phi.size()) + 1;
        const int last = size - 1;
        auto translate = [&](int w) { return phi[w == last ? s.vertex : w]; };
        if (s.h1) {
            seq.steps.push_back(Henneberg1Step{translate(s.a), translate(s.b)});
        } else {
            seq.steps.push_back(Henneberg2Step{
                make_edge(translate(s.ghost.first), translate(s.ghost.second)),
                translate(s.third)});
        }
        std::vector<int> next(size);
        for (int w = 0; w < size; ++w)
            next[w] = w == s.vertex ? last : phi[w == last ? s.vertex : w];
        phi = std::move(next);
    }
    return seq;
}

} // namespace

DerivationSequence derive_laman(const Graph& g) {
    if (!is_laman(g)) fail(Err::NotLaman, "input is not a Laman graph");
    // Removing a degree-2 vertex of a Laman graph always leaves a Laman
    // graph, so reverse H1 needs no membership check.
    return peel(g, BaseGraph::K2, 2, Err::NotLaman,
                [](const Graph& h) { return is_laman(h); }, true);
}

DerivationSequence derive_laman_plus_one(const Graph& g) {
    if (!is_laman_plus_one(g)) fail(Err::NotLamanPlusOne, "input is not Laman plus one");
    return peel(g, BaseGraph::K4, 4, Err::NotLamanPlusOne,
                [](const Graph& h) { return is_laman_plus_one(h).has_value(); }, false);
}

namespace {

Graph subgraph_as_graph(const SubgraphRef& h) {
    auto index_of = [&](int v) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                                h.vertices.begin());
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : h.edges) edges.push_back(make_edge(index_of(a), index_of(b)));
    return Graph(static_cast<int>(h.vertices.size()), std::move(edges));
}

std::vector<int> invert_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

} // namespace

DerivationSequence derive_type2(const Graph& g) {
    if (!check_type(g, 2).maximal)
        fail(Err::NotType2Maximal, "input is not maximally independent of type 2");
    if (g.vertex_count() == 1) return DerivationSequence{BaseGraph::K1, {}};
    if (is_laman_plus_one(g)) return derive_laman_plus_one(g);

    // A degree-2 vertex comes off by reverse Henneberg 1: the tight subgraph
    // on everything else would contract to a doubled edge, while the smaller
    // graph stays type-2 maximal.
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) continue;
        const auto& nb = g.neighbors(v);
        const int last = g.vertex_count() - 1;
        auto mapped = [&](int w) { return w == last ? v : w; };
        Graph smaller = remove_vertex_swap(g, v);
        DerivationSequence seq = derive_type2(smaller);
        auto sigma = find_isomorphism(replay(seq), smaller);
        if (!sigma) fail(Err::IllFormedStep, "derivation replay mismatch");
        auto sigma_inv = invert_permutation(*sigma);
        seq.steps.push_back(Henneberg1Step{sigma_inv[mapped(nb[0])], sigma_inv[mapped(nb[1])]});
        return seq;
    }

    auto tight = maximal_tight_subgraph(g);
    if (!tight)
        fail(Err::NotType2Maximal, "no tight subgraph in a non Laman-plus-one graph");
    const SubgraphRef& h = *tight;
    ContractionResult contraction = contract(g, h);

    Graph h_graph = subgraph_as_graph(h);
    DerivationSequence seq_h = derive_type2(h_graph);
    DerivationSequence seq_k = derive_type2(contraction.graph);

    // Replays are only isomorphic to the parts, so the extension parameters
    // are pulled back through the isomorphisms.
    Graph replayed_h = replay(seq_h);
    Graph replayed_k = replay(seq_k);
    auto tau = find_isomorphism(replayed_h, h_graph);
    auto sigma = find_isomorphism(replayed_k, contraction.graph);
    if (!tau || !sigma) fail(Err::IllFormedStep, "derivation replay mismatch");
    auto tau_inv = invert_permutation(*tau);
    auto sigma_inv = invert_permutation(*sigma);

    auto h_index = [&](int v) {
        return static_cast<int>(std::lower_bound(h.vertices.begin(), h.vertices.end(), v) -
                                h.vertices.begin());
    };
    auto in_h = [&](int v) {
        return std::binary_search(h.vertices.begin(), h.vertices.end(), v);
    };

    SubgraphExtensionStep ext;
    ext.vertex = sigma_inv[contraction.merged_vertex];
    ext.subgraph = std::make_shared<DerivationSequence>(std::move(seq_h));
    for (const auto& [a, b] : g.edges()) {
        const bool a_in = in_h(a), b_in = in_h(b);
        if (a_in == b_in) continue;
        const int outside = a_in ? b : a;
        const int inside = a_in ? a : b;
        ext.attachments.push_back(
            {sigma_inv[contraction.vertex_map[outside]], tau_inv[h_index(inside)]});
    }
    std::sort(ext.attachments.begin(), ext.attachments.end());

    DerivationSequence seq = std::move(seq_k);
    seq.steps.push_back(std::move(ext));
    return seq;
}

namespace {

[[noreturn]] void step_fail(size_t index, const std::string& what) {
    fail(Err::IllFormedStep, "step " + std::to_string(index) + ": " + what);
}

} // namespace

Graph apply_move(const Graph& g, const Move& move, size_t index) {
    if (const auto* h1 = std::get_if<Henneberg1Step>(&move)) {
        if (h1->a < 0 || h1->b < 0 || h1->a >= g.vertex_count() || h1->b >= g.vertex_count() ||
            h1->a == h1->b)
            step_fail(index, "bad Henneberg 1 vertices");
        return henneberg1(g, h1->a, h1->b);
    }
    if (const auto* h2 = std::get_if<Henneberg2Step>(&move)) {
        if (!g.has_edge(h2->split.first, h2->split.second))
            step_fail(index, "Henneberg 2 split edge not present");
        if (h2->third < 0 || h2->third >= g.vertex_count() || h2->third == h2->split.first ||
            h2->third == h2->split.second)
            step_fail(index, "bad Henneberg 2 third vertex");
        return henneberg2(g, h2->split, h2->third);
    }
    const auto& ext = std::get<SubgraphExtensionStep>(move);
    if (ext.vertex < 0 || ext.vertex >= g.vertex_count())
        step_fail(index, "extension vertex out of range");
    if (!ext.subgraph) step_fail(index, "extension without subgraph derivation");
    Graph inserted = replay(*ext.subgraph);

    // Attachments must redirect each edge at the replaced vertex exactly once.
    std::vector<int> expected = g.neighbors(ext.vertex);
    std::vector<int> given;
    for (const auto& [w, x] : ext.attachments) {
        given.push_back(w);
        if (x < 0 || x >= inserted.vertex_count())
            step_fail(index, "attachment target outside subgraph");
    }
    std::sort(given.begin(), given.end());
    if (given != expected) step_fail(index, "attachments must cover the vertex neighbors");

    const int offset = g.vertex_count() - 1;
    auto shifted = [&](int w) { return w - (w > ext.vertex); };
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        if (a == ext.vertex || b == ext.vertex) continue;
        edges.push_back(make_edge(shifted(a), shifted(b)));
    }
    for (const auto& [a, b] : inserted.edges()) edges.push_back({offset + a, offset + b});
    for (const auto& [w, x] : ext.attachments)
        edges.push_back(make_edge(shifted(w), offset + x));
    return Graph(offset + inserted.vertex_count(), std::move(edges));
}

Graph replay(const DerivationSequence& seq) {
    Graph g = base_graph(seq.base);
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        g = apply_move(g, seq.steps[i], i);
        if (!g.is_connected()) step_fail(i, "intermediate graph disconnected");
    }
    return g;
}

namespace {

nlohmann::json move_to_json(const Move& move);

nlohmann::json derivation_to_json(const DerivationSequence& seq) {
    nlohmann::json j;
    switch (seq.base) {
    case BaseGraph::K1: j["base"] = "K1"; break;
    case BaseGraph::K2: j["base"] = "K2"; break;
    case BaseGraph::K4: j["base"] = "K4"; break;
    }
    auto steps = nlohmann::json::array();
    for (const auto& m : seq.steps) steps.push_back(move_to_json(m));
    j["steps"] = steps;
    return j;
}

nlohmann::json move_to_json(const Move& move) {
    nlohmann::json j;
    if (const auto* h1 = std::get_if<Henneberg1Step>(&move)) {
        j["kind"] = "H1";
        j["a"] = h1->a;
        j["b"] = h1->b;
    } else if (const auto* h2 = std::get_if<Henneberg2Step>(&move)) {
        j["kind"] = "H2";
        j["edge"] = {h2->split.first, h2->split.second};
        j["third"] = h2->third;
    } else {
        const auto& ext = std::get<SubgraphExtensionStep>(move);
        j["kind"] = "extension";
        j["vertex"] = ext.vertex;
        auto att = nlohmann::json::array();
        for (const auto& [w, x] : ext.attachments) att.push_back({w, x});
        j["attachments"] = att;
        j["subgraph"] = derivation_to_json(*ext.subgraph);
    }
    return j;
}

DerivationSequence derivation_from_json(const nlohmann::json& j);

Move move_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "H1") return Henneberg1Step{j.at("a").get<int>(), j.at("b").get<int>()};
    if (kind == "H2")
        return Henneberg2Step{make_edge(j.at("edge").at(0).get<int>(), j.at("edge").at(1).get<int>()),
                              j.at("third").get<int>()};
    if (kind == "extension") {
        SubgraphExtensionStep ext;
        ext.vertex = j.at("vertex").get<int>();
        for (const auto& a : j.at("attachments"))
            ext.attachments.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
        ext.subgraph = std::make_shared<DerivationSequence>(derivation_from_json(j.at("subgraph")));
        return ext;
    }
    fail(Err::InvalidInput, "unknown move kind: " + kind);
}

DerivationSequence derivation_from_json(const nlohmann::json& j) {
    DerivationSequence seq;
    const std::string base = j.at("base").get<std::string>();
    if (base == "K1") seq.base = BaseGraph::K1;
    else if (base == "K2") seq.base = BaseGraph::K2;
    else if (base == "K4") seq.base = BaseGraph::K4;
    else fail(Err::InvalidInput, "unknown base graph: " + base);
    for (const auto& m : j.at("steps")) seq.steps.push_back(move_from_json(m));
    return seq;
}

} // namespace

std::string derivation_to_json_text(const DerivationSequence& seq) {
    return derivation_to_json(seq).dump();
}

DerivationSequence derivation_from_json_text(const std::string& text) {
    try {
        return derivation_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        fail(Err::InvalidInput, std::string("bad derivation JSON: ") + e.what());
    }
}

} // namespace rigidity
