#include "aperiodic/schreier.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "aperiodic/words.hpp"

namespace aperiodic {

namespace {

bool is_a(Letter l) { return l == Letter::a; }

// Gap image under theta for non-a gaps: x -> y -> z -> x.
Letter advance(Letter l) {
    const int code = static_cast<int>(l);
    return static_cast<Letter>(code == 3 ? 1 : code + 1);
}

// The edge-label permutation b->d, c->b, d->c, pushed through the pair
// encoding x={b,c}, y={b,d}, z={c,d}, must reproduce `advance` gap-wise.
// Cheap startup sanity check for the encoding.
bool label_permutation_consistent() {
    constexpr int B = 1, C = 2, D = 4;
    auto mask_of = [](Letter l) {
        switch (l) {
            case Letter::x: return B | C;
            case Letter::y: return B | D;
            default: return C | D;  // z
        }
    };
    auto sigma = [](int mask) {
        int out = 0;
        if (mask & B) out |= D;
        if (mask & C) out |= B;
        if (mask & D) out |= C;
        return out;
    };
    for (Letter l : {Letter::x, Letter::y, Letter::z})
        if (sigma(mask_of(l)) != mask_of(advance(l))) return false;
    return true;
}

}  // namespace

void validate(const LabeledLinearGraph& g) {
    if (g.gaps.empty()) throw std::runtime_error("not in Word': empty gap word");
    if (!is_a(g.gaps.front()) || !is_a(g.gaps.back()))
        throw std::runtime_error("not in Word': boundary gaps must be a");
    for (std::size_t i = 0; i + 1 < g.gaps.size(); ++i)
        if (is_a(g.gaps[i]) == is_a(g.gaps[i + 1]))
            throw std::runtime_error("not in Word': adjacent gaps must alternate with a");
    if (g.root < 1 || g.root > g.vertex_count())
        throw std::runtime_error("root outside 1..V");
}

LabeledLinearGraph graph_of_word(const Window& w) {
    if (w.letters.empty() || !is_a(w.letters.front()) || !is_a(w.letters.back()))
        throw std::runtime_error("not in Word'");
    for (std::size_t i = 0; i + 1 < w.letters.size(); ++i)
        if (is_a(w.letters[i]) == is_a(w.letters[i + 1]))
            throw std::runtime_error("not in Word'");
    if (!w.contains(1)) throw std::runtime_error("no root");
    // vertices stand on positions first()..last()+1; the root is position 1
    return LabeledLinearGraph{w.letters, 1 - w.first() + 1};
}

LabeledLinearGraph theta(const LabeledLinearGraph& g) {
    static const bool encoding_ok = label_permutation_consistent();
    if (!encoding_ok)
        throw std::logic_error("gap-letter encoding inconsistent with the label permutation");
    validate(g);

    LabeledLinearGraph out;
    out.gaps.reserve(g.gaps.size() * 3);
    std::int64_t root = g.root;
    for (std::size_t i = 0; i < g.gaps.size(); ++i) {
        const Letter l = g.gaps[i];
        if (is_a(l)) {
            out.gaps.push_back(Letter::a);
            out.gaps.push_back(Letter::x);
            out.gaps.push_back(Letter::a);
            // an expanded a-gap left of the root pushes it two vertices right
            if (static_cast<std::int64_t>(i) + 1 < g.root) root += 2;
        } else {
            out.gaps.push_back(advance(l));
        }
    }
    out.root = root;
    return out;
}

LabeledLinearGraph gamma_n(int n) {
    if (n < 1) throw std::invalid_argument("gamma_n: n must be >= 1");
    if (n > 60) throw std::invalid_argument("gamma_n: n too large");
    check_cap(static_cast<std::size_t>((std::uint64_t{1} << n)), "gamma_n");
    return LabeledLinearGraph{p_n(n - 1), std::int64_t{1} << n};
}

CanonicalForm canonical_form(const LabeledLinearGraph& g) {
    validate(g);
    Word rev = reflect(g.gaps);
    const std::int64_t mirrored_root = g.vertex_count() + 1 - g.root;
    const bool take_mirror =
        rev < g.gaps || (rev == g.gaps && mirrored_root < g.root);
    if (take_mirror) return CanonicalForm{std::move(rev), mirrored_root, true};
    return CanonicalForm{g.gaps, g.root, false};
}

std::vector<Edge> edge_list(const LabeledLinearGraph& g) {
    validate(g);
    const std::int64_t V = g.vertex_count();
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(2 * V + 4));
    out.push_back({1, 1, 'b'});
    out.push_back({1, 1, 'c'});
    out.push_back({1, 1, 'd'});
    for (std::size_t i = 0; i < g.gaps.size(); ++i) {
        const std::int64_t u = static_cast<std::int64_t>(i) + 1;
        switch (g.gaps[i]) {
            case Letter::a:
                out.push_back({u, u + 1, 'a'});
                break;
            case Letter::x:  // parallel b,c; d-loops at both ends
                out.push_back({u, u + 1, 'b'});
                out.push_back({u, u + 1, 'c'});
                out.push_back({u, u, 'd'});
                out.push_back({u + 1, u + 1, 'd'});
                break;
            case Letter::y:  // parallel b,d; c-loops at both ends
                out.push_back({u, u + 1, 'b'});
                out.push_back({u, u, 'c'});
                out.push_back({u + 1, u + 1, 'c'});
                out.push_back({u, u + 1, 'd'});
                break;
            case Letter::z:  // parallel c,d; b-loops at both ends
                out.push_back({u, u, 'b'});
                out.push_back({u + 1, u + 1, 'b'});
                out.push_back({u, u + 1, 'c'});
                out.push_back({u, u + 1, 'd'});
                break;
        }
    }
    out.push_back({V, V, 'b'});
    out.push_back({V, V, 'c'});
    out.push_back({V, V, 'd'});
    return out;
}

std::string to_dot(const LabeledLinearGraph& g) {
    std::string s = "graph schreier {\n  rankdir=LR;\n  node [shape=circle];\n  " +
                    std::to_string(g.root) + " [shape=doublecircle];\n";
    for (const Edge& e : edge_list(g)) {
        s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"";
        s += e.label;
        s += "\"];\n";
    }
    s += "}\n";
    return s;
}

std::string to_json(const LabeledLinearGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.vertex_count();
    j["root"] = g.root;
    j["gaps"] = to_string(g.gaps);
    const CanonicalForm cf = canonical_form(g);
    j["canonical"] = {{"gaps", to_string(cf.gaps)}, {"root", cf.root}, {"reflected", cf.reflected}};
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : edge_list(g))
        edges.push_back({e.u, e.v, std::string(1, e.label)});
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

namespace {

bool triggers(char generator, Letter l) {
    switch (generator) {
        case 'a': return l == Letter::a;
        case 'b': return l == Letter::x || l == Letter::y;
        case 'c': return l == Letter::x || l == Letter::z;
        case 'd': return l == Letter::y || l == Letter::z;
        default:
            throw std::invalid_argument(std::string("not a generator: '") + generator + "'");
    }
}

}  // namespace

Window act(char generator, Window w) {
    triggers(generator, Letter::a);  // validates the generator symbol early
    if (!w.contains(0) || !w.contains(1)) throw std::runtime_error("insufficient context");
    const Letter l0 = w.at(0), l1 = w.at(1);
    if ((l0 == Letter::a) == (l1 == Letter::a))
        throw std::runtime_error("window is not a subshift factor around the origin");
    if (triggers(generator, l1)) {
        if (!w.contains(2)) throw std::runtime_error("insufficient context");
        w.offset -= 1;  // shift T
    } else if (triggers(generator, l0)) {
        if (!w.contains(-1)) throw std::runtime_error("insufficient context");
        w.offset += 1;  // shift T^-1
    }
    return w;
}

Window act_group_word(const GroupWord& g, Window w) {
    for (auto it = g.rbegin(); it != g.rend(); ++it) w = act(*it, std::move(w));
    return w;
}

GroupWord kappa(const GroupWord& g) {
    GroupWord out;
    out.reserve(g.size() * 3);
    for (char c : g) {
        switch (c) {
            case 'a': out += "aca"; break;
            case 'b': out += 'd'; break;
            case 'c': out += 'b'; break;
            case 'd': out += 'c'; break;
            default:
                throw std::invalid_argument(std::string("not a generator: '") + c + "'");
        }
    }
    return out;
}

GroupWord lysenok_relator(int k, const GroupWord& base) {
    if (k < 0) throw std::invalid_argument("lysenok_relator: k must be >= 0");
    for (char c : base)
        if (c != 'a' && c != 'b' && c != 'c' && c != 'd')
            throw std::invalid_argument(std::string("not a generator: '") + c + "'");
    GroupWord w = base;
    for (int i = 0; i < k; ++i) {
        check_cap(w.size() * 3, "lysenok_relator");
        w = kappa(w);
    }
    return w;
}

}  // namespace aperiodic
