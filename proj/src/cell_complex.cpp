#include "mcc/cell_complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "mcc/coding.hpp"

namespace mcc {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<std::size_t> parent_;
};

bool valid_vertex(const CellComplex& c, int v) { return v >= 0 && v < static_cast<int>(c.vertices.size()); }
bool valid_edge(const CellComplex& c, int e) { return e >= 0 && e < static_cast<int>(c.edges.size()); }

const Edge& edge_of(const CellComplex& c, const Side& s) { return c.edges.at(static_cast<std::size_t>(s.edge)); }

/// Positive arc from a to b (exclusive) over a common denominator contains den/2.
bool arc_contains_half(std::uint64_t a, std::uint64_t b, std::uint64_t den) {
    auto below = [den](std::uint64_t k) { return 2 * k < den; };
    if (a < b) return below(a) && !below(b);
    return below(a) || !below(b);
}

std::string edge_key(const Edge& e) {
    return std::to_string(e.component.pair.low_num) + "-" + std::to_string(e.component.pair.high_num);
}

std::string side_token(const CellComplex& c, const Side& s) {
    return edge_key(edge_of(c, s)) + (s.dir > 0 ? "+" : "-");
}

std::vector<std::string> least_token_rotation(const std::vector<std::string>& tokens) {
    std::vector<std::string> best = tokens;
    std::vector<std::string> cur = tokens;
    for (std::size_t r = 1; r < tokens.size(); ++r) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

int side_tail(const CellComplex& c, const Side& s) {
    const Edge& e = edge_of(c, s);
    return s.dir > 0 ? e.endpoints[0] : e.endpoints[1];
}

int side_head(const CellComplex& c, const Side& s) {
    const Edge& e = edge_of(c, s);
    return s.dir > 0 ? e.endpoints[1] : e.endpoints[0];
}

std::uint64_t edge_label(Family m, const HyperbolicComponent& h) {
    return m == Family::Per1 ? display_label(h) : h.pair.low_num;
}

std::string angle_vertex_label(Family m, const RationalAngle& theta) {
    if (m == Family::Per1) return BinaryNecklace::from_word(binary_cycle(theta)).word();
    return basilica_label(theta).word();
}

int face_winding(const CellComplex& c, const Face& f) {
    int wraps = 0;
    const std::size_t n = f.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& cur = edge_of(c, f.boundary[i]).component.pair;
        const auto& next = edge_of(c, f.boundary[(i + 1) % n]).component.pair;
        if (next.low_num <= cur.high_num) ++wraps;
    }
    return wraps;
}

std::vector<int> median_vertices(const CellComplex& c, const Face& f) {
    std::vector<int> out;
    const std::uint64_t den = (std::uint64_t{1} << c.period) - 1;
    const std::size_t n = f.boundary.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Side& s = f.boundary[i];
        const Side& t = f.boundary[(i + 1) % n];
        if (arc_contains_half(edge_of(c, s).component.pair.high_num, edge_of(c, t).component.pair.low_num, den))
            out.push_back(side_head(c, s));
    }
    return out;
}

int face_local_degree(const CellComplex& c, const Face& f) {
    if (c.family == Family::Per1 || f.boundary.empty()) return static_cast<int>(f.cls.size());
    return static_cast<int>(median_vertices(c, f).size());
}

ValidationReport validate(const CellComplex& c) {
    ValidationReport r;
    auto err = [&r](const std::string& msg) { r.errors.push_back(msg); };
    const int p = c.period;

    std::set<std::string> seen_labels;
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        const Vertex& v = c.vertices[i];
        if (v.id != static_cast<int>(i)) err("vertex " + std::to_string(i) + ": id mismatch " + std::to_string(v.id));
        if (!seen_labels.insert(v.label).second) err("vertex " + std::to_string(i) + ": duplicate label " + v.label);
        try {
            std::string canon = c.family == Family::Per1 ? BinaryNecklace::from_word(v.label).word()
                                                         : TernaryNecklace::from_word(v.label).word();
            if (canon != v.label) err("vertex " + std::to_string(i) + ": label " + v.label + " is not canonical");
            if (static_cast<int>(v.label.size()) != p)
                err("vertex " + std::to_string(i) + ": label " + v.label + " does not have period " +
                    std::to_string(p));
        } catch (const Error& e) {
            err("vertex " + std::to_string(i) + ": " + e.what());
        }
    }

    std::vector<std::array<int, 2>> uses(c.edges.size(), {0, 0});
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        const Edge& e = c.edges[i];
        const std::string name = "edge " + std::to_string(i) + " (" + std::to_string(e.label) + ")";
        if (e.id != static_cast<int>(i)) err(name + ": id mismatch");
        if (!valid_vertex(c, e.endpoints[0]) || !valid_vertex(c, e.endpoints[1])) {
            err(name + ": endpoint out of range");
            continue;
        }
        if (e.endpoints[0] == e.endpoints[1]) err(name + ": both endpoints are the same vertex");
        if (e.component.period != p) err(name + ": component period differs from complex period");
        if (!e.component.primitive) err(name + ": component is not primitive");
        try {
            const auto& pair = e.component.pair;
            std::string lo = angle_vertex_label(c.family, pair.low());
            std::string hi = angle_vertex_label(c.family, pair.high());
            if (c.vertices[static_cast<std::size_t>(e.endpoints[0])].label != lo ||
                c.vertices[static_cast<std::size_t>(e.endpoints[1])].label != hi)
                err(name + ": endpoints do not carry the necklaces of its characteristic angles");
        } catch (const Error& ex) {
            err(name + ": " + ex.what());
        }
    }

    std::set<CycleClass> classes;
    for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
        const Face& f = c.faces[fi];
        FaceDiagnostic d;
        d.face = static_cast<int>(fi);
        d.size = static_cast<int>(f.boundary.size());
        d.local_degree = f.local_degree;
        auto problem = [&](const std::string& msg) {
            d.problems.push_back(msg);
            err("face " + std::to_string(fi) + ": " + msg);
        };
        if (f.id != static_cast<int>(fi)) problem("id mismatch");
        if (f.cls.members().empty()) problem("empty class");
        else if (f.cls.family() != c.family) problem("class family differs from complex family");
        if (!classes.insert(f.cls).second) problem("class " + f.cls.str() + " labels more than one face");

        bool sides_ok = true;
        for (const Side& s : f.boundary) {
            if (!valid_edge(c, s.edge) || (s.dir != 1 && s.dir != -1)) {
                problem("invalid boundary slot (edge " + std::to_string(s.edge) + ", dir " + std::to_string(s.dir) +
                        ")");
                sides_ok = false;
                continue;
            }
            ++uses[static_cast<std::size_t>(s.edge)][s.dir > 0 ? 0 : 1];
        }
        if (!sides_ok) {
            r.faces.push_back(std::move(d));
            continue;
        }
        if (f.boundary.empty()) {
            if (f.attached_vertices.empty()) problem("face has neither boundary nor attached vertices");
            for (int v : f.attached_vertices) {
                if (!valid_vertex(c, v)) problem("attached vertex out of range");
                else if (!f.cls.contains(c.vertices[static_cast<std::size_t>(v)].label))
                    problem("attached vertex " + c.vertices[static_cast<std::size_t>(v)].label + " not in class " +
                            f.cls.str());
            }
        }
        const std::size_t n = f.boundary.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Side& s = f.boundary[i];
            const Side& t = f.boundary[(i + 1) % n];
            if (side_head(c, s) != side_tail(c, t))
                problem("boundary slots " + std::to_string(i) + " and " + std::to_string((i + 1) % n) +
                        " do not share a vertex");
        }
        if (n > 0) d.winding = face_winding(c, f);
        const int degree = face_local_degree(c, f);
        if (degree != f.local_degree)
            problem("stored local degree " + std::to_string(f.local_degree) + " differs from computed " +
                    std::to_string(degree));
        if (c.family == Family::Per1) {
            if (n > 0 && d.winding != static_cast<int>(f.cls.size()))
                problem("boundary winds " + std::to_string(d.winding) + " times around 0 but class " + f.cls.str() +
                        " has size " + std::to_string(f.cls.size()));
            for (const Side& s : f.boundary) {
                auto [k0, k1] = perturbations(edge_of(c, s).component.kneading);
                if (!f.cls.contains(k0.word()) && !f.cls.contains(k1.word()))
                    problem("edge " + std::to_string(edge_of(c, s).label) + " has no perturbation in class " +
                            f.cls.str());
            }
        } else if (n > 0) {
            auto medians = median_vertices(c, f);
            d.median_count = static_cast<int>(medians.size());
            if (d.median_count != 1 && d.median_count != 3)
                problem("median vertex count " + std::to_string(d.median_count) + " is not 1 or 3");
            if (d.median_count != static_cast<int>(f.cls.size()))
                problem("median vertex count " + std::to_string(d.median_count) + " differs from class size " +
                        std::to_string(f.cls.size()));
            for (int v : medians) {
                if (!f.cls.contains(c.vertices[static_cast<std::size_t>(v)].label))
                    problem("median vertex " + c.vertices[static_cast<std::size_t>(v)].label + " not in class " +
                            f.cls.str());
            }
        }
        r.faces.push_back(std::move(d));
    }

    for (std::size_t i = 0; i < uses.size(); ++i) {
        if (uses[i][0] != 1 || uses[i][1] != 1)
            err("edge " + std::to_string(i) + " (" + std::to_string(c.edges[i].label) +
                "): gluing parity violated, used " + std::to_string(uses[i][0]) + "x forward and " +
                std::to_string(uses[i][1]) + "x backward");
    }
    return r;
}

Int euler(const CellComplex& c) {
    return Int(c.vertices.size()) - Int(c.edges.size()) + Int(c.faces.size());
}

std::vector<ComponentStats> component_stats(const CellComplex& c) {
    const std::size_t nv = c.vertices.size();
    DisjointSets sets(nv + c.faces.size());
    for (const Edge& e : c.edges) sets.unite(static_cast<std::size_t>(e.endpoints[0]), static_cast<std::size_t>(e.endpoints[1]));
    for (std::size_t fi = 0; fi < c.faces.size(); ++fi) {
        const Face& f = c.faces[fi];
        for (const Side& s : f.boundary) sets.unite(nv + fi, static_cast<std::size_t>(side_tail(c, s)));
        for (int v : f.attached_vertices) sets.unite(nv + fi, static_cast<std::size_t>(v));
    }
    std::map<std::size_t, ComponentStats> by_root;
    for (std::size_t v = 0; v < nv; ++v) ++by_root[sets.find(v)].vertices;
    for (const Edge& e : c.edges) ++by_root[sets.find(static_cast<std::size_t>(e.endpoints[0]))].edges;
    for (std::size_t fi = 0; fi < c.faces.size(); ++fi) ++by_root[sets.find(nv + fi)].faces;
    std::vector<ComponentStats> out;
    for (auto& [root, s] : by_root) {
        s.euler = Int(s.vertices) - Int(s.edges) + Int(s.faces);
        if (s.euler % 2 != 0)
            throw InvariantViolation("component with odd Euler characteristic " + to_string(s.euler));
        s.genus = 1 - s.euler / 2;
        out.push_back(s);
    }
    return out;
}

int components(const CellComplex& c) { return static_cast<int>(component_stats(c).size()); }

std::vector<Int> genus_per_component(const CellComplex& c) {
    std::vector<Int> out;
    for (const auto& s : component_stats(c)) out.push_back(s.genus);
    return out;
}

std::vector<int> face_sizes(const CellComplex& c) {
    std::vector<int> out;
    for (const Face& f : c.faces) out.push_back(static_cast<int>(f.boundary.size()));
    std::sort(out.begin(), out.end());
    return out;
}

int bigon_count(const CellComplex& c) {
    int n = 0;
    for (const Face& f : c.faces) n += f.boundary.size() == 2 && f.boundary[0].edge != f.boundary[1].edge;
    return n;
}

bool has_bigon(const CellComplex& c) { return bigon_count(c) > 0; }

FaceSizeStats face_size_stats(const CellComplex& c) {
    FaceSizeStats s;
    auto sizes = face_sizes(c);
    if (sizes.empty()) return s;
    s.smallest = sizes.front();
    s.largest = sizes.back();
    s.smallest_count = static_cast<int>(std::count(sizes.begin(), sizes.end(), s.smallest));
    s.largest_count = static_cast<int>(std::count(sizes.begin(), sizes.end(), s.largest));
    return s;
}

std::string conjugate_word(Family m, const std::string& word) {
    std::string w = word;
    for (char& ch : w) {
        if (m == Family::Per1) ch = ch == '0' ? '1' : '0';
        else if (ch != '1') ch = ch == '0' ? '2' : '0';
    }
    return least_rotation(w);
}

std::vector<int> conjugate_faces(const CellComplex& c) {
    using Key = std::tuple<std::vector<std::string>, std::vector<std::pair<std::uint64_t, std::uint64_t>>,
                           std::vector<std::string>>;
    auto key_of = [&](const Face& f, bool conj) {
        std::vector<std::string> cls;
        for (const auto& w : f.cls.members()) cls.push_back(conj ? conjugate_word(c.family, w) : w);
        std::sort(cls.begin(), cls.end());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
        for (const Side& s : f.boundary) {
            AnglePair pair = edge_of(c, s).component.pair;
            if (conj) pair = conjugate_pair(pair);
            edges.emplace_back(pair.low_num, pair.high_num);
        }
        std::sort(edges.begin(), edges.end());
        std::vector<std::string> attached;
        for (int v : f.attached_vertices) {
            const std::string& w = c.vertices.at(static_cast<std::size_t>(v)).label;
            attached.push_back(conj ? conjugate_word(c.family, w) : w);
        }
        std::sort(attached.begin(), attached.end());
        return Key{cls, edges, attached};
    };
    std::map<Key, int> index;
    for (const Face& f : c.faces) index.emplace(key_of(f, false), f.id);
    std::vector<int> out;
    for (const Face& f : c.faces) {
        auto it = index.find(key_of(f, true));
        out.push_back(it == index.end() ? -1 : it->second);
    }
    return out;
}

std::vector<std::string> conjugation_violations(const CellComplex& c) {
    std::vector<std::string> out;
    auto image = conjugate_faces(c);
    std::vector<int> hits(c.faces.size(), 0);
    for (std::size_t i = 0; i < image.size(); ++i) {
        const Face& f = c.faces[i];
        if (image[i] < 0) {
            out.push_back("face " + std::to_string(i) + " " + f.cls.str() + " has no conjugate face");
            continue;
        }
        ++hits[static_cast<std::size_t>(image[i])];
        if (c.family == Family::Per1 && image[i] != static_cast<int>(i))
            out.push_back("face " + std::to_string(i) + " " + f.cls.str() + " is not fixed by conjugation");
    }
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (hits[i] > 1) out.push_back("face " + std::to_string(i) + " is the conjugate of several faces");
    }
    return out;
}

std::string canonical_form(const CellComplex& c, CanonicalOptions opts) {
    std::ostringstream os;
    os << to_string(c.family) << ";p=" << c.period << ";V=";
    std::vector<std::string> vlabels;
    for (const Vertex& v : c.vertices) vlabels.push_back(v.label);
    std::sort(vlabels.begin(), vlabels.end());
    os << join(vlabels, ",") << ";E=";
    std::vector<std::string> erecs;
    for (const Edge& e : c.edges) {
        const std::string& a = c.vertices.at(static_cast<std::size_t>(e.endpoints[0])).label;
        const std::string& b = c.vertices.at(static_cast<std::size_t>(e.endpoints[1])).label;
        erecs.push_back(edge_key(e) + ":" + a + "|" + b);
    }
    std::sort(erecs.begin(), erecs.end());
    os << join(erecs, ",") << ";F=";
    std::vector<std::string> frecs;
    for (const Face& f : c.faces) {
        std::vector<std::string> tokens;
        for (const Side& s : f.boundary) tokens.push_back(side_token(c, s));
        bool relax = opts.relax_singleton_faces && f.cls.size() == 1;
        if (relax) {
            for (auto& t : tokens) t.pop_back();
            std::sort(tokens.begin(), tokens.end());
        } else {
            tokens = least_token_rotation(tokens);
        }
        std::vector<std::string> attached;
        for (int v : f.attached_vertices) attached.push_back(c.vertices.at(static_cast<std::size_t>(v)).label);
        std::sort(attached.begin(), attached.end());
        frecs.push_back(f.cls.str() + "[" + join(tokens, " ") + "]@" + join(attached, ",") + "#" +
                        std::to_string(f.local_degree));
    }
    std::sort(frecs.begin(), frecs.end());
    os << join(frecs, ",");
    return os.str();
}

bool isomorphic(const CellComplex& a, const CellComplex& b, CanonicalOptions opts) {
    return canonical_form(a, opts) == canonical_form(b, opts);
}

}  // namespace mcc
