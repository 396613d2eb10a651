#include "mcc/builders.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "mcc/coding.hpp"

namespace mcc {

std::string to_string(Algorithm a) { return a == Algorithm::Telephone ? "telephone" : "bar"; }

Algorithm parse_algorithm(const std::string& s) {
    if (s == "telephone") return Algorithm::Telephone;
    if (s == "bar") return Algorithm::Bar;
    throw InvalidArgument("unknown algorithm '" + s + "' (expected telephone or bar)");
}

namespace {

void check_period(int p, const char* who) {
    if (p < 3) throw InvalidArgument(std::string(who) + ": period must be >= 3, got " + std::to_string(p));
    if (p > kMaxBuildPeriod)
        throw BudgetExceeded(std::string(who) + ": period is limited to " + std::to_string(kMaxBuildPeriod));
}

/// Vertices and edges without faces.
CellComplex skeleton(Family m, int p) {
    CellComplex c;
    c.family = m;
    c.period = p;
    std::map<std::string, int> index;
    auto add_vertex = [&](const std::string& w) {
        int id = static_cast<int>(c.vertices.size());
        index.emplace(w, id);
        c.vertices.push_back({id, w});
    };
    if (m == Family::Per1) {
        for (const auto& nu : enumerate_binary(p)) add_vertex(nu.word());
    } else {
        for (const auto& xi : enumerate_ternary(p)) add_vertex(xi.word());
    }
    for (auto& ev : edge_events(m, p)) {
        Edge e;
        e.id = static_cast<int>(c.edges.size());
        e.label = edge_label(m, ev.component);
        for (int k = 0; k < 2; ++k) {
            auto it = index.find(ev.side_labels[static_cast<std::size_t>(k)]);
            if (it == index.end())
                throw InvariantViolation("edge " + std::to_string(e.label) + " carries unknown necklace " +
                                         ev.side_labels[static_cast<std::size_t>(k)]);
            e.endpoints[static_cast<std::size_t>(k)] = it->second;
        }
        if (e.endpoints[0] == e.endpoints[1])
            throw InvariantViolation("edge " + std::to_string(e.label) + " joins a vertex to itself");
        e.component = std::move(ev.component);
        c.edges.push_back(std::move(e));
    }
    return c;
}

struct TracedFace {
    int start_vertex = 0;
    std::vector<Side> boundary;
};

/// The circular sweep shared by both telephone algorithms.
class Sweep {
public:
    explicit Sweep(const CellComplex& c)
        : c_(c), incident_(c.vertices.size()), lows_(c.vertices.size()), used_(2 * c.edges.size(), false) {
        for (const Edge& e : c.edges) {
            for (int v : e.endpoints) {
                incident_[static_cast<std::size_t>(v)].push_back(e.id);
                lows_[static_cast<std::size_t>(v)].push_back(e.component.pair.low_num);
            }
        }
    }

    std::vector<TracedFace> run() {
        std::vector<TracedFace> out;
        for (const Vertex& v : c_.vertices) {
            if (incident_[static_cast<std::size_t>(v.id)].empty()) continue;
            Side first = next_side(v.id, 0);
            if (used_[slot(first)]) continue;
            out.push_back(trace(v.id, first));
        }
        for (std::size_t s = 0; s < used_.size(); ++s) {
            if (!used_[s])
                throw InvariantViolation("edge " + std::to_string(c_.edges[s / 2].label) +
                                         " is never reached by the sweep");
        }
        return out;
    }

private:
    static std::size_t slot(const Side& s) { return 2 * static_cast<std::size_t>(s.edge) + (s.dir > 0 ? 0 : 1); }

    Side next_side(int v, std::uint64_t position) const {
        const auto& lows = lows_[static_cast<std::size_t>(v)];
        auto it = std::upper_bound(lows.begin(), lows.end(), position);
        std::size_t idx = it == lows.end() ? 0 : static_cast<std::size_t>(it - lows.begin());
        int e = incident_[static_cast<std::size_t>(v)][idx];
        const Edge& edge = c_.edges[static_cast<std::size_t>(e)];
        return {e, edge.endpoints[0] == v ? 1 : -1};
    }

    TracedFace trace(int start, Side first) {
        TracedFace face{start, {}};
        Side cur = first;
        const std::size_t limit = used_.size() + 1;
        while (true) {
            if (used_[slot(cur)])
                throw InvariantViolation("sweep revisits edge " + std::to_string(c_.edges[static_cast<std::size_t>(cur.edge)].label) +
                                         " before closing the face started at " +
                                         c_.vertices[static_cast<std::size_t>(start)].label);
            used_[slot(cur)] = true;
            face.boundary.push_back(cur);
            if (face.boundary.size() > limit) throw InvariantViolation("sweep does not terminate");
            int v = side_head(c_, cur);
            Side nxt = next_side(v, c_.edges[static_cast<std::size_t>(cur.edge)].component.pair.high_num);
            if (nxt == first) break;
            cur = nxt;
        }
        return face;
    }

    const CellComplex& c_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<std::uint64_t>> lows_;
    std::vector<bool> used_;
};

void number_faces(CellComplex& c) {
    for (std::size_t i = 0; i < c.faces.size(); ++i) c.faces[i].id = static_cast<int>(i);
}

/// Both consistent orientations of a cyclic edge sequence, if any.
std::vector<std::vector<Side>> orientations(const CellComplex& c, const std::vector<int>& edges) {
    std::vector<std::vector<Side>> out;
    if (edges.empty()) return out;
    for (int d0 : {1, -1}) {
        std::vector<Side> sides{{edges[0], d0}};
        bool ok = true;
        for (std::size_t i = 1; i < edges.size() && ok; ++i) {
            int head = side_head(c, sides.back());
            const Edge& e = c.edges[static_cast<std::size_t>(edges[i])];
            if (e.endpoints[0] == head) sides.push_back({e.id, 1});
            else if (e.endpoints[1] == head) sides.push_back({e.id, -1});
            else ok = false;
        }
        if (ok && side_head(c, sides.back()) == side_tail(c, sides.front())) out.push_back(std::move(sides));
    }
    return out;
}

}  // namespace

std::vector<EdgeEvent> edge_events(Family m, int p) {
    std::vector<EdgeEvent> out;
    for (auto& h : primitive_components(m, p)) {
        EdgeEvent ev;
        ev.side_labels = {angle_vertex_label(m, h.pair.low()), angle_vertex_label(m, h.pair.high())};
        ev.position = h.pair.low_num;
        ev.component = std::move(h);
        out.push_back(std::move(ev));
    }
    return out;
}

CellComplex telephone_per1(int p) {
    check_period(p, "telephone_per1");
    CellComplex c = skeleton(Family::Per1, p);
    for (auto& traced : Sweep(c).run()) {
        Face f;
        f.cls = duo(BinaryNecklace::from_word(c.vertices[static_cast<std::size_t>(traced.start_vertex)].label));
        f.boundary = std::move(traced.boundary);
        f.local_degree = static_cast<int>(f.cls.size());
        c.faces.push_back(std::move(f));
    }
    number_faces(c);
    return c;
}

CellComplex telephone_per2(int p) {
    if (p == 1 || p == 2)
        throw InvalidArgument("telephone_per2: periods 1 and 2 are exceptional and have no cell decomposition here");
    check_period(p, "telephone_per2");
    CellComplex c = skeleton(Family::Per2, p);
    c.metadata["face_labels"] =
        "conditional: classes are read off median vertices, assuming the bubble-ray and basilica codings agree "
        "under continuation";
    std::vector<bool> on_boundary(c.vertices.size(), false);
    for (auto& traced : Sweep(c).run()) {
        Face f;
        f.boundary = std::move(traced.boundary);
        for (const Side& s : f.boundary) on_boundary[static_cast<std::size_t>(side_tail(c, s))] = true;
        auto medians = median_vertices(c, f);
        if (medians.size() != 1 && medians.size() != 3)
            throw InvariantViolation("face started at " + c.vertices[static_cast<std::size_t>(traced.start_vertex)].label +
                                     " has " + std::to_string(medians.size()) + " median vertices");
        f.cls = trio(TernaryNecklace::from_word(c.vertices[static_cast<std::size_t>(medians.front())].label));
        f.local_degree = static_cast<int>(medians.size());
        c.faces.push_back(std::move(f));
    }
    std::map<CycleClass, std::vector<int>> isolated;
    for (const Vertex& v : c.vertices) {
        if (!on_boundary[static_cast<std::size_t>(v.id)])
            isolated[trio(TernaryNecklace::from_word(v.label))].push_back(v.id);
    }
    for (auto& [cls, verts] : isolated) {
        Face f;
        f.cls = cls;
        f.local_degree = static_cast<int>(cls.size());
        f.attached_vertices = verts;
        c.faces.push_back(std::move(f));
    }
    number_faces(c);
    return c;
}

std::vector<BarFace> bar_faces(int p) {
    check_period(p, "bar_per1");
    CellComplex c = skeleton(Family::Per1, p);
    std::vector<BarFace> out;
    std::map<std::string, std::size_t> face_of_word;
    for (const auto& nu : enumerate_binary(p)) {
        CycleClass cls = duo(nu);
        if (cls.representative() != nu.word()) continue;
        for (const auto& w : cls.members()) face_of_word[w] = out.size();
        out.push_back({cls, {}});
    }
    for (const Edge& e : c.edges) {
        auto [k0, k1] = perturbations(e.component.kneading);
        for (const auto& k : {k0, k1}) {
            BarFace& face = out.at(face_of_word.at(k.word()));
            bool barred = face.cls.size() == 2 && k.word() == face.cls.members().back();
            face.sides.push_back({e.label, barred, e.id});
        }
    }
    for (auto& face : out) {
        std::stable_sort(face.sides.begin(), face.sides.end(), [](const BarSide& a, const BarSide& b) {
            if (a.barred != b.barred) return a.barred;
            return a.label < b.label;
        });
    }
    return out;
}

CellComplex bar_per1(int p) {
    check_period(p, "bar_per1");
    CellComplex c = skeleton(Family::Per1, p);
    auto faces = bar_faces(p);

    std::vector<std::vector<std::vector<Side>>> candidates;
    for (const auto& bf : faces) {
        std::vector<int> edges;
        for (const auto& s : bf.sides) edges.push_back(s.edge);
        auto options = orientations(c, edges);
        if (options.empty())
            throw InvariantViolation("bar method: sides of face " + bf.cls.str() + " do not chain through shared vertices");
        candidates.push_back(std::move(options));
    }

    std::vector<int> choice(faces.size(), -1);
    std::vector<bool> used(2 * c.edges.size(), false);
    auto slot = [](const Side& s) { return 2 * static_cast<std::size_t>(s.edge) + (s.dir > 0 ? 0 : 1); };
    auto fits = [&](const std::vector<Side>& sides) {
        std::vector<std::size_t> taken;
        for (const Side& s : sides) taken.push_back(slot(s));
        std::sort(taken.begin(), taken.end());
        if (std::adjacent_find(taken.begin(), taken.end()) != taken.end()) return false;
        return std::none_of(taken.begin(), taken.end(), [&](std::size_t t) { return used[t]; });
    };
    auto mark = [&](const std::vector<Side>& sides, bool value) {
        for (const Side& s : sides) used[slot(s)] = value;
    };
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (candidates[i].size() == 1) {
            if (!fits(candidates[i][0]))
                throw InvariantViolation("bar method: face " + faces[i].cls.str() + " reuses a directed edge");
            mark(candidates[i][0], true);
            choice[i] = 0;
        }
    }
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < faces.size(); ++i)
        if (choice[i] < 0) open.push_back(i);
    auto solve = [&](auto&& self, std::size_t k) -> bool {
        if (k == open.size()) return true;
        std::size_t i = open[k];
        for (std::size_t opt = 0; opt < candidates[i].size(); ++opt) {
            if (!fits(candidates[i][opt])) continue;
            mark(candidates[i][opt], true);
            choice[i] = static_cast<int>(opt);
            if (self(self, k + 1)) return true;
            mark(candidates[i][opt], false);
        }
        choice[i] = -1;
        return false;
    };
    if (!solve(solve, 0)) throw InvariantViolation("bar method: no orientation satisfies gluing parity");

    for (std::size_t i = 0; i < faces.size(); ++i) {
        Face f;
        f.cls = faces[i].cls;
        f.boundary = candidates[i][static_cast<std::size_t>(choice[i])];
        f.local_degree = static_cast<int>(f.cls.size());
        c.faces.push_back(std::move(f));
    }
    number_faces(c);
    return c;
}

CellComplex build(Family m, int p, Algorithm a) {
    if (a == Algorithm::Bar) {
        if (m != Family::Per1) throw InvalidArgument("the bar method is only defined for per1");
        return bar_per1(p);
    }
    return m == Family::Per1 ? telephone_per1(p) : telephone_per2(p);
}

std::vector<std::string> kneading_adjacency_violations(const CellComplex& c) {
    std::vector<std::string> out;
    if (c.family != Family::Per1) return out;
    std::vector<std::vector<CycleClass>> adjacent(c.edges.size());
    for (const Face& f : c.faces)
        for (const Side& s : f.boundary) adjacent[static_cast<std::size_t>(s.edge)].push_back(f.cls);
    for (const Edge& e : c.edges) {
        auto [k0, k1] = perturbations(e.component.kneading);
        std::vector<CycleClass> expected = {duo(k0), duo(k1)};
        auto actual = adjacent[static_cast<std::size_t>(e.id)];
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        if (expected != actual)
            out.push_back("edge " + std::to_string(e.label) + " (" + e.component.kneading.str() +
                          ") borders the wrong faces");
    }
    return out;
}

}  // namespace mcc
