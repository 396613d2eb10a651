#include "mcc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "mcc/coding.hpp"
#include "mcc/export.hpp"

namespace mcc::cli {

namespace {

using nlohmann::json;
using counting::CountRow;

json int_value(Int v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return static_cast<std::int64_t>(v);
    return to_string(v);
}

std::string format_name(Format f) {
    switch (f) {
        case Format::Json: return "json";
        case Format::Dot: return "dot";
        case Format::Csv: return "csv";
        case Format::Text: return "text";
    }
    return "";
}

void require_format(Format f, std::initializer_list<Format> allowed, const char* command) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
        throw InvalidArgument(std::string(command) + " does not support --format " + format_name(f));
}

bool in_reference(int p) { return p >= counting::kReferenceFirst && p <= counting::kReferenceLast; }

class Checks {
public:
    void add(std::string invariant, Family m, int p, bool pass, std::string detail = {}) {
        out_.push_back({std::move(invariant), to_string(m), p, pass, std::move(detail)});
    }
    void add(std::string invariant, int p, bool pass, std::string detail = {}) {
        out_.push_back({std::move(invariant), "", p, pass, std::move(detail)});
    }
    /// Runs `body`; any exception becomes a failed check.
    template <class Fn>
    void guard(const std::string& invariant, std::optional<Family> m, int p, Fn&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out_.push_back({invariant, m ? to_string(*m) : "", p, false, std::string("exception: ") + e.what()});
        }
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::vector<CheckResult> out_;
};

std::string expect_msg(const char* what, Int expected, Int actual) {
    return std::string(what) + " expected " + to_string(expected) + " got " + to_string(actual);
}

void verify_counts(Checks& checks, int p, const RowProvider& rows) {
    checks.guard("table", std::nullopt, p, [&] {
        if (!in_reference(p)) return;
        auto mismatches = counting::compare_with_reference(rows, p, p);
        std::string detail;
        for (const auto& m : mismatches)
            detail += (detail.empty() ? "" : "; ") + std::string("column ") + m.column + " expected " +
                      to_string(m.expected) + " got " + to_string(m.actual);
        checks.add("table", p, mismatches.empty(), detail);
    });
    checks.guard("cyc_equal", std::nullopt, p, [&] {
        if (p < 3) return;
        CountRow r = rows(p);
        checks.add("cyc_equal", p, r.cyc1 == r.cyc2, expect_msg("cyc2", r.cyc1, r.cyc2));
    });
}

void verify_necklaces(Checks& checks, Family m, int p, const CountRow& row) {
    const bool per1 = m == Family::Per1;
    if ((per1 && p < 2) || (!per1 && p < 3)) return;
    std::size_t count = 0, singletons = 0;
    if (per1) {
        for (const auto& nu : enumerate_binary(p)) {
            ++count;
            singletons += duo(nu).size() == 1;
        }
    } else {
        for (const auto& xi : enumerate_ternary(p)) {
            ++count;
            singletons += trio(xi).size() == 1;
        }
    }
    Int cyc = per1 ? row.cyc1 : row.cyc2;
    Int q = per1 ? row.q1 : row.q2;
    checks.add("necklace_count", m, p, Int(count) == cyc, expect_msg("cycles", cyc, Int(count)));
    checks.add("self_conjugate_count", m, p, Int(singletons) == q, expect_msg("singleton classes", q, Int(singletons)));
}

void verify_components(Checks& checks, Family m, int p, const CountRow& row) {
    if (m == Family::Per1) {
        auto all = all_components(p);
        std::size_t prim = 0;
        bool kneading_ok = true;
        for (const auto& h : all) {
            prim += h.primitive;
            if (kneading_of_angle(h.pair.low()) != kneading_of_angle(h.pair.high())) kneading_ok = false;
        }
        Int hyp = counting::hyp(Family::Per1, p);
        Int sat = counting::sat(Family::Per1, p);
        bool ok = Int(all.size()) == hyp && Int(prim) == row.prim1 && Int(all.size() - prim) == sat;
        checks.add("lavaurs_counts", m, p, ok,
                   "pairs " + std::to_string(all.size()) + "/" + to_string(hyp) + ", primitive " +
                       std::to_string(prim) + "/" + to_string(row.prim1) + ", satellite " +
                       std::to_string(all.size() - prim) + "/" + to_string(sat));
        checks.add("lavaurs_kneading", m, p, kneading_ok);
        return;
    }
    auto comps = primitive_components(Family::Per2, p);
    const std::uint64_t den = (std::uint64_t{1} << p) - 1;
    bool outside = std::all_of(comps.begin(), comps.end(), [den](const HyperbolicComponent& h) {
        auto out = [den](std::uint64_t k) { return 3 * k < den || 3 * k > 2 * den; };
        return out(h.pair.low_num) && out(h.pair.high_num);
    });
    checks.add("per2_components", m, p, Int(comps.size()) == row.prim2 && outside,
               expect_msg("components", row.prim2, Int(comps.size())));
}

void verify_complex(Checks& checks, Family m, int p, const CountRow& row) {
    const bool per1 = m == Family::Per1;
    CellComplex c = build(m, p, Algorithm::Telephone);
    ValidationReport report = validate(c);
    std::string errs;
    for (std::size_t i = 0; i < report.errors.size() && i < 5; ++i) errs += (i ? "; " : "") + report.errors[i];
    checks.add("validate", m, p, report.ok(), errs);

    Int cyc = per1 ? row.cyc1 : row.cyc2;
    Int prim = per1 ? row.prim1 : row.prim2;
    Int f = per1 ? row.f1 : row.f2;
    Int g = per1 ? row.g1 : row.g2;
    bool counts_ok = Int(c.vertices.size()) == cyc && Int(c.edges.size()) == prim && Int(c.faces.size()) == f;
    checks.add("cell_counts", m, p, counts_ok,
               "V=" + std::to_string(c.vertices.size()) + "/" + to_string(cyc) + " E=" + std::to_string(c.edges.size()) +
                   "/" + to_string(prim) + " F=" + std::to_string(c.faces.size()) + "/" + to_string(f));

    auto comps = component_stats(c);
    if (comps.size() == 1) {
        checks.add("genus", m, p, comps[0].genus == g, expect_msg("genus", g, comps[0].genus));
    } else {
        bool spheres = std::all_of(comps.begin(), comps.end(), [](const ComponentStats& s) { return s.genus == 0; });
        Int formal = 1 - euler(c) / 2;
        bool expected = !per1 && p == 3 && comps.size() == 2 && spheres && formal == g;
        checks.add("genus", m, p, expected,
                   "disconnected: " + std::to_string(comps.size()) + " components, genus " +
                       (spheres ? std::string("0 each") : std::string("not all 0")) + ", formal value " +
                       to_string(formal));
    }

    Int degrees = 0;
    for (const Face& face : c.faces) degrees += face_local_degree(c, face);
    checks.add("local_degree_sum", m, p, degrees == cyc, expect_msg("degree sum", cyc, degrees));

    auto conj = conjugation_violations(c);
    checks.add("conjugation_symmetry", m, p, conj.empty(), conj.empty() ? "" : conj.front());

    if (per1) {
        checks.add("no_bigons", m, p, !has_bigon(c), std::to_string(bigon_count(c)) + " bigons");
        auto knead = kneading_adjacency_violations(c);
        checks.add("kneading_adjacency", m, p, knead.empty(), knead.empty() ? "" : knead.front());
        CellComplex bar = bar_per1(p);
        bool bar_valid = validate(bar).ok();
        bool iso = isomorphic(c, bar, {.relax_singleton_faces = true});
        bool strict = isomorphic(c, bar);
        checks.add("bar_equivalence", m, p, bar_valid && iso,
                   std::string(strict ? "labeled isomorphism" : "isomorphic up to reflexive face multisets") +
                       (bar_valid ? "" : ", bar complex invalid"));
    }
}

void verify_codings(Checks& checks, int p) {
    if (p < 2) return;
    checks.guard("basilica_semiconjugacy", Family::Per2, p, [&] {
        const std::uint64_t den = (std::uint64_t{1} << p) - 1;
        bool ok = true;
        for (std::uint64_t k = 1; k < den && ok; ++k) {
            RationalAngle theta = angle_over(k, p);
            if (theta.den() == 3 || exact_period(theta) != p) continue;
            std::string a = basilica_itinerary(theta);
            std::string b = basilica_itinerary(double_angle(theta));
            ok = b == a.substr(1) + a.front();
        }
        checks.add("basilica_semiconjugacy", Family::Per2, p, ok);
    });
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

bool is_real(const CellComplex& c, const Edge& e) {
    return e.component.pair.low_num + e.component.pair.high_num == (std::uint64_t{1} << c.period) - 1;
}

std::size_t count_roots(UnionFind& uf, const std::vector<bool>& member) {
    std::size_t roots = 0;
    for (std::size_t v = 0; v < member.size(); ++v) roots += member[v] && uf.find(v) == v;
    return roots;
}

std::size_t real_edge_components(const CellComplex& c) {
    UnionFind uf(c.vertices.size());
    std::vector<bool> member(c.vertices.size(), false);
    for (const Vertex& v : c.vertices) {
        if (conjugate_word(c.family, v.label) == v.label) member[static_cast<std::size_t>(v.id)] = true;
    }
    for (const Edge& e : c.edges) {
        if (!is_real(c, e)) continue;
        auto a = static_cast<std::size_t>(e.endpoints[0]);
        auto b = static_cast<std::size_t>(e.endpoints[1]);
        member[a] = member[b] = true;
        uf.unite(a, b);
    }
    return count_roots(uf, member);
}

std::size_t real_axis_components(const CellComplex& c) {
    const std::size_t nv = c.vertices.size();
    UnionFind uf(nv + c.faces.size());
    std::vector<bool> member(nv + c.faces.size(), false);
    for (const Vertex& v : c.vertices) {
        if (conjugate_word(c.family, v.label) == v.label) member[static_cast<std::size_t>(v.id)] = true;
    }
    for (const Edge& e : c.edges) {
        if (!is_real(c, e)) continue;
        auto a = static_cast<std::size_t>(e.endpoints[0]);
        auto b = static_cast<std::size_t>(e.endpoints[1]);
        member[a] = member[b] = true;
        uf.unite(a, b);
    }
    for (const Face& f : c.faces) {
        const std::size_t node = nv + static_cast<std::size_t>(f.id);
        member[node] = true;
        const std::size_t n = f.boundary.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Edge& cur = c.edges[static_cast<std::size_t>(f.boundary[i].edge)];
            const Edge& next = c.edges[static_cast<std::size_t>(f.boundary[(i + 1) % n].edge)];
            if (next.component.pair.low_num <= cur.component.pair.high_num) {
                auto v = static_cast<std::size_t>(side_head(c, f.boundary[i]));
                member[v] = true;
                uf.unite(node, v);
            }
            if (is_real(c, cur)) uf.unite(node, static_cast<std::size_t>(cur.endpoints[0]));
        }
    }
    return count_roots(uf, member);
}

bool m_is_per1(const ScanRow& r) { return r.family == Family::Per1; }

std::optional<Int> conjectured_largest(Family m, int p) {
    if (m == Family::Per1) {
        if (p < 5) return std::nullopt;
        return counting::capital_phi(p) + 2;
    }
    if (p == 5 || (p >= 9 && p % 2 == 1)) return counting::capital_phi(p);
    if (p >= 6 && p % 2 == 0) return counting::capital_phi(p) + 1 - counting::totient(p / 2) / 2;
    return std::nullopt;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open output file '" + path + "'");
    file << text;
    if (!file) throw Error("failed writing output file '" + path + "'");
}

}  // namespace

Range parse_range(const std::string& text) {
    auto bad = [&] { return InvalidArgument("invalid range '" + text + "' (expected A..B or N)"); };
    auto to_int = [&](const std::string& s) {
        if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), ::isdigit)) throw bad();
        return std::stoi(s);
    };
    auto dots = text.find("..");
    Range r;
    if (dots == std::string::npos) {
        r.first = r.last = to_int(text);
    } else {
        r.first = to_int(text.substr(0, dots));
        r.last = to_int(text.substr(dots + 2));
    }
    if (r.first > r.last) throw bad();
    return r;
}

Format parse_format(const std::string& text) {
    if (text == "json") return Format::Json;
    if (text == "dot") return Format::Dot;
    if (text == "csv") return Format::Csv;
    if (text == "text") return Format::Text;
    throw InvalidArgument("unknown format '" + text + "' (expected json, dot, csv or text)");
}

std::string cmd_table(Range range, Format format) {
    require_format(format, {Format::Csv, Format::Json, Format::Text}, "table");
    if (range.first < 2) throw InvalidArgument("table rows start at p = 2");
    std::vector<CountRow> rows;
    for (int p = range.first; p <= range.last; ++p) rows.push_back(counting::count_row(p));
    const auto& names = counting::column_names();
    std::ostringstream os;
    if (format == Format::Csv) {
        for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << names[i];
        os << "\n";
        for (const auto& r : rows) {
            auto cols = counting::columns(r);
            for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << to_string(cols[i]);
            os << "\n";
        }
    } else if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj;
            auto cols = counting::columns(r);
            for (std::size_t i = 0; i < cols.size(); ++i) obj[names[i]] = int_value(cols[i]);
            obj["beyond_reference"] = !in_reference(r.p);
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < names.size(); ++i) os << (i ? " " : "") << std::setw(8) << names[i];
        os << "\n";
        for (const auto& r : rows) {
            auto cols = counting::columns(r);
            for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? " " : "") << std::setw(8) << to_string(cols[i]);
            if (!in_reference(r.p)) os << "  (beyond reference)";
            os << "\n";
        }
    }
    return os.str();
}

BuildResult cmd_build(Family m, int p, Algorithm a, Format format) {
    require_format(format, {Format::Json, Format::Dot, Format::Text}, "build");
    BuildResult r{build(m, p, a), {}, {}};
    r.report = validate(r.complex);
    switch (format) {
        case Format::Json: r.rendered = to_json(r.complex); break;
        case Format::Dot: r.rendered = to_dot(r.complex); break;
        default: r.rendered = to_text(r.complex); break;
    }
    return r;
}

std::vector<CheckResult> cmd_verify(Range range, const RowProvider& rows) {
    if (range.first < 1 || range.last > kMaxVerifyPeriod)
        throw InvalidArgument("verify supports periods 1.." + std::to_string(kMaxVerifyPeriod));
    Checks checks;
    for (int p = range.first; p <= range.last; ++p) {
        if (p < 2) continue;
        verify_counts(checks, p, rows);
        CountRow row;
        try {
            row = rows(p);
        } catch (const std::exception& e) {
            checks.add("count_row", p, false, std::string("exception: ") + e.what());
            continue;
        }
        for (Family m : {Family::Per1, Family::Per2}) {
            checks.guard("necklaces", m, p, [&] { verify_necklaces(checks, m, p, row); });
            checks.guard("components", m, p, [&] { verify_components(checks, m, p, row); });
            if (p >= 3) checks.guard("complex", m, p, [&] { verify_complex(checks, m, p, row); });
        }
        verify_codings(checks, p);
    }
    return checks.take();
}

std::string render_checks(const std::vector<CheckResult>& checks, Format format) {
    require_format(format, {Format::Text, Format::Json, Format::Csv}, "verify");
    std::ostringstream os;
    std::size_t failed = std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back({{"invariant", c.invariant}, {"family", c.family}, {"p", c.p}, {"pass", c.pass}, {"detail", c.detail}});
        json doc = {{"checks", arr}, {"total", checks.size()}, {"failed", failed}};
        os << doc.dump(2) << "\n";
    } else if (format == Format::Csv) {
        os << "invariant,family,p,pass,detail\n";
        for (const auto& c : checks)
            os << c.invariant << "," << c.family << "," << c.p << "," << (c.pass ? "pass" : "fail") << ","
               << csv_escape(c.detail) << "\n";
    } else {
        for (const auto& c : checks) {
            os << (c.pass ? "PASS " : "FAIL ") << c.invariant;
            if (!c.family.empty()) os << " " << c.family;
            os << " p=" << c.p;
            if (!c.detail.empty()) os << ": " << c.detail;
            os << "\n";
        }
        os << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
    }
    return os.str();
}

ScanRow scan_period(Family m, int p) {
    CellComplex c = build(m, p, Algorithm::Telephone);
    ScanRow row;
    row.family = m;
    row.p = p;
    row.bigons = bigon_count(c);
    FaceSizeStats s = face_size_stats(c);
    row.smallest = s.smallest;
    row.smallest_count = s.smallest_count;
    row.largest = s.largest;
    row.largest_count = s.largest_count;
    row.conjectured_largest = conjectured_largest(m, p);
    for (const Face& f : c.faces) {
        if (f.cls.size() == 1) {
            ++row.reflexive_faces;
        } else {
            int n = static_cast<int>(f.boundary.size());
            if (!row.smallest_irreflexive || n < *row.smallest_irreflexive) row.smallest_irreflexive = n;
        }
    }
    auto image = conjugate_faces(c);
    for (const Face& f : c.faces) {
        if (static_cast<int>(f.boundary.size()) != row.largest) continue;
        int partner = image[static_cast<std::size_t>(f.id)];
        if (partner < 0 || partner >= f.id) ++row.largest_count_mod_conjugation;
    }
    if (m == Family::Per1) {
        row.real_edge_components = static_cast<int>(real_edge_components(c));
        row.real_axis_components = static_cast<int>(real_axis_components(c));
    }
    if (m == Family::Per1 && row.bigons > 0) row.flags.push_back("bigon present");
    if (row.conjectured_largest && Int(row.largest) != *row.conjectured_largest)
        row.flags.push_back("largest face " + std::to_string(row.largest) + " differs from conjectured " +
                            to_string(*row.conjectured_largest));
    int distinct_largest = m == Family::Per1 ? row.largest_count : row.largest_count_mod_conjugation;
    if (distinct_largest > 1)
        row.flags.push_back("largest face not unique (" + std::to_string(distinct_largest) +
                            (m == Family::Per1 ? ")" : " up to conjugation)"));
    if (row.real_axis_components && *row.real_axis_components != 1)
        row.flags.push_back("real-axis graph has " + std::to_string(*row.real_axis_components) + " components");
    return row;
}

std::string cmd_scan(Range range, const std::vector<Family>& families, Format format) {
    require_format(format, {Format::Text, Format::Json, Format::Csv}, "scan");
    if (range.first < 3 || range.last > kMaxBuildPeriod)
        throw InvalidArgument("scan supports periods 3.." + std::to_string(kMaxBuildPeriod));
    std::vector<ScanRow> rows;
    for (Family m : families)
        for (int p = range.first; p <= range.last; ++p) rows.push_back(scan_period(m, p));
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    auto opt_str = [](const auto& v) -> std::string {
        if (!v) return "-";
        std::ostringstream s;
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Int>) s << to_string(*v);
        else s << *v;
        return s.str();
    };
    std::ostringstream os;
    if (format == Format::Json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"family", to_string(r.family)},
                           {"p", r.p},
                           {"bigons", r.bigons},
                           {"smallest", r.smallest},
                           {"smallest_count", r.smallest_count},
                           {"largest", r.largest},
                           {"largest_count", r.largest_count},
                           {"conjectured_largest", r.conjectured_largest ? int_value(*r.conjectured_largest) : json(nullptr)},
                           {"reflexive_faces", r.reflexive_faces},
                           {"smallest_irreflexive", opt(r.smallest_irreflexive)},
                           {"largest_count_mod_conjugation", r.largest_count_mod_conjugation},
                           {"real_edge_components", opt(r.real_edge_components)},
                           {"real_axis_components", opt(r.real_axis_components)},
                           {"flags", r.flags}});
        }
        os << arr.dump(2) << "\n";
    } else if (format == Format::Csv) {
        os << "family,p,bigons,smallest,smallest_count,largest,largest_count,conjectured_largest,reflexive_faces,"
              "smallest_irreflexive,largest_count_mod_conjugation,real_edge_components,real_axis_components,flags\n";
        for (const auto& r : rows) {
            std::string flags;
            for (const auto& f : r.flags) flags += (flags.empty() ? "" : "; ") + f;
            os << to_string(r.family) << "," << r.p << "," << r.bigons << "," << r.smallest << "," << r.smallest_count
               << "," << r.largest << "," << r.largest_count << "," << opt_str(r.conjectured_largest) << ","
               << r.reflexive_faces << "," << opt_str(r.smallest_irreflexive) << ","
               << r.largest_count_mod_conjugation << "," << opt_str(r.real_edge_components) << ","
               << opt_str(r.real_axis_components) << "," << csv_escape(flags) << "\n";
        }
    } else {
        for (const auto& r : rows) {
            os << to_string(r.family) << " p=" << r.p << ": bigons " << r.bigons << ", smallest " << r.smallest << " (x"
               << r.smallest_count << "), largest " << r.largest << " (x" << r.largest_count << "), conjectured "
               << opt_str(r.conjectured_largest) << ", reflexive faces " << r.reflexive_faces
               << ", smallest irreflexive " << opt_str(r.smallest_irreflexive);
            if (m_is_per1(r)) {
                os << ", real-edge components " << *r.real_edge_components << ", real-axis components "
                   << *r.real_axis_components;
            }
            for (const auto& f : r.flags) os << "\n  flag: " << f;
            os << "\n";
        }
    }
    return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cell decompositions of marked cycle curves over Per1(0) and Per2(0)"};
    app.require_subcommand(1);

    std::string family, range, algorithm = "telephone", format, out_path;
    std::optional<int> period;

    auto* table = app.add_subcommand("table", "Closed-form count table (CSV by default)");
    table->add_option("--range", range, "Periods A..B (default 2..15)");
    table->add_option("--period", period, "Single period");

    auto* buildc = app.add_subcommand("build", "Build, validate and export one complex");
    buildc->add_option("--family", family, "per1 or per2")->required();
    buildc->add_option("--period", period, "Period p >= 3")->required();
    buildc->add_option("--algorithm", algorithm, "telephone or bar (per1 only)");

    auto* verify = app.add_subcommand("verify", "Check every invariant over a range of periods");
    verify->add_option("--range", range, "Periods A..B (default 3..12, at most 16)");
    verify->add_option("--period", period, "Single period");
    verify->add_option("--family", family, "per1 or per2 (default both)");

    auto* scan = app.add_subcommand("scan", "Face-size, bigon and real-axis statistics");
    scan->add_option("--range", range, "Periods A..B (default 5..10)");
    scan->add_option("--period", period, "Single period");
    scan->add_option("--family", family, "per1 or per2 (default both)");

    for (auto* sub : {table, buildc, verify, scan}) {
        sub->add_option("--format", format, "json, dot, csv or text");
        sub->add_option("--out", out_path, "Write to PATH instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto pick_range = [&](const char* fallback) {
        if (period && !range.empty()) throw InvalidArgument("use either --period or --range, not both");
        if (period) return Range{*period, *period};
        return parse_range(range.empty() ? fallback : range);
    };

    try {
        if (*table) {
            Range r = pick_range("2..15");
            write_output(cmd_table(r, format.empty() ? Format::Csv : parse_format(format)), out_path, out);
            if (r.last > counting::kReferenceLast || r.first < counting::kReferenceFirst)
                err << "note: rows outside p = 2..15 are computed values beyond the reference table\n";
            return kExitOk;
        }
        if (*buildc) {
            BuildResult b = cmd_build(parse_family(family), *period, parse_algorithm(algorithm),
                                      format.empty() ? Format::Json : parse_format(format));
            write_output(b.rendered, out_path, out);
            for (const auto& e : b.report.errors) err << "validation: " << e << "\n";
            return b.report.ok() ? kExitOk : kExitValidation;
        }
        if (*verify) {
            Format f = format.empty() ? Format::Text : parse_format(format);
            auto checks = cmd_verify(pick_range("3..12"));
            if (!family.empty()) {
                std::string keep = to_string(parse_family(family));
                std::erase_if(checks, [&](const CheckResult& c) { return !c.family.empty() && c.family != keep; });
            }
            write_output(render_checks(checks, f), out_path, out);
            bool ok = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
            return ok ? kExitOk : kExitValidation;
        }
        Range r = pick_range("5..10");
        std::vector<Family> families = {Family::Per1, Family::Per2};
        if (!family.empty()) families = {parse_family(family)};
        write_output(cmd_scan(r, families, format.empty() ? Format::Text : parse_format(format)), out_path, out);
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace mcc::cli
