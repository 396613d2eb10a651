#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "mcc/builders.hpp"
#include "mcc/cli.hpp"
#include "mcc/coding.hpp"
#include "mcc/counting.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!pass) detail << "; ";
            detail << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict table_reproduction() {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    auto csv = cli::cmd_table({2, 15}, cli::Format::Csv);
    auto mismatches = counting::compare_with_reference(counting::count_row, 2, 15);
    double s = seconds_since(t0);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    int cells = 0;
    for (int p = 2; std::getline(in, line); ++p) {
        std::ostringstream expect;
        auto cols = counting::columns(*counting::reference_row(p));
        for (std::size_t i = 0; i < cols.size(); ++i) expect << (i ? "," : "") << to_string(cols[i]);
        v.require(line == expect.str(), "row " + std::to_string(p) + " differs");
        cells += static_cast<int>(cols.size()) - 1;
    }
    v.require(mismatches.empty(), std::to_string(mismatches.size()) + " mismatched cells");
    v.require(cells == 140, "expected 140 cells, compared " + std::to_string(cells));
    v.require(s < 5, "too slow");
    if (v.pass) v.detail << cells << " cells match in " << s << " s";
    return v;
}

Verdict structural_counts() {
    Verdict v;
    auto t0 = std::chrono::steady_clock::now();
    for (Family m : {Family::Per1, Family::Per2}) {
        for (int p = 3; p <= 14; ++p) {
            auto c = build(m, p);
            std::string at = to_string(m) + " p=" + std::to_string(p);
            v.require(validate(c).ok(), at + " invalid");
            v.require(Int(c.vertices.size()) == counting::cyc(m, p), at + " V");
            v.require(Int(c.edges.size()) == counting::prim(m, p), at + " E");
            v.require(Int(c.faces.size()) == counting::faces(m, p), at + " F");
        }
    }
    double s = seconds_since(t0);
    v.require(s < 600, "too slow");
    if (v.pass) v.detail << "24 complexes in " << s << " s";
    return v;
}

Verdict genus_via_topology() {
    Verdict v;
    int connected = 0;
    for (Family m : {Family::Per1, Family::Per2}) {
        for (int p = 3; p <= 14; ++p) {
            auto c = build(m, p);
            std::string at = to_string(m) + " p=" + std::to_string(p);
            if (components(c) != 1) continue;
            ++connected;
            v.require(genus_per_component(c).front() == counting::genus(m, p), at);
        }
    }
    v.require(genus_per_component(telephone_per1(5)) == std::vector<Int>{2}, "g1(5)");
    v.require(genus_per_component(telephone_per1(6)) == std::vector<Int>{4}, "g1(6)");
    v.require(genus_per_component(telephone_per2(5)) == std::vector<Int>{0}, "g2(5)");
    auto d3 = telephone_per2(3);
    v.require(components(d3) == 2 && genus_per_component(d3) == std::vector<Int>{0, 0}, "per2 p=3 sheets");
    v.require(counting::genus(Family::Per2, 3) == -1, "per2 p=3 formula value");
    if (v.pass) v.detail << connected << " connected complexes agree; per2 p=3 has 2 spheres, formula -1";
    return v;
}

Verdict golden_examples() {
    using fixture::equal_up_to_rotation;
    using fixture::face_of;
    Verdict v;
    auto c5 = telephone_per1(5);
    using P = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    using T = std::vector<std::string>;
    using L = std::vector<std::uint64_t>;
    auto* a = face_of(c5, "00001");
    auto* b = face_of(c5, "00011");
    auto* c = face_of(c5, "00101");
    v.require(a && equal_up_to_rotation(fixture::face_pairs(c5, *a),
                                         P{{3, 4}, {5, 6}, {13, 18}, {25, 26}, {27, 28}, {15, 16}}),
              "per1 p=5 hexagon");
    v.require(b && equal_up_to_rotation(fixture::face_tokens(c5, *b),
                                         T{"3+", "7-", "14+", "24-", "28+", "7+", "15-", "24+"}),
              "per1 p=5 octagon B");
    v.require(c && equal_up_to_rotation(fixture::face_tokens(c5, *c),
                                         T{"5+", "11-", "13+", "20-", "26+", "11+", "14-", "20+"}),
              "per1 p=5 octagon C");

    auto d5 = telephone_per2(5);
    auto* da = face_of(d5, "02021");
    auto* db = face_of(d5, TernaryNecklace::from_word("02012").word());
    v.require(da && equal_up_to_rotation(fixture::face_labels(d5, *da), L{23, 3, 7, 25, 25, 27}), "per2 p=5 face A");
    v.require(db && equal_up_to_rotation(fixture::face_labels(d5, *db), L{5, 23, 27, 7, 3, 5}), "per2 p=5 face B");

    auto c6 = telephone_per1(6);
    auto sizes = face_sizes(c6);
    v.require(sizes == std::vector<int>{5, 7, 8, 8, 12}, "per1 p=6 face sizes");
    auto* f7 = face_of(c6, "000111");
    auto* f11 = face_of(c6, "001011");
    v.require(f7 && is_reflexive(f7->cls), "<7> reflexive");
    v.require(f11 && !is_reflexive(f11->cls), "<11> non-reflexive");
    v.require(f11 && equal_up_to_rotation(fixture::vertex_cycle(c6, *f11),
                                           std::vector<unsigned long>{11, 3, 23, 5, 15, 13, 7}),
              "<11> vertex cycle");
    if (v.pass) {
        v.detail << "sigma_5_1 sizes 6,8,8; sigma_5_2 hexagons with doubled 5 and 25; sigma_6_1 sizes "
                    "5,7,8,8,12 counted over full boundary cycles (2E = 40)";
    }
    return v;
}

Verdict algorithm_equivalence() {
    Verdict v;
    for (int p = 3; p <= 12; ++p) {
        auto t = telephone_per1(p);
        auto b = bar_per1(p);
        v.require(validate(b).ok(), "bar p=" + std::to_string(p) + " invalid");
        v.require(isomorphic(t, b, {.relax_singleton_faces = true}), "p=" + std::to_string(p));
    }
    if (v.pass) v.detail << "p=3..12 isomorphic";
    return v;
}

Verdict oracle_equivalences() {
    Verdict v;
    for (int p = 2; p <= 16; ++p) {
        v.require(counting::cyc(Family::Per1, p) == Int(oracle::binary_necklaces(p).size()),
                  "cyc1 p=" + std::to_string(p));
        v.require(counting::q(Family::Per1, p) == oracle::reflexive_duos(p), "q1 p=" + std::to_string(p));
        if (p >= 3) {
            v.require(counting::cyc(Family::Per2, p) == Int(oracle::ternary_necklaces(p).size()),
                      "cyc2 p=" + std::to_string(p));
            v.require(counting::q(Family::Per2, p) == oracle::rotation_invariant_trios(p), "q2 p=" + std::to_string(p));
        }
    }
    int pairs = 0;
    for (int p = 2; p <= 14; ++p) {
        for (auto& pr : lavaurs_pairs(p)) {
            ++pairs;
            v.require(kneading_of_angle(pr.low()) == kneading_of_angle(pr.high()),
                      "kneading of " + pr.low().str() + " and " + pr.high().str());
        }
        v.require(Int(lavaurs_pairs(p).size()) == counting::hyp(Family::Per1, p), "pair count p=" + std::to_string(p));
    }
    if (v.pass) v.detail << "necklace and Q counts p<=16; " << pairs << " Lavaurs pairs p<=14";
    return v;
}

Verdict no_bigons() {
    Verdict v;
    for (int p = 3; p <= 14; ++p) v.require(!has_bigon(telephone_per1(p)), "bigon at p=" + std::to_string(p));
    if (v.pass) v.detail << "p=3..14";
    return v;
}

Verdict per2_degrees() {
    Verdict v;
    for (int p = 4; p <= 14; ++p) {
        auto c = telephone_per2(p);
        Int sum = 0;
        for (auto& f : c.faces) {
            sum += face_local_degree(c, f);
            auto medians = median_vertices(c, f).size();
            v.require((medians == 1 || medians == 3) && medians == f.cls.size(),
                      "p=" + std::to_string(p) + " face " + f.cls.str());
        }
        v.require(sum == counting::cyc(Family::Per2, p), "degree sum p=" + std::to_string(p));
    }
    if (v.pass) v.detail << "p=4..14";
    return v;
}

Verdict coding_spot_checks() {
    Verdict v;
    auto bar = [](const std::string& w) { return rotate_digits(TernaryNecklace::from_word(w)).word(); };
    const std::string A = "02021";
    const std::string B = TernaryNecklace::from_word("02012").word();
    const std::vector<std::pair<int, std::string>> expected = {
        {3, bar(bar(B))}, {4, B},  {5, bar(B)},       {6, bar(bar(B))}, {7, bar(A)},  {8, B},
        {23, A},          {24, bar(bar(B))}, {25, bar(A)}, {26, bar(bar(A))}, {27, A}, {28, bar(A)},
    };
    v.require(basilica_itinerary(angle(3, 31)) == "20121", "itinerary of 3/31");
    v.require(basilica_label(angle(3, 31)).word() == least_rotation("21201"), "class of 3/31");
    for (auto& [k, word] : expected) {
        v.require(basilica_label(angle(k, 31)).word() == word, std::to_string(k) + "/31");
    }
    if (v.pass) v.detail << "3/31 -> 20121 ~ 21201; 12 labels over 31";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
        {"table reproduction", table_reproduction},
        {"structural counts", structural_counts},
        {"genus via topology", genus_via_topology},
        {"worked-example golden data", golden_examples},
        {"algorithm equivalence", algorithm_equivalence},
        {"oracle equivalences", oracle_equivalences},
        {"no bigons", no_bigons},
        {"per2 degree bookkeeping", per2_degrees},
        {"coding spot-checks", coding_spot_checks},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail << "exception: " << e.what();
        }
        failed += !v.pass;
        std::cout << "criterion " << i + 1 << " [" << (v.pass ? "PASS" : "FAIL") << "] " << criteria[i].first
                  << ": " << v.detail.str() << "\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
