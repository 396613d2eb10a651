#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "mcc/builders.hpp"

namespace fixture {

inline std::string side_token(const mcc::CellComplex& c, const mcc::Side& s) {
    return std::to_string(c.edges[static_cast<std::size_t>(s.edge)].label) + (s.dir > 0 ? "+" : "-");
}

inline std::vector<std::string> face_tokens(const mcc::CellComplex& c, const mcc::Face& f) {
    std::vector<std::string> out;
    for (const auto& s : f.boundary) out.push_back(side_token(c, s));
    return out;
}

inline std::vector<std::uint64_t> face_labels(const mcc::CellComplex& c, const mcc::Face& f) {
    std::vector<std::uint64_t> out;
    for (const auto& s : f.boundary) out.push_back(c.edges[static_cast<std::size_t>(s.edge)].label);
    return out;
}

inline std::vector<std::pair<std::uint64_t, std::uint64_t>> face_pairs(const mcc::CellComplex& c,
                                                                       const mcc::Face& f) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& s : f.boundary) {
        const auto& pr = c.edges[static_cast<std::size_t>(s.edge)].component.pair;
        out.emplace_back(pr.low_num, pr.high_num);
    }
    return out;
}

/// Vertex words along the boundary, read as binary numbers.
inline std::vector<unsigned long> vertex_cycle(const mcc::CellComplex& c, const mcc::Face& f) {
    std::vector<unsigned long> out;
    for (const auto& s : f.boundary) {
        out.push_back(std::stoul(c.vertices[static_cast<std::size_t>(mcc::side_tail(c, s))].label, nullptr, 2));
    }
    return out;
}

template <class T>
bool equal_up_to_rotation(std::vector<T> a, const std::vector<T>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return false;
}

inline const mcc::Face* face_of(const mcc::CellComplex& c, const std::string& word) {
    for (const auto& f : c.faces) {
        if (f.cls.contains(word)) return &f;
    }
    return nullptr;
}

}  // namespace fixture
