#include "mcc/coding.hpp"

#include <map>

namespace mcc {

namespace {

using U128 = unsigned __int128;

/// Index n with a_{n+1} < k/d < a_n, where a_n = 1/(3 * 2^n) and k/d < 1/3.
int ladder_index(U128 k, U128 d) {
    int n = 0;
    while (3 * (U128{2} << n) * k < d) ++n;
    return n;
}

char basilica_digit(U128 k, U128 d) {
    if (3 * k > d && 3 * k < 2 * d) return '1';
    if (3 * k < d) return ladder_index(k, d) % 2 == 0 ? '0' : '2';
    return ladder_index(d - k, d) % 2 == 0 ? '2' : '0';
}

void reject_boundary(const RationalAngle& theta, const char* what) {
    if (theta.num() == 0 || theta.den() == 3)
        throw InvalidArgument(std::string(what) + ": angle " + theta.str() +
                              " lies on the partition boundary (0, 1/3 or 2/3)");
}

}  // namespace

std::string basilica_itinerary(const RationalAngle& theta) {
    reject_boundary(theta, "basilica_label");
    const int p = exact_period(theta);
    std::string out;
    RationalAngle x = theta;
    for (int i = 0; i < p; ++i) {
        if (x.num() == 0 || x.den() == 3)
            throw InvalidArgument("basilica_label: orbit of " + theta.str() + " meets the partition boundary");
        out.push_back(basilica_digit(x.num(), x.den()));
        x = double_angle(x);
    }
    return out;
}

TernaryNecklace basilica_label(const RationalAngle& theta) {
    std::string w = basilica_itinerary(theta);
    try {
        return TernaryNecklace::from_word(w);
    } catch (const InvalidArgument& e) {
        throw InvariantViolation("basilica itinerary " + w + " of " + theta.str() +
                                 " is not an admissible necklace: " + e.what());
    }
}

std::string antidoubling_itinerary(const RationalAngle& theta) {
    reject_boundary(theta, "antidoubling_label");
    std::string out;
    RationalAngle x = theta;
    do {
        if (x.num() == 0 || x.den() == 3)
            throw InvalidArgument("antidoubling_label: orbit of " + theta.str() + " meets a third");
        U128 k = x.num(), d = x.den();
        out.push_back(static_cast<char>('0' + static_cast<int>(3 * k / d)));
        x = angle(-2 * Int(x.num()), x.den());
    } while (x != theta);
    return out;
}

TernaryNecklace antidoubling_label(const RationalAngle& theta) {
    std::string w = antidoubling_itinerary(theta);
    try {
        return TernaryNecklace::from_word(w);
    } catch (const InvalidArgument& e) {
        throw InvariantViolation("anti-doubling itinerary " + w + " of " + theta.str() +
                                 " is not an admissible necklace: " + e.what());
    }
}

std::vector<CodingCensus> compare_codings(int p) {
    if (p < 2 || p > 30) throw InvalidArgument("compare_codings: period must be in [2, 30]");
    std::vector<CodingCensus> out;
    std::map<std::string, std::size_t> index;
    for (const auto& xi : enumerate_ternary(p)) {
        index.emplace(xi.word(), out.size());
        out.push_back({xi.word(), 0, 0});
    }
    auto bump = [&](const std::string& w, int CodingCensus::*field) {
        auto it = index.find(w);
        if (it == index.end()) throw InvariantViolation("coding produced non-enumerated necklace " + w);
        ++(out[it->second].*field);
    };
    const std::uint64_t mersenne = (std::uint64_t{1} << p) - 1;
    const std::uint64_t anti_den = p % 2 == 0 ? mersenne : mersenne + 2;
    for (std::uint64_t k = 1; k < anti_den; ++k) {
        RationalAngle theta = angle(k, anti_den);
        if (theta.den() == 3) continue;
        std::string w = antidoubling_itinerary(theta);
        if (static_cast<int>(w.size()) == p) bump(TernaryNecklace::from_word(w).word(), &CodingCensus::antidoubling_points);
    }
    for (std::uint64_t k = 1; k < mersenne; ++k) {
        RationalAngle theta = angle_over(k, p);
        if (theta.den() == 3 || exact_period(theta) != p) continue;
        bump(basilica_label(theta).word(), &CodingCensus::basilica_points);
    }
    return out;
}

}  // namespace mcc
