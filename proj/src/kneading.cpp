#include "mcc/kneading.hpp"

namespace mcc {

Kneading parse_kneading(const std::string& text) {
    if (text.empty() || text.back() != '*') throw InvalidArgument("kneading '" + text + "' must end with '*'");
    Kneading k{text.substr(0, text.size() - 1)};
    for (char c : k.prefix) {
        if (c != '0' && c != '1') throw InvalidArgument("kneading '" + text + "' has a non-binary digit");
    }
    return k;
}

Kneading kneading_of_angle(const RationalAngle& theta) {
    const int p = exact_period(theta);
    if (p < 2) throw InvalidArgument("kneading: angle " + theta.str() + " must have period >= 2");
    using U128 = unsigned __int128;
    const U128 d = theta.den();
    const U128 k = theta.num();
    // Compare 2x against theta and theta + 1, all scaled by the denominator.
    Kneading out;
    U128 x = k;
    for (int j = 0; j < p - 1; ++j) {
        U128 twice = 2 * x;
        if (twice == k || twice == k + d)
            throw InvariantViolation("kneading: orbit of " + theta.str() + " hits the diagonal early");
        out.prefix.push_back(twice > k && twice < k + d ? '1' : '0');
        x = twice % d;
    }
    U128 last = 2 * x;
    if (last != k && last != k + d)
        throw InvariantViolation("kneading: orbit of " + theta.str() + " misses the diagonal at step p-1");
    return out;
}

std::pair<BinaryNecklace, BinaryNecklace> perturbations(const Kneading& k) {
    try {
        return {BinaryNecklace::from_word(k.prefix + "0"), BinaryNecklace::from_word(k.prefix + "1")};
    } catch (const InvalidArgument& e) {
        throw InvalidArgument("perturbations of " + k.str() + " are not both of exact period " +
                              std::to_string(k.period()) + ": " + e.what());
    }
}

}  // namespace mcc
