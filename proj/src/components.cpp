#include "mcc/components.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

namespace mcc {

namespace {

std::uint64_t rotate_left(std::uint64_t k, int p) {
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    return ((k << 1) | (k >> (p - 1))) & mask;
}

bool has_exact_period(std::uint64_t k, int p, const std::vector<int>& proper_divisors) {
    const std::uint64_t mask = (std::uint64_t{1} << p) - 1;
    for (int d : proper_divisors) {
        std::uint64_t r = ((k << d) | (k >> (p - d))) & mask;
        if (r == k) return false;
    }
    return true;
}

std::vector<AnglePair> pair_period(int p, const std::vector<std::vector<AnglePair>>& lower) {
    enum Kind { Open, Close, Point };
    struct Event {
        RationalAngle at;
        Kind kind;
        std::uint64_t num;
    };
    std::vector<Event> events;
    std::vector<int> proper;
    for (int d = 1; d < p; ++d)
        if (p % d == 0) proper.push_back(d);
    const std::uint64_t den = (std::uint64_t{1} << p) - 1;
    for (std::uint64_t k = 1; k < den; ++k) {
        if (has_exact_period(k, p, proper)) events.push_back({angle_over(k, p), Point, k});
    }
    for (int n = 2; n < p; ++n) {
        for (const auto& c : lower[static_cast<std::size_t>(n)]) {
            events.push_back({c.low(), Open, 0});
            events.push_back({c.high(), Close, 0});
        }
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.at < b.at; });

    std::vector<AnglePair> out;
    std::vector<std::optional<std::uint64_t>> pending(1);
    for (const auto& e : events) {
        switch (e.kind) {
            case Open:
                pending.emplace_back();
                break;
            case Close:
                if (pending.back())
                    throw InvariantViolation("lavaurs pairing: region closed with an unpaired angle of period " +
                                             std::to_string(p));
                pending.pop_back();
                break;
            case Point:
                if (pending.back()) {
                    out.push_back({p, *pending.back(), e.num});
                    pending.back().reset();
                } else {
                    pending.back() = e.num;
                }
                break;
        }
    }
    if (pending.size() != 1 || pending.back())
        throw InvariantViolation("lavaurs pairing: imperfect matching at period " + std::to_string(p));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

const std::vector<AnglePair>& lavaurs_pairs(int p) {
    if (p < 2 || p > kMaxPairingPeriod)
        throw InvalidArgument("lavaurs_pairs: period must be in [2, " + std::to_string(kMaxPairingPeriod) + "]");
    static std::mutex mutex;
    static std::vector<std::vector<AnglePair>> cache(kMaxPairingPeriod + 1);
    static int computed = 1;
    std::lock_guard lock(mutex);
    while (computed < p) {
        ++computed;
        cache[static_cast<std::size_t>(computed)] = pair_period(computed, cache);
    }
    return cache[static_cast<std::size_t>(p)];
}

bool is_primitive_pair(const AnglePair& pair) {
    std::uint64_t k = pair.low_num;
    for (int i = 0; i < pair.period; ++i) {
        if (k == pair.high_num) return false;
        k = rotate_left(k, pair.period);
    }
    return true;
}

std::uint64_t display_label(const AnglePair& pair) {
    const std::uint64_t den = (std::uint64_t{1} << pair.period) - 1;
    auto dist = [den](std::uint64_t k) {
        std::int64_t v = 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(den);
        return v < 0 ? -v : v;
    };
    return dist(pair.high_num) > dist(pair.low_num) ? pair.high_num : pair.low_num;
}

std::uint64_t display_label(const HyperbolicComponent& h) { return display_label(h.pair); }

AnglePair conjugate_pair(const AnglePair& pair) {
    const std::uint64_t den = (std::uint64_t{1} << pair.period) - 1;
    return {pair.period, den - pair.high_num, den - pair.low_num};
}

std::vector<HyperbolicComponent> all_components(int p) {
    std::vector<HyperbolicComponent> out;
    for (const auto& pair : lavaurs_pairs(p)) {
        HyperbolicComponent h;
        h.period = p;
        h.pair = pair;
        h.primitive = is_primitive_pair(pair);
        h.kneading = kneading_of_angle(pair.low());
        if (kneading_of_angle(pair.high()) != h.kneading)
            throw InvariantViolation("component " + pair.low().str() + ", " + pair.high().str() +
                                     " has mismatched kneading sequences");
        h.label = display_label(pair);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HyperbolicComponent> primitive_components(Family m, int p) {
    std::vector<HyperbolicComponent> out;
    const std::uint64_t den = (std::uint64_t{1} << p) - 1;
    auto outside_wake = [den](std::uint64_t k) { return 3 * k < den || 3 * k > 2 * den; };
    for (auto& h : all_components(p)) {
        if (!h.primitive) continue;
        if (m == Family::Per2 && !(outside_wake(h.pair.low_num) && outside_wake(h.pair.high_num))) continue;
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace mcc
