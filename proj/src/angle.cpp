#include "mcc/angle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace mcc {

namespace {

using U128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<U128>(a) * b % m);
}

std::uint64_t mersenne(int p) {
    if (p < 1 || p > 63) throw OverflowError("2^" + std::to_string(p) + " - 1 does not fit in 64 bits");
    return (std::uint64_t{1} << p) - 1;
}

}  // namespace

std::string RationalAngle::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::strong_ordering operator<=>(const RationalAngle& a, const RationalAngle& b) {
    U128 lhs = static_cast<U128>(a.num_) * b.den_;
    U128 rhs = static_cast<U128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

RationalAngle angle(Int num, Int den) {
    if (den <= 0) throw InvalidArgument("angle: denominator must be positive");
    if (den % 2 == 0) throw InvalidArgument("angle: denominator " + to_string(den) + " is even");
    if (den > static_cast<Int>(INT64_MAX)) throw OverflowError("angle: denominator exceeds 63 bits");
    Int r = num % den;
    if (r < 0) r += den;
    auto n = static_cast<std::uint64_t>(r);
    auto d = static_cast<std::uint64_t>(den);
    std::uint64_t g = std::gcd(n, d);
    if (g == 0) g = 1;
    return RationalAngle(n / g, d / g);
}

RationalAngle parse_angle(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw InvalidArgument("angle '" + text + "' is not of the form num/den");
    long long n = 0, d = 0;
    auto parse = [&](std::string_view part, long long& out) {
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw InvalidArgument("angle '" + text + "' is not of the form num/den");
    };
    std::string_view view(text);
    parse(view.substr(0, slash), n);
    parse(view.substr(slash + 1), d);
    return angle(n, d);
}

RationalAngle double_angle(const RationalAngle& theta) { return angle(Int(theta.num()) * 2, theta.den()); }

RationalAngle conjugate(const RationalAngle& theta) {
    return angle(Int(theta.den()) - Int(theta.num()), theta.den());
}

int exact_period(const RationalAngle& theta) {
    const std::uint64_t d = theta.den();
    const std::uint64_t n0 = theta.num() % d;
    std::uint64_t n = n0;
    for (int p = 1;; ++p) {
        n = mulmod(n, 2, d);
        if (n == n0) return p;
    }
}

AngleOrbit orbit(const RationalAngle& theta) {
    AngleOrbit out;
    out.period = exact_period(theta);
    RationalAngle a = theta;
    for (int i = 0; i < out.period; ++i) {
        out.angles.push_back(a);
        a = double_angle(a);
    }
    auto least = std::min_element(out.angles.begin(), out.angles.end());
    std::rotate(out.angles.begin(), least, out.angles.end());
    return out;
}

std::uint64_t numerator_over(const RationalAngle& theta, int p) {
    std::uint64_t m = mersenne(p);
    U128 scaled = static_cast<U128>(theta.num()) * m;
    if (scaled % theta.den() != 0)
        throw InvalidArgument("angle " + theta.str() + " is not of the form k/(2^" + std::to_string(p) + "-1)");
    return static_cast<std::uint64_t>(scaled / theta.den());
}

RationalAngle angle_over(std::uint64_t k, int p) { return angle(k, mersenne(p)); }

std::string binary_cycle(const RationalAngle& theta) {
    int p = exact_period(theta);
    std::uint64_t k = numerator_over(theta, p);
    std::string bits(static_cast<std::size_t>(p), '0');
    for (int i = 0; i < p; ++i) {
        if ((k >> (p - 1 - i)) & 1U) bits[static_cast<std::size_t>(i)] = '1';
    }
    return bits;
}

}  // namespace mcc
