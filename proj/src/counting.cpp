#include "mcc/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace mcc::counting {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) throw InvalidArgument(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
}

Int exact_div(Int num, Int den, const char* what) {
    if (den == 0 || num % den != 0) {
        throw InvariantViolation(std::string(what) + ": " + to_string(num) + " is not divisible by " +
                                 to_string(den));
    }
    return num / den;
}

class Memo {
public:
    template <class Fn>
    Int get(int family, int n, Fn&& compute) {
        {
            std::lock_guard lock(mutex_);
            auto it = table_.find({family, n});
            if (it != table_.end()) return it->second;
        }
        Int v = compute();
        std::lock_guard lock(mutex_);
        table_.emplace(std::make_pair(family, n), v);
        return v;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, Int> table_;
};

Memo& exact_points_memo() {
    static Memo memo;
    return memo;
}

}  // namespace

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Int mobius(std::int64_t n) {
    require_positive(n, "mobius");
    int sign = 1;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        n /= f;
        if (n % f == 0) return 0;
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

Int totient(std::int64_t n) {
    require_positive(n, "totient");
    std::int64_t result = n;
    for (std::int64_t f = 2; f * f <= n; ++f) {
        if (n % f != 0) continue;
        while (n % f == 0) n /= f;
        result -= result / f;
    }
    if (n > 1) result -= result / n;
    return result;
}

Int dirichlet(const ArithmeticFunction& f, const ArithmeticFunction& g, std::int64_t n) {
    require_positive(n, "dirichlet");
    Int sum = 0;
    for (std::int64_t d : divisors(n)) sum = checked_add(sum, checked_mul(f(n / d), g(d)));
    return sum;
}

Int points_div(Family m, int n) {
    require_positive(n, "points_div");
    Int two_n = pow2(n);
    if (m == Family::Per1) return checked_sub(two_n, 1);
    return n % 2 == 0 ? checked_sub(two_n, 1) : checked_add(two_n, 1);
}

Int points_exact(Family m, int n) {
    require_positive(n, "points_exact");
    return exact_points_memo().get(family_index(m), n, [&] {
        return dirichlet(mobius, [m](std::int64_t d) { return points_div(m, static_cast<int>(d)); }, n);
    });
}

Int cyc(Family m, int n) {
    require_positive(n, "cyc");
    // The critical 2-cycle 0 <-> infinity of Per2 lies off the circle and is not seen by the formula.
    if (m == Family::Per2 && n == 2) return 1;
    return exact_div(points_exact(m, n), n, "cyc");
}

Int hyp(Family m, int n) {
    require_positive(n, "hyp");
    if (n == 1) return 1;
    return exact_div(points_exact(m, n), m == Family::Per1 ? 2 : 3, "hyp");
}

Int sat(Family m, int n) {
    if (n < 2) throw InvalidArgument("sat: period must be >= 2, got " + std::to_string(n));
    if (m == Family::Per2 && n == 2) return 0;
    auto h = [m](std::int64_t d) { return hyp(m, static_cast<int>(d)); };
    return checked_sub(dirichlet(totient, h, n), hyp(m, n));
}

Int prim(Family m, int n) {
    if (n < 2) throw InvalidArgument("prim: period must be >= 2, got " + std::to_string(n));
    return checked_sub(hyp(m, n), sat(m, n));
}

Int mobius_recursion_closed_form(int ell, const ArithmeticFunction& g_tilde, std::int64_t n) {
    require_positive(n, "mobius_recursion_closed_form");
    if (n % ell != 0) return 0;
    std::int64_t k = n / ell;
    Int sum = 0;
    for (std::int64_t d : divisors(k)) {
        if ((k / d) % ell == 0) continue;
        sum = checked_add(sum, checked_mul(mobius(k / d), g_tilde(d)));
    }
    return sum;
}

Int mobius_recursion_tilde(int ell, const ArithmeticFunction& g_tilde, std::int64_t n) {
    require_positive(n, "mobius_recursion_tilde");
    Int total = 0;
    while (n % ell == 0) {
        n /= ell;
        total = checked_add(total, g_tilde(n));
    }
    return total;
}

Int q(Family m, int n) {
    require_positive(n, "q");
    if (m == Family::Per1) {
        if (n % 2 != 0) return 0;
        auto g = [](std::int64_t d) { return pow2(static_cast<int>(d)); };
        return exact_div(mobius_recursion_closed_form(2, g, n), n, "q");
    }
    if (n == 2) return 1;
    if (n % 3 != 0) return 0;
    auto g = [](std::int64_t d) { return checked_mul(2, points_div(Family::Per2, static_cast<int>(d))); };
    return exact_div(mobius_recursion_closed_form(3, g, n), n, "q");
}

Int faces(Family m, int n) {
    int mi = family_index(m);
    return exact_div(checked_add(cyc(m, n), checked_mul(mi, q(m, n))), mi + 1, "faces");
}

Int genus(Family m, int n) {
    if (m == Family::Per1) {
        Int num = checked_sub(checked_sub(checked_mul(2, prim(m, n)), checked_mul(3, cyc(m, n))), q(m, n));
        return 1 + exact_div(num, 4, "genus");
    }
    Int num = checked_sub(checked_sub(checked_mul(3, prim(m, n)), checked_mul(4, cyc(m, n))),
                          checked_mul(2, q(m, n)));
    return 1 + exact_div(num, 6, "genus");
}

Int capital_phi(int p) {
    require_positive(p, "capital_phi");
    Int sum = 0;
    for (int k = 1; k < p; ++k) sum = checked_add(sum, totient(k));
    return sum;
}

CountRow count_row(int p) {
    CountRow r;
    r.p = p;
    r.cyc1 = cyc(Family::Per1, p);
    r.cyc2 = cyc(Family::Per2, p);
    r.prim1 = prim(Family::Per1, p);
    r.prim2 = prim(Family::Per2, p);
    r.q1 = q(Family::Per1, p);
    r.q2 = q(Family::Per2, p);
    r.f1 = faces(Family::Per1, p);
    r.f2 = faces(Family::Per2, p);
    r.g1 = genus(Family::Per1, p);
    r.g2 = genus(Family::Per2, p);
    return r;
}

const std::vector<CountRow>& reference_table() {
    static const std::vector<CountRow> rows = {
        {2, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0},
        {3, 2, 2, 1, 0, 0, 2, 1, 2, 0, -1},
        {4, 3, 3, 3, 2, 1, 0, 2, 1, 0, 0},
        {5, 6, 6, 11, 6, 0, 0, 3, 2, 2, 0},
        {6, 9, 9, 20, 14, 1, 0, 5, 3, 4, 2},
        {7, 18, 18, 57, 36, 0, 0, 9, 6, 16, 7},
        {8, 30, 30, 108, 72, 2, 0, 16, 10, 32, 17},
        {9, 56, 56, 240, 158, 0, 2, 28, 20, 79, 42},
        {10, 99, 99, 472, 316, 3, 0, 51, 33, 162, 93},
        {11, 186, 186, 1013, 672, 0, 0, 93, 62, 368, 213},
        {12, 335, 335, 1959, 1306, 5, 2, 170, 113, 728, 430},
        {13, 630, 630, 4083, 2718, 0, 0, 315, 210, 1570, 940},
        {14, 1161, 1161, 8052, 5370, 9, 0, 585, 387, 3154, 1912},
        {15, 2182, 2182, 16315, 10874, 0, 4, 1091, 730, 6522, 3982},
    };
    return rows;
}

std::optional<CountRow> reference_row(int p) {
    if (p < kReferenceFirst || p > kReferenceLast) return std::nullopt;
    return reference_table()[static_cast<std::size_t>(p - kReferenceFirst)];
}

const std::vector<const char*>& column_names() {
    static const std::vector<const char*> names = {"p",  "cyc1", "cyc2", "prim1", "prim2", "q1",
                                                   "q2", "f1",   "f2",   "g1",    "g2"};
    return names;
}

std::vector<Int> columns(const CountRow& r) {
    return {r.p, r.cyc1, r.cyc2, r.prim1, r.prim2, r.q1, r.q2, r.f1, r.f2, r.g1, r.g2};
}

std::vector<ColumnMismatch> compare_with_reference(const std::function<CountRow(int)>& rows, int first,
                                                   int last) {
    std::vector<ColumnMismatch> out;
    const auto& names = column_names();
    for (int p = std::max(first, kReferenceFirst); p <= std::min(last, kReferenceLast); ++p) {
        auto expected = columns(*reference_row(p));
        auto actual = columns(rows(p));
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (expected[i] != actual[i]) out.push_back({p, names[i], expected[i], actual[i]});
        }
    }
    return out;
}

}  // namespace mcc::counting
