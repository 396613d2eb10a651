#include "mcc/necklace.hpp"

#include <algorithm>

namespace mcc {

std::string least_rotation(std::string_view word) {
    const std::size_t n = word.size();
    if (n == 0) return {};
    std::string s(word);
    s += word;
    std::vector<long> fail(s.size(), -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < s.size(); ++j) {
        char sj = s[j];
        long i = fail[j - k - 1];
        while (i != -1 && sj != s[k + static_cast<std::size_t>(i) + 1]) {
            if (sj < s[k + static_cast<std::size_t>(i) + 1]) k = j - static_cast<std::size_t>(i) - 1;
            i = fail[static_cast<std::size_t>(i)];
        }
        if (sj != s[k + static_cast<std::size_t>(i + 1)]) {
            if (sj < s[k]) k = j;
            fail[j - k] = -1;
        } else {
            fail[j - k] = i + 1;
        }
    }
    return s.substr(k, n);
}

bool is_primitive_word(std::string_view word) {
    if (word.empty()) return false;
    std::string doubled(word);
    doubled += word;
    return doubled.find(word, 1) == word.size();
}

bool is_admissible(std::string_view word) {
    if (word.size() == 1) return true;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == word[(i + 1) % word.size()]) return false;
    }
    return !word.empty();
}

template <int Radix>
Necklace<Radix> Necklace<Radix>::from_word(std::string_view word) {
    if (word.empty()) throw InvalidArgument("necklace word must be non-empty");
    for (char c : word) {
        if (c < '0' || c >= static_cast<char>('0' + Radix))
            throw InvalidArgument("necklace word '" + std::string(word) + "' has a digit outside base " +
                                  std::to_string(Radix));
    }
    if (!is_primitive_word(word))
        throw InvalidArgument("necklace word '" + std::string(word) + "' is not of exact period " +
                              std::to_string(word.size()));
    if (Radix == 3 && !is_admissible(word))
        throw InvalidArgument("ternary word '" + std::string(word) + "' has equal adjacent digits");
    return Necklace(least_rotation(word));
}

template class Necklace<2>;
template class Necklace<3>;

namespace {

void check_budget(int p) {
    if (p < 1) throw InvalidArgument("period must be >= 1, got " + std::to_string(p));
    if (p > kEnumerationBudget)
        throw BudgetExceeded("enumeration is limited to periods <= " + std::to_string(kEnumerationBudget));
}

/// Lyndon words of length n in lexicographic order, optionally restricted to admissible words.
class LyndonGenerator {
public:
    LyndonGenerator(int n, int radix, bool admissible_only)
        : n_(n), radix_(radix), admissible_(admissible_only), a_(static_cast<std::size_t>(n) + 1, 0) {}

    std::vector<std::string> run() {
        gen(1, 1);
        return std::move(out_);
    }

private:
    bool ok(int t) const {
        if (!admissible_ || t == 1) return true;
        if (a_[t] == a_[t - 1]) return false;
        return t != n_ || a_[n_] != a_[1];
    }

    void gen(int t, int p) {
        if (t > n_) {
            if (p == n_) {
                std::string w(static_cast<std::size_t>(n_), '0');
                for (int i = 1; i <= n_; ++i) w[static_cast<std::size_t>(i - 1)] = static_cast<char>('0' + a_[i]);
                out_.push_back(std::move(w));
            }
            return;
        }
        a_[t] = a_[t - p];
        if (ok(t)) gen(t + 1, p);
        for (int j = a_[t - p] + 1; j < radix_; ++j) {
            a_[t] = j;
            if (ok(t)) gen(t + 1, t);
        }
    }

    int n_;
    int radix_;
    bool admissible_;
    std::vector<int> a_;
    std::vector<std::string> out_;
};

}  // namespace

std::vector<BinaryNecklace> enumerate_binary(int p) {
    check_budget(p);
    std::vector<BinaryNecklace> out;
    for (auto& w : LyndonGenerator(p, 2, false).run()) out.push_back(BinaryNecklace::from_word(w));
    return out;
}

std::vector<TernaryNecklace> enumerate_ternary(int p) {
    check_budget(p);
    std::vector<TernaryNecklace> out;
    if (p == 1) {
        for (const char* w : {"0", "1", "2"}) out.push_back(TernaryNecklace::from_word(w));
        return out;
    }
    for (auto& w : LyndonGenerator(p, 3, true).run()) out.push_back(TernaryNecklace::from_word(w));
    return out;
}

BinaryNecklace complement(const BinaryNecklace& nu) {
    std::string w = nu.word();
    for (char& c : w) c = c == '0' ? '1' : '0';
    return BinaryNecklace::from_word(w);
}

TernaryNecklace rotate_digits(const TernaryNecklace& xi) {
    std::string w = xi.word();
    for (char& c : w) c = static_cast<char>('0' + (c - '0' + 1) % 3);
    return TernaryNecklace::from_word(w);
}

bool CycleClass::contains(std::string_view word) const {
    return std::find(members_.begin(), members_.end(), word) != members_.end();
}

std::string CycleClass::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ",";
        s += members_[i];
    }
    return s + "}";
}

CycleClass duo(const BinaryNecklace& nu) {
    std::vector<std::string> m = {nu.word(), complement(nu).word()};
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return CycleClass(Family::Per1, std::move(m));
}

CycleClass trio(const TernaryNecklace& xi) {
    TernaryNecklace r1 = rotate_digits(xi);
    TernaryNecklace r2 = rotate_digits(r1);
    std::vector<std::string> m = {xi.word(), r1.word(), r2.word()};
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return CycleClass(Family::Per2, std::move(m));
}

bool is_reflexive(const CycleClass& c) { return c.family() == Family::Per1 && c.size() == 1; }

bool is_rot_invariant(const CycleClass& c) { return c.family() == Family::Per2 && c.size() == 1; }

}  // namespace mcc
