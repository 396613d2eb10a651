#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "mcc/types.hpp"

namespace mcc {

/// Lexicographically least rotation (Booth's algorithm).
std::string least_rotation(std::string_view word);
/// True when the word is not a proper power of a shorter word.
bool is_primitive_word(std::string_view word);
/// True when cyclically adjacent digits differ. Length-1 words count as admissible.
bool is_admissible(std::string_view word);

/// A cyclic word of exact period equal to its length, stored as its least rotation.
/// Radix 3 necklaces are additionally admissible.
template <int Radix>
class Necklace {
    static_assert(Radix == 2 || Radix == 3);

public:
    /// Validates the digits, exact period and (radix 3) admissibility, then canonicalizes.
    static Necklace from_word(std::string_view word);

    const std::string& word() const { return word_; }
    int period() const { return static_cast<int>(word_.size()); }

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace&, const Necklace&) = default;

private:
    explicit Necklace(std::string canonical) : word_(std::move(canonical)) {}
    std::string word_;
};

using BinaryNecklace = Necklace<2>;
using TernaryNecklace = Necklace<3>;

extern template class Necklace<2>;
extern template class Necklace<3>;

inline constexpr int kEnumerationBudget = 24;

/// All binary necklaces of exact period p, sorted by canonical word.
std::vector<BinaryNecklace> enumerate_binary(int p);
/// All admissible ternary necklaces of exact period p, sorted by canonical word.
/// Period 1 is the special set {0, 1, 2}.
std::vector<TernaryNecklace> enumerate_ternary(int p);

BinaryNecklace complement(const BinaryNecklace& nu);
/// Digit rotation d -> d + 1 mod 3.
TernaryNecklace rotate_digits(const TernaryNecklace& xi);

/// A duo (closed under complement) or trio (closed under digit rotation).
class CycleClass {
public:
    CycleClass() = default;

    Family family() const { return family_; }
    /// Sorted canonical words.
    const std::vector<std::string>& members() const { return members_; }
    const std::string& representative() const { return members_.front(); }
    std::size_t size() const { return members_.size(); }
    bool contains(std::string_view word) const;
    /// "{a,b}"
    std::string str() const;

    friend bool operator==(const CycleClass&, const CycleClass&) = default;
    friend auto operator<=>(const CycleClass&, const CycleClass&) = default;

private:
    friend CycleClass duo(const BinaryNecklace&);
    friend CycleClass trio(const TernaryNecklace&);
    CycleClass(Family m, std::vector<std::string> members) : family_(m), members_(std::move(members)) {}

    Family family_ = Family::Per1;
    std::vector<std::string> members_;
};

CycleClass duo(const BinaryNecklace& nu);
CycleClass trio(const TernaryNecklace& xi);
bool is_reflexive(const CycleClass& c);
bool is_rot_invariant(const CycleClass& c);

}  // namespace mcc
