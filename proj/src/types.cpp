#include "mcc/types.hpp"

#include <algorithm>

namespace mcc {

std::string to_string(Family m) { return m == Family::Per1 ? "per1" : "per2"; }

Family parse_family(const std::string& s) {
    if (s == "per1" || s == "1") return Family::Per1;
    if (s == "per2" || s == "2") return Family::Per2;
    throw InvalidArgument("unknown family '" + s + "' (expected per1 or per2)");
}

std::string to_string(Int v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    Int x = neg ? v : -v;
    std::string out;
    while (x != 0) {
        out.push_back(static_cast<char>('0' - static_cast<int>(x % 10)));
        x /= 10;
    }
    if (neg) out.push_back('-');
    std::reverse(out.begin(), out.end());
    return out;
}

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

Int pow2(int n) {
    if (n < 0) throw InvalidArgument("negative exponent");
    if (n > 126) throw OverflowError("2^" + std::to_string(n) + " does not fit in 128 bits");
    return Int(1) << n;
}

}  // namespace mcc
