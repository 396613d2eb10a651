#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mcc/types.hpp"

/// Closed-form counts for the cell decompositions: periodic points, cycles,
/// hyperbolic components, self-conjugate classes, faces and genus.
namespace mcc::counting {

using ArithmeticFunction = std::function<Int(std::int64_t)>;

std::vector<std::int64_t> divisors(std::int64_t n);

Int mobius(std::int64_t n);
Int totient(std::int64_t n);

/// (f * g)(n) = sum over d | n of f(n/d) g(d).
Int dirichlet(const ArithmeticFunction& f, const ArithmeticFunction& g, std::int64_t n);

/// Points of period dividing n: 2^n - 1 for Per1, 2^n - (-1)^n for Per2.
Int points_div(Family m, int n);
/// Points of exact period n (Moebius transform of points_div).
Int points_exact(Family m, int n);
Int cyc(Family m, int n);
Int hyp(Family m, int n);
Int sat(Family m, int n);
Int prim(Family m, int n);
/// Number of classes fixed by the family's symmetry (reflexive duos, rotation-invariant trios).
Int q(Family m, int n);
Int faces(Family m, int n);
Int genus(Family m, int n);

/// Sum of totient(k) for 0 <= k < p, with totient(0) taken as 0.
Int capital_phi(int p);

/// Closed form of the Moebius transform of the recurrence
/// q~(l k) = q~(k) + g~(k), q~(n) = 0 when l does not divide n.
Int mobius_recursion_closed_form(int ell, const ArithmeticFunction& g_tilde, std::int64_t n);
/// Direct evaluation of that recurrence, for cross-checking the closed form.
Int mobius_recursion_tilde(int ell, const ArithmeticFunction& g_tilde, std::int64_t n);

struct CountRow {
    int p = 0;
    Int cyc1 = 0, cyc2 = 0;
    Int prim1 = 0, prim2 = 0;
    Int q1 = 0, q2 = 0;
    Int f1 = 0, f2 = 0;
    Int g1 = 0, g2 = 0;

    bool operator==(const CountRow&) const = default;
};

inline constexpr int kReferenceFirst = 2;
inline constexpr int kReferenceLast = 15;

CountRow count_row(int p);

/// The published reference values for p = 2..15.
const std::vector<CountRow>& reference_table();
std::optional<CountRow> reference_row(int p);

/// Column names in table order: p, cyc1, cyc2, prim1, prim2, q1, q2, f1, f2, g1, g2.
const std::vector<const char*>& column_names();
/// Column values of a row in the same order as column_names().
std::vector<Int> columns(const CountRow& row);

struct ColumnMismatch {
    int p;
    std::string column;
    Int expected;
    Int actual;
};

/// Compares rows produced by `rows` against the reference table over [first, last]
/// (clipped to the reference range) and reports every differing cell.
std::vector<ColumnMismatch> compare_with_reference(const std::function<CountRow(int)>& rows, int first,
                                                   int last);

}  // namespace mcc::counting
