#pragma once

#include <vector>

#include "tricat/bisnomial.hpp"
#include "tricat/natural.hpp"

namespace tricat {

/// Row n of the s-Catalan triangle: entries[k] = C_{n,k}^{(s)} for
/// k = 0 .. s*n, the consecutive differences of s-Pascal row 2n taken at
/// offsets s*n + k.
struct TriangleRow {
    int s = 3;
    int n = 0;
    std::vector<Natural> entries;
};

/// C_n^{(s)}: the difference between the central coefficient of row 2n and
/// its right neighbour. Classical Catalan numbers at s = 1.
Natural s_catalan(int s, int n);

/// C_0^{(s)} .. C_{n_max}^{(s)}, built in one streaming pass over the
/// s-Pascal rows (no per-row recomputation).
std::vector<Natural> s_catalan_sequence(int s, int n_max);

/// Triangle row for any s >= 1, by differences of s-Pascal row 2n.
TriangleRow triangle_row_general(int s, int n);

/// s = 3 triangle row by differences (the defining construction).
TriangleRow triangle_row_direct(int n);

/// s = 3 triangle row rebuilt purely from row n-1 via the boundary-folded
/// recurrences (weights 1,1,1,1 / 1,3,3,2,1 / 1,3,4,3,2,1 at k = 0,1,2 and
/// the symmetric 7-tap window for k >= 3). Must agree with
/// triangle_row_direct entry for entry; the two constructions are kept as
/// independent code paths.
TriangleRow triangle_row_recurrence(int n);

/// Rows 0 .. n_max by differences, one streaming pass.
std::vector<TriangleRow> triangle_rows(int s, int n_max);

/// Rows 0 .. n_max by the s = 3 recurrence.
std::vector<TriangleRow> triangle_rows_recurrence(int n_max);

}  // namespace tricat
