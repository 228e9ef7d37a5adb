#pragma once

#include <optional>

#include "ordertree/mat.hpp"

namespace ordertree {

// Unique row Hermite normal form of the row space of M: zero rows dropped,
// pivots positive, entries above a pivot reduced into [0, pivot).
IntMat hnf(IntMat M);

// HNF stays square here: rank must equal cols.
IntMat hnf_full_rank(IntMat M);

int hnf_rank(const IntMat& H);

// Product of pivots of a full-rank square HNF matrix.
Int hnf_det(const IntMat& H);

// Determinant of a square integer matrix (Bareiss, fraction-free).
Int det_bareiss(IntMat M);

// Exact inverse over Q; fails on singular input.
RatMat rat_inverse(RatMat M);

// Solve x * B = t over Q for upper-triangular full-rank HNF B (pivot of row i
// in column i). Returns the rational coordinate vector.
std::vector<Rat> solve_upper_triangular(const IntMat& B, const std::vector<Rat>& t);

// Integral solution of x * B = t, if one exists.
std::optional<std::vector<Int>> solve_integral(const IntMat& B, const std::vector<Int>& t);

Int content(const IntMat& M);

}  // namespace ordertree
