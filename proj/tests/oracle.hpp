#pragma once

#include "preproj/presentations.hpp"
#include "preproj/structure.hpp"

#include <vector>

namespace oracle {

using preproj::Matrix;
using preproj::Presentation;

/// dim e_i (KQ / (I + J^t)) e_j by plain linear algebra on the paths of
/// length < t, with no rewriting.
Matrix truncated_dims(const Presentation& p, int t);

/// dim e_i P(A_n) e_j = min(i, j, n-1-i, n-1-j) + 1.
Matrix type_A_dims(int n);

/// Loewy length of P(Delta): h - 1 for A, D, E, and 2n for L_n.
int loewy_length(const preproj::DynkinType& t);

}  // namespace oracle
