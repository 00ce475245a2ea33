#pragma once

#include "vrb/algebra.hpp"
#include "vrb/report.hpp"

#include <vector>

namespace vrb {

// (V1): vacuum is a two-sided unit on every generator.
// Throws ValidationError when the algebra has no vacuum.
CheckReport check_vacuum(const AlgebraSpec& alg);

// (V3): table(j,i) = sign * shift_negate(table(i,j)) for all ordered pairs.
CheckReport check_skew(const AlgebraSpec& alg);

// (V4) over all generator triples.
CheckReport check_jacobi(const AlgebraSpec& alg);

// (V2) holds by construction of the evaluator; this checks the evaluator
// against an independently ordered reduction for d-powers up to 3.
CheckReport check_v2_consistency(const AlgebraSpec& alg);

// v2-consistency, skew, jacobi, and vacuum iff unital.
std::vector<CheckReport> check_all(const AlgebraSpec& alg, bool unital);

}  // namespace vrb
