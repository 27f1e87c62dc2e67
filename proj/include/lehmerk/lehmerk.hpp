#pragma once

// Exact arithmetic for the generalized Euler totient phi_K over rings of
// integers of class-number-one quadratic fields, the associated number
// predicates (realizable, normal, Lehmer, strongly Lehmer), and bounded
// verification suites for the identities relating them.

#include "lehmerk/algint.hpp"
#include "lehmerk/classify.hpp"
#include "lehmerk/errors.hpp"
#include "lehmerk/field.hpp"
#include "lehmerk/numtheory.hpp"
#include "lehmerk/rational.hpp"
#include "lehmerk/report.hpp"
#include "lehmerk/residue.hpp"
#include "lehmerk/splitting.hpp"
#include "lehmerk/theorems.hpp"
#include "lehmerk/totient.hpp"
#include "lehmerk/zeta.hpp"
