#pragma once

// Exact arithmetic for cyclotomic Euler-Mahonian polynomials: quotient rings
// Z[x]/(Phi_m), q-polynomials and truncated t-series over them, brute-force
// statistics over the symmetric group, the word <-> (permutation, partition)
// correspondence, and the identity verification suites built from all of it.

#include "cem/bijection.hpp"
#include "cem/cyclotomic.hpp"
#include "cem/euler_mahonian.hpp"
#include "cem/identities.hpp"
#include "cem/int_poly.hpp"
#include "cem/int_types.hpp"
#include "cem/perm.hpp"
#include "cem/q_gadgets.hpp"
#include "cem/q_poly.hpp"
#include "cem/report.hpp"
#include "cem/series.hpp"
#include "cem/tri_poly.hpp"
