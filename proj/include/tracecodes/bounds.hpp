#pragma once

#include <string>

#include <gmpxx.h>

namespace tracecodes {

// Griesmer bound: any [n, k, d] code over F_q has
// n >= sum over i = 0..k-1 of ceil(d / q^i).
mpz_class griesmer_lower_bound(int k, const mpz_class& d, const mpz_class& q);

// Classification relative to the Griesmer bound alone:
//   Optimal       - no [n, k, d+1] code can exist (the bound exceeds n),
//   AlmostOptimal - not Optimal, but no [n, k, d+2] code can exist,
//   Neither       - otherwise.
// Code-table lookups are deliberately out of scope, so "Optimal" here means
// Griesmer-optimal, which is weaker than optimality against known tables.
enum class GriesmerClass { Optimal, AlmostOptimal, Neither };

GriesmerClass classify_optimality(const mpz_class& n, int k, const mpz_class& d, const mpz_class& q);

std::string to_string(GriesmerClass c);

} // namespace tracecodes
