#pragma once

#include <cstddef>
#include <vector>

#include "tracecodes/code_spec.hpp"
#include "tracecodes/field.hpp"

namespace tracecodes {

/// The point set { (x1, x2) : Tr(x1^(p^l + 1)) = 1, Tr(x2) in C_i }, stored
/// as parallel coordinate arrays in ascending lexicographic order of the
/// coefficient-vector pairs.
struct DefiningSet {
    std::vector<Elem> x1;
    std::vector<Elem> x2;

    std::size_t size() const { return x1.size(); }
};

// Full scan of F_q^2. Under the construction hypotheses, the size is
// cross-checked against the closed-form length; a mismatch aborts since the
// analytic machinery depends on it.
DefiningSet build_defining_set(const Field& f, const CodeSpec& spec);

// The codeword c(a, b): symbol j is Tr(a x1_j + b x2_j).
std::vector<int> codeword_symbols(const Field& f, const DefiningSet& d, Elem a, Elem b);

// Hamming weight of the codeword (Tr(a x1 + b x2)) over the point set,
// counted position by position.
int codeword_weight(const Field& f, const DefiningSet& d, Elem a, Elem b);

} // namespace tracecodes
