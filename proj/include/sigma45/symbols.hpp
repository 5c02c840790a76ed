#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sigma45 {

// Interned sigma-derivative symbol: a sorted multi-index over {1..6}.
// Id 0 is sigma itself (empty index).
using SymId = uint32_t;

using Indices = std::vector<uint8_t>; // ascending

namespace symtab {

SymId intern(Indices idx);              // idx ascending
SymId shift(SymId s, const Indices& J); // append indices
SymId shift(SymId s, int index1to6);

const Indices& indices(SymId s);
int weight(SymId s);      // 15 - sum of u-weights of the indices
int valuation(SymId s);   // sum of u-weights = 15 - weight
int count(SymId s);       // number of indices
int twos(SymId s);        // multiplicity of index 2

// Solving order for the stratum descent: more indices first, then larger
// sorted-descending index tuple first.  Returns +1 if a is solved before b.
int cmp_strata(SymId a, SymId b);
// Solving order at the sigma_23 zero locus: fewer 2-indices first, then more
// indices, then the descent tie-break.
int cmp_u0(SymId a, SymId b);

std::string str(SymId s); // "s[2,3,6]", "s[]" for sigma
SymId parse(const std::string& text);

size_t size(); // number of interned symbols

} // namespace symtab
} // namespace sigma45
