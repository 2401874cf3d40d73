#ifndef CONEVANISH_PARSE_HPP
#define CONEVANISH_PARSE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "conevanish/polynomial.hpp"

namespace conevanish {

// "ring Q[x,y] grevlex" | "ring F31[z00,z01] lex" | "ring Q[t,x] block(1)"
PolyRing parse_ring(const std::string& decl);

// +, -, *, ^, integer literals, declared variable names
Polynomial parse_polynomial(const PolyRing& ring, const std::string& src);

// Declaration text: one `ring` statement per line, `ideal NAME = f1, f2, ...;`
// statements (which may span lines up to the terminating `;`), `#` comments.
// Polynomials in an ideal statement are parsed in the most recently declared
// ring.
struct NamedIdeal {
    std::string name;
    PolyRing ring;
    std::vector<Polynomial> gens;
};

struct Declarations {
    std::vector<PolyRing> rings;            // in declaration order
    std::vector<NamedIdeal> ideals;         // in declaration order
    const NamedIdeal* find(const std::string& name) const;
    const PolyRing& current_ring() const;   // last declared; throws if none
};

Declarations parse_declarations(const std::string& text);
Declarations parse_declarations_file(const std::string& path);

} // namespace conevanish

#endif
