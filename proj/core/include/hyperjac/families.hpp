// The explicit one-parameter families and the hypothesis checklist a given
// bivariate polynomial must pass before the main theorem speaks.
#pragma once

#include <optional>

#include "hyperjac/bivar_poly.hpp"
#include "hyperjac/galois_scan.hpp"

namespace hyperjac::families {

using ff::u32;
using ff::u64;

enum class FamilyKind { MoriOdd, EvenTheorem, MorseShift, Abhyankar };
const char* family_kind_name(FamilyKind k);

// Construction parameters; only the fields relevant to `kind` are read.
struct FamilySpec {
    FamilyKind kind = FamilyKind::EvenTheorem;
    ff::PrimeField field;
    u64 g = 0;      // MoriOdd: x^{2g+1}-x+z,  EvenTheorem: x^{2g+2}-x+z
    u64 q = 0;      // Abhyankar: x^{q+t} - x z^t + 1
    u64 t = 0;
    ff::FpPoly h;   // MorseShift: h(x) - z
};

// Builds the family polynomial after validating the kind's hypotheses:
//   MoriOdd      g >= 2, p not dividing g(2g+1)
//   EvenTheorem  g >= 4, p not dividing (g+1)(2g+1)
//   MorseShift   deg h >= 2, p not dividing deg h, morse_check(h)
//   Abhyankar    q a positive power of p, t > q, p not dividing t, t odd
//                (making n = q+t even), q + t >= 10
// Violations are hard errors (InvariantViolation naming the condition):
// every downstream certificate assumes them.
ff::BivarPoly build_family(const FamilySpec& spec);

// g = floor((n-1)/2) for y^2 = f(x) with deg f = n.  pre: n >= 3.
u32 genus_of(u32 n);

struct HypothesisReport {
    bool p_odd = true;        // enforced by PrimeField construction
    bool n_even_ge_10 = false;
    bool separable = false;   // disc(F) != 0 in F_p[z]
    std::optional<galois::IrrWitness> irreducible_evidence;
    galois::GaloisVerdict galois;
    bool theorem_applies = false;
};

// Runs every hypothesis of the main theorem against F; never throws for
// shaped-but-unsuitable input (failures land in the report).  The Galois scan
// only runs for families monic in x of degree >= 8; otherwise the verdict
// stays Inconclusive with empty statistics.
HypothesisReport theorem_hypotheses(const ff::BivarPoly& F, u64 budget, u64 seed);

}  // namespace hyperjac::families
