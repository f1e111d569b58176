#pragma once

// Transition rates and Markov generators of the lattice models.
//
// Bond moves exchange a particle pair between neighbouring sites x, x+1 and
// are indexed by the class pair (k, l) with k < l: in a "right" move the
// class-k particle hops x -> x+1 and a class-l particle returns, in a "left"
// move the class-k particle hops x+1 -> x and a class-l particle returns.
// The zero-range model moves single particles one site to the right (or to
// the left for the space-reversed variant).

#include <optional>
#include <vector>

#include "asepq/matrix.hpp"
#include "asepq/qarith.hpp"
#include "asepq/statespace.hpp"

namespace asepq {

enum class Model { asep, ssep, tazrp };
enum class Direction { right, left };

struct Transition {
    Config to;
    LaurentPoly rate;
    long x = 0;        // bond (exchange) or source site (zero-range)
    long k = 0;        // jumping class
    long l = 0;        // returning class; 0 for zero-range moves
    Direction dir = Direction::right;
};

// asymmetric exchange rate of the (k,l) move at bond x, k < l
LaurentPoly asep_rate(const Config& c, long x, Direction dir, long k, long l);

// symmetric-limit rate: the same move at q = 1, as a constant polynomial
LaurentPoly ssep_rate(const Config& c, long x, Direction dir, long k, long l);

// zero-range hop rate of class i out of site x
LaurentPoly tazrp_rate(const Config& c, long x, long i);

std::vector<Transition> asep_transitions(const Config& c, long j2);
std::vector<Transition> ssep_transitions(const Config& c, long j2);
std::vector<Transition> tazrp_transitions(const Config& c, Direction dir = Direction::right);

// the two-stage construction of the same exchange dynamics: a bond clock
// with a state-independent rational rate, times the probability that the
// per-particle thinning cascade selects the (k, l) move
RationalFunction clock_rate(Direction dir);
LaurentPoly tree_probability(const Config& c, long x, Direction dir, long k, long l);
RationalFunction inductive_rate(const Config& c, long x, Direction dir, long k, long l);

struct Generator {
    std::vector<Config> basis;
    DenseMatrix<RationalFunction> Q;  // row = source state, rows sum to zero

    long index_of(const Config& c) const;  // -1 when absent
};

// generator on one conserved sector, or on the full bounded state space when
// sector is absent; the zero-range model requires a sector.  dir reverses
// the zero-range hop direction and is ignored by the exchange models.
Generator build_generator(Model model, long n, long j2, long L,
                          const std::optional<std::vector<long>>& sector = std::nullopt,
                          Direction dir = Direction::right);

std::vector<Transition> transitions_of(Model model, const Config& c, long j2,
                                       Direction dir = Direction::right);

}  // namespace asepq
