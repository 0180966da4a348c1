#pragma once

#include <string>
#include <vector>

#include "cacti/cactus/datum.hpp"

namespace cacti::cyclic {

using cacti::cactus::Rational;

// Closed arc [start, start+length] on the unit circle, positions mod 1.
// Labels are words: merging concatenates them in circle order.
struct Arc {
    Rational start;
    Rational length;
    std::vector<std::string> label;

    Rational end() const;  // reduced mod 1
    friend bool operator==(const Arc&, const Arc&) = default;
};

struct ArcConfiguration {
    std::vector<Arc> arcs;  // kept sorted by start
    friend bool operator==(const ArcConfiguration&, const ArcConfiguration&) = default;
};

Rational mod1(const Rational& q);

ArcConfiguration make_config(std::vector<Arc> arcs);  // validates
bool config_valid(const ArcConfiguration& c, std::string* why = nullptr);

// merge the arc starting at `start` with the next arc counterclockwise,
// which must begin exactly at its end
ArcConfiguration arc_merge(const ArcConfiguration& c, const Rational& start);

// merge all touching pairs to the canonical coequalizer representative
ArcConfiguration arc_normalize(const ArcConfiguration& c);

struct CollapsedLetter {
    std::vector<std::string> label;
    Rational position;  // in [0,1) after the similitude
};

// contract each arc to a point, rescale the quotient circle to length 1
// sending the basepoint to 0, list letters by increasing position
std::vector<CollapsedLetter> collapse(const ArcConfiguration& c, const Rational& basepoint);

// configuration plus two basepoints whose collapse words differ as linear
// orders: the executable twisting witness
struct TwistingWitness {
    ArcConfiguration config;
    Rational b1, b2;
    std::vector<CollapsedLetter> word1, word2;
};

TwistingWitness twisting_witness();

}  // namespace cacti::cyclic
