#pragma once

#include "webfoam/laurent.hpp"
#include "webfoam/web.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace webfoam {

// Crossing X[a,b,c,d]: a is the incoming under arc, the rest follow
// counterclockwise, so the under strand runs a -> c. The over strand runs d -> b
// at a positive crossing and b -> d at a negative one.
struct Crossing {
    std::array<int, 4> arcs{};
    bool positive = true;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    int unknots = 0;  // zero-crossing components

    int n_plus() const;
    int n_minus() const;
    int components() const;
    std::string to_pd() const;  // orientation is kept explicitly, so re-parsing may differ on two-arc strands
};

class PdParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// See docs/pd-convention.md. Throws PdParseError on malformed or non-planar input.
LinkDiagram parse_pd(const std::string& text);

// Closure of a braid word on `strands` strands; generator i > 0 is sigma_i
// (the strand from position i passes over), i < 0 its inverse.
LinkDiagram braid_closure(const std::vector<int>& word, int strands);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram change_crossing(const LinkDiagram& d, int i);
// Oriented smoothing of crossing i.
LinkDiagram smooth_crossing(const LinkDiagram& d, int i);

// Bit i of `state` selects the 1-flattening at crossing i.
Web resolve(const LinkDiagram& d, std::uint64_t state);

struct StateSumOptions {
    MoyOptions moy;
    int jobs = 1;
};

LaurentPoly state_sum(const LinkDiagram& d, int N, const StateSumOptions& opt = {});
// Graded Euler characteristic of the chain complex with the degree shifts applied.
LaurentPoly euler_characteristic(const LinkDiagram& d, int N, const StateSumOptions& opt = {});

struct SkeinReport {
    bool pass = false;
    LaurentPoly lhs, rhs;  // q^N P(minus) - q^-N P(plus) and (q - q^-1) P(zero)
};
SkeinReport skein_check(const LinkDiagram& plus, const LinkDiagram& minus, const LinkDiagram& zero, int N);

struct SkeinTriple {
    std::string name;
    LinkDiagram plus, minus, zero;
};
// Built-in triples: "kink" and "trefoil".
std::vector<SkeinTriple> skein_triples();

struct ReidemeisterReport {
    std::string id;
    bool pass = false;
    LaurentPoly before, after;
};
const std::vector<std::string>& reidemeister_pairs();
// Throws std::domain_error for an unknown pair id.
ReidemeisterReport verify_reidemeister(const std::string& pair_id, int N);

struct CorpusEntry {
    std::string name;
    LinkDiagram diagram;
};
const std::vector<CorpusEntry>& link_corpus();

}  // namespace webfoam
