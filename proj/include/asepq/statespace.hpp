#pragma once

// Configurations of the lattice models on sites {1..L}.
//
// Bounded models (exclusion dynamics): every site carries an occupation
// vector (xi_1,...,xi_n) of particle counts per class, xi_n counting holes,
// with xi_1+...+xi_n = j2 at each site.  Zero-range dynamics: sites carry
// only the particle classes (xi_1,...,xi_{n-1}) with no per-site bound.
//
// Site and class arguments in this API are 1-based, matching the standard
// notation for these processes; storage is 0-based.

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace asepq {

struct Config {
    std::vector<std::vector<long>> site;  // [L][classes]

    long sites() const { return static_cast<long>(site.size()); }
    long classes() const { return site.empty() ? 0 : static_cast<long>(site.front().size()); }

    // occupation count of class k at site x (both 1-based)
    long at(long x, long k) const { return site[x - 1][k - 1]; }
    long& at(long x, long k) { return site[x - 1][k - 1]; }

    auto operator<=>(const Config&) const = default;

    std::string str() const;  // "[[1,1,0],[0,0,2]]"
    static std::optional<Config> parse(const std::string& s);
};

// all-holes configuration of the bounded models
Config vacuum_config(long n, long j2, long L);

// occupation vectors of a single bounded site: the compositions of j2 into
// n parts, in ascending lexicographic order (so the all-holes state, which
// puts everything in class n, comes first)
std::vector<std::vector<long>> site_states(long n, long j2);

// every bounded configuration, ordered lexicographically with site 1 most
// significant and the per-site order of site_states()
std::vector<Config> enumerate_configs(long n, long j2, long L);

// particle totals per class 1..n-1 (bounded) or per stored class (zero-range)
std::vector<long> sector_of(const Config& c, bool bounded = true);

// bounded configurations in the given sector, in enumerate_configs() order
std::vector<Config> enumerate_sector(long n, long j2, long L, const std::vector<long>& sector);

// zero-range configurations with the given particle totals, ordered
// lexicographically with site 1 most significant
std::vector<Config> enumerate_zero_range_sector(long L, const std::vector<long>& sector);

// all occupied sectors of the bounded state space
std::vector<std::vector<long>> enumerate_sectors(long n, long j2, long L);

// exchange move between neighbouring sites: one class-k particle hops
// x -> x+1 while one class-l particle hops x+1 -> x; nullopt when a needed
// particle is absent or x+1 exceeds the lattice
std::optional<Config> swap_move(const Config& c, long x, long k, long l);

// zero-range move: one class-i particle hops from site x to site y
std::optional<Config> hop_move(const Config& c, long x, long y, long i);

// xi_{[a,b]}^x = xi_a^x + ... + xi_b^x; empty ranges (b < a) give 0
long cumulative(const Config& c, long x, long a, long b);

// merge consecutive classes: blocks lists the size of each group, summing
// to the class count; the result has one class per group
Config project_classes(const Config& c, const std::vector<long>& blocks);

Config class_reverse(const Config& c);
Config space_reverse(const Config& c);

}  // namespace asepq
