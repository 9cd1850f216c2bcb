#ifndef RESOLV_RESOLVABILITY_HPP
#define RESOLV_RESOLVABILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "resolv/bitset.hpp"
#include "resolv/graph.hpp"

namespace resolv {

// Ordered landmark set R; code vectors are reported in landmark order.
using LandmarkSet = std::vector<int>;
using CodeVector = std::vector<std::uint16_t>;

// one code vector per vertex: (d(u,r1), d(u,r2), ...)
std::vector<CodeVector> codes(const Graph& g, const DistanceMatrix& d, const LandmarkSet& r);

// true iff all n code vectors are pairwise distinct
bool is_resolving(const Graph& g, const DistanceMatrix& d, const LandmarkSet& r);

// Definition-faithful fault-tolerance check: r resolves and so does every
// single-deletion subset of r.
bool ft_check_by_deletion(const Graph& g, const DistanceMatrix& d, const LandmarkSet& r);

// Equivalent reformulation: every vertex pair is distinguished by at least
// two landmarks. The equivalence is validated against the deletion check in
// the test suite, never assumed.
bool ft_check_by_count(const Graph& g, const DistanceMatrix& d, const LandmarkSet& r);

// no two members adjacent (empty set is independent)
bool is_independent(const Graph& g, const std::vector<int>& s);

// For each vertex v, a bitset over the C(n,2) unordered vertex pairs with
// the bit for {u,w} set iff d(u,v) != d(w,v). Pairs are laid out in colex
// order: pair {u < w} lives at index w*(w-1)/2 + u. A set R resolves iff the
// union of its rows covers every pair; R is fault-tolerant iff every pair is
// covered by two rows.
class PairCoverIndex {
public:
    PairCoverIndex(const Graph& g, const DistanceMatrix& d);

    static int pair_index(int u, int w);  // requires u < w

    int order() const { return n_; }
    int pair_count() const { return pairs_; }
    const Bitset& row(int v) const { return rows_[v]; }

private:
    int n_;
    int pairs_;
    std::vector<Bitset> rows_;
};

enum class Invariant { dim, fdim, ir, ifr, beta };
enum class CertStatus { value, undefined, unknown_beyond_cap };

const char* invariant_name(Invariant inv);
const char* status_name(CertStatus st);

struct Exhaustion {
    // all cardinalities <= this were fully enumerated (-1: none)
    int exhausted_through = -1;
    // candidate sets preceding and including the witness in enumeration
    // order (or the full enumeration when nothing was found); independent of
    // the worker count
    std::uint64_t candidates_checked = 0;
    // cardinality cap that ended the search when status == unknown_beyond_cap
    int cap = -1;
    // clique twin class justifying an immediate "undefined" for ifr
    std::vector<int> evidence;
};

// Result of an exact search. status == value implies the witness re-passes
// its defining check; status == undefined carries either an exhaustion bound
// reaching beta or a twin-class evidence set.
struct Certificate {
    Invariant invariant;
    CertStatus status = CertStatus::value;
    std::optional<int> value;
    std::vector<int> witness;  // sorted; lexicographically least among optima
    Exhaustion exhaustion;
    double wall_ms = 0.0;
};

struct SolveOptions {
    int workers = 1;
    // cardinality cap for ir/ifr; the search always stops at beta, a smaller
    // cap yields unknown_beyond_cap instead of undefined
    std::optional<int> max_k;
    // Observation-2 fast negative path for ifr (clique twin class of size
    // >= 3 rules out any independent FTRS)
    bool twin_shortcut = true;
};

// Minimum resolving set; ascending-cardinality enumeration over the pair
// cover index. dim of the one-vertex graph is 0 by convention (the empty
// set resolves it).
Certificate metric_dimension_exact(const Graph& g, const SolveOptions& opts = {});

// Minimum fault-tolerant resolving set. The search fixes every twin class
// of size >= 2 as mandatory members and starts at
// max(dim+1, #forced, 2); both bounds are re-validated against a
// no-shortcut oracle in the test suite.
Certificate ftmd_exact(const Graph& g, const SolveOptions& opts = {});

// Minimum independent resolving set, or undefined after exhausting all
// independent sets up to beta.
Certificate ir_exact(const Graph& g, const SolveOptions& opts = {});

// Minimum independent fault-tolerant resolving set, or undefined (with
// exhaustion through beta, or twin-class evidence when the shortcut fires).
Certificate ifr_exact(const Graph& g, const SolveOptions& opts = {});

// Maximum independent set size via branch and bound; witness is the
// lexicographically least maximum independent set.
Certificate independence_number_exact(const Graph& g, const SolveOptions& opts = {});

Certificate solve(Invariant inv, const Graph& g, const SolveOptions& opts = {});

// Lexicographically least fault-tolerant k-subset, if any. Backs the
// theorem lower-bound sweeps ("no 3-subset is an FTRS").
std::optional<std::vector<int>> least_ft_subset_of_size(const Graph& g, const DistanceMatrix& d,
                                                        int k, int workers = 1);

struct BoundReport {
    // union of twin classes of size >= 2; every FTRS contains all of them
    std::vector<int> forced_vertices;
    std::optional<int> dim_plus_one;
    int ftmd_lower_bound = 2;
};

BoundReport lower_bounds(const Graph& g, std::optional<int> certified_dim = std::nullopt);

// Joint report over dim, fdim, beta, ir, ifr with the inequality chain
// 1+dim <= fdim <= ifr <= 1+beta <= n evaluated where ifr exists.
struct ChainReport {
    int order = 0;
    Certificate dim, fdim, beta, ir, ifr;
    bool chain_holds = false;
    bool prop_ifr_implies_ir = false;  // ir defined whenever ifr is
    bool ifr_le_beta = false;          // stronger bound, recorded not asserted
    // dim*(1 + 2.5^(dim-1)), printed for inspection only; the literature is
    // inconsistent about which side of fdim it bounds
    double dim_scaling_value = 0.0;

    std::string render() const;
};

ChainReport chain_check(const Graph& g, const SolveOptions& opts = {});

}  // namespace resolv

#endif
