#ifndef WDR_SIEVE_HPP
#define WDR_SIEVE_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wdr/arith.hpp"
#include "wdr/binring.hpp"
#include "wdr/forms.hpp"
#include "wdr/reduce.hpp"

namespace wdr {

struct SieveConfig {
    unsigned n = 3;
    long s = 8;
    long t = 1;
    std::vector<long> m_list{1};
    uint64_t M = 12;           /* presieve over primes p < M */
    double rho_B = 0;          /* a_{n-2} >= s rho_B^{n-2} m; off when <= 0 */
    unsigned precision = kDefaultBits;
    uint64_t budget = 100000000; /* candidates, split evenly over shards */
    uint64_t seed = 0;         /* 0 keeps the natural prefix order */
    unsigned shards = 1;
    unsigned threads = 1;
    std::string out;           /* prefix for .csv, .jsonl and .summary.json */

    /* DomainError on n < 3, s < 3, t < 1, M < 2, an empty or non-squarefree
       m list, or shards == 0. */
    void validate() const;
};

/* INI text: `key = value` lines, m_list comma separated. Unknown keys are
   rejected. */
SieveConfig parse_sieve_config(std::istream &in);
SieveConfig load_sieve_config(const std::string &path);

/* round((m^2 X)^{(n-4)/((n-1)(3n-8))}), at least 3; a preset, not an
   optimum. */
long suggested_box_scale(unsigned n, long m, double X);

/* X = s^{2n-2} t^{n(n-1)} / m^2 */
Rational box_height(const SieveConfig &cfg, long m);

/* The unique (a_{n-1}, a_n) in (B, B + m] x (C, C + m^2] with f weakly
   divisible by m at l, where prefix = (a_0, ..., a_{n-2}). */
std::pair<Integer, Integer> solve_window(const std::vector<Integer> &prefix, const Integer &l, const Integer &m,
                                         const Integer &B, const Integer &C);

/* (a_0, a_1) pairs of the box in shard order: natural order, shuffled by
   cfg.seed when nonzero. */
std::vector<std::pair<long, long>> box_prefixes(const SieveConfig &cfg);

/* Every (f, l) of W(s:t:m) with prefixes[first, last) and the a_{n-2}
   guard. The callback returns false to stop early. */
using BoxVisitor = std::function<bool(const BinaryForm &, const Integer &)>;
void enumerate_box(const SieveConfig &cfg, long m, const BoxVisitor &visit, size_t first = 0,
                   size_t last = static_cast<size_t>(-1));

/* For primes p < M: p not dividing m must not put f in V_n(F_p) or in the
   a_0 = a_1 = 0 locus; p | m must leave the double root at l as the only
   multiple point. */
bool presieve(const BinaryForm &f, const Integer &l, const Integer &m, uint64_t M);

struct StageCounts {
    uint64_t candidates = 0;
    uint64_t gcd_filtered = 0; /* primitive, disc != 0 */
    uint64_t presieved = 0;
    uint64_t uwd = 0;          /* uwd and irreducible */
    uint64_t reduced = 0;
    uint64_t deduped = 0;
    uint64_t unresolved = 0;   /* factoring budget or precision exceeded */
    StageCounts &operator+=(const StageCounts &o);
    bool operator==(const StageCounts &) const = default;
};

struct RepRecord {
    CanonicalKey key;
    BinaryForm form; /* least box form with this key */
    Integer l;
    Integer disc;
    Integer ring_disc; /* disc / m^2 */
};

struct MReport {
    long m;
    StageCounts counts;
    Integer weighted_num; /* sum of floor(scale / sqrt|ring_disc|) */
    Rational X;
};

struct SieveReport {
    SieveConfig cfg;
    std::vector<MReport> per_m;
    std::map<std::string, RepRecord> reps; /* by CanonicalKey::id */
    std::vector<std::string> notes; /* e.g. a box emptied by the guard */
    bool budget_exhausted = false;
    double seconds = 0;

    StageCounts total() const;
    Integer weighted_num() const;
    std::string csv() const;
    std::string jsonl() const;
    std::string summary_json() const;
};

/* 10^30: each term 1 / sqrt|disc R'| is floored to this fixed point. */
const Integer &weighted_scale();

SieveReport run_shard(const SieveConfig &cfg, unsigned shard);
/* Counters add, representatives unite; deduped and weighted sums are
   recomputed from the union. */
SieveReport merge_reports(const std::vector<SieveReport> &parts);
SieveReport run_sieve(const SieveConfig &cfg);
void write_report(const SieveReport &rep, const std::string &prefix);

struct WeightedCount {
    Integer num;
    Integer scale;
    size_t rings = 0;
    Integer max_disc;
    std::string decimal() const;
};
WeightedCount weighted_count(const std::vector<SieveReport> &reports);

} // namespace wdr

#endif
