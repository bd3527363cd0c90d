#include "wdr/sieve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <json.hpp>

#include "wdr/error.hpp"
#include "wdr/modp.hpp"
#include "wdr/weakdiv.hpp"

namespace wdr {

namespace {

Integer big(long v)
{
    return Integer(v);
}

/* first x > B with x = r mod q */
Integer first_above(const Integer &B, const Integer &r, const Integer &q)
{
    Integer lo = B + 1;
    return lo + mod_floor(r - lo, q);
}

/* P(l) and P'(l) for P = sum_{i <= n-2} a_i x^{n-i} */
std::pair<Integer, Integer> prefix_values(const std::vector<Integer> &prefix, unsigned n, const Integer &l)
{
    Integer P = 0, dP = 0;
    for (size_t i = 0; i < prefix.size(); i++) {
        const unsigned e = n - static_cast<unsigned>(i);
        P += prefix[i] * ipow(l, e);
        dP += prefix[i] * Integer(e) * ipow(l, e - 1);
    }
    return {P, dP};
}

std::vector<uint64_t> residues(const BinaryForm &f, uint64_t p)
{
    std::vector<uint64_t> r(f.degree() + 1);
    for (unsigned i = 0; i <= f.degree(); i++)
        r[i] = reduce_mod(f[i], p);
    return r;
}

/* floor(scale / sqrt(D)) = isqrt(floor(scale^2 / D)) */
Integer weighted_term(const Integer &D)
{
    Integer q = weighted_scale() * weighted_scale() / abs(D);
    Integer r;
    mpz_sqrt(r.get_mpz_t(), q.get_mpz_t());
    return r;
}

std::string fixed_decimal(const Integer &num, const Integer &scale)
{
    Integer whole = num / scale, frac = num % scale;
    std::string digits = frac.get_str();
    const size_t width = scale.get_str().size() - 1;
    digits.insert(0, width - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0')
        digits.pop_back();
    return whole.get_str() + (digits.empty() ? "" : "." + digits);
}

void finalize(SieveReport &rep)
{
    for (auto &row : rep.per_m) {
        row.counts.deduped = 0;
        row.weighted_num = 0;
    }
    for (const auto &[id, rec] : rep.reps)
        for (auto &row : rep.per_m)
            if (rec.key.m == row.m) {
                row.counts.deduped++;
                row.weighted_num += weighted_term(rec.ring_disc);
            }
}

nlohmann::json counts_json(const StageCounts &c)
{
    return {{"candidates", c.candidates}, {"gcd_filtered", c.gcd_filtered}, {"presieved", c.presieved},
            {"uwd", c.uwd},               {"reduced", c.reduced},           {"deduped", c.deduped},
            {"unresolved", c.unresolved}};
}

} // namespace

void SieveConfig::validate() const
{
    if (n < 3)
        throw DomainError("sieve config: n must be at least 3");
    if (s < 3)
        throw DomainError("sieve config: s must be at least 3 so that 1 <= a_1 < s/2 is nonempty");
    if (t < 1)
        throw DomainError("sieve config: t must be positive");
    if (M < 2)
        throw DomainError("sieve config: M must be at least 2");
    if (m_list.empty())
        throw DomainError("sieve config: m_list is empty");
    for (long m : m_list)
        if (m < 1 || !is_squarefree(factor_integer(big(m))))
            throw DomainError("sieve config: m = " + std::to_string(m) + " is not a squarefree positive integer");
    if (shards == 0 || threads == 0)
        throw DomainError("sieve config: shards and threads must be positive");
    if (precision == 0 || precision > kMaxBits)
        throw DomainError("sieve config: precision must lie in [1, " + std::to_string(kMaxBits) + "]");
}

SieveConfig parse_sieve_config(std::istream &in)
{
    namespace pt = boost::property_tree;
    pt::ptree tree;
    try {
        pt::ini_parser::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw DomainError(std::string("sieve config: ") + e.what());
    }
    SieveConfig cfg;
    try {
        for (const auto &[key, node] : tree) {
            if (!node.empty())
                throw DomainError("sieve config: sections are not supported ([" + key + "])");
            const std::string v = node.get_value<std::string>();
            if (key == "n")
                cfg.n = node.get_value<unsigned>();
            else if (key == "s")
                cfg.s = node.get_value<long>();
            else if (key == "t")
                cfg.t = node.get_value<long>();
            else if (key == "M")
                cfg.M = node.get_value<uint64_t>();
            else if (key == "rho_B")
                cfg.rho_B = node.get_value<double>();
            else if (key == "precision")
                cfg.precision = node.get_value<unsigned>();
            else if (key == "budget")
                cfg.budget = node.get_value<uint64_t>();
            else if (key == "seed")
                cfg.seed = node.get_value<uint64_t>();
            else if (key == "shards")
                cfg.shards = node.get_value<unsigned>();
            else if (key == "threads")
                cfg.threads = node.get_value<unsigned>();
            else if (key == "out")
                cfg.out = v;
            else if (key == "m_list") {
                std::vector<std::string> parts;
                boost::split(parts, v, boost::is_any_of(", "), boost::token_compress_on);
                cfg.m_list.clear();
                for (auto &part : parts)
                    if (!part.empty())
                        cfg.m_list.push_back(std::stol(part));
            } else
                throw DomainError("sieve config: unknown key '" + key + "'");
        }
    } catch (const pt::ptree_bad_data &e) {
        throw DomainError(std::string("sieve config: bad value: ") + e.what());
    } catch (const std::invalid_argument &) {
        throw DomainError("sieve config: m_list must be a list of integers");
    }
    cfg.validate();
    return cfg;
}

SieveConfig load_sieve_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("sieve config: cannot open " + path);
    return parse_sieve_config(in);
}

long suggested_box_scale(unsigned n, long m, double X)
{
    if (n < 3 || m < 1 || X <= 0)
        throw DomainError("suggested_box_scale: needs n >= 3, m >= 1, X > 0");
    const double e = (static_cast<double>(n) - 4) / ((n - 1.0) * (3.0 * n - 8));
    return std::max(3L, std::lround(std::pow(static_cast<double>(m) * m * X, e)));
}

Rational box_height(const SieveConfig &cfg, long m)
{
    const unsigned n = cfg.n;
    Rational X(ipow(big(cfg.s), 2 * n - 2) * ipow(big(cfg.t), n * (n - 1)), big(m) * big(m));
    X.canonicalize();
    return X;
}

std::pair<Integer, Integer> solve_window(const std::vector<Integer> &prefix, const Integer &l, const Integer &m,
                                         const Integer &B, const Integer &C)
{
    const unsigned n = static_cast<unsigned>(prefix.size()) + 1;
    auto [P, dP] = prefix_values(prefix, n, l);
    /* f'(l) = P'(l) + a_{n-1} = 0 mod m, then f(l) = P(l) + a_{n-1} l + a_n = 0 mod m^2 */
    Integer a = first_above(B, -dP, m);
    Integer b = first_above(C, -(P + a * l), m * m);
    return {a, b};
}

std::vector<std::pair<long, long>> box_prefixes(const SieveConfig &cfg)
{
    std::vector<std::pair<long, long>> out;
    for (long a0 = cfg.s / 2 + 1; a0 <= cfg.s; a0++)
        for (long a1 = 1; 2 * a1 < cfg.s; a1++)
            if (std::gcd(a0, a1) == 1)
                out.emplace_back(a0, a1);
    if (cfg.seed != 0) {
        std::mt19937_64 rng(cfg.seed);
        std::shuffle(out.begin(), out.end(), rng);
    }
    return out;
}

void enumerate_box(const SieveConfig &cfg, long m, const BoxVisitor &visit, size_t first, size_t last)
{
    const unsigned n = cfg.n;
    const auto prefixes = box_prefixes(cfg);
    last = std::min(last, prefixes.size());
    std::vector<Integer> height(n + 1);
    for (unsigned i = 0; i <= n; i++)
        height[i] = big(cfg.s) * ipow(big(cfg.t), i);
    /* guard on a_{n-2} */
    std::optional<Integer> floor_guard;
    if (cfg.rho_B > 0) {
        long double g = static_cast<long double>(cfg.s) * std::pow(static_cast<long double>(cfg.rho_B), n - 2) * m;
        floor_guard = Integer(std::ceil(static_cast<double>(g)));
    }
    const Integer mm = big(m), m2 = mm * mm;
    const Integer &top1 = height[n - 1], &top2 = height[n];
    std::vector<Integer> prefix(n - 1);
    for (size_t idx = first; idx < last; idx++) {
        prefix[0] = prefixes[idx].first;
        prefix[1] = prefixes[idx].second;
        /* odometer over a_2 .. a_{n-2} */
        std::vector<Integer> lo(n - 1), hi(n - 1);
        bool empty = false;
        for (unsigned i = 2; i + 1 < n; i++) {
            lo[i] = -height[i];
            hi[i] = height[i];
        }
        if (floor_guard) {
            if (n == 3)
                empty = prefix[1] < *floor_guard;
            else {
                lo[n - 2] = std::max(lo[n - 2], *floor_guard);
                empty = lo[n - 2] > hi[n - 2];
            }
        }
        if (empty)
            continue;
        for (unsigned i = 2; i + 1 < n; i++)
            prefix[i] = lo[i];
        for (;;) {
            for (Integer l = 0; l < mm; l++) {
                auto [P, dP] = prefix_values(prefix, n, l);
                for (Integer a = first_above(-top1 - 1, -dP, mm); a <= top1; a += mm) {
                    Integer b = first_above(-top2 - 1, -(P + a * l), m2);
                    for (; b <= top2; b += m2) {
                        std::vector<Integer> c = prefix;
                        c.push_back(a);
                        c.push_back(b);
                        if (!visit(BinaryForm(std::move(c)), l))
                            return;
                    }
                }
            }
            unsigned i = n - 2;
            while (i >= 2 && prefix[i] == hi[i]) {
                prefix[i] = lo[i];
                i--;
            }
            if (i < 2)
                break;
            prefix[i] += 1;
        }
    }
}

bool presieve(const BinaryForm &f, const Integer &l, const Integer &m, uint64_t M)
{
    if (M < 2)
        throw DomainError("presieve: M must be at least 2");
    for (uint64_t p : primes_below(M)) {
        const auto r = residues(f, p);
        if (strongly_divisible_mod_p(r, p))
            return false;
        const Integer P(static_cast<unsigned long>(p));
        if (m % P != 0) {
            if (r[0] == 0 && r[1] == 0)
                return false;
            continue;
        }
        std::vector<Integer> red(r.size());
        for (size_t i = 0; i < r.size(); i++)
            red[i] = Integer(static_cast<unsigned long>(r[i]));
        DoubleRootProfile prof = double_root_profile(red, P);
        if (prof.kind != ProfileKind::affine_double || *prof.root != mod_floor(l, P))
            return false;
    }
    return true;
}

StageCounts &StageCounts::operator+=(const StageCounts &o)
{
    candidates += o.candidates;
    gcd_filtered += o.gcd_filtered;
    presieved += o.presieved;
    uwd += o.uwd;
    reduced += o.reduced;
    deduped += o.deduped;
    unresolved += o.unresolved;
    return *this;
}

StageCounts SieveReport::total() const
{
    StageCounts c;
    for (const auto &row : per_m)
        c += row.counts;
    return c;
}

Integer SieveReport::weighted_num() const
{
    Integer w = 0;
    for (const auto &row : per_m)
        w += row.weighted_num;
    return w;
}

const Integer &weighted_scale()
{
    static const Integer scale("1000000000000000000000000000000");
    return scale;
}

std::string SieveReport::csv() const
{
    std::ostringstream os;
    os << "m,candidates,presieved,uwd,reduced,deduped,weighted_num,weighted_scale,X\n";
    auto line = [&](const std::string &m, const StageCounts &c, const Integer &w, const std::string &X) {
        os << m << ',' << c.candidates << ',' << c.presieved << ',' << c.uwd << ',' << c.reduced << ','
           << c.deduped << ',' << w.get_str() << ',' << weighted_scale().get_str() << ',' << X << '\n';
    };
    for (const auto &row : per_m)
        line(std::to_string(row.m), row.counts, row.weighted_num, to_string(row.X));
    /* sum over m; X differs per row */
    line("all", total(), weighted_num(), "");
    return os.str();
}

std::string SieveReport::jsonl() const
{
    std::ostringstream os;
    for (const auto &[id, rec] : reps) {
        nlohmann::json j = {{"key", rec.key.str()},          {"m", to_string(rec.key.m)},
                            {"l", to_string(rec.l)},          {"form", rec.form.str()},
                            {"disc", to_string(rec.disc)},    {"ring_disc", to_string(rec.ring_disc)}};
        os << j.dump() << '\n';
    }
    return os.str();
}

std::string SieveReport::summary_json() const
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : per_m) {
        nlohmann::json r = counts_json(row.counts);
        r["m"] = row.m;
        r["X"] = to_string(row.X);
        r["weighted"] = fixed_decimal(row.weighted_num, weighted_scale());
        rows.push_back(r);
    }
    nlohmann::json j;
    j["config"] = {{"n", cfg.n},           {"s", cfg.s},         {"t", cfg.t},
                   {"m_list", cfg.m_list}, {"M", cfg.M},         {"rho_B", cfg.rho_B},
                   {"precision", cfg.precision}, {"budget", cfg.budget}, {"seed", cfg.seed},
                   {"shards", cfg.shards}};
    j["per_m"] = rows;
    j["total"] = counts_json(total());
    j["weighted"] = fixed_decimal(weighted_num(), weighted_scale());
    j["budget_exhausted"] = budget_exhausted;
    j["notes"] = notes;
    j["seconds"] = seconds;
    return j.dump(2) + "\n";
}

SieveReport run_shard(const SieveConfig &cfg, unsigned shard)
{
    cfg.validate();
    if (shard >= cfg.shards)
        throw DomainError("run_shard: shard index out of range");
    const size_t P = box_prefixes(cfg).size();
    const size_t first = P * shard / cfg.shards, last = P * (shard + 1) / cfg.shards;
    const uint64_t share = (cfg.budget + cfg.shards - 1) / cfg.shards;
    SieveReport rep;
    rep.cfg = cfg;
    uint64_t used = 0;
    for (long m : cfg.m_list) {
        MReport row{m, {}, 0, box_height(cfg, m)};
        StageCounts &c = row.counts;
        const Integer mm = big(m), m2 = mm * mm;
        enumerate_box(
            cfg, m,
            [&](const BinaryForm &f, const Integer &l) {
                if (used == share) {
                    rep.budget_exhausted = true;
                    return false;
                }
                used++;
                c.candidates++;
                const Integer disc = discriminant(f);
                if (disc == 0 || content(f) != 1)
                    return true;
                c.gcd_filtered++;
                if (!presieve(f, l, mm, cfg.M))
                    return true;
                c.presieved++;
                Factorization fac;
                try {
                    fac = factor_integer(disc);
                } catch (const BudgetError &) {
                    c.unresolved++;
                    return true;
                }
                if (!is_uwd(f, fac).is_uwd || !is_irreducible(f))
                    return true;
                c.uwd++;
                try {
                    if (!is_normally_minkowski_reduced(gram_profile(f, mm, cfg.precision)))
                        return true;
                } catch (const PrecisionError &) {
                    c.unresolved++;
                    return true;
                }
                c.reduced++;
                CanonicalKey key = canonical_representative(f, {mm, l}, cfg.precision);
                RepRecord rec{key, f, l, disc, disc / m2};
                auto [it, fresh] = rep.reps.try_emplace(key.id(), rec);
                if (!fresh && f.coeffs() < it->second.form.coeffs())
                    it->second = rec;
                return true;
            },
            first, last);
        rep.per_m.push_back(row);
        if (rep.budget_exhausted)
            break;
    }
    finalize(rep);
    return rep;
}

SieveReport merge_reports(const std::vector<SieveReport> &parts)
{
    if (parts.empty())
        throw DomainError("merge_reports: nothing to merge");
    SieveReport out;
    out.cfg = parts.front().cfg;
    for (const auto &part : parts) {
        for (const auto &row : part.per_m) {
            auto it = std::find_if(out.per_m.begin(), out.per_m.end(), [&](const MReport &r) { return r.m == row.m; });
            if (it == out.per_m.end())
                out.per_m.push_back({row.m, {}, 0, row.X});
            it = std::find_if(out.per_m.begin(), out.per_m.end(), [&](const MReport &r) { return r.m == row.m; });
            it->counts += row.counts;
        }
        for (const auto &[id, rec] : part.reps) {
            auto [it, fresh] = out.reps.try_emplace(id, rec);
            if (!fresh && rec.form.coeffs() < it->second.form.coeffs())
                it->second = rec;
        }
        out.notes.insert(out.notes.end(), part.notes.begin(), part.notes.end());
        out.budget_exhausted = out.budget_exhausted || part.budget_exhausted;
        out.seconds += part.seconds;
    }
    std::sort(out.per_m.begin(), out.per_m.end(), [](const MReport &a, const MReport &b) { return a.m < b.m; });
    finalize(out);
    return out;
}

SieveReport run_sieve(const SieveConfig &cfg)
{
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    std::vector<SieveReport> parts(cfg.shards);
    std::vector<std::exception_ptr> errors(cfg.shards);
    for (unsigned base = 0; base < cfg.shards; base += cfg.threads) {
        std::vector<std::thread> pool;
        for (unsigned k = base; k < std::min(cfg.shards, base + cfg.threads); k++)
            pool.emplace_back([&, k] {
                try {
                    parts[k] = run_shard(cfg, k);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            });
        for (auto &th : pool)
            th.join();
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
    SieveReport rep = merge_reports(parts);
    rep.notes.clear();
    for (const auto &row : rep.per_m)
        if (row.counts.candidates == 0)
            rep.notes.push_back("m = " + std::to_string(row.m) + ": box is empty under the a_{n-2} guard");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

void write_report(const SieveReport &rep, const std::string &prefix)
{
    const std::filesystem::path base(prefix);
    if (base.has_parent_path())
        std::filesystem::create_directories(base.parent_path());
    auto put = [&](const std::string &suffix, const std::string &text) {
        std::ofstream out(prefix + suffix);
        if (!out)
            throw DomainError("write_report: cannot write " + prefix + suffix);
        out << text;
    };
    put(".csv", rep.csv());
    put(".jsonl", rep.jsonl());
    put(".summary.json", rep.summary_json());
}

std::string WeightedCount::decimal() const
{
    return fixed_decimal(num, scale);
}

WeightedCount weighted_count(const std::vector<SieveReport> &reports)
{
    WeightedCount w;
    w.num = 0;
    w.scale = weighted_scale();
    w.max_disc = 0;
    for (const auto &rep : reports)
        for (const auto &[id, rec] : rep.reps) {
            w.num += weighted_term(rec.ring_disc);
            w.rings++;
            if (abs(rec.ring_disc) > w.max_disc)
                w.max_disc = abs(rec.ring_disc);
        }
    return w;
}

} // namespace wdr
