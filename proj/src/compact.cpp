// Compaction search. A representation of e modulo the identity space N is
// e + n, n in N. Processing coordinates in some order and zeroing each one
// whenever a remaining direction of N allows it yields a representation
// supported on independent commutators; the order decides which. Orders are
// scored modulo a 61-bit prime, the winner is replayed exactly.

#include <algorithm>
#include <numeric>
#include <random>

#include "bch/identities.hpp"

namespace bch {

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mul_mod(u64 a, u64 b)
{
    unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    u64 lo = static_cast<u64>(p & kPrime);
    u64 hi = static_cast<u64>(p >> 61);
    u64 s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

u64 sub_mod(u64 a, u64 b) { return a >= b ? a - b : a + kPrime - b; }

u64 pow_mod(u64 a, u64 e)
{
    u64 r = 1;
    while (e) {
        if (e & 1)
            r = mul_mod(r, a);
        a = mul_mod(a, a);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a) { return pow_mod(a, kPrime - 2); }

u64 to_mod(const Rational& r)
{
    u64 num = mpz_fdiv_ui(r.raw().get_num_mpz_t(), kPrime);
    u64 den = mpz_fdiv_ui(r.raw().get_den_mpz_t(), kPrime);
    return mul_mod(num, inv_mod(den));
}

using Order = std::vector<std::size_t>;

struct ModProblem {
    std::vector<u64> target;
    std::vector<std::vector<u64>> directions;
    std::vector<u64> offset;  // empty when there is no secondary objective
};

// (terms of the representation, terms of representation + offset)
using Score = std::pair<std::size_t, std::size_t>;

Score score(const ModProblem& prob, const Order& order)
{
    std::vector<u64> p = prob.target;
    auto dirs = prob.directions;
    for (std::size_t j : order) {
        if (dirs.empty())
            break;
        auto it = std::find_if(dirs.begin(), dirs.end(), [j](const auto& v) { return v[j] != 0; });
        if (it == dirs.end())
            continue;
        std::vector<u64> v = std::move(*it);
        *it = std::move(dirs.back());
        dirs.pop_back();
        u64 inv = inv_mod(v[j]);
        if (p[j] != 0) {
            u64 f = mul_mod(p[j], inv);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k])
                    p[k] = sub_mod(p[k], mul_mod(f, v[k]));
        }
        for (auto& w : dirs) {
            if (w[j] == 0)
                continue;
            u64 f = mul_mod(w[j], inv);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k])
                    w[k] = sub_mod(w[k], mul_mod(f, v[k]));
        }
    }
    std::size_t primary = static_cast<std::size_t>(std::count_if(p.begin(), p.end(), [](u64 x) { return x != 0; }));
    std::size_t secondary = 0;
    if (!prob.offset.empty())
        for (std::size_t k = 0; k < p.size(); ++k)
            secondary += ((p[k] + prob.offset[k]) % kPrime) != 0;
    return {primary, secondary};
}

std::vector<Rational> replay_exact(std::vector<Rational> p, std::vector<std::vector<Rational>> dirs, const Order& order)
{
    for (std::size_t j : order) {
        if (dirs.empty())
            break;
        auto it = std::find_if(dirs.begin(), dirs.end(), [j](const auto& v) { return !v[j].is_zero(); });
        if (it == dirs.end())
            continue;
        std::vector<Rational> v = std::move(*it);
        *it = std::move(dirs.back());
        dirs.pop_back();
        Rational inv = v[j].reciprocal();
        if (!p[j].is_zero()) {
            Rational f = p[j] * inv;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    p[k] -= f * v[k];
        }
        for (auto& w : dirs) {
            if (w[j].is_zero())
                continue;
            Rational f = w[j] * inv;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!v[k].is_zero())
                    w[k] -= f * v[k];
        }
    }
    return p;
}

std::vector<Rational> coords(const LieExpr& e, std::size_t width)
{
    std::vector<Rational> v(width);
    for (const auto& [k, c] : e) {
        auto idx = commutator_index(k);
        if (!idx || *idx >= width)
            throw std::invalid_argument("compact_reduce: term outside the commutator list");
        v[*idx] = c;
    }
    return v;
}

// Coordinates outside the support first, then the support by increasing
// absolute coefficient.
Order order_from(const std::vector<Rational>& v)
{
    Order o(v.size());
    std::iota(o.begin(), o.end(), std::size_t{0});
    std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) { return v[a].abs() < v[b].abs(); });
    return o;
}

}  // namespace

std::size_t default_compact_budget(std::size_t grade)
{
    if (grade <= 6)
        return 64;
    if (grade == 7)
        return 512;
    if (grade == 8 || grade == 9)
        return 8000;
    return 1024;
}

LieExpr compact_reduce(const LieExpr& e, const IdentityReport& report, const CompactOptions& options)
{
    if (e.is_zero() || report.identities.empty())
        return rewrite_in_basis(e, report);
    const std::size_t width = report.commutators.size();
    const auto& comms = report.commutators;

    auto exact_target = coords(e, width);
    std::vector<std::vector<Rational>> exact_dirs;
    for (const auto& id : report.identities)
        exact_dirs.push_back(coords(id, width));

    ModProblem prob;
    for (const auto& x : exact_target)
        prob.target.push_back(to_mod(x));
    for (const auto& d : exact_dirs) {
        std::vector<u64> v;
        for (const auto& x : d)
            v.push_back(to_mod(x));
        prob.directions.push_back(std::move(v));
    }

    auto exact_offset = options.offset.is_zero() ? std::vector<Rational>{} : coords(options.offset, width);
    for (const auto& x : exact_offset)
        prob.offset.push_back(to_mod(x));
    auto exact_score = [&](const LieExpr& r) {
        Score sc{r.size(), 0};
        if (!options.offset.is_zero())
            sc.second = (r + options.offset).size();
        return sc;
    };

    std::vector<LieExpr> seeds;
    seeds.push_back(rewrite_in_basis(e, report));
    for (const auto& s : options.seeds) {
        if (expand_lie(s) != expand_lie(e))
            throw std::invalid_argument("compact_reduce: seed is not equal to the input");
        seeds.push_back(s);
    }

    std::vector<Order> initial;
    for (const auto& s : seeds)
        initial.push_back(order_from(coords(s, width)));
    initial.push_back(order_from(exact_target));
    Order identity_order(width);
    std::iota(identity_order.begin(), identity_order.end(), std::size_t{0});
    initial.push_back(identity_order);
    initial.emplace_back(identity_order.rbegin(), identity_order.rend());

    Order best_order = initial.front();
    Score best = score(prob, best_order);
    for (const auto& o : initial) {
        Score s = score(prob, o);
        if (s < best) {
            best = s;
            best_order = o;
        }
    }

    // Batches are generated sequentially from one RNG and scored in
    // parallel, so the outcome does not depend on the thread count.
    const std::size_t budget = options.budget ? options.budget : default_compact_budget(report.grade);
    constexpr std::size_t kBatch = 16;
    std::mt19937_64 rng(options.seed ^ (report.grade * 0x9e3779b97f4a7c15ULL));
    for (std::size_t done = initial.size(); done < budget; done += kBatch) {
        std::vector<Order> batch(kBatch);
        for (std::size_t b = 0; b < kBatch; ++b) {
            Order o = best_order;
            if (b % 4 == 0) {
                std::shuffle(o.begin(), o.end(), rng);
            }
            else {
                // Move one or two coordinates from the tail, where the
                // surviving terms end up, to the front.
                std::size_t moves = 1 + rng() % 2;
                std::size_t tail = std::min(std::max<std::size_t>(best.first, 1) * 2, o.size());
                for (std::size_t t = 0; t < moves; ++t) {
                    std::size_t pos = o.size() - 1 - rng() % tail;
                    std::size_t val = o[pos];
                    o.erase(o.begin() + static_cast<long>(pos));
                    o.insert(o.begin(), val);
                }
            }
            batch[b] = std::move(o);
        }
        std::vector<Score> scores(kBatch);
        const long nb = static_cast<long>(kBatch);
#pragma omp parallel for schedule(dynamic, 1)
        for (long b = 0; b < nb; ++b)
            scores[static_cast<std::size_t>(b)] = score(prob, batch[static_cast<std::size_t>(b)]);
        for (std::size_t b = 0; b < kBatch; ++b) {
            if (scores[b] <= best) {
                best = scores[b];
                best_order = batch[b];
            }
        }
    }

    LieExpr found;
    auto v = replay_exact(exact_target, exact_dirs, best_order);
    for (std::size_t i = 0; i < width; ++i)
        if (!v[i].is_zero())
            found.add_term(comms[i], v[i]);
    if (expand_lie(found) != expand_lie(e))
        throw VerificationError("compact_reduce: result changed the word expansion");

    LieExpr result = found;
    Score result_score = exact_score(found);
    for (const auto& s : seeds) {
        Score sc = exact_score(s);
        if (sc < result_score) {
            result = s;
            result_score = sc;
        }
    }
    return result;
}

LieExpr compact_reduce(const LieExpr& e, std::size_t grade)
{
    if (e.is_zero() || grade < 2)
        return e;
    IdentityCatalog catalog(grade, {Orientation::published, false});
    CompactOptions opts;
    opts.seeds.push_back(rewrite_with_lifted(e, catalog, 6));
    return compact_reduce(e, catalog.report(grade), opts);
}

}  // namespace bch
