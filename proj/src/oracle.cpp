// Brute-force count of transitive factorizations τ_1 ... τ_r σ ρ = id.
// σ runs over the class of μ, the τ's are chosen from τ_r down to τ_1 and ρ is forced.
#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace hurwitz {

std::uint64_t default_budget()
{
    if (const char* s = std::getenv("HURWITZ_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && end != s)
            return v;
    }
    return 1000000000ULL;
}

int hurwitz_r(const Partition& mu, const Partition& nu, int g)
{
    if (mu.size() != nu.size() || mu.size() < 1)
        throw std::invalid_argument("mu and nu must be partitions of the same d >= 1");
    int r = mu.length() + nu.length() - 2 + 2 * g;
    if (g < 0 || r < 0)
        throw std::invalid_argument("invalid genus/type combination");
    return r;
}

static Integer class_size(const Partition& mu)
{
    Integer z = 1;
    for (int k = 1; k <= mu.size(); ++k) {
        int m = mu.multiplicity(k);
        z *= ipow(k, m) * factorial(m);
    }
    return factorial(mu.size()) / z;
}

std::uint64_t oracle_cost(const Partition& mu, const Partition& nu, int g)
{
    int r = hurwitz_r(mu, nu, g);
    int d = mu.size();
    Integer c = class_size(mu) * ipow(Integer(d) * (d - 1) / 2, r);
    if (c > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max())))
        return std::numeric_limits<std::uint64_t>::max();
    return std::stoull(c.get_str());
}

std::vector<Permutation> conjugacy_class(const Partition& mu)
{
    int d = mu.size();
    if (d > 10)
        throw std::invalid_argument("conjugacy_class: degree too large for explicit listing");
    std::vector<int> img(d);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        Permutation p(img);
        if (cycle_type(p) == mu)
            out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

namespace {

struct Search {
    int d, r, n;
    Partition nu;
    std::vector<std::pair<int, int>> transp;

    // state
    std::vector<int> q;                    // current product τ_i ... τ_r σ as an image array
    std::vector<std::vector<unsigned>> masks;   // component masks per depth
    std::vector<int> chosen;               // transposition index per position (1-based positions)
    int cycles = 0;

    const std::function<void(const std::vector<int>&, const std::vector<int>&)>* leaf = nullptr;
    std::uint64_t found = 0;

    bool same_cycle(int a, int b) const
    {
        for (int x = q[a];; x = q[x]) {
            if (x == b)
                return true;
            if (x == a)
                return false;
        }
    }

    static int components(const std::vector<unsigned>& m, int d)
    {
        unsigned seen = 0;
        int c = 0;
        for (int x = 0; x < d; ++x)
            if (!(seen & (1u << x))) {
                seen |= m[x];
                ++c;
            }
        return c;
    }

    // pos = index of the τ being chosen (r-1 down to 0); depth level = r - 1 - pos
    void rec(int pos)
    {
        const auto& cur = masks[r - 1 - pos];
        for (size_t t = 0; t < transp.size(); ++t)
            step(pos, static_cast<int>(t), cur);
    }

    void step(int pos, int t, const std::vector<unsigned>& cur)
    {
        auto [a, b] = transp[t];
        int delta = same_cycle(a, b) ? 1 : -1;
        std::swap(q[a], q[b]);
        cycles += delta;
        auto& nm = masks[r - pos];
        nm = cur;
        unsigned merged = cur[a] | cur[b];
        if (cur[a] != cur[b])
            for (int x = 0; x < d; ++x)
                if (merged & (1u << x))
                    nm[x] = merged;
        int remaining = pos;
        if (std::abs(cycles - n) <= remaining && components(nm, d) - 1 <= remaining) {
            chosen[pos] = t;
            if (pos == 0)
                finish(nm);
            else
                rec(pos - 1);
        }
        cycles -= delta;
        std::swap(q[a], q[b]);
    }

    std::array<int, 32> target{};

    bool has_target_type() const
    {
        std::array<int, 32> cnt{};
        unsigned seen = 0;
        for (int s = 0; s < d; ++s) {
            if (seen & (1u << s))
                continue;
            int len = 0;
            for (int x = s; !(seen & (1u << x)); x = q[x]) {
                seen |= 1u << x;
                ++len;
            }
            if (++cnt[len] > target[len])
                return false;
        }
        return true;
    }

    void finish(const std::vector<unsigned>& m)
    {
        if (cycles != n || components(m, d) != 1 || !has_target_type())
            return;
        ++found;
        if (leaf)
            (*leaf)(chosen, q);
    }
};

Search make_search(const Partition& mu, const Partition& nu, int g)
{
    Search s;
    s.d = mu.size();
    s.r = hurwitz_r(mu, nu, g);
    s.n = nu.length();
    s.nu = nu;
    for (int p : nu.parts())
        ++s.target[p];
    if (s.d > 31)
        throw std::invalid_argument("degree too large for the oracle");
    for (int a = 0; a < s.d; ++a)
        for (int b = a + 1; b < s.d; ++b)
            s.transp.push_back({a, b});
    s.masks.assign(s.r + 1, std::vector<unsigned>(s.d));
    s.chosen.assign(s.r, 0);
    return s;
}

void start(Search& s, const Permutation& sigma)
{
    s.q = sigma.image();
    s.cycles = 0;
    for (const auto& c : sigma.cycles()) {
        unsigned m = 0;
        for (int x : c)
            m |= 1u << x;
        for (int x : c)
            s.masks[0][x] = m;
        ++s.cycles;
    }
}

void check_budget(const Partition& mu, const Partition& nu, int g, std::uint64_t budget)
{
    std::uint64_t cost = oracle_cost(mu, nu, g);
    if (cost > budget)
        throw BudgetExceeded("oracle budget exceeded: search size " + std::to_string(cost) + " > budget " +
                             std::to_string(budget) + " for mu=" + mu.str() + " nu=" + nu.str() +
                             " g=" + std::to_string(g));
}

} // namespace

Integer count_labeled_factorizations(const Partition& mu, const Partition& nu, int g, std::uint64_t budget,
                                     int threads)
{
    hurwitz_r(mu, nu, g);
    check_budget(mu, nu, g, budget);
    auto sigmas = conjugacy_class(mu);
    Search proto = make_search(mu, nu, g);

    if (proto.r == 0) {
        std::uint64_t c = 0;
        for (const auto& s : sigmas) {
            Search w = proto;
            start(w, s);
            if (w.components(w.masks[0], w.d) == 1 && cycle_type(s.inverse()) == nu)
                ++c;
        }
        return Integer(std::to_string(c));
    }

    // tasks: (σ, τ_r)
    size_t ntasks = sigmas.size() * proto.transp.size();
    std::atomic<size_t> next{0};
    std::mutex mtx;
    Integer total = 0;
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&]() {
        Search w = proto;
        std::uint64_t local = 0;
        for (size_t t; (t = next.fetch_add(1)) < ntasks;) {
            start(w, sigmas[t / proto.transp.size()]);
            w.found = 0;
            w.step(w.r - 1, static_cast<int>(t % proto.transp.size()), w.masks[0]);
            local += w.found;
        }
        std::lock_guard<std::mutex> lock(mtx);
        total += Integer(std::to_string(local));
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    return total;
}

std::uint64_t enumerate_factorizations(const Partition& mu, const Partition& nu, int g,
                                       const std::function<void(const Factorization&)>& sink,
                                       std::uint64_t budget)
{
    hurwitz_r(mu, nu, g);
    check_budget(mu, nu, g, budget);
    Search s = make_search(mu, nu, g);
    int d = s.d;
    Permutation current_sigma;
    std::function<void(const std::vector<int>&, const std::vector<int>&)> leaf =
        [&](const std::vector<int>& chosen, const std::vector<int>& q) {
            Factorization f;
            f.degree = d;
            for (int i = 0; i < s.r; ++i)
                f.taus.push_back(Permutation::transposition(d, s.transp[chosen[i]].first, s.transp[chosen[i]].second));
            f.sigma = current_sigma;
            f.rho = Permutation(q).inverse();
            sink(f);
        };
    s.leaf = &leaf;
    std::uint64_t count = 0;
    for (const auto& sigma : conjugacy_class(mu)) {
        current_sigma = sigma;
        start(s, sigma);
        s.found = 0;
        if (s.r == 0) {
            if (s.components(s.masks[0], d) == 1 && cycle_type(sigma) == nu) {
                Factorization f;
                f.degree = d;
                f.sigma = sigma;
                f.rho = sigma.inverse();
                sink(f);
                ++count;
            }
            continue;
        }
        s.rec(s.r - 1);
        count += s.found;
    }
    return count;
}

} // namespace hurwitz
