// Runs every acceptance criterion exactly and prints one PASS/FAIL line per criterion.
#include "hurwitz/bijection.hpp"
#include "hurwitz/cli.hpp"
#include "hurwitz/formulas.hpp"
#include "hurwitz/laurent.hpp"
#include "hurwitz/mobile.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/shapes.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hurwitz;

namespace {

constexpr std::uint64_t kBudget = 1000000000ull;

struct Verdict {
    bool pass = true;
    std::string detail;
};

std::ostream& log()
{
    return std::cout;
}

bool valid_type(const Partition& mu, const Partition& nu, int g)
{
    try {
        hurwitz_r(mu, nu, g);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// ---- 1 ------------------------------------------------------------------

Verdict cross_method_matrix()
{
    Verdict v;
    int cells = 0, compared = 0, skipped = 0, bad = 0;
    std::vector<std::string> skipped_cells;
    for (int d = 1; d <= 5; ++d)
        for (int g = 0; g <= 1; ++g)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d)) {
                    if (!valid_type(mu, nu, g))
                        continue;
                    ++cells;
                    if (oracle_cost(mu, nu, g) > kBudget) {
                        ++skipped;
                        skipped_cells.push_back("(" + mu.str() + " | " + nu.str() + "; g=" + std::to_string(g) + ")");
                        continue;
                    }
                    Rational want = hurwitz_values(mu, nu, g, kBudget).h_bar;
                    auto compare = [&](const std::string& what, const Rational& got) {
                        ++compared;
                        if (got != want) {
                            ++bad;
                            log() << "  C1 mismatch " << what << " at " << mu.str() << " | " << nu.str() << " g=" << g
                                  << ": " << to_string(got) << " vs oracle " << to_string(want) << '\n';
                        }
                    };
                    if (g == 0) {
                        compare("shapes", barh0_shapes(mu.parts(), nu.parts()));
                        if (mobile_enumeration_cost(mu, nu, true) <= kBudget / 10) {
                            auto mobiles = enumerate_free_mobiles(mu, nu, kBudget);
                            Rational hb = make_rational(Integer(mobiles.size()), Integer(hurwitz_r(mu, nu, 0) + 1));
                            compare("mobiles", values_from_hbullet(mu, nu, 0, hb).h_bar);
                        }
                        Partition x = mu.without_ones(), y = nu.without_ones();
                        if (x.size() < y.size())
                            std::swap(x, y);
                        compare("kz", kz_value(x.parts(), y.parts(), d));
                        if (x.length() == 1 && y.length() == 1)
                            compare("explicit", hbar_from_h(mu, nu, 0, explicit_two_parts(x.parts()[0], y.parts()[0], d)));
                    }
                    // the oracle itself: symmetric in (μ,ν)
                    if (mu != nu && oracle_cost(nu, mu, g) <= kBudget)
                        compare("oracle(nu,mu)", hurwitz_values(nu, mu, g, kBudget).h_bar);
                }
    v.pass = bad == 0;
    std::ostringstream os;
    os << cells << " cells (d<=5, g<=1), " << compared << " exact comparisons, " << bad << " mismatches; " << skipped
       << " d=5 cells over the 1e9 oracle budget:";
    for (const auto& s : skipped_cells)
        os << ' ' << s;
    v.detail = os.str();
    return v;
}

// ---- 2 ------------------------------------------------------------------

Verdict hurwitz_formula_check()
{
    Verdict v;
    int n = 0;
    for (int d = 1; d <= 4; ++d)
        for (const auto& mu : partitions_of(d)) {
            Partition ones(std::vector<int>(d, 1));
            // the enumerator's work estimate is loose; the oracle budget does not apply to it
            Integer mobiles = Integer(enumerate_free_mobiles(mu, ones, 1ull << 40).size());
            Integer closed = mobile_count_formula(mu, d);
            Rational hb = make_rational(mobiles, Integer(mu.length() + d - 1));
            Rational oracle = hurwitz_values(mu, ones, 0, kBudget).h_bullet;
            ++n;
            if (mobiles != closed || hb != oracle) {
                v.pass = false;
                log() << "  C2 mismatch at " << mu.str() << ": |HM|=" << to_string(mobiles) << " formula "
                      << to_string(closed) << " h•=" << to_string(hb) << " oracle " << to_string(oracle) << '\n';
            }
        }
    Integer ex = Integer(enumerate_free_mobiles(Partition({3}), Partition({1, 1, 1}), kBudget).size());
    v.pass &= ex == 9;
    v.detail = std::to_string(n) + " partitions mu with d<=4; |HM_0((3),1^3)| = " + to_string(ex);
    return v;
}

// ---- 3 ------------------------------------------------------------------

Verdict bijection_sweep()
{
    Verdict v;
    long galaxies = 0;
    int types = 0, bad_types = 0;
    for (int d = 1; d <= 4; ++d)
        for (int g = 0; g <= 1; ++g)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d)) {
                    if (!valid_type(mu, nu, g))
                        continue;
                    ++types;
                    const int r = hurwitz_r(mu, nu, g);
                    auto classes = galaxy_classes(mu, nu, g, kBudget);
                    std::set<std::string> images, orbit_union;
                    int bad = 0;
                    for (const auto& G : classes) {
                        ++galaxies;
                        try {
                            auto M = phi(G);
                            auto t = validate_mobile(M);
                            bool ok = t.excess == 2 * g && t.mu == mu && t.nu == nu &&
                                      canonical_embedding(M).genus == g && classify_mobile(M) == MobileClass::Coherent;
                            ok &= canonical_code(phi_inverse(M)) == canonical_code(G);
                            ok &= images.insert(canonical_code(M)).second;
                            std::set<std::string> orbit;
                            HurwitzMobile S = M;
                            for (int k = 0; k <= r; ++k) {
                                orbit.insert(canonical_code(S));
                                S = shift_mobile(S);
                            }
                            ok &= orbit.size() == static_cast<size_t>(r + 1) && canonical_code(S) == canonical_code(M);
                            orbit_union.insert(orbit.begin(), orbit.end());
                            bad += !ok;
                        } catch (const std::exception& e) {
                            ++bad;
                            log() << "  C3 exception at " << mu.str() << " | " << nu.str() << " g=" << g << ": " << e.what()
                                  << '\n';
                        }
                    }
                    Rational count = make_rational(Integer(orbit_union.size()), Integer(r + 1));
                    Rational hb = hurwitz_values(mu, nu, g, kBudget).h_bullet;
                    if (bad || count != hb) {
                        ++bad_types;
                        log() << "  C3 failure at " << mu.str() << " | " << nu.str() << " g=" << g << ": " << bad
                              << " bad galaxies, |HM^1c|/(r+1) = " << to_string(count) << " vs h• " << to_string(hb)
                              << '\n';
                    }
                }
    v.pass = bad_types == 0;
    v.detail = std::to_string(types) + " types (d<=4, g<=1), " + std::to_string(galaxies) + " galaxy classes, " +
               std::to_string(bad_types) + " failing types";
    return v;
}

// ---- 4 ------------------------------------------------------------------

Verdict eq2_check()
{
    Verdict v;
    const Rational expect[] = {make_rational(1, 2), 4, 120};
    std::ostringstream os;
    for (int d = 2; d <= 4; ++d) {
        Rational e = explicit_two_parts(2, 2, d);
        auto mu = Partition({2}).complete_to(d);
        auto oracle = hurwitz_values(mu, mu, 0, kBudget);
        Rational shapes = h_from_hbar(mu, mu, 0, barh0_shapes(mu.parts(), mu.parts()));
        v.pass &= e == expect[d - 2] && oracle.h == e && shapes == e;
        os << "h_0(2 1^" << d - 2 << ") = " << to_string(e) << " (oracle " << to_string(oracle.h) << "); ";
    }
    int n = 0;
    for (int a = 2; a <= 4; ++a)
        for (int b = 2; b <= a; ++b)
            for (int d = a; d <= 8; ++d) {
                auto mu = Partition({a}).complete_to(d), nu = Partition({b}).complete_to(d);
                ++n;
                if (explicit_two_parts(a, b, d) != h_from_hbar(mu, nu, 0, kz_value({a}, {b}, d))) {
                    v.pass = false;
                    log() << "  C4 mismatch a=" << a << " b=" << b << " d=" << d << '\n';
                }
            }
    os << n << " (a,b,d) with a,b<=4, d<=8 agree with the general formula";
    v.detail = os.str();
    return v;
}

// ---- 5 ------------------------------------------------------------------

Verdict polynomiality()
{
    Verdict v;
    const std::vector<Partition> seeds = {Partition({2}), Partition({3}), Partition({4}), Partition({2, 2})};
    std::ostringstream os;
    int wrong_degree = 0, residual = 0, pairs = 0;
    for (const auto& mu : seeds)
        for (const auto& nu : seeds) {
            if (mu.size() < nu.size())
                continue;
            ++pairs;
            auto fit = kz_polynomial(mu, nu);
            residual += !fit.residual_zero;
            if (fit.q.degree() != nu.size()) {
                ++wrong_degree;
                os << " (" << mu.str() << ";" << nu.str() << "):deg " << fit.q.degree() << "!=" << nu.size();
            }
        }
    v.pass = wrong_degree == 0 && residual == 0;
    v.detail = std::to_string(pairs) + " pairs, zero residual at held-out d in " + std::to_string(pairs - residual) +
               "; degree exactly |nu| fails in " + std::to_string(wrong_degree) + ":" + os.str();
    return v;
}

// ---- 6 ------------------------------------------------------------------

Verdict chamber_suite()
{
    Verdict v;
    std::ostringstream os;
    auto shapes = enumerate_bare_shapes(2, 2, false);
    bool six = shapes.size() == 6;
    os << shapes.size() << " shapes for m=n=2; ";

    int samples = 0, poly_bad = 0, oracle_checked = 0, repeated_22 = 0, max_coeff = 1;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        std::mt19937 rng(1000 * m + n);
        for (int t = 0; t < 300; ++t) {
            Composition x(m), y(n);
            for (auto& a : x)
                a = 1 + rng() % 6;
            long X = 0;
            for (int a : x)
                X += a;
            if (X < n)
                continue;
            // random composition of X into n parts
            std::vector<int> cuts;
            for (int i = 1; i < X; ++i)
                cuts.push_back(i);
            std::shuffle(cuts.begin(), cuts.end(), rng);
            cuts.resize(n - 1);
            std::sort(cuts.begin(), cuts.end());
            int prev = 0;
            for (int j = 0; j < n - 1; ++j) {
                y[j] = cuts[j] - prev;
                prev = cuts[j];
            }
            y[n - 1] = static_cast<int>(X) - prev;
            auto sv = sign_vector(x, y);
            if (std::count(sv.begin(), sv.end(), 0))
                continue;
            auto P = chamber_polynomial(x, y);
            ++samples;
            // coefficients +1: the polynomial is the plain sum of its monomials, one per active tree
            Rational sum = 0;
            std::set<std::vector<int>> distinct(P.monomials.begin(), P.monomials.end());
            for (const auto& mono : P.monomials) {
                Rational term = 1;
                for (int i = 0; i < m; ++i)
                    term *= rpow(Rational(x[i]), mono[i]);
                for (int j = 0; j < n; ++j)
                    term *= rpow(Rational(y[j]), mono[m + j]);
                sum += term;
            }
            std::vector<Rational> xr(x.begin(), x.end()), yr(y.begin(), y.end());
            Rational value = P.evaluate(xr, yr);
            Rational shapes_value = barh0_shapes(x, y);
            bool ok = value == sum && value == shapes_value && P.shapes.size() == P.monomials.size() &&
                      P.shapes.size() == active_shapes(x, y).size();
            // collected coefficients are 1 for m=n=2; larger shapes can repeat a degree sequence
            std::map<std::vector<int>, int> collected;
            for (const auto& mono : P.monomials)
                max_coeff = std::max(max_coeff, ++collected[mono]);
            if (m == 2 && n == 2)
                repeated_22 += distinct.size() != P.monomials.size();
            if (X <= 5) {
                ++oracle_checked;
                ok &= value == hurwitz_values(to_partition(x), to_partition(y), 0, kBudget).h_bar;
            }
            poly_bad += !ok;
        }
    }
    os << samples << " off-resonance samples (m,n<=3), " << poly_bad << " polynomial mismatches (" << oracle_checked
       << " also against the oracle), " << repeated_22 << " m=n=2 chambers with a coefficient other than +1"
       << " (largest collected coefficient over all m,n: " << max_coeff << "); ";

    int star_total = 0, star_printed = 0, star_mine = 0, simple_ok = 0;
    for (int d = 1; d <= 6; ++d)
        for (const auto& x : compositions_of(d)) {
            ++star_total;
            Rational star = barh0_shapes(x, {d});
            star_printed += star == rpow(Rational(d), d - 2);
            star_mine += star == rpow(Rational(d), static_cast<long>(x.size()) - 1);
            Rational simple = Rational(factorial(d)) * rpow(Rational(d), static_cast<long>(x.size()) - 2);
            for (int a : x)
                simple *= Rational(ipow(Integer(a), a)) / Rational(factorial(a));
            simple_ok += barh0_shapes(x, std::vector<int>(d, 1)) == simple;
        }
    os << "h̄_0(x,(d)) = d^(d-2) holds for " << star_printed << "/" << star_total << " x with d<=6 (d^(m-1) holds for "
       << star_mine << "/" << star_total << "); h̄_0(x,1^d) product formula holds for " << simple_ok << "/" << star_total;
    v.pass = six && poly_bad == 0 && repeated_22 == 0 && star_printed == star_total && simple_ok == star_total;
    v.detail = os.str();
    return v;
}

// ---- 7 ------------------------------------------------------------------

Verdict expansions()
{
    Verdict v;
    std::ostringstream os;
    const MonomialShape eps{Partition(), Partition()}, one{Partition({1}), Partition()},
        oneone{Partition({1}), Partition({1})}, two{Partition({2}), Partition()}, ones{Partition({1, 1}), Partition()};

    // ν = 2: coefficients of m_{ε;ε} and m_{1;ε} add up to m + d - 2
    auto e2 = almost_simple_expansion({2});
    bool nu2 = e2.terms().size() == 2 && e2.coeff(eps) == UnivariatePolynomial({-2, 1}, 'm') &&
               e2.coeff(one) == UnivariatePolynomial({1}, 'm');
    std::mt19937 rng(2024);
    for (int t = 0; t < 50 && nu2; ++t) {
        Composition x(1 + rng() % 5);
        long d = 0;
        for (auto& a : x) {
            a = 1 + rng() % 5;
            d += a;
        }
        if (d < 2)
            continue;
        Rational pre = 1;
        for (int a : x)
            pre *= Rational(ipow(Integer(a), a)) / Rational(factorial(a));
        const long m = static_cast<long>(x.size());
        nu2 &= almost_simple_normalized(x, {2}) == pre * rpow(Rational(d), m - 2) * Rational(m + d - 2);
    }
    os << "nu=2 " << (nu2 ? "reproduces" : "does not reproduce") << " (m+d-2); ";

    // ν = 3 against the printed coefficients
    auto e3 = almost_simple_expansion({3});
    struct Printed {
        MonomialShape shape;
        UnivariatePolynomial q;
    };
    const std::vector<Printed> printed = {
        {two, UnivariatePolynomial({1}, 'm')},
        {ones, UnivariatePolynomial({2}, 'm')},
        {one, UnivariatePolynomial({-6, -3}, 'm')},
        {oneone, UnivariatePolynomial({-1}, 'm')},
        {eps, UnivariatePolynomial({0, make_rational(1, 2), make_rational(3, 2)}, 'm')},
    };
    int agree = 0;
    std::string differ;
    for (const auto& p : printed) {
        if (e3.coeff(p.shape) == p.q)
            ++agree;
        else
            differ += "; " + p.shape.str() + ": printed " + p.q.str() + ", computed " + e3.coeff(p.shape).str();
    }
    bool no_extra = e3.terms().size() == printed.size();
    bool nu3 = agree == static_cast<int>(printed.size()) && no_extra;
    os << "nu=3 matches " << agree << "/" << printed.size() << " printed coefficients" << (no_extra ? "" : " (extra terms)")
       << differ;

    // subset resummation of a monomial, brute force over subsets
    std::mt19937 lr(77);
    int lemma_ok = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        int m = 1 + lr() % 8;
        int k = 1 + lr() % m;
        int len = lr() % (k + 1);
        int l1 = lr() % (len + 1), l2 = len - l1;
        std::vector<int> a(l1), b(l2);
        for (auto& p : a)
            p = 1 + lr() % 3;
        for (auto& p : b)
            p = 1 + lr() % 3;
        MonomialShape s{Partition(a), Partition(b)};
        std::vector<Rational> x(m);
        for (auto& xi : x)
            xi = make_rational(Integer(1 + lr() % 50), Integer(1 + lr() % 9));
        Rational brute = 0;
        std::vector<int> idx(k);
        std::function<void(int, int)> rec = [&](int i, int from) {
            if (i == k) {
                std::vector<Rational> sub;
                for (int j : idx)
                    sub.push_back(x[j]);
                brute += eval_monomial_sym(s, sub);
                return;
            }
            for (int j = from; j <= m - (k - i); ++j) {
                idx[i] = j;
                rec(i + 1, j + 1);
            }
        };
        rec(0, 0);
        Rational predicted = Rational(binomial(m - len, k - len)) * eval_monomial_sym(s, x);
        SymmetricLaurentExpansion single;
        single.add(s, 1);
        Rational via_resum = resum_over_subsets(single, k, m).evaluate(x);
        lemma_ok += brute == predicted && brute == via_resum;
    }
    os << "; subset resummation identity " << lemma_ok << "/" << trials;
    v.pass = nu2 && nu3 && lemma_ok == trials;
    v.detail = os.str();
    return v;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 cross-method equality matrix", cross_method_matrix},
        {"2 Hurwitz formula via mobiles", hurwitz_formula_check},
        {"3 bijection round trips and shift classes", bijection_sweep},
        {"4 two-part closed formula", eq2_check},
        {"5 polynomiality in 1/d of degree |nu|", polynomiality},
        {"6 chamber suite and product formulas", chamber_suite},
        {"7 almost-simple expansions", expansions},
    };
    std::vector<std::string> lines;
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char t[32];
        std::snprintf(t, sizeof t, "%.1fs", secs);
        std::string line = std::string(v.pass ? "PASS" : "FAIL") + "  criterion " + c.name + " [" + t + "]: " + v.detail;
        std::cout << line << std::endl;
        lines.push_back(line);
        failed += !v.pass;
    }
    std::cout << "\nsummary\n";
    for (const auto& l : lines)
        std::cout << l.substr(0, l.find(" [")) << '\n';
    std::cout << failed << " of " << criteria.size() << " criteria failed\n";
    return failed ? 1 : 0;
}
