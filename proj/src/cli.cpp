#include "hurwitz/cli.hpp"

#include "hurwitz/bijection.hpp"
#include "hurwitz/formulas.hpp"
#include "hurwitz/galaxy.hpp"
#include "hurwitz/mobile.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/shapes.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace hurwitz {

namespace {

std::string g_fault_method;

// Shape enumeration is exhaustive over m·n potential edges.
constexpr int kMaxShapeEdges = 24;

bool type_valid(const Partition& mu, const Partition& nu, int g)
{
    if (g < 0 || mu.size() != nu.size() || mu.size() < 1)
        return false;
    return mu.length() + nu.length() - 2 + 2 * g >= 0;
}

// Seeds for the fixed-point formulas, ordered so that |x| >= |y| (h̄ is symmetric).
std::pair<Partition, Partition> seeds(const Partition& mu, const Partition& nu)
{
    Partition x = mu.without_ones(), y = nu.without_ones();
    if (x.size() < y.size())
        std::swap(x, y);
    return {x, y};
}

Rational quantity_value(const HurwitzValueSet& v, const std::string& quantity)
{
    if (quantity == "h")
        return v.h;
    if (quantity == "hbullet")
        return v.h_bullet;
    if (quantity == "hlabeled")
        return Rational(v.h_labeled);
    if (quantity == "hbar")
        return v.h_bar;
    throw UsageError("unknown quantity '" + quantity + "'");
}

std::uint64_t effective_budget(std::uint64_t b)
{
    return b ? b : default_budget();
}

} // namespace

const std::vector<std::string>& method_order()
{
    static const std::vector<std::string> order = {"explicit", "kz", "shapes", "almost", "mobiles", "oracle"};
    return order;
}

Availability method_availability(const std::string& method, const Partition& mu, const Partition& nu, int g,
                                 std::uint64_t budget)
{
    using K = Availability::Kind;
    if (!type_valid(mu, nu, g))
        return {K::Inapplicable, "mu and nu must be partitions of the same d >= 1, genus >= 0"};
    if (method == "oracle") {
        if (oracle_cost(mu, nu, g) > budget)
            return {K::OverBudget, "oracle search exceeds the step budget"};
        return {};
    }
    if (method != "shapes" && method != "mobiles" && method != "kz" && method != "explicit" && method != "almost")
        return {K::Inapplicable, "unknown method '" + method + "'"};
    if (g != 0)
        return {K::Inapplicable, method + " requires genus 0"};
    if (method == "shapes") {
        if (mu.length() * nu.length() > kMaxShapeEdges)
            return {K::OverBudget, "too many potential shape edges"};
    } else if (method == "mobiles") {
        if (mobile_enumeration_cost(mu, nu, true) > budget)
            return {K::OverBudget, "mobile enumeration exceeds the step budget"};
    } else if (method == "kz") {
        auto [x, y] = seeds(mu, nu);
        if (x.length() * y.length() > kMaxShapeEdges)
            return {K::OverBudget, "too many potential shape edges"};
    } else if (method == "explicit") {
        auto [x, y] = seeds(mu, nu);
        if (x.length() != 1 || y.length() != 1)
            return {K::Inapplicable, "explicit requires mu = (a,1,...,1) and nu = (b,1,...,1) with a, b >= 2"};
    } else if (method == "almost") {
        auto [x, y] = seeds(mu, nu);
        if (y.size() > 5 || y.size() * y.length() > kMaxShapeEdges)
            return {K::OverBudget, "almost-simple sum limited to |y| <= 5"};
    }
    return {};
}

Rational hbar_by_method(const std::string& method, const Partition& mu, const Partition& nu, int g,
                        std::uint64_t budget)
{
    auto av = method_availability(method, mu, nu, g, budget);
    if (av.kind == Availability::Inapplicable)
        throw UsageError(av.reason);
    if (av.kind == Availability::OverBudget)
        throw BudgetExceeded(av.reason);
    const int d = mu.size();
    Rational v;
    if (method == "oracle") {
        v = hurwitz_values(mu, nu, g, budget).h_bar;
    } else if (method == "shapes") {
        v = barh0_shapes(mu.parts(), nu.parts());
    } else if (method == "mobiles") {
        auto mobiles = enumerate_free_mobiles(mu, nu, budget);
        Rational hb = make_rational(Integer(mobiles.size()), Integer(hurwitz_r(mu, nu, 0) + 1));
        v = values_from_hbullet(mu, nu, 0, hb).h_bar;
    } else if (method == "kz") {
        auto [x, y] = seeds(mu, nu);
        v = kz_value(x.parts(), y.parts(), d);
    } else if (method == "explicit") {
        auto [x, y] = seeds(mu, nu);
        v = hbar_from_h(mu, nu, 0, explicit_two_parts(x.parts()[0], y.parts()[0], d));
    } else {
        // all parts on the side whose non-unit parts are larger
        Partition full = mu, y = nu.without_ones();
        if (mu.without_ones().size() < y.size()) {
            full = nu;
            y = mu.without_ones();
        }
        v = almost_simple(full.parts(), y.parts());
    }
    if (!g_fault_method.empty() && g_fault_method == method)
        v += 1;
    return v;
}

void set_fault_injection(const std::string& method)
{
    g_fault_method = method;
}

ComputeResult cmd_compute(const Request& req)
{
    Partition mu = req.mu, nu = req.nu;
    if (req.d) {
        if (*req.d < mu.size() || *req.d < nu.size())
            throw UsageError("--d is smaller than a given partition");
        mu = mu.complete_to(*req.d);
        nu = nu.complete_to(*req.d);
    }
    const std::uint64_t budget = effective_budget(req.budget);
    if (!type_valid(mu, nu, req.genus))
        throw UsageError("mu and nu must be partitions of the same d >= 1 (use --d to pad with ones)");
    quantity_value(HurwitzValueSet{}, req.quantity);   // validates the name

    ComputeResult res;
    res.mu = mu;
    res.nu = nu;
    res.genus = req.genus;
    res.d = mu.size();
    res.r = hurwitz_r(mu, nu, req.genus);
    res.quantity = req.quantity;

    std::string method = req.method;
    if (method == "auto") {
        method.clear();
        bool over_budget = false;
        for (const auto& m : method_order()) {
            auto av = method_availability(m, mu, nu, req.genus, budget);
            if (av.kind == Availability::Ok) {
                method = m;
                break;
            }
            over_budget |= av.kind == Availability::OverBudget;
        }
        if (method.empty()) {
            if (over_budget)
                throw BudgetExceeded("no method fits the step budget");
            throw UsageError("no applicable method");
        }
    }
    res.method = method;
    Rational hbar = hbar_by_method(method, mu, nu, req.genus, budget);
    res.value = quantity_value(values_from_hbar(mu, nu, req.genus, hbar), req.quantity);

    if (req.check) {
        // prefer the oracle as the independent witness, else the next method in order
        std::vector<std::string> candidates = {"oracle"};
        for (const auto& m : method_order())
            if (m != "oracle")
                candidates.push_back(m);
        for (const auto& m : candidates) {
            if (m == method || method_availability(m, mu, nu, req.genus, budget).kind != Availability::Ok)
                continue;
            res.checked_by = m;
            if (hbar_by_method(m, mu, nu, req.genus, budget) != hbar)
                throw std::domain_error("check failed: " + method + " and " + m + " disagree");
            break;
        }
        if (res.checked_by.empty())
            throw std::domain_error("check failed: no independent method applies");
    }
    return res;
}

namespace {

using nlohmann::json;

json partition_json(const Partition& p)
{
    return p.parts();
}

std::string csv_quote(const std::string& s)
{
    return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

const char* kCsvHeader = "mu,nu,genus,d,r,method,quantity,value";

std::string csv_row(const Partition& mu, const Partition& nu, int g, int d, int r, const std::string& method,
                    const std::string& quantity, const Rational& v)
{
    std::ostringstream os;
    os << csv_quote(mu.str()) << ',' << csv_quote(nu.str()) << ',' << g << ',' << d << ',' << r << ',' << method
       << ',' << quantity << ',' << to_string(v);
    return os.str();
}

Composition parse_composition(const std::string& s)
{
    Composition c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = 0;
        try {
            size_t used = 0;
            v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("bad part '" + tok + "' in '" + s + "'");
        }
        if (v <= 0)
            throw UsageError("parts must be positive in '" + s + "'");
        c.push_back(v);
    }
    return c;
}

Partition parse_partition_arg(const std::string& s)
{
    return to_partition(parse_composition(s));
}

// ---- verify -------------------------------------------------------------

struct MethodOutcome {
    std::string status;   // ok FAIL budget -
    std::optional<Rational> value;
};

struct Cell {
    Partition mu, nu;
    int g = 0, d = 0, r = 0;
    std::optional<Rational> hbar;                 // the oracle's
    std::vector<std::pair<std::string, MethodOutcome>> methods;
    MethodOutcome bijection;                      // value: |shift-orbit union|/(r+1)
    std::string note;
    bool mismatch = false, budget_limited = false;
};

const std::vector<std::string> kVerifyMethods = {"shapes", "mobiles", "kz", "explicit", "almost"};

void check_bijection(Cell& c, std::uint64_t budget)
{
    auto classes = galaxy_classes(c.mu, c.nu, c.g, budget);
    std::set<std::string> orbit_union;
    for (const auto& G : classes) {
        auto M = phi(G);
        auto type = validate_mobile(M);
        if (type.excess != 2 * c.g || canonical_embedding(M).genus != c.g || classify_mobile(M) != MobileClass::Coherent)
            throw std::domain_error("image is not a coherent mobile of excess 2g and genus g");
        if (canonical_code(phi_inverse(M)) != canonical_code(G))
            throw std::domain_error("phi_inverse(phi(G)) differs from G");
        std::set<std::string> orbit;
        HurwitzMobile S = M;
        for (int k = 0; k <= c.r; ++k) {
            orbit.insert(canonical_code(S));
            S = shift_mobile(S);
        }
        if (orbit.size() != static_cast<size_t>(c.r + 1) || canonical_code(S) != canonical_code(M))
            throw std::domain_error("shift class does not have r+1 members");
        orbit_union.insert(orbit.begin(), orbit.end());
    }
    c.bijection.value = make_rational(Integer(orbit_union.size()), Integer(c.r + 1));
}

void run_cell(Cell& c, std::uint64_t budget)
{
    std::optional<Rational> reference;
    if (method_availability("oracle", c.mu, c.nu, c.g, budget).kind == Availability::Ok) {
        try {
            c.hbar = hbar_by_method("oracle", c.mu, c.nu, c.g, budget);
            reference = c.hbar;
        } catch (const BudgetExceeded&) {
            c.budget_limited = true;
        }
    } else {
        c.budget_limited = true;
    }
    for (const auto& m : kVerifyMethods) {
        MethodOutcome o;
        auto av = method_availability(m, c.mu, c.nu, c.g, budget);
        if (av.kind == Availability::Inapplicable) {
            o.status = "-";
        } else if (av.kind == Availability::OverBudget) {
            o.status = "budget";
            c.budget_limited = true;
        } else {
            try {
                o.value = hbar_by_method(m, c.mu, c.nu, c.g, budget);
                if (!reference)
                    reference = o.value;
                o.status = *o.value == *reference ? "ok" : "FAIL";
            } catch (const BudgetExceeded&) {
                o.status = "budget";
                c.budget_limited = true;
            }
        }
        c.mismatch |= o.status == "FAIL";
        c.methods.push_back({m, o});
    }
    if (!c.hbar) {
        c.bijection.status = "budget";
        return;
    }
    try {
        check_bijection(c, budget);
        Rational hb = values_from_hbar(c.mu, c.nu, c.g, *c.hbar).h_bullet;
        c.bijection.status = *c.bijection.value == hb ? "ok" : "FAIL";
    } catch (const BudgetExceeded&) {
        c.bijection.status = "budget";
        c.budget_limited = true;
    } catch (const std::exception& e) {
        c.bijection.status = "FAIL";
        c.note = e.what();
    }
    c.mismatch |= c.bijection.status == "FAIL";
}

std::vector<Cell> verify_cells(int dmax, int gmax)
{
    std::vector<Cell> cells;
    for (int d = 1; d <= dmax; ++d)
        for (int g = 0; g <= gmax; ++g)
            for (const auto& mu : partitions_of(d))
                for (const auto& nu : partitions_of(d)) {
                    Cell c;
                    c.mu = mu;
                    c.nu = nu;
                    c.g = g;
                    c.d = d;
                    c.r = hurwitz_r(mu, nu, g);
                    cells.push_back(c);
                }
    return cells;
}

int cmd_verify(int dmax, int gmax, std::uint64_t budget, int threads, const std::string& format, std::ostream& out)
{
    if (dmax < 1 || gmax < 0)
        throw UsageError("--dmax must be >= 1 and --gmax >= 0");
    auto cells = verify_cells(dmax, gmax);
    std::atomic<size_t> next{0};
    std::vector<std::string> errors(cells.size());
    auto worker = [&] {
        for (size_t i; (i = next++) < cells.size();) {
            try {
                run_cell(cells[i], budget);
            } catch (const std::exception& e) {
                cells[i].mismatch = true;
                cells[i].note = e.what();
            }
        }
    };
    if (threads <= 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();

    int mismatches = 0, limited = 0;
    for (const auto& c : cells) {
        mismatches += c.mismatch;
        limited += c.budget_limited;
    }
    if (format == "json") {
        json j;
        j["dmax"] = dmax;
        j["gmax"] = gmax;
        j["cells"] = json::array();
        for (const auto& c : cells) {
            json jc = {{"mu", partition_json(c.mu)}, {"nu", partition_json(c.nu)}, {"genus", c.g},
                       {"d", c.d}, {"r", c.r}, {"hbar", c.hbar ? json(to_string(*c.hbar)) : json(nullptr)}};
            jc["methods"] = json::object();
            for (const auto& [m, o] : c.methods)
                jc["methods"][m] = o.status;
            jc["methods"]["bijection"] = c.bijection.status;
            if (!c.note.empty())
                jc["note"] = c.note;
            j["cells"].push_back(jc);
        }
        j["mismatches"] = mismatches;
        j["budget_limited"] = limited;
        j["ok"] = mismatches == 0;
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << kCsvHeader << '\n';
        for (const auto& c : cells) {
            if (c.hbar)
                out << csv_row(c.mu, c.nu, c.g, c.d, c.r, "oracle", "hbar", *c.hbar) << '\n';
            for (const auto& [m, o] : c.methods)
                if (o.value)
                    out << csv_row(c.mu, c.nu, c.g, c.d, c.r, m, "hbar", *o.value) << '\n';
            if (c.bijection.value)
                out << csv_row(c.mu, c.nu, c.g, c.d, c.r, "bijection", "hbullet", *c.bijection.value) << '\n';
        }
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-2s %-2s %-10s %-10s %-12s", "d", "g", "mu", "nu", "hbar");
        out << line;
        for (const auto& m : kVerifyMethods)
            out << ' ' << std::string(std::max<int>(0, 8 - static_cast<int>(m.size())), ' ') << m;
        out << "  bijection\n";
        for (const auto& c : cells) {
            std::snprintf(line, sizeof line, "%-2d %-2d %-10s %-10s %-12s", c.d, c.g, c.mu.str().c_str(),
                          c.nu.str().c_str(), c.hbar ? to_string(*c.hbar).c_str() : "budget");
            out << line;
            for (const auto& [m, o] : c.methods)
                out << ' ' << std::string(std::max<int>(0, 8 - static_cast<int>(o.status.size())), ' ') << o.status;
            out << "  " << c.bijection.status;
            if (!c.note.empty())
                out << "  (" << c.note << ')';
            out << '\n';
        }
        out << "cells: " << cells.size() << "  mismatches: " << mismatches << "  budget-limited: " << limited << '\n';
    }
    return mismatches ? kExitMismatch : kExitOk;
}

// ---- chambers -----------------------------------------------------------

std::string var(char v, int i)
{
    return std::string(1, v) + std::to_string(i + 1);
}

std::string tree_monomial(const BareShape& s)
{
    std::string out;
    auto add = [&](char v, int i, int deg) {
        if (deg <= 1)
            return;
        if (!out.empty())
            out += '*';
        out += var(v, i);
        if (deg > 2)
            out += '^' + std::to_string(deg - 1);
    };
    for (int i = 0; i < s.m; ++i)
        add('x', i, s.white_degree[i]);
    for (int j = 0; j < s.n; ++j)
        add('y', j, s.black_degree[j]);
    return out.empty() ? "1" : out;
}

std::string linear_form(const std::vector<int>& whites, const std::vector<int>& blacks)
{
    std::string out;
    for (int w : whites)
        out += (out.empty() ? "" : " + ") + var('x', w);
    for (int b : blacks)
        out += " - " + var('y', b);
    return out;
}

std::vector<std::string> region_constraints(const BareShape& s)
{
    std::vector<std::string> out;
    if (s.num_components() > 1)
        for (const auto& c : s.components)
            out.push_back(linear_form(c.whites, c.blacks) + " = 0");
    for (int j = 0; j < s.num_edges(); ++j)
        out.push_back(linear_form(s.side_whites[j], s.side_blacks[j]) + " > 0");
    return out;
}

int cmd_chambers(int m, int n, const std::string& sample, const std::string& format, std::ostream& out)
{
    if (m < 1 || n < 1 || m * n > kMaxShapeEdges)
        throw UsageError("chambers needs m, n >= 1 and m*n <= 24");
    auto shapes = enumerate_bare_shapes(m, n, false);
    std::optional<Composition> x, y;
    if (!sample.empty()) {
        auto semi = sample.find(';');
        if (semi == std::string::npos)
            throw UsageError("--sample takes 'x1,...,xm;y1,...,yn'");
        x = parse_composition(sample.substr(0, semi));
        y = parse_composition(sample.substr(semi + 1));
        long X = 0, Y = 0;
        for (int v : *x)
            X += v;
        for (int v : *y)
            Y += v;
        if (static_cast<int>(x->size()) != m || static_cast<int>(y->size()) != n || X != Y)
            throw UsageError("sample must have m white and n black parts with equal sums");
    }
    std::optional<ChamberPolynomial> poly;
    if (x) {
        try {
            poly = chamber_polynomial(*x, *y);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    json j;
    j["m"] = m;
    j["n"] = n;
    j["shapes"] = json::array();
    for (const auto& s : shapes) {
        json js = to_json(s);
        js["contribution"] = s.num_components() == 1 ? json(tree_monomial(s)) : json(nullptr);
        js["region"] = region_constraints(s);
        if (x)
            js["active"] = region_membership(s, *x, *y).inside;
        j["shapes"].push_back(js);
    }
    if (poly) {
        j["sample"] = to_json(*poly);
        j["value"] = to_string(barh0_shapes(*x, *y));
    }
    if (format == "json") {
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    if (format == "csv")
        throw UsageError("chambers supports text and json");
    out << shapes.size() << " shapes with m=" << m << ", n=" << n << '\n';
    for (size_t i = 0; i < shapes.size(); ++i) {
        const auto& s = shapes[i];
        out << i + 1 << ". " << s.str() << "  contribution: "
            << (s.num_components() == 1 ? tree_monomial(s) : "(forest; region lies on resonance hyperplanes)");
        if (x)
            out << (region_membership(s, *x, *y).inside ? "  [active]" : "");
        out << '\n';
        for (const auto& r : region_constraints(s))
            out << "     " << r << '\n';
    }
    if (poly) {
        std::ostringstream sv;
        for (size_t i = 0; i < poly->sign_vector.size(); ++i)
            sv << (i ? " " : "") << (poly->sign_vector[i] > 0 ? '+' : '-');
        out << "sample " << sample << "\n  sign vector: " << sv.str() << "\n  chamber polynomial: " << poly->str()
            << "\n  value: " << to_string(barh0_shapes(*x, *y)) << '\n';
    }
    return kExitOk;
}

// ---- expand -------------------------------------------------------------

int cmd_expand(const Composition& nu, std::optional<int> m, const std::string& format, std::ostream& out)
{
    if (nu.empty())
        throw UsageError("expand needs |nu| >= 1");
    auto e = almost_simple_expansion(nu);
    int Y = 0;
    for (int v : nu)
        Y += v;
    const int n = static_cast<int>(nu.size());
    std::string power = "d^(m" + (n - 1 - Y == 0 ? std::string() : (n - 1 - Y > 0 ? "+" : "") + std::to_string(n - 1 - Y)) + ")";
    if (format == "json") {
        json j;
        j["nu"] = nu;
        j["prefactor_exponent"] = "m" + (n - 1 - Y == 0 ? std::string() : (n - 1 - Y > 0 ? "+" : "") + std::to_string(n - 1 - Y));
        j["terms"] = to_json(e);
        if (m) {
            j["m"] = *m;
            j["at_m"] = json::object();
            for (const auto& [shape, q] : e.terms())
                j["at_m"][shape.str()] = to_string(q(Rational(*m)));
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    if (format == "csv")
        throw UsageError("expand supports text and json");
    out << "hbar_0(x, nu 1^(d-|nu|)) / (d-|nu|)! = prod x_i^x_i/x_i! * " << power << " * S, with\n  S =";
    bool first = true;
    for (const auto& [shape, q] : e.terms()) {
        out << (first ? " " : " + ") << '(' << q.str() << ")*" << shape.str();
        first = false;
    }
    out << '\n';
    for (const auto& [shape, q] : e.terms()) {
        out << "  q_" << shape.str().substr(2) << "(m) = " << q.str();
        if (m)
            out << "   at m=" << *m << ": " << to_string(q(Rational(*m)));
        out << '\n';
    }
    return kExitOk;
}

// ---- trace --------------------------------------------------------------

int cmd_trace(const Partition& mu, const Partition& nu, int g, int index, std::uint64_t budget, std::ostream& out)
{
    if (!type_valid(mu, nu, g))
        throw UsageError("mu and nu must be partitions of the same d >= 1");
    if (oracle_cost(mu, nu, g) > budget)
        throw BudgetExceeded("galaxy enumeration exceeds the step budget");
    auto classes = galaxy_classes(mu, nu, g, budget);
    if (index < 0 || index >= static_cast<int>(classes.size()))
        throw UsageError("--index out of range: there are " + std::to_string(classes.size()) + " galaxies");
    json j = trace_json(classes[index]);
    j["index"] = index;
    j["classes"] = classes.size();
    out << j.dump(2) << '\n';
    return kExitOk;
}

void print_compute(const ComputeResult& r, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        json j = {{"mu", partition_json(r.mu)}, {"nu", partition_json(r.nu)}, {"genus", r.genus}, {"d", r.d},
                  {"r", r.r}, {"method", r.method}, {"quantity", r.quantity}, {"value", to_string(r.value)}};
        if (!r.checked_by.empty())
            j["checked_by"] = r.checked_by;
        out << j.dump(2) << '\n';
    } else if (format == "csv") {
        out << kCsvHeader << '\n' << csv_row(r.mu, r.nu, r.genus, r.d, r.r, r.method, r.quantity, r.value) << '\n';
    } else {
        out << to_string(r.value) << '\n';
        out << "# " << r.quantity << " mu=" << r.mu.str() << " nu=" << r.nu.str() << " genus=" << r.genus
            << " d=" << r.d << " r=" << r.r << " method=" << r.method;
        if (!r.checked_by.empty())
            out << " checked_by=" << r.checked_by;
        out << '\n';
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Double Hurwitz numbers: exact values, cross-checks, chambers, expansions"};
    app.require_subcommand(1);

    std::string mu_s, nu_s, format = "text", sample;
    Request req;
    int dmax = 3, gmax = 0, threads = 0, m = 0, n = 0, index = 0;
    std::optional<int> expand_m;
    std::uint64_t budget = 0;
    const std::vector<std::string> formats = {"text", "json", "csv"};

    auto* compute = app.add_subcommand("compute", "one Hurwitz number by one method");
    compute->add_option("--mu", mu_s, "first profile, e.g. 2,1")->required();
    compute->add_option("--nu", nu_s, "second profile")->required();
    compute->add_option("--genus", req.genus)->check(CLI::NonNegativeNumber);
    compute->add_option("--d", req.d, "pad mu and nu with ones up to d");
    compute->add_option("--method", req.method)
        ->check(CLI::IsMember({"oracle", "shapes", "mobiles", "kz", "explicit", "almost", "auto"}));
    compute->add_option("--quantity", req.quantity)->check(CLI::IsMember({"h", "hbullet", "hlabeled", "hbar"}));
    compute->add_flag("--check", req.check, "confirm with an independent method");

    auto* verify = app.add_subcommand("verify", "cross-method matrix and bijection checks");
    verify->add_option("--dmax", dmax);
    verify->add_option("--gmax", gmax);
    verify->add_option("--threads", threads, "worker threads (default: hardware)");

    auto* chambers = app.add_subcommand("chambers", "bare shapes, regions and chamber polynomials");
    chambers->add_option("--m", m)->required();
    chambers->add_option("--n", n)->required();
    chambers->add_option("--sample", sample, "point 'x1,...;y1,...' off the resonance hyperplanes");

    auto* expand = app.add_subcommand("expand", "almost-simple expansion in the monomial basis");
    expand->add_option("--nu", nu_s)->required();
    expand->add_option("--m", expand_m, "also evaluate the coefficients at this m");

    auto* trace = app.add_subcommand("trace", "intermediate objects of the bijection for one galaxy");
    trace->add_option("--mu", mu_s)->required();
    trace->add_option("--nu", nu_s)->required();
    trace->add_option("--genus", req.genus)->check(CLI::NonNegativeNumber);
    trace->add_option("--index", index, "galaxy class index");

    for (auto* sub : {compute, verify, chambers, expand, trace}) {
        sub->add_option("--format", format)->check(CLI::IsMember(formats));
        sub->add_option("--budget", budget, "step budget (default HURWITZ_BUDGET or 1e9)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const std::uint64_t b = effective_budget(budget);
    try {
        if (*compute) {
            req.mu = parse_partition_arg(mu_s);
            req.nu = parse_partition_arg(nu_s);
            req.format = format;
            req.budget = b;
            print_compute(cmd_compute(req), format, out);
            return kExitOk;
        }
        if (*verify)
            return cmd_verify(dmax, gmax, b, threads, format, out);
        if (*chambers)
            return cmd_chambers(m, n, sample, format, out);
        if (*expand)
            return cmd_expand(parse_composition(nu_s), expand_m, format, out);
        if (*trace)
            return cmd_trace(parse_partition_arg(mu_s), parse_partition_arg(nu_s), req.genus, index, b, out);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}

} // namespace hurwitz
