#include "hurwitz/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (int p : parts_)
        if (p <= 0)
            throw std::invalid_argument("partition parts must be positive");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int k) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::complete_to(int d) const
{
    int s = size();
    if (d < s)
        throw std::invalid_argument("cannot complete partition of " + std::to_string(s) +
                                    " to " + std::to_string(d));
    std::vector<int> p = parts_;
    p.insert(p.end(), d - s, 1);
    return Partition(p);
}

Partition Partition::without_ones() const
{
    std::vector<int> p;
    for (int x : parts_)
        if (x > 1)
            p.push_back(x);
    return Partition(p);
}

std::string Partition::str() const
{
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Integer aut(const Partition& p) { return aut(p.parts()); }

Integer aut(const Composition& c)
{
    std::map<int, int> mult;
    for (int x : c)
        ++mult[x];
    Integer r = 1;
    for (auto [k, m] : mult)
        r *= factorial(m);
    return r;
}

Partition to_partition(const Composition& c) { return Partition(c); }

Partition parse_partition(const std::string& s)
{
    std::string t = s;
    for (char& ch : t)
        if (ch == ',' || ch == ';')
            ch = ' ';
    if (t.find_first_not_of(" ") == std::string::npos || t == "-")
        return Partition();
    std::istringstream in(t);
    std::string tok;
    std::vector<int> parts;
    while (in >> tok) {
        size_t caret = tok.find('^');
        try {
            size_t used = 0;
            int part = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret))
                throw std::invalid_argument("");
            int rep = 1;
            if (caret != std::string::npos) {
                std::string e = tok.substr(caret + 1);
                rep = std::stoi(e, &used);
                if (used != e.size() || rep < 0)
                    throw std::invalid_argument("");
            }
            if (part <= 0)
                throw std::invalid_argument("");
            parts.insert(parts.end(), rep, part);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed partition: '" + s + "'");
        }
    }
    return Partition(parts);
}

static void partitions_rec(int rest, int maxpart, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (rest == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(rest - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int d)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(d, d, cur, out);
    return out;
}

std::vector<Composition> compositions_of(int n)
{
    std::vector<Composition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        Composition c;
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(c);
    }
    return out;
}

} // namespace hurwitz
