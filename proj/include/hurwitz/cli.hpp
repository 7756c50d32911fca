#pragma once

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitBudget = 3 };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Request {
    Partition mu, nu;
    int genus = 0;
    std::optional<int> d;             // completes mu and nu with ones
    std::string method = "auto";      // oracle shapes mobiles kz explicit almost auto
    std::string quantity = "hbar";    // h hbullet hlabeled hbar
    std::string format = "text";      // text json csv
    bool check = false;
    std::uint64_t budget = 0;         // 0: HURWITZ_BUDGET or the default
};

struct ComputeResult {
    Partition mu, nu;
    int genus = 0, d = 0, r = 0;
    std::string method, quantity;
    Rational value;
    std::string checked_by;           // empty without --check
};

// Methods in the order --method auto tries them.
const std::vector<std::string>& method_order();
struct Availability {
    enum Kind { Ok, Inapplicable, OverBudget } kind = Ok;
    std::string reason;
};
Availability method_availability(const std::string& method, const Partition& mu, const Partition& nu, int g,
                                 std::uint64_t budget);
// h̄ by one method; throws UsageError if the method does not apply.
Rational hbar_by_method(const std::string& method, const Partition& mu, const Partition& nu, int g,
                        std::uint64_t budget);

ComputeResult cmd_compute(const Request& req);

// Test hook: verify adds 1 to every value the named method returns. Empty disables it.
void set_fault_injection(const std::string& method);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hurwitz
