#include "swm/identity.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#include "swm/parallel.hpp"

namespace swm {

unsigned default_workers()
{
    if (const char* env = std::getenv("SWM_WORKERS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) {
                return static_cast<unsigned>(n);
            }
        } catch (const std::exception&) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

ReportList verify_identities(const IdentityList& identities, const Rational& order)
{
    return parallel_map(identities.size(), [&](std::size_t i) {
        const SeriesIdentity& id = identities[i];
        VerificationReport r = timed([&] {
            const auto [lhs, rhs] = id.sides(order);
            return compare(lhs, rhs, order);
        });
        r.identity_id = id.id;
        r.params = id.params;
        return r;
    });
}

} // namespace swm
