#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swm/rational.hpp"

namespace swm {

enum class Status { pass, fail };

struct Mismatch {
    Rational exponent;
    Rational lhs;
    Rational rhs;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

/// Outcome of one identity check. status == pass iff first_mismatch is empty.
struct VerificationReport {
    std::string identity_id;
    std::map<std::string, std::string> params;
    Rational order;
    Status status = Status::pass;
    std::optional<Mismatch> first_mismatch;
    std::int64_t runtime_ms = 0;

    [[nodiscard]] bool passed() const { return status == Status::pass; }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

using ReportList = std::vector<VerificationReport>;

VerificationReport make_pass(std::string id, Rational order);
VerificationReport make_fail(std::string id, Rational order, Mismatch mismatch);

[[nodiscard]] bool all_passed(const ReportList& reports);

/// Times `fn` (returning a report) and stores the elapsed milliseconds in it.
template <typename Fn>
VerificationReport timed(Fn&& fn)
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport r = fn();
    const auto stop = std::chrono::steady_clock::now();
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    return r;
}

} // namespace swm
