#pragma once

#include <stdexcept>
#include <string>

#include "hoca/numeric.hpp"

namespace hoca {

// Error taxonomy shared with the CLI exit codes.
enum class ErrorKind {
    Usage = 1,
    BudgetExceeded = 2,
    InvariantViolation = 3,
    MalformedInput = 4,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Coefficient ring: the integers, or the integers mod m (m >= 2).
class Ring {
public:
    enum class Kind { Z, Zmod };

    static Ring integers() { return Ring(Kind::Z, 0); }
    static Ring integers_mod(const Int& m) {
        if (m < 2) throw Error(ErrorKind::MalformedInput, "modulus must be >= 2");
        return Ring(Kind::Zmod, m);
    }

    Ring() : kind_(Kind::Z), mod_(0) {}

    Kind kind() const { return kind_; }
    bool is_integers() const { return kind_ == Kind::Z; }
    const Int& modulus() const { return mod_; }

    // Annihilator order of a generator with the given invariant factor
    // (0 encodes a free rank-1 summand of the ring).
    Int order_of(const Int& factor) const {
        if (factor == 0) return kind_ == Kind::Z ? Int(0) : mod_;
        return factor;
    }

    bool operator==(const Ring& o) const { return kind_ == o.kind_ && mod_ == o.mod_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string name() const {
        return kind_ == Kind::Z ? "Z" : "Z/" + mod_.str();
    }

private:
    Ring(Kind k, Int m) : kind_(k), mod_(std::move(m)) {}
    Kind kind_;
    Int mod_;
};

} // namespace hoca
