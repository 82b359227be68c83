/* rational.hpp -- exact rational scalars and sqrt-affine thresholds.
 *
 * Every metric quantity in this library is an exact rational (GMP mpq).
 * Bounds of the form p + q*sqrt(r) that the theory produces are kept
 * symbolic in QuadExpr and compared by squaring, so no floating point
 * ever enters a verdict.
 */

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symdyn {

using Rat = mpq_class;
using Int = mpz_class;

/// Error taxonomy shared by all modules; the CLI maps kinds to exit codes.
enum class ErrorKind {
    InvalidInput,
    Precondition,
    Tie,
    NotParsable,
    NotUniquelyParsable,
    NotFoundWithinBounds,
    BudgetExhausted,
    MarkerTooDense,
    NotRepresentable,
    VerificationFailed,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

/// Parse "p/q" or "p" (integers, optional sign). Throws InvalidInput.
Rat rat_parse(const std::string& s);

/// Canonical "p/q" form, denominator always printed ("3" -> "3/1").
std::string rat_str(const Rat& q);

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// floor(1/eps) for eps > 0.
long floor_inv(const Rat& eps);

/// floor(1 + 2/eps) for eps > 0 (word-length horizon of the Hausdorff test).
long word_horizon(const Rat& eps);

/// Value offset + scale*sqrt(base), base >= 0. Perfect-square bases fold
/// into the rational part on construction, so equality against rationals
/// stays decidable.
class QuadExpr {
  public:
    QuadExpr(Rat offset, Rat scale, Rat base);
    static QuadExpr exact(Rat v) { return QuadExpr(std::move(v), 0, 0); }
    static QuadExpr sqrt_of(Rat base, Rat scale = 1, Rat offset = 0) {
        return QuadExpr(std::move(offset), std::move(scale), std::move(base));
    }

    const Rat& offset() const { return offset_; }
    const Rat& scale() const { return scale_; }
    const Rat& base() const { return base_; }
    bool is_rational() const { return scale_ == 0; }

    /// sign of (*this - t): -1, 0, +1.
    int cmp(const Rat& t) const;

    QuadExpr scaled(const Rat& c) const;

    std::string str() const;

  private:
    Rat offset_;
    Rat scale_;  // zero iff the value is rational
    Rat base_;   // non-square positive rational when scale_ != 0
};

/// floor(1 + 2/e) for a positive QuadExpr threshold e.
long word_horizon(const QuadExpr& e);

/// gcd for plain machine integers (nonnegative result).
long igcd(long a, long b);

/// Deterministic, portable PRNG (splitmix64). std::mt19937 distributions
/// are not bit-stable across standard libraries, so tests and seeded
/// searches use this instead.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// uniform in [0, n) for n >= 1
    std::uint64_t below(std::uint64_t n);

  private:
    std::uint64_t state_;
};

}  // namespace symdyn
