#include "symdyn/rational.hpp"

namespace symdyn {

Rat rat_parse(const std::string& s) {
    if (s.empty()) fail(ErrorKind::InvalidInput, "empty rational literal");
    for (char c : s) {
        if (!(c == '/' || c == '-' || c == '+' || (c >= '0' && c <= '9')))
            fail(ErrorKind::InvalidInput, "bad rational literal: " + s);
    }
    Rat q;
    if (q.set_str(s, 10) != 0)
        fail(ErrorKind::InvalidInput, "bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long floor_inv(const Rat& eps) {
    if (eps <= 0) fail(ErrorKind::InvalidInput, "eps must be positive");
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), eps.get_den().get_mpz_t(), eps.get_num().get_mpz_t());
    if (!f.fits_slong_p()) fail(ErrorKind::BudgetExhausted, "floor(1/eps) out of range");
    return f.get_si();
}

long word_horizon(const Rat& eps) {
    if (eps <= 0) fail(ErrorKind::InvalidInput, "eps must be positive");
    Int f;
    Int num2 = 2 * eps.get_den();
    mpz_fdiv_q(f.get_mpz_t(), num2.get_mpz_t(), eps.get_num().get_mpz_t());
    if (!f.fits_slong_p()) fail(ErrorKind::BudgetExhausted, "word horizon out of range");
    return 1 + f.get_si();
}

namespace {

// sqrt of a rational if it is a perfect square
bool rational_sqrt(const Rat& v, Rat* out) {
    if (v < 0) return false;
    Int num = v.get_num(), den = v.get_den();
    Int rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *out = Rat(rn, rd);
        out->canonicalize();
        return true;
    }
    return false;
}

}  // namespace

QuadExpr::QuadExpr(Rat offset, Rat scale, Rat base)
    : offset_(std::move(offset)), scale_(std::move(scale)), base_(std::move(base)) {
    if (base_ < 0) fail(ErrorKind::InvalidInput, "QuadExpr base must be >= 0");
    if (scale_ == 0 || base_ == 0) {
        if (base_ == 0) scale_ = 0;
        base_ = 0;
        return;
    }
    Rat root;
    if (rational_sqrt(base_, &root)) {
        offset_ += scale_ * root;
        scale_ = 0;
        base_ = 0;
    }
}

int QuadExpr::cmp(const Rat& t) const {
    // sign of (offset - t) + scale*sqrt(base)
    Rat u = offset_ - t;
    if (scale_ == 0) return sgn(u);
    // scale*sqrt(base) is irrational here, so equality cannot occur.
    if (scale_ > 0) {
        if (u >= 0) return 1;
        // compare scale^2*base vs u^2
        return sgn(scale_ * scale_ * base_ - u * u);
    }
    if (u <= 0) return -1;
    return sgn(u * u - scale_ * scale_ * base_);
}

QuadExpr QuadExpr::scaled(const Rat& c) const {
    return QuadExpr(offset_ * c, scale_ * c, base_);
}

std::string QuadExpr::str() const {
    if (scale_ == 0) return rat_str(offset_);
    return rat_str(offset_) + " + " + rat_str(scale_) + "*sqrt(" + rat_str(base_) + ")";
}

long word_horizon(const QuadExpr& e) {
    if (e.is_rational()) return word_horizon(e.offset());
    if (e.cmp(0) <= 0) fail(ErrorKind::InvalidInput, "threshold must be positive");
    // largest L >= 1 with (L-1)*e <= 2
    long L = 1;
    while (L < 1'000'000'000L) {
        QuadExpr lhs = e.scaled(Rat(L));  // L*e vs 2  <=>  ((L+1)-1)*e <= 2
        if (lhs.cmp(2) > 0) break;
        ++L;
    }
    return L;
}

long igcd(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) fail(ErrorKind::InvalidInput, "Rng::below(0)");
    // rejection sampling to stay unbiased and deterministic
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

}  // namespace symdyn
