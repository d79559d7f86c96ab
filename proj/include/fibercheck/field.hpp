#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibercheck/rational.hpp"

namespace fibercheck {

/// Selects the coefficient field of a computation: the rationals, or a real
/// quadratic extension Q(sqrt d) with d a positive nonsquare integer.
/// Every scalar carries its config; mixing configs is an error.
class FieldConfig {
public:
    static FieldConfig rationals() { return FieldConfig(0); }

    static FieldConfig quadratic(std::int64_t d) {
        if (d < 2) throw std::invalid_argument("FieldConfig: d must be >= 2");
        mpz_class z(static_cast<long>(d));
        if (mpz_perfect_square_p(z.get_mpz_t()))
            throw std::invalid_argument("FieldConfig: d must be a nonsquare");
        return FieldConfig(d);
    }

    bool is_extension() const { return d_ != 0; }

    std::int64_t d() const {
        if (!is_extension()) throw std::domain_error("FieldConfig: no radical over the rationals");
        return d_;
    }

    friend bool operator==(const FieldConfig& a, const FieldConfig& b) { return a.d_ == b.d_; }
    friend bool operator!=(const FieldConfig& a, const FieldConfig& b) { return a.d_ != b.d_; }

    /// "q" or "qsqrt:<d>", the CLI spelling.
    std::string str() const { return d_ == 0 ? "q" : "qsqrt:" + std::to_string(d_); }

    /// Parses "q" / "qsqrt:<d>".
    static FieldConfig parse(const std::string& text) {
        if (text == "q") return rationals();
        if (text.rfind("qsqrt:", 0) == 0) {
            const std::string tail = text.substr(6);
            if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("FieldConfig: bad radicand in '" + text + "'");
            return quadratic(std::stoll(tail));
        }
        throw std::invalid_argument("FieldConfig: expected 'q' or 'qsqrt:<d>', got '" + text + "'");
    }

private:
    explicit FieldConfig(std::int64_t d) : d_(d) {}
    std::int64_t d_ = 0;
};

/// Element rat + irr*sqrt(d) of the configured field. Over the plain
/// rationals irr is identically zero. Immutable value; all arithmetic exact.
class Scalar {
public:
    Scalar() : rat_(0), irr_(0), field_(FieldConfig::rationals()) {}

    Scalar(Rational rat, FieldConfig field)
        : rat_(std::move(rat)), irr_(0), field_(field) {}

    Scalar(Rational rat, Rational irr, FieldConfig field)
        : rat_(std::move(rat)), irr_(std::move(irr)), field_(field) {
        if (!irr_.is_zero() && !field_.is_extension())
            throw std::domain_error("Scalar: irrational part requires an extension field");
    }

    static Scalar zero(FieldConfig f) { return Scalar(Rational(0), f); }
    static Scalar one(FieldConfig f) { return Scalar(Rational(1), f); }
    static Scalar of_int(long n, FieldConfig f) { return Scalar(Rational(n), f); }
    /// The generator sqrt(d); requires an extension config.
    static Scalar radical(FieldConfig f) { return Scalar(Rational(0), Rational(1), f); }

    const Rational& rat() const { return rat_; }
    const Rational& irr() const { return irr_; }
    const FieldConfig& field() const { return field_; }

    bool is_zero() const { return rat_.is_zero() && irr_.is_zero(); }
    bool is_one() const { return rat_.is_one() && irr_.is_zero(); }
    bool is_rational() const { return irr_.is_zero(); }

    Scalar operator-() const { return Scalar(-rat_, -irr_, field_); }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        rat_ += o.rat_;
        irr_ += o.irr_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        check(o);
        rat_ -= o.rat_;
        irr_ -= o.irr_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        check(o);
        // (r1 + i1 s)(r2 + i2 s) = r1 r2 + d i1 i2 + (r1 i2 + r2 i1) s
        Rational r = rat_ * o.rat_;
        if (!irr_.is_zero() && !o.irr_.is_zero())
            r += Rational(field_.d()) * irr_ * o.irr_;
        Rational i = rat_ * o.irr_ + o.rat_ * irr_;
        rat_ = std::move(r);
        irr_ = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Conjugate-based inverse: (r + i s)^-1 = (r - i s) / (r^2 - d i^2).
    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar: division by zero");
        if (irr_.is_zero()) return Scalar(rat_.inverse(), field_);
        Rational norm = rat_ * rat_ - Rational(field_.d()) * irr_ * irr_;
        // norm = 0 would make sqrt(d) rational; the nonsquare invariant rules it out
        return Scalar(rat_ / norm, -irr_ / norm, field_);
    }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        a.check(b);
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Sign under the real embedding with sqrt(d) > 0.
    int sign() const {
        int sr = rat_.sign(), si = irr_.sign();
        if (si == 0) return sr;
        if (sr == 0) return si;
        if (sr == si) return sr;
        // opposite signs: compare rat^2 against d * irr^2
        Rational lhs = rat_ * rat_, rhs = Rational(field_.d()) * irr_ * irr_;
        if (lhs == rhs) throw std::logic_error("Scalar: sqrt(d) rational, nonsquare invariant broken");
        return lhs > rhs ? sr : si;
    }

    /// Total order via the real embedding.
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }

    /// Canonical text: "3/4", "-2", "s", "1/4*s", "3/4+1/2*s", "3/4-1/2*s".
    /// Round-trips through the expression parser.
    std::string str() const {
        if (irr_.is_zero()) return rat_.str();
        std::string radical_part;
        if (irr_.is_one())
            radical_part = "s";
        else if (irr_ == Rational(-1))
            radical_part = "-s";
        else
            radical_part = irr_.str() + "*s";
        if (rat_.is_zero()) return radical_part;
        if (irr_.sign() > 0) return rat_.str() + "+" + radical_part;
        return rat_.str() + radical_part;  // radical_part already carries '-'
    }

    double to_double() const {
        double v = rat_.to_double();
        if (!irr_.is_zero()) v += irr_.to_double() * std::sqrt(static_cast<double>(field_.d()));
        return v;
    }

private:
    void check(const Scalar& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Scalar: mixed field configs");
    }

    Rational rat_, irr_;
    FieldConfig field_;
};

/// sqrt of a rational radicand inside the configured field. Succeeds when
/// r = u^2 or r = d*v^2 for rationals u, v; the returned root follows the
/// nonnegative convention. Absence is a value, not an error.
inline std::optional<Scalar> sqrt_in_field(const Rational& r, const FieldConfig& field) {
    if (r.sign() < 0) return std::nullopt;
    if (auto u = rational_sqrt(r)) return Scalar(*u, field);
    if (field.is_extension()) {
        if (auto v = rational_sqrt(r / Rational(field.d()))) return Scalar(Rational(0), *v, field);
    }
    return std::nullopt;
}

struct QuadraticRoot {
    Scalar value;
    int multiplicity = 1;
};

/// All in-field roots of a T^2 + b T + c (a != 0), via the discriminant and
/// sqrt_in_field. Only rational discriminants are attempted; an irrational
/// discriminant or one without an in-field square root yields no roots.
/// A double root is listed once with multiplicity 2. Ordering: nonnegative
/// roots before negative ones, ascending within each class.
inline std::vector<QuadraticRoot> solve_quadratic(const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.is_zero()) throw std::domain_error("solve_quadratic: leading coefficient is zero");
    const FieldConfig field = a.field();
    Scalar disc = b * b - Scalar::of_int(4, field) * a * c;
    Scalar two_a = Scalar::of_int(2, field) * a;
    if (disc.is_zero()) return {{-b / two_a, 2}};
    if (!disc.is_rational()) return {};
    auto root = sqrt_in_field(disc.rat(), field);
    if (!root) return {};
    Scalar r1 = (-b - *root) / two_a;
    Scalar r2 = (-b + *root) / two_a;
    auto before = [](const Scalar& x, const Scalar& y) {
        bool xneg = x.sign() < 0, yneg = y.sign() < 0;
        if (xneg != yneg) return yneg;
        return x < y;
    };
    if (before(r2, r1)) std::swap(r1, r2);
    return {{r1, 1}, {r2, 1}};
}

}  // namespace fibercheck
