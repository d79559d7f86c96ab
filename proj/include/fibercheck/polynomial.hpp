#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fibercheck/field.hpp"
#include "fibercheck/monomial.hpp"
#include "fibercheck/order.hpp"
#include "fibercheck/variables.hpp"

namespace fibercheck {

/// Sparse multivariate polynomial over the configured field. Immutable in
/// spirit: operations return fresh values, zero coefficients are never stored,
/// equality is structural.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialStorageLess>;

    Polynomial() : vars_(), field_(FieldConfig::rationals()) {}

    Polynomial(VariableSet vars, FieldConfig field)
        : vars_(std::move(vars)), field_(field) {}

    static Polynomial zero(const VariableSet& vars, FieldConfig field) { return Polynomial(vars, field); }

    static Polynomial constant(const Scalar& c, const VariableSet& vars) {
        Polynomial p(vars, c.field());
        if (!c.is_zero()) p.terms_.emplace(Monomial::unit(vars.size()), c);
        return p;
    }

    static Polynomial one(const VariableSet& vars, FieldConfig field) {
        return constant(Scalar::one(field), vars);
    }

    static Polynomial variable(const VariableSet& vars, FieldConfig field, std::size_t index) {
        Polynomial p(vars, field);
        p.terms_.emplace(Monomial::variable(index, vars.size()), Scalar::one(field));
        return p;
    }

    static Polynomial variable(const VariableSet& vars, FieldConfig field, const std::string& name) {
        auto idx = vars.index_of(name);
        if (!idx) throw std::invalid_argument("Polynomial: unknown variable '" + name + "'");
        return variable(vars, field, *idx);
    }

    static Polynomial term(const Monomial& m, const Scalar& c, const VariableSet& vars) {
        if (m.nvars() != vars.size()) throw std::invalid_argument("Polynomial: monomial arity mismatch");
        Polynomial p(vars, c.field());
        if (!c.is_zero()) p.terms_.emplace(m, c);
        return p;
    }

    const VariableSet& vars() const { return vars_; }
    const FieldConfig& field() const { return field_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }

    Scalar constant_value() const {
        if (!is_constant()) throw std::domain_error("Polynomial: not a constant");
        return terms_.empty() ? Scalar::zero(field_) : terms_.begin()->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    Scalar coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar::zero(field_) : it->second;
    }

    /// Variables actually appearing.
    std::vector<std::size_t> support() const {
        std::vector<bool> seen(vars_.size(), false);
        for (const auto& [m, c] : terms_)
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (m.uses_variable(i)) seen[i] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i]) out.push_back(i);
        return out;
    }

    bool uses_variable(std::size_t i) const {
        for (const auto& [m, c] : terms_)
            if (m.uses_variable(i)) return true;
        return false;
    }

    Polynomial operator-() const {
        Polynomial p(vars_, field_);
        for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
        return p;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial p(a.vars_, a.field_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                p.add_term(ma * mb, ca * cb);
        return p;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const {
        Polynomial p(vars_, field_);
        if (c.is_zero()) return p;
        for (const auto& [m, coeff] : terms_) p.terms_.emplace(m, coeff * c);
        return p;
    }

    /// this - c * m * g, the single division step.
    Polynomial fused_subtract(const Scalar& c, const Monomial& m, const Polynomial& g) const {
        check(g);
        Polynomial p = *this;
        for (const auto& [mg, cg] : g.terms_) p.add_term(m * mg, -(c * cg));
        return p;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial acc = one(vars_, field_);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            base = (e >>= 1) ? base * base : base;
        }
        return acc;
    }

    /// The maximal term under the order; zero input is an error.
    std::pair<Monomial, Scalar> leading_term(const OrderSpec& order) const {
        if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.greater(it->first, best->first)) best = it;
        return {best->first, best->second};
    }

    Monomial leading_monomial(const OrderSpec& order) const { return leading_term(order).first; }

    Polynomial monic(const OrderSpec& order) const {
        if (terms_.empty()) return *this;
        return scaled(leading_term(order).second.inverse());
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.vars_ != b.vars_ || a.field_ != b.field_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || ia->second != ib->second) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Exact evaluation at a point (one scalar per variable).
    Scalar evaluate(const std::vector<Scalar>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("Polynomial: point arity mismatch");
        Scalar acc = Scalar::zero(field_);
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (std::uint32_t e = 0; e < m.exponent(i); ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }

    /// Composite polynomial with every variable replaced by its image. The
    /// images live over result_vars; each variable of this polynomial must be
    /// assigned or exist under the same name in result_vars.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment,
                          const VariableSet& result_vars) const {
        std::vector<Polynomial> images;
        images.reserve(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = assignment.find(vars_.name(i));
            if (it != assignment.end()) {
                if (it->second.vars() != result_vars || it->second.field() != field_)
                    throw std::invalid_argument("substitute: image over an incompatible variable set");
                images.push_back(it->second);
            } else if (uses_variable(i)) {
                auto idx = result_vars.index_of(vars_.name(i));
                if (!idx)
                    throw std::invalid_argument("substitute: variable '" + vars_.name(i) +
                                                "' has no image and no counterpart");
                images.push_back(variable(result_vars, field_, *idx));
            } else {
                images.push_back(zero(result_vars, field_));
            }
        }
        Polynomial out(result_vars, field_);
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(c, result_vars);
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (m.exponent(i) > 0) t = t * images[i].pow(m.exponent(i));
            out += t;
        }
        return out;
    }

    /// Renders terms sorted descending by the order; round-trips through the
    /// parser. Extension coefficients with both parts parenthesize.
    std::string str(const OrderSpec& order = OrderSpec::grevlex()) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Scalar>*> sorted;
        sorted.reserve(terms_.size());
        for (const auto& t : terms_) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(),
                  [&](auto* a, auto* b) { return order.greater(a->first, b->first); });
        std::string out;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const auto& [mono, coeff] = *sorted[i];
            std::string cs = coeff.str();
            bool negative = false;
            if (!cs.empty() && cs[0] == '-' && cs.find('+', 1) == std::string::npos &&
                cs.find('-', 1) == std::string::npos) {
                negative = true;
                cs = cs.substr(1);
            }
            bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
            if (i == 0)
                out += negative ? "-" : "";
            else
                out += negative ? "-" : "+";
            if (mono.is_unit()) {
                out += composite ? "(" + cs + ")" : cs;
            } else {
                std::string ms = mono.str(vars_);
                if (cs == "1")
                    out += ms;
                else if (composite)
                    out += "(" + cs + ")*" + ms;
                else
                    out += cs + "*" + ms;
            }
        }
        return out;
    }

private:
    void check(const Polynomial& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("Polynomial: variable set mismatch");
        if (field_ != o.field_) throw std::invalid_argument("Polynomial: field config mismatch");
    }

    void add_term(const Monomial& m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    VariableSet vars_;
    FieldConfig field_;
    TermMap terms_;
};

}  // namespace fibercheck
