#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibercheck/variables.hpp"

namespace fibercheck {

/// Exponent vector over a fixed VariableSet, with the total degree cached.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<std::uint32_t> exponents)
        : exps_(std::move(exponents)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0})) {}

    static Monomial unit(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    static Monomial variable(std::size_t index, std::size_t nvars, std::uint32_t power = 1) {
        std::vector<std::uint32_t> e(nvars, 0);
        e.at(index) = power;
        return Monomial(std::move(e));
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint64_t total_degree() const { return degree_; }
    bool is_unit() const { return degree_ == 0; }

    Monomial operator*(const Monomial& o) const {
        require_same_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
        return Monomial(std::move(e));
    }

    bool divides(const Monomial& o) const {
        require_same_size(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    /// this / o; requires o | this.
    Monomial operator/(const Monomial& o) const {
        require_same_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (o.exps_[i] > exps_[i]) throw std::domain_error("Monomial: division not exact");
            e[i] = exps_[i] - o.exps_[i];
        }
        return Monomial(std::move(e));
    }

    Monomial lcm(const Monomial& o) const {
        require_same_size(o);
        std::vector<std::uint32_t> e(exps_.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], o.exps_[i]);
        return Monomial(std::move(e));
    }

    bool coprime_with(const Monomial& o) const {
        require_same_size(o);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && o.exps_[i] > 0) return false;
        return true;
    }

    /// True when the support lies inside variable indices [begin, end).
    bool supported_in(std::size_t begin, std::size_t end) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0 && (i < begin || i >= end)) return false;
        return true;
    }

    bool uses_variable(std::size_t i) const { return exps_.at(i) > 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// "x^2*y" over the given names; "1" for the unit.
    std::string str(const VariableSet& vars) const {
        std::string out;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars.name(i);
            if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
        }
        return out.empty() ? "1" : out;
    }

private:
    void require_same_size(const Monomial& o) const {
        if (exps_.size() != o.exps_.size())
            throw std::invalid_argument("Monomial: variable count mismatch");
    }

    std::vector<std::uint32_t> exps_;
    std::uint64_t degree_ = 0;
};

/// Fixed structural comparator (plain lex on exponent vectors) used only for
/// canonical term storage; rendering and division use the active OrderSpec.
struct MonomialStorageLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return a.exponents() < b.exponents();
    }
};

}  // namespace fibercheck
